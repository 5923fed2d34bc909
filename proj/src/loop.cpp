#include "simplex/loop.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <string>

namespace simplex {

const char* to_string(LoopRole role) noexcept {
  switch (role) {
    case LoopRole::vertex: return "vertex";
    case LoopRole::edge: return "edge";
    case LoopRole::facet: return "facet";
  }
  return "?";
}

namespace {

Vec entry_sum(const std::vector<Vec>& vs) {
  Vec s(vs[0].dim());
  for (const Vec& v : vs) s += v;
  return s;
}

}  // namespace

Loop Loop::make(std::vector<Vec> vs, LoopRole role) {
  if (vs.size() < kMinDim + 1)
    fail(ErrorKind::DimensionMismatch,
         "a loop needs at least " + std::to_string(kMinDim + 1) + " vectors");
  const std::size_t n = vs.size() - 1;
  if (n > kMaxDim)
    fail(ErrorKind::DimensionMismatch, "loop dimension " + std::to_string(n) + " exceeds " +
                                           std::to_string(kMaxDim));
  for (const Vec& v : vs)
    if (v.dim() != n)
      fail(ErrorKind::DimensionMismatch,
           "loop in dimension " + std::to_string(n) + " has an entry of dimension " +
               std::to_string(v.dim()));
  double scale = 0.0;
  for (const Vec& v : vs) scale = std::max(scale, norm(v));
  const double defect = norm(entry_sum(vs));
  if (defect > kIdentityTol * scale)
    fail(ErrorKind::ClosureViolation,
         "loop entries sum to norm " + std::to_string(defect) + " (tolerance " +
             std::to_string(kIdentityTol * scale) + ")");
  return Loop(std::move(vs), role, n);
}

Loop Loop::complete_from_main(const std::vector<Vec>& main, LoopRole role) {
  if (main.size() < kMinDim)
    fail(ErrorKind::DimensionMismatch, "main part needs at least " + std::to_string(kMinDim) +
                                           " vectors, got " + std::to_string(main.size()));
  const std::size_t n = main.size();
  std::vector<Vec> vs;
  vs.reserve(n + 1);
  Vec head(main[0].dim());
  for (const Vec& v : main) {
    require_same_dim(main[0], v, "complete_from_main");
    head -= v;
  }
  vs.push_back(head);
  vs.insert(vs.end(), main.begin(), main.end());
  return Loop::make(std::move(vs), role);
}

Loop Loop::as_role(LoopRole role) const {
  Loop copy = *this;
  copy.role_ = role;
  return copy;
}

Mat Loop::main_part() const {
  std::vector<Vec> cols(vs_.begin() + 1, vs_.end());
  return Mat::from_columns(cols);
}

double Loop::closure_defect() const { return norm(entry_sum(vs_)); }

double Loop::max_entry_norm() const {
  double m = 0.0;
  for (const Vec& v : vs_) m = std::max(m, norm(v));
  return m;
}

Loop edge_map(const Loop& v) {
  const std::size_t n = v.dim();
  std::vector<Vec> w;
  w.reserve(n + 1);
  w.push_back(v[0] - v[n]);
  for (std::size_t i = 1; i <= n; ++i) w.push_back(v[i] - v[i - 1]);
  return Loop::make(std::move(w), LoopRole::edge);
}

Loop edge_map_inverse(const Loop& w) {
  const std::size_t n = w.dim();
  Vec v0(n);
  for (std::size_t j = 1; j <= n; ++j) v0 += static_cast<double>(n + 1 - j) * w[j];
  v0 *= -1.0 / static_cast<double>(n + 1);
  std::vector<Vec> v;
  v.reserve(n + 1);
  v.push_back(v0);
  Vec acc = v0;
  for (std::size_t i = 1; i <= n; ++i) {
    acc += w[i];
    v.push_back(acc);
  }
  return Loop::make(std::move(v), LoopRole::vertex);
}

namespace {

/// Cumulative sums (w_1, w_1+w_2, ..., w_1+...+w_n) as a matrix.
Mat cumulative_sum_matrix(const Loop& w) {
  const std::size_t n = w.dim();
  std::vector<Vec> cols;
  cols.reserve(n);
  Vec acc(n);
  for (std::size_t i = 1; i <= n; ++i) {
    acc += w[i];
    cols.push_back(acc);
  }
  return Mat::from_columns(cols);
}

}  // namespace

Loop facet_map(const Loop& w) {
  const Mat z_main = cofactor_matrix(cumulative_sum_matrix(w));
  Loop z = Loop::complete_from_main(z_main.columns(), LoopRole::facet);
#ifndef NDEBUG
  {
    const Loop direct = facet_map_vector_products(w);
    const double scale = std::max({1.0, z.max_entry_norm(), direct.max_entry_norm()});
    assert(loop_max_abs_diff(z, direct) <= 1e-7 * scale &&
           "facet map routes disagree beyond tolerance");
  }
#endif
  return z;
}

Loop facet_map_vector_products(const Loop& w) {
  const std::size_t n = w.dim();
  std::vector<Vec> z;
  z.reserve(n + 1);
  std::vector<Vec> args;
  args.reserve(n - 1);
  for (std::size_t p = 0; p < n; ++p) {
    args.clear();
    for (std::size_t i = 0; i <= n; ++i)
      if (i != p && i != p + 1) args.push_back(w[i]);
    z.push_back(-vector_product(args));
  }
  args.assign(w.entries().begin() + 1, w.entries().begin() + n);  // w_1 .. w_{n-1}
  Vec zn = vector_product(args);
  if (n % 2 == 0) zn *= -1.0;  // (-1)^{n+1}
  z.push_back(zn);
  return Loop::make(std::move(z), LoopRole::facet);
}

Loop facet_normals(const Loop& v) { return facet_map(edge_map(v)); }

std::pair<Loop, SimilarityReport> similarity_iterate(const Loop& v) {
  const std::size_t n = v.dim();
  const Mat mv = v.main_part();
  const double det_v = determinant(mv);

  const Loop z = facet_normals(v).as_role(LoopRole::vertex);
  const Loop v2 = facet_normals(z).as_role(LoopRole::vertex);

  SimilarityReport report;
  report.kappa = ipow(static_cast<double>(n + 1), static_cast<int>(n) - 1) *
                 ipow(det_v, static_cast<int>(n) - 2);
  report.residual = max_abs_diff(v2.main_part(), scale(mv, report.kappa));
  return {v2, report};
}

LoopClass classify(const Loop& l) {
  const Mat m = l.main_part();
  const double det = determinant(m);
  const double threshold = degeneracy_threshold(m);
  LoopClass c;
  c.det_main = det;
  c.affine_independent = std::abs(det) > threshold;
  c.positive = det > threshold;
  return c;
}

double loop_max_abs_diff(const Loop& a, const Loop& b) {
  if (a.size() != b.size() || a.dim() != b.dim())
    fail(ErrorKind::DimensionMismatch, "loop comparison shapes differ");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, max_abs_diff(a[i], b[i]));
  return m;
}

}  // namespace simplex
