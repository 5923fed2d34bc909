#include "simplex/batch.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "simplex/jobs.hpp"
#include "simplex/loop.hpp"
#include "simplex/mat.hpp"
#include "simplex/minkowski.hpp"
#include "simplex/realize.hpp"
#include "simplex/rng.hpp"

namespace simplex::batch {

namespace {

constexpr double kTiny = 1e-300;

struct Outcome {
  double worst = 0.0;
  double closure = 0.0;
  double margin = std::numeric_limits<double>::infinity();
  bool ok = true;
};

template <class F>
SuiteResult run_batch(std::size_t count, std::uint64_t seed, Exec exec, F&& instance) {
  double worst = 0.0;
  double closure = 0.0;
  double margin = std::numeric_limits<double>::infinity();
  int ok = 1;

  auto step = [&instance, seed](std::uint64_t i, double& w, double& c, double& m, int& k) {
    Outcome o;
    try {
      SplitMix64 rng = SplitMix64::substream(seed, i);
      o = instance(rng);
    } catch (...) {
      o.ok = false;
    }
    w = std::max(w, o.worst);
    c = std::max(c, o.closure);
    m = std::min(m, o.margin);
    k = std::min(k, o.ok ? 1 : 0);
  };

#ifdef _OPENMP
  if (exec == Exec::OpenMP) {
#pragma omp parallel for schedule(dynamic, 8) reduction(max : worst) reduction(max : closure) \
    reduction(min : margin) reduction(min : ok)
    for (long long i = 0; i < static_cast<long long>(count); ++i)
      step(static_cast<std::uint64_t>(i), worst, closure, margin, ok);
  } else
#else
  (void)exec;
#endif
  {
    for (std::uint64_t i = 0; i < count; ++i) step(i, worst, closure, margin, ok);
  }

  SuiteResult result;
  result.instances = count;
  result.worst = worst;
  result.closure = closure;
  result.min_margin = std::isinf(margin) ? 0.0 : margin;
  result.all_passed = ok == 1;
  return result;
}

Mat random_mat(SplitMix64& rng, std::size_t n) {
  Mat m = Mat::zero(n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) m.at(r, c) = rng.uniform_pm1();
  return m;
}

/// Closed loop with main part uniform on [-1,1)^n and either orientation.
Loop raw_loop(SplitMix64& rng, std::size_t n) {
  std::vector<Vec> main;
  main.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = rng.uniform_pm1();
    main.push_back(std::move(v));
  }
  return Loop::complete_from_main(main, LoopRole::vertex);
}

double rel(double delta, double scale) { return delta / std::max(scale, kTiny); }

}  // namespace

bool openmp_enabled() noexcept {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

int max_threads() noexcept {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

SuiteResult cofactor_identities(std::size_t n, std::size_t count, std::uint64_t seed, Exec exec) {
  return run_batch(count, seed, exec, [n](SplitMix64& rng) {
    Outcome o;
    const Mat m = random_mat(rng, n);
    const Mat nn = random_mat(rng, n);
    const double lambda = rng.uniform(-2.0, 2.0);

    const Mat cm = cofactor_matrix(m);
    const double det_m = determinant(m);
    const int ni = static_cast<int>(n);

    // Cramer: c(M) M^t = M^t c(M) = det(M) I.
    const Mat mt = transpose(m);
    const Mat det_eye = scale(Mat::identity(n), det_m);
    const double cramer_scale =
        std::max(static_cast<double>(n) * cm.max_abs() * m.max_abs(), std::abs(det_m));
    o.worst = std::max(o.worst, rel(max_abs_diff(multiply(cm, mt), det_eye), cramer_scale));
    o.worst = std::max(o.worst, rel(max_abs_diff(multiply(mt, cm), det_eye), cramer_scale));

    // det(c(M)) = det(M)^{n-1}.
    o.worst = std::max(o.worst, rel(std::abs(determinant(cm) - ipow(det_m, ni - 1)),
                                    std::max(hadamard_bound(cm), std::abs(ipow(det_m, ni - 1)))));

    // c(lambda M) = lambda^{n-1} c(M).
    const Mat scaled = cofactor_matrix(scale(m, lambda));
    const Mat expected = scale(cm, ipow(lambda, ni - 1));
    o.worst = std::max(o.worst, rel(max_abs_diff(scaled, expected),
                                    std::max(scaled.max_abs(), expected.max_abs())));

    // c(MN) = c(M) c(N).
    const Mat cmn = cofactor_matrix(multiply(m, nn));
    const Mat cn = cofactor_matrix(nn);
    const Mat prod = multiply(cm, cn);
    o.worst = std::max(o.worst,
                       rel(max_abs_diff(cmn, prod),
                           std::max(static_cast<double>(n) * cm.max_abs() * cn.max_abs(),
                                    cmn.max_abs())));

    // c(c(M)) = det(M)^{n-2} M.
    const Mat ccm = cofactor_matrix(cm);
    const Mat dm = scale(m, ipow(det_m, ni - 2));
    const double cc_scale = std::max({ccm.max_abs(), dm.max_abs(),
                                      ipow(cm.max_col_norm(), ni - 1)});
    o.worst = std::max(o.worst, rel(max_abs_diff(ccm, dm), cc_scale));
    return o;
  });
}

SuiteResult vector_product_laws(std::size_t n, std::size_t count, std::uint64_t seed, Exec exec) {
  return run_batch(count, seed, exec, [n](SplitMix64& rng) {
    Outcome o;
    std::vector<Vec> ws;
    ws.reserve(n - 1);
    double h = 1.0;  // product of argument norms, the det error floor
    for (std::size_t i = 0; i + 1 < n; ++i) {
      Vec w(n);
      for (std::size_t j = 0; j < n; ++j) w[j] = rng.uniform_pm1();
      h *= norm(w);
      ws.push_back(std::move(w));
    }
    const Vec r = vector_product(ws);
    const double rn = norm(r);

    // Defining property against a fresh test vector.
    Vec w0(n);
    for (std::size_t j = 0; j < n; ++j) w0[j] = rng.uniform_pm1();
    std::vector<Vec> cols;
    cols.reserve(n);
    cols.push_back(w0);
    cols.insert(cols.end(), ws.begin(), ws.end());
    const double det_full = determinant(Mat::from_columns(cols));
    o.worst = std::max(o.worst, rel(std::abs(dot(w0, r) - det_full),
                                    std::max(norm(w0) * rn, norm(w0) * h)));

    // Orthogonality to every argument.
    for (const Vec& w : ws)
      o.worst = std::max(o.worst, rel(std::abs(dot(w, r)), norm(w) * std::max(rn, h)));

    // Alternating under an adjacent transposition (needs two slots).
    if (n >= 3) {
      std::vector<Vec> swapped = ws;
      std::swap(swapped[0], swapped[1]);
      const Vec rs = vector_product(swapped);
      o.worst = std::max(o.worst, rel(max_abs_diff(rs, -r), std::max(max_abs(r), h)));
    }

    // Norm identity: det(r, w_1, ..., w_{n-1}) = |r|^2.
    cols[0] = r;
    const double det_norm = determinant(Mat::from_columns(cols));
    o.worst = std::max(o.worst, rel(std::abs(det_norm - rn * rn), std::max(rn * rn, rn * h)));
    return o;
  });
}

SuiteResult scalar_product_table(std::size_t n, std::size_t count, std::uint64_t seed, Exec exec) {
  return run_batch(count, seed, exec, [n](SplitMix64& rng) {
    Outcome o;
    const Loop v = raw_loop(rng, n);
    const Loop w = edge_map(v);
    const Loop z = facet_map(w);
    const double det_v = determinant(v.main_part());
    const Mat w_main = w.main_part();
    const double det_w = determinant(w_main);
    const double det_z = determinant(z.main_part());
    const double h_w = hadamard_bound(w_main);

    for (std::size_t q = 0; q <= n; ++q) {
      for (std::size_t p = 0; p <= n; ++p) {
        double expected = 0.0;
        if (p == q) expected = det_w;
        else if (p == (q + 1) % (n + 1)) expected = -det_w;
        const double scale_pq = std::max(norm(w[p]) * norm(z[q]), h_w);
        o.worst = std::max(o.worst, rel(std::abs(dot(w[p], z[q]) - expected), scale_pq));
      }
    }

    o.worst = std::max(o.worst, rel(std::abs(det_w - (n + 1) * det_v),
                                    std::max(h_w, std::abs((n + 1) * det_v))));
    const double det_w_pow = ipow(det_w, static_cast<int>(n) - 1);
    o.worst = std::max(o.worst, rel(std::abs(det_z - det_w_pow),
                                    std::max(hadamard_bound(z.main_part()), std::abs(det_w_pow))));
    return o;
  });
}

SuiteResult iteration_similarity(std::size_t n, std::size_t count, std::uint64_t seed, Exec exec) {
  return run_batch(count, seed, exec, [n](SplitMix64& rng) {
    Outcome o;
    const Loop v = raw_loop(rng, n);  // either orientation, possibly near-degenerate
    const auto [v2, report] = similarity_iterate(v);

    // Error floor: the outer cofactor pass works on minors of Z * (I+ones).
    const Mat outer = mul_ones_plus_identity(facet_normals(v).main_part());
    const double floor = ipow(outer.max_col_norm(), static_cast<int>(n) - 1);
    const double scale = std::max({std::abs(report.kappa) * v.main_part().max_abs(),
                                   v2.main_part().max_abs(), floor});
    o.worst = rel(report.residual, scale);
    return o;
  });
}

SuiteResult facet_closure_and_inequalities(std::size_t n, std::size_t count, std::uint64_t seed,
                                           Exec exec) {
  return run_batch(count, seed, exec, [n](SplitMix64& rng) {
    Outcome o;
    const Loop v = random_loop_stream(rng, n);
    const Loop z = facet_map_vector_products(edge_map(v));
    o.closure = z.closure_defect();

    double sum = 0.0, longest = 0.0;
    for (const Vec& zp : z.entries()) {
      const double len = norm(zp);
      sum += len;
      longest = std::max(longest, len);
    }
    o.margin = sum - 2.0 * longest;
    o.ok = o.margin > 0.0;
    return o;
  });
}

SuiteResult realization_fidelity(std::size_t n, std::size_t count, std::uint64_t seed, Exec exec) {
  return run_batch(count, seed, exec, [n](SplitMix64& rng) {
    Outcome o;
    VolumeSpec spec;
    const double lo = std::log(0.1), hi = std::log(10.0);
    for (int attempt = 0; attempt < 100000; ++attempt) {
      spec.lengths.clear();
      for (std::size_t i = 0; i <= n; ++i) spec.lengths.push_back(std::exp(rng.uniform(lo, hi)));
      if (check_inequalities(spec.lengths).feasible) break;
    }
    const Loop z = realize_facet_vectors(spec);
    for (std::size_t p = 0; p <= n; ++p)
      o.worst = std::max(o.worst,
                         std::abs(norm(z[p]) - spec.lengths[p]) / spec.lengths[p]);
    o.closure = z.closure_defect();
    o.ok = determinant(z.main_part()) > 0.0;
    return o;
  });
}

SuiteResult minkowski_round_trip(std::size_t n, std::size_t count, std::uint64_t seed, Exec exec) {
  return run_batch(count, seed, exec, [n](SplitMix64& rng) {
    Outcome o;
    const Loop v = random_loop_stream(rng, n);
    const Loop recovered = invert_facet_map(facet_normals(v));
    o.worst = rel(loop_max_abs_diff(recovered, v), v.max_entry_norm());
    return o;
  });
}

}  // namespace simplex::batch
