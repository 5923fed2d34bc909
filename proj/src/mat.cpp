#include "simplex/mat.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace simplex {

namespace {

void check_mat_dim(std::size_t n) {
  if (n < kMinDim || n > kMaxDim)
    fail(ErrorKind::DimensionMismatch,
         "matrix dimension " + std::to_string(n) + " outside [" + std::to_string(kMinDim) +
             ", " + std::to_string(kMaxDim) + "]");
}

/// In-place LU determinant of an n x n column-major buffer (destroys it).
double lu_determinant(double* a, std::size_t n) {
  double det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(a[k * n + k]);
    for (std::size_t r = k + 1; r < n; ++r) {
      const double v = std::abs(a[k * n + r]);
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best == 0.0) return 0.0;
    if (piv != k) {
      for (std::size_t c = k; c < n; ++c) std::swap(a[c * n + k], a[c * n + piv]);
      det = -det;
    }
    const double pivot = a[k * n + k];
    det *= pivot;
    for (std::size_t r = k + 1; r < n; ++r) {
      const double f = a[k * n + r] / pivot;
      if (f == 0.0) continue;
      for (std::size_t c = k + 1; c < n; ++c) a[c * n + r] -= f * a[c * n + k];
    }
  }
  return det;
}

}  // namespace

Mat Mat::zero(std::size_t n) {
  check_mat_dim(n);
  return Mat(n, std::vector<double>(n * n, 0.0));
}

Mat Mat::identity(std::size_t n) {
  Mat m = zero(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

Mat Mat::ones_plus_identity(std::size_t n) {
  Mat m = zero(n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) m.at(r, c) = (r == c) ? 2.0 : 1.0;
  return m;
}

Mat Mat::from_columns(const std::vector<Vec>& cols) {
  const std::size_t n = cols.size();
  check_mat_dim(n);
  Mat m = zero(n);
  for (std::size_t c = 0; c < n; ++c) {
    if (cols[c].dim() != n)
      fail(ErrorKind::DimensionMismatch,
           "matrix column " + std::to_string(c) + " has dimension " +
               std::to_string(cols[c].dim()) + ", expected " + std::to_string(n));
    for (std::size_t r = 0; r < n; ++r) m.at(r, c) = cols[c][r];
  }
  return m;
}

Vec Mat::column(std::size_t c) const {
  Vec v(n_);
  for (std::size_t r = 0; r < n_; ++r) v[r] = at(r, c);
  return v;
}

std::vector<Vec> Mat::columns() const {
  std::vector<Vec> cols;
  cols.reserve(n_);
  for (std::size_t c = 0; c < n_; ++c) cols.push_back(column(c));
  return cols;
}

double Mat::max_abs() const {
  double m = 0.0;
  for (double v : a_) m = std::max(m, std::abs(v));
  return m;
}

double Mat::max_col_norm() const {
  double m = 0.0;
  for (std::size_t c = 0; c < n_; ++c) {
    double s = 0.0;
    for (std::size_t r = 0; r < n_; ++r) s += at(r, c) * at(r, c);
    m = std::max(m, std::sqrt(s));
  }
  return m;
}

double determinant(const Mat& m) {
  std::vector<double> scratch(m.data());
  return lu_determinant(scratch.data(), m.dim());
}

Mat cofactor_matrix(const Mat& m) {
  const std::size_t n = m.dim();
  Mat c = Mat::zero(n);
  const std::size_t k = n - 1;
  std::vector<double> minor(k * k);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      // Minor with row i and column j removed, column-major.
      std::size_t cc = 0;
      for (std::size_t col = 0; col < n; ++col) {
        if (col == j) continue;
        std::size_t rr = 0;
        for (std::size_t row = 0; row < n; ++row) {
          if (row == i) continue;
          minor[cc * k + rr] = m.at(row, col);
          ++rr;
        }
        ++cc;
      }
      const double d = lu_determinant(minor.data(), k);
      c.at(i, j) = (((i + j) % 2) == 0) ? d : -d;
    }
  }
  return c;
}

Vec vector_product(const std::vector<Vec>& ws) {
  if (ws.empty()) fail(ErrorKind::DimensionMismatch, "vector product needs n-1 >= 1 arguments");
  const std::size_t n = ws[0].dim();
  check_mat_dim(n);
  if (ws.size() != n - 1)
    fail(ErrorKind::DimensionMismatch,
         "vector product in dimension " + std::to_string(n) + " takes " +
             std::to_string(n - 1) + " vectors, got " + std::to_string(ws.size()));
  for (const Vec& w : ws)
    if (w.dim() != n) fail(ErrorKind::DimensionMismatch, "vector product arguments have mixed dimensions");

  // r[i] = (-1)^i * det of the arguments with row i deleted, so that
  // expanding det(w0, w1, ..., w_{n-1}) along its first column gives
  // dot(w0, r).
  const std::size_t k = n - 1;
  std::vector<double> minor(k * k);
  Vec r(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < k; ++c) {
      std::size_t rr = 0;
      for (std::size_t row = 0; row < n; ++row) {
        if (row == i) continue;
        minor[c * k + rr] = ws[c][row];
        ++rr;
      }
    }
    const double d = lu_determinant(minor.data(), k);
    r[i] = ((i % 2) == 0) ? d : -d;
  }
  return r;
}

double degeneracy_threshold(const Mat& m) {
  return kDegeneracyEps * ipow(m.max_col_norm(), static_cast<int>(m.dim()));
}

Mat multiply(const Mat& a, const Mat& b) {
  if (a.dim() != b.dim()) fail(ErrorKind::DimensionMismatch, "matrix product dimensions differ");
  const std::size_t n = a.dim();
  Mat r = Mat::zero(n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += a.at(i, k) * b.at(k, c);
      r.at(i, c) = s;
    }
  return r;
}

Mat scale(const Mat& m, double s) {
  Mat r = m;
  for (std::size_t c = 0; c < m.dim(); ++c)
    for (std::size_t i = 0; i < m.dim(); ++i) r.at(i, c) *= s;
  return r;
}

Mat add(const Mat& a, const Mat& b) {
  if (a.dim() != b.dim()) fail(ErrorKind::DimensionMismatch, "matrix sum dimensions differ");
  Mat r = a;
  for (std::size_t c = 0; c < a.dim(); ++c)
    for (std::size_t i = 0; i < a.dim(); ++i) r.at(i, c) += b.at(i, c);
  return r;
}

Mat transpose(const Mat& m) {
  Mat r = Mat::zero(m.dim());
  for (std::size_t c = 0; c < m.dim(); ++c)
    for (std::size_t i = 0; i < m.dim(); ++i) r.at(c, i) = m.at(i, c);
  return r;
}

Mat mul_ones_plus_identity(const Mat& m) {
  const std::size_t n = m.dim();
  Vec colsum(n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) colsum[r] += m.at(r, c);
  Mat out = m;
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) out.at(r, c) += colsum[r];
  return out;
}

double max_abs_diff(const Mat& a, const Mat& b) {
  if (a.dim() != b.dim()) fail(ErrorKind::DimensionMismatch, "matrix diff dimensions differ");
  double m = 0.0;
  for (std::size_t c = 0; c < a.dim(); ++c)
    for (std::size_t i = 0; i < a.dim(); ++i) m = std::max(m, std::abs(a.at(i, c) - b.at(i, c)));
  return m;
}

double hadamard_bound(const Mat& m) {
  double p = 1.0;
  for (std::size_t c = 0; c < m.dim(); ++c) {
    double s = 0.0;
    for (std::size_t r = 0; r < m.dim(); ++r) s += m.at(r, c) * m.at(r, c);
    p *= std::sqrt(s);
  }
  return p;
}

double ipow(double base, int exp) {
  double r = 1.0;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace simplex
