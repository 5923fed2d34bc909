#pragma once

#include <cstddef>
#include <vector>

#include "simplex/vec.hpp"

namespace simplex {

/// Square real matrix, stored column-major, 2 <= n <= 12. The column view
/// matches how tuples of vectors are written throughout: the j-th column is
/// the j-th vector of the tuple.
class Mat {
 public:
  Mat() = default;

  static Mat zero(std::size_t n);
  static Mat identity(std::size_t n);
  static Mat from_columns(const std::vector<Vec>& cols);

  /// The matrix A with 2 on the diagonal and 1 everywhere else (I + ones).
  static Mat ones_plus_identity(std::size_t n);

  std::size_t dim() const noexcept { return n_; }
  double at(std::size_t r, std::size_t c) const noexcept { return a_[c * n_ + r]; }
  double& at(std::size_t r, std::size_t c) noexcept { return a_[c * n_ + r]; }
  Vec column(std::size_t c) const;
  std::vector<Vec> columns() const;
  const std::vector<double>& data() const noexcept { return a_; }

  double max_abs() const;
  double max_col_norm() const;

 private:
  Mat(std::size_t n, std::vector<double> a) : n_(n), a_(std::move(a)) {}

  std::size_t n_ = 0;
  std::vector<double> a_;  // column-major, n_*n_
};

/// det(M) by LU factorization with partial pivoting on a scratch copy.
double determinant(const Mat& m);

/// Cofactor matrix c(M): entry (i,j) is (-1)^{i+j} times the minor obtained
/// by deleting row i and column j. Convention fixed by the Cramer identity
/// c(M) M^t = M^t c(M) = det(M) I. Each minor is evaluated by its own LU
/// pass, which stays well defined arbitrarily close to singular input.
Mat cofactor_matrix(const Mat& m);

/// Generalized vector product of n-1 vectors in R^n: the unique vector r
/// with dot(w0, r) = det(w0, w1, ..., w_{n-1}) for every w0. Coincides with
/// the first column of the cofactor matrix of (., w1, ..., w_{n-1}); for
/// n = 3 this is the ordinary cross product.
Vec vector_product(const std::vector<Vec>& ws);

/// Scale below which |det| is treated as zero for this matrix.
double degeneracy_threshold(const Mat& m);

Mat multiply(const Mat& a, const Mat& b);
Mat scale(const Mat& m, double s);
Mat add(const Mat& a, const Mat& b);
Mat transpose(const Mat& m);

/// M * (I + ones): column j becomes col_j(M) + sum of all columns of M.
Mat mul_ones_plus_identity(const Mat& m);

/// Largest |a_ij - b_ij|.
double max_abs_diff(const Mat& a, const Mat& b);

/// Product of column 2-norms (Hadamard bound on |det|); the natural scale
/// for determinant residuals.
double hadamard_bound(const Mat& m);

/// Integer power with ipow(x, 0) == 1 for every x.
double ipow(double base, int exp);

}  // namespace simplex
