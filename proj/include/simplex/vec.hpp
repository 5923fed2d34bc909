#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "simplex/error.hpp"

namespace simplex {

/// Ambient dimensions supported by loops, realization and the CLI.
inline constexpr std::size_t kMinDim = 2;
inline constexpr std::size_t kMaxDim = 12;

/// Relative tolerance used by loop-closure validation and the internal
/// identity cross-checks.
inline constexpr double kIdentityTol = 1e-9;

/// A matrix counts as singular when |det| <= kDegeneracyEps * (max column
/// norm)^n; the test is invariant under rescaling.
inline constexpr double kDegeneracyEps = 1e-12;

/// Dense vector in R^n, 1 <= n <= 12. Coordinates are validated finite at
/// construction; the dimension is fixed for the lifetime of the object.
class Vec {
 public:
  Vec() = default;
  explicit Vec(std::size_t dim) : x_(dim, 0.0) { check_dim(dim); }
  Vec(std::initializer_list<double> xs) : x_(xs) { validate(); }
  explicit Vec(std::vector<double> xs) : x_(std::move(xs)) { validate(); }

  /// k-th coordinate vector scaled by `value` (k is zero-based).
  static Vec axis(std::size_t dim, std::size_t k, double value = 1.0);

  std::size_t dim() const noexcept { return x_.size(); }
  double operator[](std::size_t i) const noexcept { return x_[i]; }
  double& operator[](std::size_t i) noexcept { return x_[i]; }
  const std::vector<double>& coords() const noexcept { return x_; }

  Vec& operator+=(const Vec& o);
  Vec& operator-=(const Vec& o);
  Vec& operator*=(double s);

 private:
  void validate() const;
  static void check_dim(std::size_t dim);

  std::vector<double> x_;
};

Vec operator+(Vec a, const Vec& b);
Vec operator-(Vec a, const Vec& b);
Vec operator-(const Vec& a);
Vec operator*(Vec a, double s);
Vec operator*(double s, Vec a);

double dot(const Vec& a, const Vec& b);
double norm2(const Vec& a);
double norm(const Vec& a);
double max_abs(const Vec& a);

/// Largest |a_i - b_i| over all coordinates.
double max_abs_diff(const Vec& a, const Vec& b);

void require_same_dim(const Vec& a, const Vec& b, const char* where);

}  // namespace simplex
