#include "simplex/vec.hpp"

#include <algorithm>
#include <string>

namespace simplex {

void Vec::check_dim(std::size_t dim) {
  if (dim < 1 || dim > kMaxDim)
    fail(ErrorKind::DimensionMismatch,
         "vector dimension " + std::to_string(dim) + " outside [1, " +
             std::to_string(kMaxDim) + "]");
}

void Vec::validate() const {
  check_dim(x_.size());
  for (double v : x_)
    if (!std::isfinite(v)) fail(ErrorKind::NonFinite, "vector coordinate is not finite");
}

Vec Vec::axis(std::size_t dim, std::size_t k, double value) {
  Vec e(dim);
  if (k >= dim) fail(ErrorKind::DimensionMismatch, "axis index out of range");
  e[k] = value;
  return e;
}

void require_same_dim(const Vec& a, const Vec& b, const char* where) {
  if (a.dim() != b.dim())
    fail(ErrorKind::DimensionMismatch,
         std::string(where) + ": dimensions " + std::to_string(a.dim()) + " and " +
             std::to_string(b.dim()) + " differ");
}

Vec& Vec::operator+=(const Vec& o) {
  require_same_dim(*this, o, "vector add");
  for (std::size_t i = 0; i < x_.size(); ++i) x_[i] += o[i];
  return *this;
}

Vec& Vec::operator-=(const Vec& o) {
  require_same_dim(*this, o, "vector sub");
  for (std::size_t i = 0; i < x_.size(); ++i) x_[i] -= o[i];
  return *this;
}

Vec& Vec::operator*=(double s) {
  for (double& v : x_) v *= s;
  return *this;
}

Vec operator+(Vec a, const Vec& b) { return a += b; }
Vec operator-(Vec a, const Vec& b) { return a -= b; }

Vec operator-(const Vec& a) {
  Vec r = a;
  return r *= -1.0;
}

Vec operator*(Vec a, double s) { return a *= s; }
Vec operator*(double s, Vec a) { return a *= s; }

double dot(const Vec& a, const Vec& b) {
  require_same_dim(a, b, "dot");
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(const Vec& a) { return dot(a, a); }
double norm(const Vec& a) { return std::sqrt(norm2(a)); }

double max_abs(const Vec& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) m = std::max(m, std::abs(a[i]));
  return m;
}

double max_abs_diff(const Vec& a, const Vec& b) {
  require_same_dim(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace simplex
