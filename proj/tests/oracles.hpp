// Brute-force reference implementations the library paths are checked
// against. Deliberately independent of the LU/minor code under test:
// determinants come from the full permutation expansion.
#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "simplex/mat.hpp"
#include "simplex/rng.hpp"

namespace oracle {

/// Leibniz determinant: sum over all permutations of signed entry products.
/// Usable up to n ~ 8 in tests.
inline double leibniz_det(const simplex::Mat& m) {
  const std::size_t n = m.dim();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  auto parity = [&perm]() {
    int inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) ++inv;
    return inv % 2 == 0 ? 1.0 : -1.0;
  };
  double det = 0.0;
  do {
    double prod = parity();
    for (std::size_t c = 0; c < n; ++c) prod *= m.at(perm[c], c);
    det += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

/// Cofactor matrix with Leibniz minors. Each minor is embedded in the
/// top-left block of a padded identity so leibniz_det can evaluate it.
inline simplex::Mat brute_cofactor(const simplex::Mat& m) {
  const std::size_t n = m.dim();
  simplex::Mat c = simplex::Mat::zero(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      simplex::Mat padded = simplex::Mat::identity(n);
      std::size_t rr = 0;
      for (std::size_t row = 0; row < n; ++row) {
        if (row == i) continue;
        std::size_t cc = 0;
        for (std::size_t col = 0; col < n; ++col) {
          if (col == j) continue;
          padded.at(rr, cc) = m.at(row, col);
          ++cc;
        }
        ++rr;
      }
      const double d = leibniz_det(padded);
      c.at(i, j) = ((i + j) % 2 == 0) ? d : -d;
    }
  }
  return c;
}

inline simplex::Mat random_mat(simplex::SplitMix64& rng, std::size_t n) {
  simplex::Mat m = simplex::Mat::zero(n);
  for (std::size_t col = 0; col < n; ++col)
    for (std::size_t r = 0; r < n; ++r) m.at(r, col) = rng.uniform_pm1();
  return m;
}

inline simplex::Vec random_vec(simplex::SplitMix64& rng, std::size_t n) {
  simplex::Vec v(n);
  for (std::size_t j = 0; j < n; ++j) v[j] = rng.uniform_pm1();
  return v;
}

}  // namespace oracle
