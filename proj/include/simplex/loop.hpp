#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "simplex/mat.hpp"
#include "simplex/vec.hpp"

namespace simplex {

/// Role tags are advisory metadata: the maps only require closure, and the
/// similarity iteration deliberately reinterprets a facet loop as a vertex
/// loop.
enum class LoopRole { vertex, edge, facet };

const char* to_string(LoopRole role) noexcept;

/// An n-loop: an ordered tuple of n+1 vectors in R^n summing to zero
/// (within tolerance), 2 <= n <= 12.
///
/// Vertex loops hold position vectors of simplex vertices with the
/// barycenter at the origin; edge loops hold the consecutive edge vectors
/// w_0 = v_0 - v_n, w_i = v_i - v_{i-1}; facet loops hold the inward facet
/// normals scaled so |z_p| is the (n-1)-volume of the parallelotope spanned
/// by the facet's boundary edges.
class Loop {
 public:
  /// Validates shared dimension and closure: ||sum||_2 must not exceed
  /// kIdentityTol times the largest entry norm.
  static Loop make(std::vector<Vec> vs, LoopRole role);

  /// Prepends v_0 = -(v_1 + ... + v_n), so closure holds by construction.
  static Loop complete_from_main(const std::vector<Vec>& main, LoopRole role);

  std::size_t dim() const noexcept { return n_; }
  std::size_t size() const noexcept { return vs_.size(); }  // n + 1
  const Vec& operator[](std::size_t i) const noexcept { return vs_[i]; }
  const std::vector<Vec>& entries() const noexcept { return vs_; }
  LoopRole role() const noexcept { return role_; }
  Loop as_role(LoopRole role) const;

  /// Main part: the last n entries as an n x n matrix (columns v_1..v_n).
  Mat main_part() const;

  /// ||v_0 + ... + v_n||_2.
  double closure_defect() const;
  double max_entry_norm() const;

 private:
  Loop(std::vector<Vec> vs, LoopRole role, std::size_t n)
      : vs_(std::move(vs)), role_(role), n_(n) {}

  std::vector<Vec> vs_;
  LoopRole role_;
  std::size_t n_ = 0;
};

struct LoopClass {
  double det_main = 0.0;
  bool affine_independent = false;
  bool positive = false;
};

struct SimilarityReport {
  double kappa = 0.0;     // (n+1)^{n-1} (det main)^{n-2}
  double residual = 0.0;  // max entry deviation of the twice-iterated main part from kappa * main
};

/// Edge vectors of a vertex loop: w_0 = v_0 - v_n, w_i = v_i - v_{i-1}.
Loop edge_map(const Loop& v);

/// Inverse of edge_map, normalized to zero barycenter:
/// v_0 = -(1/(n+1)) * sum_j (n+1-j) w_j, then v_i = v_0 + w_1 + ... + w_i.
Loop edge_map_inverse(const Loop& w);

/// Facet normals of an edge loop. Production path: the main part is the
/// cofactor matrix of the cumulative-sum matrix (w_1, w_1+w_2, ...,
/// w_1+...+w_n) and z_0 closes the loop. Cross-checked against
/// facet_map_vector_products in debug builds.
Loop facet_map(const Loop& w);

/// Facet normals entry by entry from the defining vector products:
/// z_p = -[w_0, ..., ^w_p, ^w_{p+1}, ..., w_n] for p < n and
/// z_n = (-1)^{n+1} [w_1, ..., w_{n-1}]. Kept as the independent route the
/// production path is checked against.
Loop facet_map_vector_products(const Loop& w);

/// facet_map(edge_map(v)); the main part equals the cofactor matrix of
/// main(v) * (I + ones).
Loop facet_normals(const Loop& v);

/// Applies facet_normals twice, reinterpreting the intermediate facet loop
/// as a vertex loop. The result is similar to the input with ratio
/// kappa = (n+1)^{n-1} (det main)^{n-2}, for every loop, degenerate or not.
std::pair<Loop, SimilarityReport> similarity_iterate(const Loop& v);

LoopClass classify(const Loop& l);

/// Largest entrywise |a - b| over the two loops (same shape required).
double loop_max_abs_diff(const Loop& a, const Loop& b);

}  // namespace simplex
