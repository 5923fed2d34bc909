#pragma once

#include <vector>

#include "simplex/loop.hpp"
#include "simplex/realize.hpp"

namespace simplex {

/// Round-trip residual above which invert_facet_map refuses to return a
/// result (conditioning breakdown near degenerate input).
inline constexpr double kInversionTol = 1e-7;

/// Output of the full volumes-to-vertices pipeline. `vertices` is the
/// vertex loop with barycenter at the origin; `facet_loop` is the realized
/// facet loop it was recovered from; `facet_lengths` are remeasured from
/// the recovered simplex in the requesting spec's unit.
struct RealizationResult {
  RealizationResult(Loop v, Loop z) : vertices(std::move(v)), facet_loop(std::move(z)) {}

  Loop vertices;
  Loop facet_loop;
  double det_vertex = 0.0;
  std::vector<double> facet_lengths;
  double max_length_error = 0.0;  // relative, against the requested targets
  double closure_defect = 0.0;    // of the realized facet loop
  double round_trip_error = 0.0;  // facet normals of vertices vs facet_loop, relative
};

struct VerificationReport {
  std::vector<double> measured_lengths;  // in the target's unit
  double max_rel_error = 0.0;
  double closure_defect = 0.0;
  double det_main = 0.0;
  bool det_positive = false;
};

/// Inverse of the facet-normal map on positive loops: the unique vertex
/// loop V with zero barycenter whose facet normals equal Z. Uses the
/// similarity identity: one more facet-normal step applied to Z lands on
/// kappa * V with kappa = (n+1)^{n-1} (det V)^{n-2} and
/// det V = (det Z)^{1/(n-1)} / (n+1). The result is re-verified through the
/// forward map before being returned.
Loop invert_facet_map(const Loop& z);

/// Full pipeline: realize facet vectors for the spec, then invert to the
/// simplex realizing those facet volumes. det(main) of the result is
/// always positive.
RealizationResult realize_simplex(const VolumeSpec& spec);

/// Recomputes facet normals of a vertex loop and compares their lengths to
/// the target spec in the spec's unit.
VerificationReport verify_realization(const Loop& vertices, const VolumeSpec& target);

}  // namespace simplex
