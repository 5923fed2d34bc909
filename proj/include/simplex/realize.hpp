#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "simplex/loop.hpp"

namespace simplex {

/// Unit convention for facet sizes. `normal` means raw parallelotope
/// (n-1)-volumes |z_p|; `facet` means simplex facet volumes, i.e. the
/// parallelotope value divided by (n-1)!.
enum class LengthUnit { normal, facet };

enum class Orientation { positive, any };

/// How the reduced length z' is picked inside its admissible open interval.
struct ReducedLengthPolicy {
  enum class Kind { midpoint, random };
  Kind kind = Kind::midpoint;
  std::uint64_t seed = 0;  // used by Kind::random only
};

/// Feasibility gate: margin = sum - 2 * max must exceed
/// 1e-12 * sum + 1e-300 for the strict simplex inequalities to count as
/// satisfied.
inline constexpr double kFeasibilityRelEps = 1e-12;
inline constexpr double kFeasibilityAbsEps = 1e-300;

/// Angles with |sin a| at or below this would trap the lifted point inside
/// the previous coordinate hyperplane.
inline constexpr double kMinAngleSine = 1e-9;

struct VolumeSpec {
  std::vector<double> lengths;  // n+1 positive targets, expressed in `unit`
  std::vector<double> angles;   // n-2 dihedral parameters; empty selects pi/2 defaults
  LengthUnit unit = LengthUnit::normal;
  Orientation orientation = Orientation::positive;
  ReducedLengthPolicy policy;

  std::size_t dim() const noexcept { return lengths.size() - 1; }

  /// Throws on non-positive/non-finite lengths, bad arity, wrong angle
  /// count, or degenerate angles.
  void validate() const;

  /// Targets converted to parallelotope units ((n-1)! factor when
  /// unit == facet).
  std::vector<double> normal_unit_lengths() const;

  /// Explicit angles, or the pi/2 defaults when none were given.
  std::vector<double> effective_angles() const;
};

struct FeasibilityReport {
  bool feasible = false;
  double margin = 0.0;  // sum - 2 * max, in the input's units
  std::optional<std::size_t> violating_index;
};

/// Chain of points P_0 ... P_n realizing consecutive distances: P_n is the
/// origin and |P_k - P_{k-1}| equals the k-th length (P_{-1} := P_n).
/// Each P_k uses exactly coordinates 1..k+1, with everything beyond exactly
/// zero, so the closing vectors span the whole space.
struct PointChain {
  std::vector<Vec> points;
  std::vector<std::size_t> permutation;  // sort permutation applied to the lengths
};

/// Strict simplex inequalities 2 max < sum for n+1 positive values.
FeasibilityReport check_inequalities(const std::vector<double>& lengths);

/// The reduced top length z' for the induction step: strictly inside
/// (max{z_{n-2}, z_n - z_{n-1}}, min{z_0+...+z_{n-2}, z_n}) when
/// z_{n-2} < z_n, and exactly z_n when the top three lengths tie.
double choose_reduced_length(const std::vector<double>& sorted_lengths,
                             const ReducedLengthPolicy& policy = {});

/// Recursive construction: base case places a triangle in the first two
/// coordinates; each induction step solves the reduced problem and lifts a
/// new point out of the current hyperplane on the circle of prescribed
/// distances, parameterized by the matching dihedral angle.
PointChain construct_points(const std::vector<double>& sorted_lengths,
                            const std::vector<double>& angles,
                            const ReducedLengthPolicy& policy = {});

/// Facet-vector realization: a closed loop of n+1 vectors spanning R^n
/// whose lengths equal the requested targets (original order; the closure
/// constraint is permutation-invariant). With Orientation::positive the
/// loop is reflected in the last coordinate if needed so det(main) > 0.
Loop realize_facet_vectors(const VolumeSpec& spec);

std::vector<std::size_t> sort_permutation(const std::vector<double>& values);

double factorial(std::size_t k);

}  // namespace simplex
