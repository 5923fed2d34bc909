#include "simplex/realize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "simplex/rng.hpp"

namespace simplex {

namespace {

void check_lengths(const std::vector<double>& lengths) {
  if (lengths.size() < kMinDim + 1)
    fail(ErrorKind::ArityTooSmall, "need at least " + std::to_string(kMinDim + 1) +
                                       " lengths, got " + std::to_string(lengths.size()));
  if (lengths.size() > kMaxDim + 1)
    fail(ErrorKind::DimensionMismatch,
         "more than " + std::to_string(kMaxDim + 1) + " lengths unsupported");
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    if (!std::isfinite(lengths[i]))
      fail(ErrorKind::NonFinite, "length " + std::to_string(i) + " is not finite");
    if (lengths[i] <= 0.0)
      fail(ErrorKind::NonPositiveLength,
           "length " + std::to_string(i) + " = " + std::to_string(lengths[i]));
  }
}

void require_sorted(const std::vector<double>& lengths) {
  if (!std::is_sorted(lengths.begin(), lengths.end()))
    fail(ErrorKind::ValidationError, "lengths must be sorted ascending");
}

double feasibility_threshold(double sum) { return kFeasibilityRelEps * sum + kFeasibilityAbsEps; }

/// Triangle point X in the u/e_ref plane frame: returns (t, rho) with X at
/// distance `b` from the origin and `a` from the point at distance `d`
/// along the axis. rho <= 0 signals a numerically degenerate triangle.
std::pair<double, double> circle_intersection(double d, double a, double b) {
  const double t = (d * d + b * b - a * a) / (2.0 * d);
  const double rho2 = b * b - t * t;
  return {t, rho2 > 0.0 ? std::sqrt(rho2) : -1.0};
}

/// Recursive construction over the first m+1 lengths of `z` (m = z.size()-1),
/// embedded in `ambient` coordinates. Returns P_0 ... P_{m-1}; the terminal
/// point is the origin and is appended by the caller. `angles` is always
/// the full list indexed so level m consumes angles[m-3].
std::vector<Vec> build_chain(const std::vector<double>& z, const std::vector<double>& angles,
                             std::size_t ambient, const ReducedLengthPolicy& policy) {
  const std::size_t m = z.size() - 1;
  if (m == 2) {
    // Base triangle in coordinates 1 and 2: P_0 on the first axis, P_1 with
    // positive second coordinate.
    const auto [x, y] = circle_intersection(z[0], z[1], z[2]);
    if (y <= 0.0)
      fail(ErrorKind::InfeasibleInput, "triangle inequalities too close to equality");
    Vec p0 = Vec::axis(ambient, 0, z[0]);
    Vec p1(ambient);
    p1[0] = x;
    p1[1] = y;
    return {std::move(p0), std::move(p1)};
  }

  // Decorrelate the random policy across recursion levels.
  ReducedLengthPolicy level_policy = policy;
  if (policy.kind == ReducedLengthPolicy::Kind::random)
    level_policy.seed = SplitMix64::substream(policy.seed, m).next();
  const double reduced = choose_reduced_length(z, level_policy);
  std::vector<double> sub(z.begin(), z.end() - 2);
  sub.push_back(reduced);
  std::vector<Vec> pts = build_chain(sub, angles, ambient, policy);

  // Lift: the new point sits at distance z[m] from the origin and z[m-1]
  // from P_{m-2}, on the circle around the axis through P_{m-2}. The
  // dihedral angle is measured from the half-plane containing P_{m-3}.
  const Vec& axis_pt = pts.back();       // P_{m-2}, |P_{m-2}| = reduced
  const Vec& ref_pt = pts[pts.size() - 2];  // P_{m-3}
  const double d = norm(axis_pt);
  const Vec u = axis_pt * (1.0 / d);
  const auto [t, rho] = circle_intersection(d, z[m - 1], z[m]);
  if (rho <= 0.0)
    fail(ErrorKind::InfeasibleInput, "lift triangle too close to degenerate");

  Vec in_plane = ref_pt - dot(ref_pt, u) * u;
  in_plane -= dot(in_plane, u) * u;  // second projection pass tightens orthogonality
  const double in_norm = norm(in_plane);
  if (in_norm <= 0.0)
    fail(ErrorKind::InfeasibleInput, "reference point collapsed onto the lift axis");
  const Vec e_ref = in_plane * (1.0 / in_norm);

  const double alpha = angles[m - 3];
  Vec lifted = t * u + (rho * std::cos(alpha)) * e_ref;
  lifted[m - 1] += rho * std::sin(alpha);  // fresh coordinate axis
  pts.push_back(std::move(lifted));
  return pts;
}

}  // namespace

double factorial(std::size_t k) {
  double f = 1.0;
  for (std::size_t i = 2; i <= k; ++i) f *= static_cast<double>(i);
  return f;
}

std::vector<std::size_t> sort_permutation(const std::vector<double>& values) {
  std::vector<std::size_t> perm(values.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  return perm;
}

void VolumeSpec::validate() const {
  check_lengths(lengths);
  const std::size_t n = dim();
  if (!angles.empty() && angles.size() != n - 2)
    fail(ErrorKind::DimensionMismatch, "dimension " + std::to_string(n) + " takes " +
                                           std::to_string(n - 2) + " dihedral angles, got " +
                                           std::to_string(angles.size()));
  for (double a : angles) {
    if (!std::isfinite(a)) fail(ErrorKind::NonFinite, "dihedral angle is not finite");
    if (std::abs(std::sin(a)) <= kMinAngleSine)
      fail(ErrorKind::AngleDegenerate,
           "sin(alpha) ~ 0 would keep the lifted point inside the hyperplane");
  }
}

std::vector<double> VolumeSpec::normal_unit_lengths() const {
  if (unit == LengthUnit::normal) return lengths;
  const double f = factorial(dim() - 1);
  std::vector<double> out = lengths;
  for (double& v : out) v *= f;
  return out;
}

std::vector<double> VolumeSpec::effective_angles() const {
  if (!angles.empty() || dim() < 3) return angles;
  return std::vector<double>(dim() - 2, std::asin(1.0));  // pi/2
}

FeasibilityReport check_inequalities(const std::vector<double>& lengths) {
  check_lengths(lengths);
  double sum = 0.0;
  std::size_t arg_max = 0;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    sum += lengths[i];
    if (lengths[i] > lengths[arg_max]) arg_max = i;
  }
  FeasibilityReport report;
  report.margin = sum - 2.0 * lengths[arg_max];
  report.feasible = report.margin > feasibility_threshold(sum);
  if (!report.feasible) report.violating_index = arg_max;
  return report;
}

double choose_reduced_length(const std::vector<double>& sorted_lengths,
                             const ReducedLengthPolicy& policy) {
  check_lengths(sorted_lengths);
  require_sorted(sorted_lengths);
  const std::size_t m = sorted_lengths.size() - 1;
  if (m < 3)
    fail(ErrorKind::ArityTooSmall, "reduction applies to dimension >= 3");
  const FeasibilityReport report = check_inequalities(sorted_lengths);
  if (!report.feasible)
    fail(ErrorKind::InfeasibleInput,
         "simplex inequalities fail with margin " + std::to_string(report.margin));

  const double z_m2 = sorted_lengths[m - 2];
  const double z_m1 = sorted_lengths[m - 1];
  const double z_m = sorted_lengths[m];
  if (z_m2 == z_m) return z_m;  // top three lengths tie

  double prefix = 0.0;
  for (std::size_t i = 0; i <= m - 2; ++i) prefix += sorted_lengths[i];
  const double lo = std::max(z_m2, z_m - z_m1);
  const double hi = std::min(prefix, z_m);
  if (!(lo < hi))
    fail(ErrorKind::InfeasibleInput, "empty reduction interval");
  if (policy.kind == ReducedLengthPolicy::Kind::random) {
    SplitMix64 rng(policy.seed);
    return lo + (hi - lo) * rng.uniform01();
  }
  return 0.5 * (lo + hi);
}

PointChain construct_points(const std::vector<double>& sorted_lengths,
                            const std::vector<double>& angles,
                            const ReducedLengthPolicy& policy) {
  check_lengths(sorted_lengths);
  require_sorted(sorted_lengths);
  const std::size_t n = sorted_lengths.size() - 1;
  if (angles.size() != n - 2)
    fail(ErrorKind::DimensionMismatch, "expected " + std::to_string(n - 2) + " angles, got " +
                                           std::to_string(angles.size()));
  for (double a : angles)
    if (!std::isfinite(a) || std::abs(std::sin(a)) <= kMinAngleSine)
      fail(ErrorKind::AngleDegenerate, "degenerate dihedral angle");
  const FeasibilityReport report = check_inequalities(sorted_lengths);
  if (!report.feasible)
    fail(ErrorKind::InfeasibleInput,
         "simplex inequalities fail with margin " + std::to_string(report.margin));

  PointChain chain;
  chain.points = build_chain(sorted_lengths, angles, n, policy);
  chain.points.push_back(Vec(n));  // P_n = origin
  chain.permutation.resize(n + 1);
  std::iota(chain.permutation.begin(), chain.permutation.end(), std::size_t{0});
  return chain;
}

Loop realize_facet_vectors(const VolumeSpec& spec) {
  spec.validate();
  const std::vector<double> targets = spec.normal_unit_lengths();
  const FeasibilityReport report = check_inequalities(targets);
  if (!report.feasible)
    fail(ErrorKind::InfeasibleInput,
         "simplex inequalities fail with margin " + std::to_string(report.margin));

  const std::size_t n = spec.dim();
  const std::vector<std::size_t> perm = sort_permutation(targets);
  std::vector<double> sorted(targets.size());
  for (std::size_t i = 0; i < perm.size(); ++i) sorted[i] = targets[perm[i]];

  PointChain chain = construct_points(sorted, spec.effective_angles(), spec.policy);
  chain.permutation = perm;

  // z_k = P_k - P_{k-1} with P_{-1} := P_n = O; undo the sort so each output
  // slot carries its originally requested length.
  std::vector<Vec> sorted_vectors;
  sorted_vectors.reserve(n + 1);
  sorted_vectors.push_back(chain.points[0]);
  for (std::size_t k = 1; k <= n; ++k)
    sorted_vectors.push_back(chain.points[k] - chain.points[k - 1]);

  std::vector<Vec> vectors(n + 1, Vec(n));
  for (std::size_t i = 0; i <= n; ++i) vectors[perm[i]] = sorted_vectors[i];

  Loop loop = Loop::make(std::move(vectors), LoopRole::facet);
  if (spec.orientation == Orientation::positive && determinant(loop.main_part()) < 0.0) {
    // Mirror in the last coordinate; flips the orientation, keeps lengths.
    std::vector<Vec> reflected;
    reflected.reserve(n + 1);
    for (const Vec& z : loop.entries()) {
      Vec r = z;
      r[n - 1] = -r[n - 1];
      reflected.push_back(std::move(r));
    }
    loop = Loop::make(std::move(reflected), LoopRole::facet);
  }
  return loop;
}

}  // namespace simplex
