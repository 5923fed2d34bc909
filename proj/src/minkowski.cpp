#include "simplex/minkowski.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace simplex {

namespace {

double relative_loop_diff(const Loop& a, const Loop& b) {
  const double scale = std::max({a.max_entry_norm(), b.max_entry_norm(), 1e-300});
  return loop_max_abs_diff(a, b) / scale;
}

}  // namespace

Loop invert_facet_map(const Loop& z) {
  const std::size_t n = z.dim();
  const Mat z_main = z.main_part();
  const double det_z = determinant(z_main);
  // Positivity is a sign test: facet determinants are (det W)^{n-1} and sit
  // far below any fixed fraction of the column-norm scale even for healthy
  // loops. Conditioning breakdown is caught by the round-trip check below.
  if (!(det_z > 0.0))
    fail(ErrorKind::NotPositive,
         "facet loop determinant " + std::to_string(det_z) + " is not positive");

  // One more facet-normal step applied to Z (as a vertex loop) reaches
  // kappa * V; divide the similarity factor back out.
  const Mat y = cofactor_matrix(mul_ones_plus_identity(z_main));
  const double det_v = std::pow(det_z, 1.0 / static_cast<double>(n - 1)) /
                       static_cast<double>(n + 1);
  const double kappa = ipow(static_cast<double>(n + 1), static_cast<int>(n) - 1) *
                       ipow(det_v, static_cast<int>(n) - 2);
  const Mat v_main = scale(y, 1.0 / kappa);
  Loop v = Loop::complete_from_main(v_main.columns(), LoopRole::vertex);

  const double residual = relative_loop_diff(facet_normals(v), z);
  if (residual > kInversionTol)
    fail(ErrorKind::RoundTripFailure,
         "inverse verification residual " + std::to_string(residual) + " exceeds " +
             std::to_string(kInversionTol));
  return v;
}

RealizationResult realize_simplex(const VolumeSpec& spec) {
  spec.validate();
  VolumeSpec positive_spec = spec;
  positive_spec.orientation = Orientation::positive;  // the inverse needs det > 0

  Loop facet_loop = realize_facet_vectors(positive_spec);
  Loop vertices = invert_facet_map(facet_loop);
  const Loop recovered = facet_normals(vertices);

  const double unit_factor =
      spec.unit == LengthUnit::facet ? factorial(spec.dim() - 1) : 1.0;

  RealizationResult result(std::move(vertices), std::move(facet_loop));
  result.det_vertex = determinant(result.vertices.main_part());
  result.closure_defect = result.facet_loop.closure_defect();
  result.round_trip_error = relative_loop_diff(recovered, result.facet_loop);
  result.facet_lengths.reserve(spec.lengths.size());
  for (std::size_t p = 0; p < recovered.size(); ++p) {
    const double measured = norm(recovered[p]) / unit_factor;
    result.facet_lengths.push_back(measured);
    result.max_length_error = std::max(
        result.max_length_error, std::abs(measured - spec.lengths[p]) / spec.lengths[p]);
  }
  return result;
}

VerificationReport verify_realization(const Loop& vertices, const VolumeSpec& target) {
  target.validate();
  if (vertices.dim() != target.dim())
    fail(ErrorKind::DimensionMismatch,
         "vertex loop dimension " + std::to_string(vertices.dim()) +
             " does not match target dimension " + std::to_string(target.dim()));
  const Loop z = facet_normals(vertices);
  const double unit_factor =
      target.unit == LengthUnit::facet ? factorial(target.dim() - 1) : 1.0;

  VerificationReport report;
  report.closure_defect = z.closure_defect();
  // Orientation comes from the vertex loop: the facet determinant is the
  // even power (det W)^{n-1} for odd n and cannot see a reflection.
  const Mat main = vertices.main_part();
  report.det_main = determinant(main);
  report.det_positive = report.det_main > degeneracy_threshold(main);
  report.measured_lengths.reserve(z.size());
  for (std::size_t p = 0; p < z.size(); ++p) {
    const double measured = norm(z[p]) / unit_factor;
    report.measured_lengths.push_back(measured);
    report.max_rel_error = std::max(
        report.max_rel_error, std::abs(measured - target.lengths[p]) / target.lengths[p]);
  }
  return report;
}

}  // namespace simplex
