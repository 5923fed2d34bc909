#include <doctest.h>

#include <cmath>
#include <functional>

#include "simplex/jobs.hpp"
#include "simplex/minkowski.hpp"
#include "simplex/rng.hpp"

using namespace simplex;

namespace {

bool throws_kind(ErrorKind kind, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

}  // namespace

TEST_CASE("invert_facet_map hand case") {
  const Loop z = Loop::make({Vec{1.0, 1.0}, Vec{-2.0, 1.0}, Vec{1.0, -2.0}}, LoopRole::facet);
  const Loop v = invert_facet_map(z);
  CHECK(max_abs_diff(v[0], Vec{1.0, 1.0}) <= 1e-13);
  CHECK(max_abs_diff(v[1], Vec{-1.0, 0.0}) <= 1e-13);
  CHECK(max_abs_diff(v[2], Vec{0.0, -1.0}) <= 1e-13);
}

TEST_CASE("invert_facet_map round trips") {
  SplitMix64 rng(7);
  for (std::size_t n = 2; n <= 6; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const Loop v = random_loop_stream(rng, n);
      const Loop z = facet_normals(v);
      const Loop recovered = invert_facet_map(z);
      CHECK(loop_max_abs_diff(recovered, v) <= 1e-8 * std::max(1.0, v.max_entry_norm()));

      // Forward map of the recovered loop lands back on z.
      CHECK(loop_max_abs_diff(facet_normals(recovered), z) <=
            1e-8 * std::max(1.0, z.max_entry_norm()));

      // Determinant consistency.
      const double det_z = determinant(z.main_part());
      const double det_v = determinant(recovered.main_part());
      CHECK(det_v == doctest::Approx(std::pow(det_z, 1.0 / double(n - 1)) / double(n + 1))
                         .epsilon(1e-9));
    }
  }
}

TEST_CASE("invert_facet_map rejects non-positive loops") {
  const Loop negative = Loop::make({Vec{1.0, 1.0}, Vec{1.0, -2.0}, Vec{-2.0, 1.0}},
                                   LoopRole::facet);
  CHECK(determinant(negative.main_part()) < 0.0);
  CHECK(throws_kind(ErrorKind::NotPositive, [&] { invert_facet_map(negative); }));

  const Loop collinear = Loop::make({Vec{1.0, 0.0}, Vec{1.0, 0.0}, Vec{-2.0, 0.0}},
                                    LoopRole::facet);
  CHECK(throws_kind(ErrorKind::NotPositive, [&] { invert_facet_map(collinear); }));
}

TEST_CASE("inversion scale law") {
  SplitMix64 rng(8);
  for (std::size_t n : {std::size_t{3}, std::size_t{5}}) {
    const Loop v = random_loop_stream(rng, n);
    const Loop z = facet_normals(v);
    const double lambda = 2.5;
    std::vector<Vec> scaled;
    for (const Vec& e : z.entries()) scaled.push_back(lambda * e);
    const Loop z_scaled = Loop::make(scaled, LoopRole::facet);

    const Loop a = invert_facet_map(z_scaled);
    const Loop b = invert_facet_map(z);
    const double factor = std::pow(lambda, 1.0 / double(n - 1));
    for (std::size_t i = 0; i <= n; ++i)
      CHECK(max_abs_diff(a[i], factor * b[i]) <= 1e-9 * std::max(1.0, factor * norm(b[i])));
  }
}

TEST_CASE("realize_simplex pipeline") {
  VolumeSpec unit;
  unit.lengths = {1, 1, 1};
  const RealizationResult r = realize_simplex(unit);
  CHECK(r.det_vertex > 0.0);
  CHECK(r.max_length_error <= 1e-8);
  CHECK(r.round_trip_error <= 1e-8);
  for (double len : r.facet_lengths) CHECK(len == doctest::Approx(1.0).epsilon(1e-8));
  // Equilateral triangle of side 1: vertices at circumradius 1/sqrt(3).
  for (const Vec& p : r.vertices.entries())
    CHECK(norm(p) == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-8));

  VolumeSpec tetra;
  tetra.lengths = {3, 4, 5, 6};
  const RealizationResult rt = realize_simplex(tetra);
  CHECK(rt.det_vertex > 0.0);
  for (std::size_t p = 0; p < 4; ++p)
    CHECK(rt.facet_lengths[p] == doctest::Approx(tetra.lengths[p]).epsilon(1e-8));

  VolumeSpec degenerate;
  degenerate.lengths = {1, 2, 3};
  CHECK(throws_kind(ErrorKind::InfeasibleInput, [&] { realize_simplex(degenerate); }));
}

TEST_CASE("verify_realization") {
  VolumeSpec spec;
  spec.lengths = {3, 4, 5, 6};
  const RealizationResult r = realize_simplex(spec);

  const VerificationReport ok = verify_realization(r.vertices, spec);
  CHECK(ok.max_rel_error <= 1e-8);
  CHECK(ok.det_positive);

  // Doubling the simplex scales every facet length by 2^{n-1} = 4.
  std::vector<Vec> doubled;
  for (const Vec& v : r.vertices.entries()) doubled.push_back(2.0 * v);
  const VerificationReport big =
      verify_realization(Loop::make(doubled, LoopRole::vertex), spec);
  for (std::size_t p = 0; p < 4; ++p)
    CHECK(big.measured_lengths[p] == doctest::Approx(4.0 * spec.lengths[p]).epsilon(1e-8));
  CHECK(big.max_rel_error == doctest::Approx(3.0).epsilon(1e-8));

  // Swapping two vertices flips the orientation flag.
  std::vector<Vec> swapped = r.vertices.entries();
  std::swap(swapped[1], swapped[2]);
  const VerificationReport flipped =
      verify_realization(Loop::make(swapped, LoopRole::vertex), spec);
  CHECK_FALSE(flipped.det_positive);
  CHECK(flipped.det_main < 0.0);
}

TEST_CASE("realize_simplex in facet units") {
  VolumeSpec spec;
  spec.lengths = {3, 4, 5, 6};
  spec.unit = LengthUnit::facet;
  const RealizationResult r = realize_simplex(spec);
  // Reported lengths are in the requested unit.
  for (std::size_t p = 0; p < 4; ++p)
    CHECK(r.facet_lengths[p] == doctest::Approx(spec.lengths[p]).epsilon(1e-8));
  // The raw loop carries the parallelotope scaling.
  for (std::size_t p = 0; p < 4; ++p)
    CHECK(norm(r.facet_loop[p]) == doctest::Approx(2.0 * spec.lengths[p]).epsilon(1e-8));
}
