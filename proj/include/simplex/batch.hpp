#pragma once

#include <cstddef>
#include <cstdint>

namespace simplex::batch {

/// Execution mode for the batch kernels. Instances are independent and
/// their aggregation (max / min / and) is order-free, so both modes produce
/// bit-identical results; Serial is the reference the parallel path is
/// tested against.
enum class Exec { Serial, OpenMP };

bool openmp_enabled() noexcept;
int max_threads() noexcept;

struct SuiteResult {
  std::size_t instances = 0;
  double worst = 0.0;        // largest relative residual across instances
  double closure = 0.0;      // largest closure defect where the suite tracks one
  double min_margin = 0.0;   // smallest strictness margin where tracked
  bool all_passed = true;    // hard predicates (spanning, positivity, no throw)
};

/// One instance = fresh random matrices; checks the five cofactor-matrix
/// identities (Cramer, det of cofactor, homogeneity, multiplicativity,
/// double cofactor) at Hadamard-bound scales.
SuiteResult cofactor_identities(std::size_t n, std::size_t count, std::uint64_t seed, Exec exec);

/// Defining property, orthogonality, alternating sign and the norm identity
/// of the generalized vector product.
SuiteResult vector_product_laws(std::size_t n, std::size_t count, std::uint64_t seed, Exec exec);

/// Full scalar-product table between edge and facet loops plus the
/// determinant chain det W = (n+1) det V, det Z = (det W)^{n-1}.
SuiteResult scalar_product_table(std::size_t n, std::size_t count, std::uint64_t seed, Exec exec);

/// Twice-iterated facet normals against the similarity factor
/// (n+1)^{n-1} (det V)^{n-2}, on loops of either orientation.
SuiteResult iteration_similarity(std::size_t n, std::size_t count, std::uint64_t seed, Exec exec);

/// Facet loops of positive vertex loops: closure defect (via the
/// vector-product route) and strictness of the simplex inequalities.
SuiteResult facet_closure_and_inequalities(std::size_t n, std::size_t count, std::uint64_t seed,
                                           Exec exec);

/// Random feasible length tuples (log-uniform in [0.1, 10], redrawn until
/// feasible) through realize_facet_vectors: per-length relative error,
/// closure defect, det(main) > 0.
SuiteResult realization_fidelity(std::size_t n, std::size_t count, std::uint64_t seed, Exec exec);

/// facet_normals then invert_facet_map on random positive loops; worst
/// relative recovery error.
SuiteResult minkowski_round_trip(std::size_t n, std::size_t count, std::uint64_t seed, Exec exec);

}  // namespace simplex::batch
