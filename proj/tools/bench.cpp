// Throughput comparison of the serial reference against the OpenMP batch
// kernels. Both paths run the same per-instance work from the same seeds and
// must agree bit for bit; only the wall time differs.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "simplex/batch.hpp"

namespace {

using namespace simplex::batch;
using Suite = SuiteResult (*)(std::size_t, std::size_t, std::uint64_t, Exec);

struct Entry {
  const char* name;
  Suite suite;
  std::size_t count;
};

double run_timed(const Entry& e, std::size_t n, std::uint64_t seed, Exec exec,
                 SuiteResult& out) {
  const auto t0 = std::chrono::steady_clock::now();
  out = e.suite(n, e.count, seed, exec);
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t scale = 1;
  if (argc > 1) scale = static_cast<std::size_t>(std::strtoull(argv[1], nullptr, 10));
  if (scale == 0) scale = 1;

  const std::uint64_t seed = 20240811;
  const std::vector<Entry> entries = {
      {"cofactor_identities", &cofactor_identities, 4000 * scale},
      {"vector_product_laws", &vector_product_laws, 8000 * scale},
      {"scalar_product_table", &scalar_product_table, 4000 * scale},
      {"iteration_similarity", &iteration_similarity, 2000 * scale},
      {"facet_closure", &facet_closure_and_inequalities, 4000 * scale},
      {"realization_fidelity", &realization_fidelity, 8000 * scale},
      {"minkowski_round_trip", &minkowski_round_trip, 4000 * scale},
  };

  std::printf("openmp=%s threads=%d scale=%zu\n", openmp_enabled() ? "yes" : "no",
              max_threads(), scale);
  std::printf("%-22s %4s %10s %12s %12s %8s %7s\n", "suite", "n", "instances", "serial[ms]",
              "openmp[ms]", "speedup", "match");

  bool all_match = true;
  for (const Entry& e : entries) {
    for (std::size_t n : {3, 6}) {
      SuiteResult serial, parallel;
      const double t_serial = run_timed(e, n, seed, Exec::Serial, serial);
      const double t_parallel = run_timed(e, n, seed, Exec::OpenMP, parallel);
      const bool match = serial.worst == parallel.worst && serial.closure == parallel.closure &&
                         serial.min_margin == parallel.min_margin &&
                         serial.all_passed == parallel.all_passed;
      all_match = all_match && match;
      std::printf("%-22s %4zu %10zu %12.2f %12.2f %7.2fx %7s\n", e.name, n, e.count, t_serial,
                  t_parallel, t_serial / t_parallel, match ? "yes" : "NO");
    }
  }
  if (!all_match) {
    std::printf("serial and OpenMP results diverged\n");
    return 1;
  }
  return 0;
}
