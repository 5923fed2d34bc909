// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Residual tolerances are relative to the operand magnitudes of the
// computation being checked (Hadamard-type bounds), which is what the batch
// kernels report.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "simplex/batch.hpp"
#include "simplex/jobs.hpp"
#include "simplex/minkowski.hpp"

using namespace simplex;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(int index, const std::string& name, bool pass, const std::string& detail) {
  std::printf("%-4s criterion %2d: %s (%s)\n", pass ? "PASS" : "FAIL", index, name.c_str(),
              detail.c_str());
  if (!pass) ++failures;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

bool cli_run(const std::string& args) {
  const std::string cmd = std::string(SIMPLEX_FORGE_BIN) + " " + args + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) && WEXITSTATUS(status) == 0;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

constexpr std::uint64_t kSeed = 0x5ca1ab1e;
constexpr std::size_t kCount = 500;

void criterion1() {
  double worst = 0.0;
  bool ok = true;
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto r = batch::cofactor_identities(n, kCount, kSeed + n, batch::Exec::OpenMP);
    worst = std::max(worst, r.worst);
    ok = ok && r.all_passed;
  }
  report(1, "cofactor identities, 500 matrices per n in 2..6", ok && worst <= 1e-9,
         "worst rel residual " + fmt(worst) + " <= 1e-9");
}

void criterion2() {
  double worst = 0.0;
  bool ok = true;
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto r = batch::vector_product_laws(n, kCount, kSeed + 10 * n, batch::Exec::OpenMP);
    worst = std::max(worst, r.worst);
    ok = ok && r.all_passed;
  }
  report(2, "vector product: orthogonality, alternating, norm identity", ok && worst <= 1e-9,
         "worst rel residual " + fmt(worst) + " <= 1e-9");
}

void criterion3() {
  double worst = 0.0;
  bool ok = true;
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto r = batch::scalar_product_table(n, kCount, kSeed + 20 * n, batch::Exec::OpenMP);
    worst = std::max(worst, r.worst);
    ok = ok && r.all_passed;
  }
  report(3, "scalar-product table and determinant chain", ok && worst <= 1e-9,
         "worst rel residual " + fmt(worst) + " <= 1e-9");
}

void criterion4() {
  double worst = 0.0;
  bool ok = true;
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto r = batch::iteration_similarity(n, kCount, kSeed + 30 * n, batch::Exec::OpenMP);
    worst = std::max(worst, r.worst);
    ok = ok && r.all_passed;
  }
  const Loop hand = Loop::make({Vec{1.0, 1.0}, Vec{-1.0, 0.0}, Vec{0.0, -1.0}},
                               LoopRole::vertex);
  const auto [twice, rep] = similarity_iterate(hand);
  const bool hand_ok = std::abs(rep.kappa - 3.0) <= 1e-12 && rep.residual <= 1e-12;
  report(4, "similarity iteration, both orientations + hand case kappa=3",
         ok && worst <= 1e-9 && hand_ok,
         "worst rel residual " + fmt(worst) + " <= 1e-9, |kappa-3| " +
             fmt(std::abs(rep.kappa - 3.0)) + " <= 1e-12");
}

void criterion5() {
  double closure = 0.0, margin = 1e300;
  bool ok = true;
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto r =
        batch::facet_closure_and_inequalities(n, kCount, kSeed + 40 * n, batch::Exec::OpenMP);
    closure = std::max(closure, r.closure);
    margin = std::min(margin, r.min_margin);
    ok = ok && r.all_passed;
  }
  report(5, "facet loops close and satisfy strict simplex inequalities",
         ok && closure <= 1e-10 && margin > 0.0,
         "worst closure " + fmt(closure) + " <= 1e-10, min margin " + fmt(margin) + " > 0");
}

void criterion6() {
  double worst = 0.0, closure = 0.0;
  bool ok = true;
  for (std::size_t n = 2; n <= 8; ++n) {
    const auto r = batch::realization_fidelity(n, 1000, kSeed + 50 * n, batch::Exec::OpenMP);
    worst = std::max(worst, r.worst);
    closure = std::max(closure, r.closure);
    ok = ok && r.all_passed;
  }

  // Fixed case 1: equal lengths realize at mutual 120 degrees.
  VolumeSpec unit;
  unit.lengths = {1, 1, 1};
  const Loop z = realize_facet_vectors(unit);
  bool angles_ok = true;
  for (std::size_t p = 0; p < 3; ++p)
    for (std::size_t q = p + 1; q < 3; ++q) {
      const double angle = std::acos(dot(z[p], z[q]) / (norm(z[p]) * norm(z[q])));
      angles_ok = angles_ok && std::abs(angle - 2.0 * std::acos(-1.0) / 3.0) <= 1e-9;
    }

  // Fixed case 2: the (3,4,5,6) chain with a right dihedral angle.
  const PointChain chain = construct_points({3, 4, 5, 6}, {std::asin(1.0)});
  bool chain_ok = true;
  for (std::size_t k = 0; k <= 3; ++k) {
    const Vec& prev = k == 0 ? chain.points[3] : chain.points[k - 1];
    chain_ok = chain_ok && std::abs(norm(chain.points[k] - prev) - double(k + 3)) <= 1e-12;
  }
  chain_ok = chain_ok && max_abs_diff(chain.points[2], Vec{2.16, 2.88, 4.8}) <= 1e-12;

  report(6, "realization fidelity, 1000 feasible tuples per n in 2..8",
         ok && worst <= 1e-9 && closure <= 1e-10 && angles_ok && chain_ok,
         "worst length error " + fmt(worst) + " <= 1e-9, closure " + fmt(closure) +
             " <= 1e-10, fixed cases " + (angles_ok && chain_ok ? "ok" : "FAIL"));
}

void criterion7() {
  bool ok = true;
  std::string detail;
  for (const std::vector<double>& lengths :
       {std::vector<double>{1, 2, 3}, std::vector<double>{1, 1, 1, 3}}) {
    const FeasibilityReport r = check_inequalities(lengths);
    ok = ok && !r.feasible && std::abs(r.margin) <= 1e-12;
    bool threw = false;
    try {
      VolumeSpec spec;
      spec.lengths = lengths;
      realize_facet_vectors(spec);
    } catch (const Error& e) {
      threw = e.kind() == ErrorKind::InfeasibleInput;
    }
    ok = ok && threw;
  }
  report(7, "equality-boundary tuples rejected with margin 0", ok,
         "margins 0 within 1e-12, realization refuses both");
}

void criterion8() {
  double worst = 0.0;
  bool ok = true;
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto r = batch::minkowski_round_trip(n, kCount, kSeed + 60 * n, batch::Exec::OpenMP);
    worst = std::max(worst, r.worst);
    ok = ok && r.all_passed;
  }

  VolumeSpec tetra;
  tetra.lengths = {3, 4, 5, 6};
  const RealizationResult r = realize_simplex(tetra);
  bool pipeline_ok = r.det_vertex > 0.0;
  for (std::size_t p = 0; p < 4; ++p)
    pipeline_ok =
        pipeline_ok && std::abs(r.facet_lengths[p] - tetra.lengths[p]) <= 1e-8 * tetra.lengths[p];

  bool off_ok = false;
  try {
    const std::string off = export_off(r);
    std::istringstream in(off);
    std::string header;
    std::getline(in, header);
    std::size_t nv = 0, nf = 0, ne = 0;
    in >> nv >> nf >> ne;
    off_ok = header == "OFF" && nv == 4 && nf == 4 && ne == 6;
    std::vector<Vec> vertices;
    for (std::size_t i = 0; i < nv && off_ok; ++i) {
      double x, y, z;
      off_ok = static_cast<bool>(in >> x >> y >> z);
      vertices.push_back(Vec{x, y, z});
    }
    for (std::size_t f = 0; f < nf && off_ok; ++f) {
      std::size_t k, a, b, c;
      off_ok = static_cast<bool>(in >> k >> a >> b >> c) && k == 3;
      if (!off_ok) break;
      const std::size_t opposite = 6 - a - b - c;
      const Vec normal =
          vector_product({vertices[b] - vertices[a], vertices[c] - vertices[a]});
      off_ok = std::abs(norm(normal) - norm(r.facet_loop[opposite])) <=
               1e-8 * norm(r.facet_loop[opposite]);
    }
  } catch (const Error&) {
    off_ok = false;
  }

  report(8, "Minkowski inversion round trip + (3,4,5,6) pipeline + OFF export",
         ok && worst <= 1e-8 && pipeline_ok && off_ok,
         "worst recovery " + fmt(worst) + " <= 1e-8, pipeline " +
             (pipeline_ok ? "ok" : "FAIL") + ", OFF " + (off_ok ? "ok" : "FAIL"));
}

void criterion9() {
  const double half_pi = std::asin(1.0);
  VolumeSpec a, b;
  a.lengths = b.lengths = {2, 3, 4, 5, 6};
  a.angles = {half_pi, half_pi};
  b.angles = {half_pi * 2.0 / 3.0, half_pi};  // pi/3, pi/2

  const Loop za = realize_facet_vectors(a);
  const Loop zb = realize_facet_vectors(b);
  double length_gap = 0.0, gram_gap = 0.0;
  for (std::size_t p = 0; p < 5; ++p) {
    length_gap = std::max(length_gap, std::abs(norm(za[p]) - norm(zb[p])));
    for (std::size_t q = 0; q < 5; ++q)
      gram_gap = std::max(gram_gap, std::abs(dot(za[p], za[q]) - dot(zb[p], zb[q])));
  }
  report(9, "two dihedral settings: same lengths, different shapes",
         length_gap <= 1e-9 && gram_gap >= 1e-3,
         "length gap " + fmt(length_gap) + " <= 1e-9, Gram gap " + fmt(gram_gap) + " >= 1e-3");
}

void criterion10() {
  const fs::path dir = fs::temp_directory_path() / "simplex_forge_acceptance";
  fs::create_directories(dir);
  bool ok = true;
  std::string detail = "byte-identical stdout for repeated jobs";

  {
    std::ofstream out(dir / "random.json", std::ios::binary);
    out << R"({"command":"random","dimension":3,"seed":42})";
  }
  {
    std::ofstream out(dir / "realize.json", std::ios::binary);
    out << R"({"command":"realize","lengths":[3,4,5,6]})";
  }
  for (const char* name : {"random", "realize"}) {
    const fs::path job = dir / (std::string(name) + ".json");
    const fs::path out1 = dir / (std::string(name) + ".1.json");
    const fs::path out2 = dir / (std::string(name) + ".2.json");
    ok = ok && cli_run(std::string(name) + " --input " + job.string() + " --output " +
                       out1.string());
    ok = ok && cli_run(std::string(name) + " --input " + job.string() + " --output " +
                       out2.string());
    const std::string first = slurp(out1);
    ok = ok && !first.empty() && first == slurp(out2);
  }
  report(10, "identical jobs produce byte-identical JSON", ok, detail);
}

}  // namespace

int main() {
  std::printf("acceptance suite (openmp=%s, threads=%d)\n",
              batch::openmp_enabled() ? "on" : "off", batch::max_threads());
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  if (failures == 0)
    std::printf("all criteria passed\n");
  else
    std::printf("%d criteria FAILED\n", failures);
  return failures;
}
