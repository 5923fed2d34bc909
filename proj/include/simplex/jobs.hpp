#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "simplex/minkowski.hpp"

namespace simplex {

enum class Command { check, realize, normals, invert, iterate, random };
enum class OutputFormat { json, off };

const char* to_string(Command c) noexcept;
std::optional<Command> command_from_string(const std::string& s) noexcept;

/// A validated job. Exactly the payload fields the command needs are
/// populated: `lengths` for check/realize, `loop` for normals/invert/
/// iterate, `dimension` (+ optional `seed`) for random. `angles` and `unit`
/// apply to realize only.
struct JobSpec {
  Command command = Command::check;
  std::size_t dimension = 0;
  std::vector<double> lengths;
  std::vector<std::vector<double>> loop;
  std::vector<double> angles;
  LengthUnit unit = LengthUnit::normal;
  std::uint64_t seed = 0;
  OutputFormat format = OutputFormat::json;
};

/// Parses and validates a JSON job document. Unknown fields are rejected;
/// numbers are read as 64-bit floats. `cli_command`, when given, stands in
/// for a missing "command" field and must agree with an explicit one.
JobSpec parse_job(const std::string& text,
                  std::optional<Command> cli_command = std::nullopt);

struct JobResult {
  enum class Status { ok, infeasible, error };

  Status status = Status::ok;
  Command command = Command::check;

  std::optional<FeasibilityReport> feasibility;       // check
  std::optional<RealizationResult> realization;       // realize
  std::optional<Loop> loop;                           // normals/invert/iterate/random
  std::optional<SimilarityReport> similarity;         // iterate

  std::string error_type;
  std::string error_message;

  /// Fixed-order numeric diagnostics (margins, determinants, residuals).
  std::vector<std::pair<std::string, double>> diagnostics;
};

int exit_code(JobResult::Status status) noexcept;

/// Dispatches a job to the library. Module errors are captured into
/// status = infeasible (simplex inequalities) or error (everything else);
/// nothing throws out of here except std::bad_alloc.
JobResult run_job(const JobSpec& spec);

/// Deterministic JSON rendering: fixed field order, doubles at 17
/// significant digits, one trailing newline.
std::string to_json(const JobResult& result);

/// OFF mesh of a 3-simplex realization: 4 vertices, 4 outward-wound
/// triangular faces, coordinates at 17 significant digits.
std::string export_off(const RealizationResult& result);

/// Seeded random positive vertex loop: main-part coordinates i.i.d. uniform
/// on [-1, 1) from SplitMix64, redrawn while |det| < 1e-3, reflected in the
/// first coordinate if det < 0, closed by v_0 = -sum.
Loop random_loop(std::size_t n, std::uint64_t seed);

class SplitMix64;

/// Same sampler drawing from a caller-supplied stream (batch kernels and
/// property tests share it).
Loop random_loop_stream(SplitMix64& rng, std::size_t n);

}  // namespace simplex
