#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>

#include "simplex/jobs.hpp"

namespace {

using namespace simplex;

struct Options {
  std::string input;
  std::string output;
  std::string format;
  std::string unit;
  std::vector<double> angles;
  std::uint64_t seed = 0;
  bool seed_given = false;
};

std::string read_input(const Options& opt) {
  if (!opt.input.empty()) {
    std::ifstream in(opt.input, std::ios::binary);
    if (!in) fail(ErrorKind::ValidationError, "cannot open input file '" + opt.input + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  if (isatty(fileno(stdin)))
    fail(ErrorKind::ValidationError, "no job document: pass --input or pipe JSON on stdin");
  std::ostringstream buf;
  buf << std::cin.rdbuf();
  return buf.str();
}

void write_output(const Options& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(opt.output, std::ios::binary);
  if (!out) fail(ErrorKind::ValidationError, "cannot open output file '" + opt.output + "'");
  out << text;
}

/// Flags override the corresponding fields of the parsed job.
void apply_overrides(JobSpec& spec, const Options& opt) {
  if (!opt.format.empty()) {
    if (opt.format == "json") spec.format = OutputFormat::json;
    else if (opt.format == "off") spec.format = OutputFormat::off;
    else fail(ErrorKind::ValidationError, "--format must be json or off");
    if (spec.format == OutputFormat::off && spec.command != Command::realize)
      fail(ErrorKind::ValidationError, "output_format \"off\" applies to realize only");
  }
  if (!opt.unit.empty()) {
    if (spec.command != Command::realize)
      fail(ErrorKind::ValidationError, "--unit applies to realize only");
    if (opt.unit == "normal") spec.unit = LengthUnit::normal;
    else if (opt.unit == "facet") spec.unit = LengthUnit::facet;
    else fail(ErrorKind::ValidationError, "--unit must be normal or facet");
  }
  if (!opt.angles.empty()) {
    if (spec.command != Command::realize)
      fail(ErrorKind::ValidationError, "--angles applies to realize only");
    spec.angles = opt.angles;
  }
  if (opt.seed_given) {
    if (spec.command != Command::random)
      fail(ErrorKind::ValidationError, "--seed applies to random only");
    spec.seed = opt.seed;
  }
}

int run(Command command, const Options& opt) {
  JobResult result;
  result.command = command;
  std::string rendered;
  try {
    const std::string text = read_input(opt);
    JobSpec spec = parse_job(text, command);
    apply_overrides(spec, opt);

    const auto t0 = std::chrono::steady_clock::now();
    result = run_job(spec);
    const auto t1 = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    // Timing stays on stderr so identical jobs produce byte-identical stdout.
    std::fprintf(stderr, "simplex-forge: %s finished in %.3f ms\n", to_string(command), ms);

    if (spec.format == OutputFormat::off && result.status == JobResult::Status::ok)
      rendered = export_off(*result.realization);
    else
      rendered = to_json(result);
  } catch (const Error& e) {
    result.status = e.kind() == ErrorKind::InfeasibleInput ? JobResult::Status::infeasible
                                                           : JobResult::Status::error;
    result.error_type = to_string(e.kind());
    result.error_message = e.what();
    result.diagnostics.clear();
    rendered = to_json(result);
  }
  write_output(opt, rendered);
  return exit_code(result.status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simplex facet-volume toolkit: feasibility checks, facet-vector "
               "realization, facet-normal maps, similarity iteration and the "
               "Minkowski-type inversion back to vertices."};
  app.require_subcommand(1);

  Options opt;
  std::optional<Command> chosen;
  for (Command c : {Command::check, Command::realize, Command::normals, Command::invert,
                    Command::iterate, Command::random}) {
    CLI::App* sub = app.add_subcommand(to_string(c), "");
    sub->add_option("--input", opt.input, "Job JSON file (default: stdin)");
    sub->add_option("--output", opt.output, "Result file (default: stdout)");
    sub->add_option("--format", opt.format, "json|off (off: realize in dimension 3)");
    sub->add_option("--unit", opt.unit, "normal|facet length unit (realize)");
    sub->add_option("--angles", opt.angles, "Dihedral angles a2,a3,... (realize)")
        ->delimiter(',');
    sub->add_option("--seed", opt.seed, "Generator seed (random)")
        ->each([&opt](const std::string&) { opt.seed_given = true; });
    sub->callback([&chosen, c]() { chosen = c; });
  }

  CLI11_PARSE(app, argc, argv);
  if (!chosen) {
    std::cerr << app.help();
    return 1;
  }
  return run(*chosen, opt);
}
