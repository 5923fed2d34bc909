#include "simplex/jobs.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <string>

#include <json.hpp>

#include "simplex/rng.hpp"

namespace simplex {

namespace {

using nlohmann::json;

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

/// Minimal deterministic JSON emitter; field order is exactly the call
/// order, doubles go through fmt().
class JsonOut {
 public:
  JsonOut& begin_obj() { return open('{'); }
  JsonOut& end_obj() { return close('}'); }
  JsonOut& begin_arr() { return open('['); }
  JsonOut& end_arr() { return close(']'); }

  JsonOut& key(const std::string& k) {
    comma();
    text_ += '"';
    escape(k);
    text_ += "\":";
    pending_value_ = true;
    return *this;
  }

  JsonOut& value(double v) { return raw(fmt(v)); }
  JsonOut& value(std::uint64_t v) { return raw(std::to_string(v)); }
  JsonOut& value(bool v) { return raw(v ? "true" : "false"); }
  JsonOut& value_null() { return raw("null"); }
  JsonOut& value(const std::string& s) {
    comma();
    text_ += '"';
    escape(s);
    text_ += '"';
    pending_value_ = false;
    return *this;
  }

  std::string str() && { return std::move(text_); }

 private:
  JsonOut& open(char c) {
    comma();
    text_ += c;
    depth_comma_.push_back(false);
    pending_value_ = false;
    return *this;
  }
  JsonOut& close(char c) {
    text_ += c;
    depth_comma_.pop_back();
    if (!depth_comma_.empty()) depth_comma_.back() = true;
    return *this;
  }
  JsonOut& raw(const std::string& s) {
    comma();
    text_ += s;
    pending_value_ = false;
    return *this;
  }
  void comma() {
    if (pending_value_) {
      pending_value_ = false;
      return;
    }
    if (!depth_comma_.empty()) {
      if (depth_comma_.back()) text_ += ',';
      depth_comma_.back() = true;
    }
  }
  void escape(const std::string& s) {
    for (char c : s) {
      switch (c) {
        case '"': text_ += "\\\""; break;
        case '\\': text_ += "\\\\"; break;
        case '\n': text_ += "\\n"; break;
        case '\t': text_ += "\\t"; break;
        case '\r': text_ += "\\r"; break;
        default:
          if (static_cast<unsigned char>(c) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\u%04x", c);
            text_ += buf;
          } else {
            text_ += c;
          }
      }
    }
  }

  std::string text_;
  std::vector<bool> depth_comma_;
  bool pending_value_ = false;
};

void emit_loop(JsonOut& out, const Loop& loop) {
  out.begin_arr();
  for (const Vec& v : loop.entries()) {
    out.begin_arr();
    for (std::size_t i = 0; i < v.dim(); ++i) out.value(v[i]);
    out.end_arr();
  }
  out.end_arr();
}

void emit_numbers(JsonOut& out, const std::vector<double>& xs) {
  out.begin_arr();
  for (double x : xs) out.value(x);
  out.end_arr();
}

double json_number(const json& j, const std::string& where) {
  if (!j.is_number())
    fail(ErrorKind::ValidationError, "field '" + where + "' must be a number");
  return j.get<double>();
}

std::vector<double> json_number_array(const json& j, const std::string& where) {
  if (!j.is_array())
    fail(ErrorKind::ValidationError, "field '" + where + "' must be an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(json_number(e, where));
  return out;
}

void require_fields(const JobSpec& spec, bool lengths, bool loop) {
  const std::string name = to_string(spec.command);
  if (lengths && spec.lengths.empty())
    fail(ErrorKind::ValidationError, "'" + name + "' requires a 'lengths' array");
  if (!lengths && !spec.lengths.empty())
    fail(ErrorKind::ValidationError, "'" + name + "' does not take 'lengths'");
  if (loop && spec.loop.empty())
    fail(ErrorKind::ValidationError, "'" + name + "' requires a 'loop' payload");
  if (!loop && !spec.loop.empty())
    fail(ErrorKind::ValidationError, "'" + name + "' does not take 'loop'");
}

Loop loop_from_rows(const std::vector<std::vector<double>>& rows, LoopRole role) {
  std::vector<Vec> vs;
  vs.reserve(rows.size());
  for (const auto& row : rows) vs.push_back(Vec(row));
  return Loop::make(std::move(vs), role);
}

}  // namespace

const char* to_string(Command c) noexcept {
  switch (c) {
    case Command::check: return "check";
    case Command::realize: return "realize";
    case Command::normals: return "normals";
    case Command::invert: return "invert";
    case Command::iterate: return "iterate";
    case Command::random: return "random";
  }
  return "?";
}

std::optional<Command> command_from_string(const std::string& s) noexcept {
  for (Command c : {Command::check, Command::realize, Command::normals, Command::invert,
                    Command::iterate, Command::random})
    if (s == to_string(c)) return c;
  return std::nullopt;
}

JobSpec parse_job(const std::string& text, std::optional<Command> cli_command) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::ParseError, e.what());
  }
  if (!doc.is_object()) fail(ErrorKind::ParseError, "job document must be a JSON object");

  static const std::set<std::string> known = {"command", "dimension", "lengths", "loop",
                                              "angles",  "unit",      "seed",    "output_format"};
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (!known.count(key)) fail(ErrorKind::ValidationError, "unknown field '" + key + "'");
  }

  JobSpec spec;

  if (doc.contains("command")) {
    if (!doc["command"].is_string())
      fail(ErrorKind::ValidationError, "field 'command' must be a string");
    const auto parsed = command_from_string(doc["command"].get<std::string>());
    if (!parsed)
      fail(ErrorKind::ValidationError,
           "unknown command '" + doc["command"].get<std::string>() + "'");
    if (cli_command && *cli_command != *parsed)
      fail(ErrorKind::ValidationError, "job command does not match the CLI subcommand");
    spec.command = *parsed;
  } else if (cli_command) {
    spec.command = *cli_command;
  } else {
    fail(ErrorKind::ValidationError, "missing 'command'");
  }

  if (doc.contains("lengths")) spec.lengths = json_number_array(doc["lengths"], "lengths");
  if (doc.contains("angles")) spec.angles = json_number_array(doc["angles"], "angles");

  if (doc.contains("loop")) {
    const json& rows = doc["loop"];
    if (!rows.is_array() || rows.empty())
      fail(ErrorKind::ValidationError, "field 'loop' must be a non-empty array of arrays");
    for (const auto& row : rows) spec.loop.push_back(json_number_array(row, "loop"));
  }

  if (doc.contains("unit")) {
    if (!doc["unit"].is_string())
      fail(ErrorKind::ValidationError, "field 'unit' must be \"normal\" or \"facet\"");
    const std::string u = doc["unit"].get<std::string>();
    if (u == "normal") spec.unit = LengthUnit::normal;
    else if (u == "facet") spec.unit = LengthUnit::facet;
    else fail(ErrorKind::ValidationError, "field 'unit' must be \"normal\" or \"facet\"");
    if (spec.command != Command::realize)
      fail(ErrorKind::ValidationError, "'unit' applies to realize only");
  }

  if (doc.contains("output_format")) {
    if (!doc["output_format"].is_string())
      fail(ErrorKind::ValidationError, "field 'output_format' must be \"json\" or \"off\"");
    const std::string f = doc["output_format"].get<std::string>();
    if (f == "json") spec.format = OutputFormat::json;
    else if (f == "off") spec.format = OutputFormat::off;
    else fail(ErrorKind::ValidationError, "field 'output_format' must be \"json\" or \"off\"");
  }

  if (doc.contains("seed")) {
    const json& s = doc["seed"];
    if (s.is_number_unsigned()) spec.seed = s.get<std::uint64_t>();
    else if (s.is_number_integer() && s.get<std::int64_t>() >= 0)
      spec.seed = static_cast<std::uint64_t>(s.get<std::int64_t>());
    else fail(ErrorKind::ValidationError, "field 'seed' must be a non-negative integer");
    if (spec.command != Command::random)
      fail(ErrorKind::ValidationError, "'seed' applies to random only");
  }

  // Dimension: explicit, or inferred from the payload arity.
  std::size_t inferred = 0;
  if (!spec.lengths.empty()) inferred = spec.lengths.size() - 1;
  if (!spec.loop.empty()) inferred = spec.loop.size() - 1;
  if (doc.contains("dimension")) {
    const json& d = doc["dimension"];
    if (!d.is_number_integer() || d.get<std::int64_t>() < 0)
      fail(ErrorKind::ValidationError, "field 'dimension' must be a non-negative integer");
    spec.dimension = static_cast<std::size_t>(d.get<std::int64_t>());
    if (inferred != 0 && spec.dimension != inferred)
      fail(ErrorKind::ValidationError,
           "'dimension' " + std::to_string(spec.dimension) +
               " contradicts the payload arity " + std::to_string(inferred));
  } else {
    spec.dimension = inferred;
  }
  if (spec.command == Command::random && spec.dimension == 0)
    fail(ErrorKind::ValidationError, "'random' requires 'dimension'");
  if (spec.dimension < kMinDim || spec.dimension > kMaxDim)
    fail(ErrorKind::ValidationError, "dimension " + std::to_string(spec.dimension) +
                                         " outside [" + std::to_string(kMinDim) + ", " +
                                         std::to_string(kMaxDim) + "]");

  switch (spec.command) {
    case Command::check:
      require_fields(spec, true, false);
      if (!spec.angles.empty())
        fail(ErrorKind::ValidationError, "'check' does not take 'angles'");
      break;
    case Command::realize:
      require_fields(spec, true, false);
      break;
    case Command::normals:
    case Command::invert:
    case Command::iterate:
      require_fields(spec, false, true);
      if (!spec.angles.empty())
        fail(ErrorKind::ValidationError,
             std::string("'") + to_string(spec.command) + "' does not take 'angles'");
      break;
    case Command::random:
      require_fields(spec, false, false);
      if (!spec.angles.empty())
        fail(ErrorKind::ValidationError, "'random' does not take 'angles'");
      break;
  }

  for (std::size_t i = 0; i < spec.lengths.size(); ++i)
    if (!(spec.lengths[i] > 0.0) || !std::isfinite(spec.lengths[i]))
      fail(ErrorKind::ValidationError,
           "lengths[" + std::to_string(i) + "] must be positive and finite");

  for (std::size_t i = 0; i < spec.loop.size(); ++i)
    if (spec.loop[i].size() != spec.dimension)
      fail(ErrorKind::ValidationError,
           "loop row " + std::to_string(i) + " has " + std::to_string(spec.loop[i].size()) +
               " coordinates, expected " + std::to_string(spec.dimension));

  if (spec.format == OutputFormat::off && spec.command != Command::realize)
    fail(ErrorKind::ValidationError, "output_format \"off\" applies to realize only");

  return spec;
}

int exit_code(JobResult::Status status) noexcept {
  switch (status) {
    case JobResult::Status::ok: return 0;
    case JobResult::Status::infeasible: return 2;
    case JobResult::Status::error: return 1;
  }
  return 1;
}

JobResult run_job(const JobSpec& spec) {
  JobResult result;
  result.command = spec.command;
  try {
    switch (spec.command) {
      case Command::check: {
        const FeasibilityReport report = check_inequalities(spec.lengths);
        result.feasibility = report;
        result.status = report.feasible ? JobResult::Status::ok : JobResult::Status::infeasible;
        result.diagnostics.emplace_back("margin", report.margin);
        break;
      }
      case Command::realize: {
        VolumeSpec vspec;
        vspec.lengths = spec.lengths;
        vspec.angles = spec.angles;
        vspec.unit = spec.unit;
        RealizationResult r = realize_simplex(vspec);
        result.diagnostics.emplace_back("det_vertex", r.det_vertex);
        result.diagnostics.emplace_back("det_facet", determinant(r.facet_loop.main_part()));
        result.diagnostics.emplace_back("max_length_error", r.max_length_error);
        result.diagnostics.emplace_back("closure_defect", r.closure_defect);
        result.diagnostics.emplace_back("round_trip_error", r.round_trip_error);
        result.realization = std::move(r);
        break;
      }
      case Command::normals: {
        const Loop v = loop_from_rows(spec.loop, LoopRole::vertex);
        const Loop z = facet_normals(v);
        result.diagnostics.emplace_back("det_vertex", determinant(v.main_part()));
        result.diagnostics.emplace_back("det_facet", determinant(z.main_part()));
        result.diagnostics.emplace_back("closure_defect", z.closure_defect());
        result.loop = z;
        break;
      }
      case Command::invert: {
        const Loop z = loop_from_rows(spec.loop, LoopRole::facet);
        const Loop v = invert_facet_map(z);
        result.diagnostics.emplace_back("det_facet", determinant(z.main_part()));
        result.diagnostics.emplace_back("det_vertex", determinant(v.main_part()));
        result.loop = v;
        break;
      }
      case Command::iterate: {
        const Loop v = loop_from_rows(spec.loop, LoopRole::vertex);
        auto [twice, report] = similarity_iterate(v);
        result.diagnostics.emplace_back("det_main", determinant(v.main_part()));
        result.diagnostics.emplace_back("kappa", report.kappa);
        result.diagnostics.emplace_back("residual", report.residual);
        result.similarity = report;
        result.loop = std::move(twice);
        break;
      }
      case Command::random: {
        const Loop v = random_loop(spec.dimension, spec.seed);
        result.diagnostics.emplace_back("det_main", determinant(v.main_part()));
        result.diagnostics.emplace_back("closure_defect", v.closure_defect());
        result.loop = v;
        break;
      }
    }
  } catch (const Error& e) {
    result.status = e.kind() == ErrorKind::InfeasibleInput ? JobResult::Status::infeasible
                                                           : JobResult::Status::error;
    result.error_type = to_string(e.kind());
    result.error_message = e.what();
    result.diagnostics.clear();
    if (e.kind() == ErrorKind::InfeasibleInput && !spec.lengths.empty()) {
      try {
        VolumeSpec vspec;
        vspec.lengths = spec.lengths;
        vspec.unit = spec.unit;
        const FeasibilityReport report = check_inequalities(vspec.normal_unit_lengths());
        result.diagnostics.emplace_back("margin", report.margin);
      } catch (const Error&) {
      }
    }
  }
  return result;
}

std::string to_json(const JobResult& result) {
  JsonOut out;
  out.begin_obj();
  const char* status = result.status == JobResult::Status::ok ? "ok"
                       : result.status == JobResult::Status::infeasible ? "infeasible"
                                                                        : "error";
  out.key("status").value(std::string(status));
  out.key("command").value(std::string(to_string(result.command)));

  out.key("payload");
  if (result.status == JobResult::Status::error) {
    out.value_null();
  } else if (result.feasibility) {
    out.begin_obj();
    out.key("feasible").value(result.feasibility->feasible);
    out.key("margin").value(result.feasibility->margin);
    out.key("violating_index");
    if (result.feasibility->violating_index)
      out.value(static_cast<std::uint64_t>(*result.feasibility->violating_index));
    else
      out.value_null();
    out.end_obj();
  } else if (result.realization) {
    const RealizationResult& r = *result.realization;
    out.begin_obj();
    out.key("vertices");
    emit_loop(out, r.vertices);
    out.key("facet_loop");
    emit_loop(out, r.facet_loop);
    out.key("det_vertex").value(r.det_vertex);
    out.key("facet_lengths");
    emit_numbers(out, r.facet_lengths);
    out.key("residuals").begin_obj();
    out.key("max_length_error").value(r.max_length_error);
    out.key("closure_defect").value(r.closure_defect);
    out.key("round_trip_error").value(r.round_trip_error);
    out.end_obj();
    out.end_obj();
  } else if (result.similarity && result.loop) {
    out.begin_obj();
    out.key("loop");
    emit_loop(out, *result.loop);
    out.key("kappa").value(result.similarity->kappa);
    out.key("residual").value(result.similarity->residual);
    out.end_obj();
  } else if (result.loop) {
    out.begin_obj();
    out.key("loop");
    emit_loop(out, *result.loop);
    out.end_obj();
  } else {
    out.value_null();
  }

  if (result.status != JobResult::Status::ok && !result.error_type.empty()) {
    out.key("error").begin_obj();
    out.key("type").value(result.error_type);
    out.key("message").value(result.error_message);
    out.end_obj();
  }

  out.key("diagnostics").begin_obj();
  for (const auto& [k, v] : result.diagnostics) out.key(k).value(v);
  out.end_obj();

  out.end_obj();
  std::string text = std::move(out).str();
  text += '\n';
  return text;
}

std::string export_off(const RealizationResult& result) {
  const Loop& v = result.vertices;
  if (v.dim() != 3)
    fail(ErrorKind::UnsupportedDimension,
         "OFF export is defined for dimension 3, got " + std::to_string(v.dim()));

  std::string out = "OFF\n4 4 6\n";
  for (std::size_t i = 0; i < 4; ++i) {
    out += fmt(v[i][0]);
    out += ' ';
    out += fmt(v[i][1]);
    out += ' ';
    out += fmt(v[i][2]);
    out += '\n';
  }
  // Face opposite vertex p, wound so the normal points away from p.
  for (std::size_t p = 0; p < 4; ++p) {
    std::vector<std::size_t> face;
    for (std::size_t q = 0; q < 4; ++q)
      if (q != p) face.push_back(q);
    const Vec e1 = v[face[1]] - v[face[0]];
    const Vec e2 = v[face[2]] - v[face[0]];
    const Vec n = vector_product({e1, e2});
    if (dot(n, v[face[0]] - v[p]) < 0.0) std::swap(face[1], face[2]);
    out += "3 " + std::to_string(face[0]) + ' ' + std::to_string(face[1]) + ' ' +
           std::to_string(face[2]) + '\n';
  }
  return out;
}

Loop random_loop(std::size_t n, std::uint64_t seed) {
  if (n < kMinDim || n > kMaxDim)
    fail(ErrorKind::ValidationError, "dimension " + std::to_string(n) + " outside [" +
                                         std::to_string(kMinDim) + ", " +
                                         std::to_string(kMaxDim) + "]");
  SplitMix64 rng(seed);
  return random_loop_stream(rng, n);
}

Loop random_loop_stream(SplitMix64& rng, std::size_t n) {
  for (;;) {
    std::vector<Vec> main;
    main.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      Vec v(n);
      for (std::size_t j = 0; j < n; ++j) v[j] = rng.uniform_pm1();
      main.push_back(std::move(v));
    }
    const double det = determinant(Mat::from_columns(main));
    if (std::abs(det) < 1e-3) continue;  // too close to degenerate, redraw
    if (det < 0.0)
      for (Vec& v : main) v[0] = -v[0];  // one reflection flips the sign
    return Loop::complete_from_main(main, LoopRole::vertex);
  }
}

}  // namespace simplex
