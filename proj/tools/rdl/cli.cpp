#include "cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include "rdl/conjugate.hpp"
#include "rdl/diagnostics.hpp"
#include "rdl/error.hpp"
#include "rdl/generate.hpp"
#include "rdl/io.hpp"
#include "rdl/version.hpp"

namespace rdl::cli {
namespace {

using io::json;

const std::vector<std::string> kCommands{"diagnose",     "conjugate",   "lsip-solve", "lsip-discretize",
                                         "lsip-reduce",  "lsip-farkas", "conic-farkas", "conic-opt",
                                         "generate"};

const std::vector<std::string> kKinds{"random-family", "lsip-polygon", "conic-demo", "random-lsip",
                                      "random-conic"};

const char* format_name(Format f) {
  switch (f) {
    case Format::Json: return "json";
    case Format::Text: return "text";
    case Format::Csv: return "csv";
  }
  return "json";
}

// A rectangular result rendered either as an aligned text table or as CSV.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string render_csv(const Table& t) {
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += csv_field(cells[i]);
    }
    out += '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
  return out;
}

std::string render_text(const Table& t, const std::string& title) {
  std::vector<std::size_t> width(t.header.size(), 0);
  auto measure = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) width[i] = std::max(width[i], cells[i].size());
  };
  measure(t.header);
  for (const auto& r : t.rows) measure(r);
  std::ostringstream out;
  out << title << '\n';
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out << (i ? "  " : "") << cells[i];
      if (i + 1 < cells.size()) out << std::string(width[i] - cells[i].size(), ' ');
    }
    out << '\n';
  };
  line(t.header);
  std::size_t total = 0;
  for (std::size_t w : width) total += w;
  out << std::string(total + 2 * (width.empty() ? 0 : width.size() - 1), '-') << '\n';
  for (const auto& r : t.rows) line(r);
  return out.str();
}

struct Result {
  json body;
  Table table;
};

json config_echo(const RunConfig& c) {
  json j{{"command", c.command},
         {"input", c.input_path},
         {"output", c.output_path.empty() ? json(nullptr) : json(c.output_path)},
         {"format", format_name(c.format)},
         {"tolerance", c.tolerance.value_or(kDefaultTol)},
         {"seed", c.seed}};
  if (!c.eps_grid.empty()) j["eps_grid"] = c.eps_grid;
  if (!c.schedule_path.empty()) j["schedule"] = c.schedule_path;
  if (c.r) j["r"] = *c.r;
  if (!c.point.empty()) j["point"] = c.point;
  return j;
}

double tol_of(const RunConfig& c) { return c.tolerance.value_or(kDefaultTol); }

void require_input(const RunConfig& c) {
  if (c.input_path.empty()) throw Error(ErrorCode::ValidationError, c.command + " needs --input");
}

Result run_diagnose(const RunConfig& c) {
  const auto fam = io::family_from_json(io::read_file(c.input_path));
  DiagnoseOptions opts;
  opts.tol = tol_of(c);
  opts.extra_eps = c.eps_grid;
  spdlog::info("diagnosing {} dual points over {} scenarios", fam.nx_star(), fam.scenario_count());
  const auto rep = diagnose(fam, opts);

  Table t{{"x_star", "p_star", "q", "gap", "robust", "strong", "reverse_strong", "minmax", "checks_agree"}, {}};
  for (const auto& v : rep.verdicts) {
    bool agree = true;
    for (const auto& [id, chk] : v.checks) agree = agree && chk.agrees();
    std::string gap = "n/a";
    if (v.p_star.is_finite() && v.q_val.is_finite()) gap = num(v.q_val.value() - v.p_star.value());
    t.rows.push_back({v.x_star, to_string(v.p_star), to_string(v.q_val), gap, yes_no(v.robust), yes_no(v.strong),
                      yes_no(v.reverse_strong), yes_no(v.minmax), yes_no(agree)});
  }
  return {io::report_to_json(fam, rep), std::move(t)};
}

Result run_conjugate(const RunConfig& c) {
  const auto h = io::function_from_json(io::read_file(c.input_path));
  const auto hc = conjugate(h);
  const auto hcc = biconjugate(h);
  Table t{{"side", "label", "value"}, {}};
  for (std::size_t i = 0; i < hc.size(); ++i)
    t.rows.push_back({"conjugate", hc.space().label(hc.side(), i), to_string(hc[i])});
  for (std::size_t i = 0; i < hcc.size(); ++i)
    t.rows.push_back({"biconjugate", hcc.space().label(hcc.side(), i), to_string(hcc[i])});
  return {{{"conjugate", io::function_to_json(hc)}, {"biconjugate", io::function_to_json(hcc)}}, std::move(t)};
}

std::vector<std::vector<std::string>> read_schedule(const RunConfig& c) {
  return io::schedule_from_json(io::read_file(c.schedule_path));
}

Result run_lsip_solve(const RunConfig& c) {
  const auto inst = io::lsip_from_json(io::read_file(c.input_path));
  const auto primal = solve_robust_counterpart(inst);
  const auto dual = haar_dual(inst);
  Table t{{"problem", "status", "value"}, {}};
  t.rows.push_back({"robust_counterpart", to_string(primal.status), to_string(primal.value)});
  t.rows.push_back({"haar_dual", to_string(dual.status), to_string(dual.value)});
  return {{{"primal", io::lsip_solution_to_json(primal)}, {"haar_dual", io::haar_to_json(dual)}}, std::move(t)};
}

Result run_lsip_discretize(const RunConfig& c) {
  const auto inst = io::lsip_from_json(io::read_file(c.input_path));
  std::vector<std::vector<std::string>> schedule;
  if (!c.schedule_path.empty()) {
    schedule = read_schedule(c);
  } else {
    // Doubling prefixes of the row order, ending with all rows.
    std::vector<std::size_t> sizes;
    for (std::size_t s = 1; s < inst.rows.size(); s *= 2) sizes.push_back(s);
    sizes.push_back(inst.rows.size());
    schedule = prefix_schedule(inst, sizes);
  }
  const auto d = discretize(inst, schedule);
  Table t{{"r", "|S_r|", "value_r"}, {}};
  for (std::size_t r = 0; r < d.steps.size(); ++r)
    t.rows.push_back({std::to_string(r + 1), std::to_string(d.steps[r].size), to_string(d.steps[r].value)});
  return {io::discretization_to_json(d), std::move(t)};
}

Result run_lsip_reduce(const RunConfig& c) {
  const auto inst = io::lsip_from_json(io::read_file(c.input_path));
  std::vector<std::vector<std::string>> candidates;
  if (!c.schedule_path.empty()) {
    candidates = read_schedule(c);
  } else {
    const auto h = haar_dual(inst);
    if (h.certificate) {
      std::vector<std::string> support;
      for (const auto& [t, lambda] : h.certificate->support) support.push_back(t);
      candidates.push_back(std::move(support));
    }
  }
  const auto r = reducibility_check(inst, candidates);
  std::string witness = "none";
  if (r.witness) {
    witness.clear();
    for (const auto& t : *r.witness) witness += (witness.empty() ? "" : " ") + t;
  }
  Table t{{"field", "value"},
          {{"value", to_string(r.value)},
           {"reducible", yes_no(r.reducible)},
           {"witness", witness},
           {"dual_attained", yes_no(r.dual_attained)}}};
  return {io::reducibility_to_json(r), std::move(t)};
}

Result run_lsip_farkas(const RunConfig& c) {
  const auto inst = io::lsip_from_json(io::read_file(c.input_path));
  double r = 0.0;
  if (c.r) {
    r = *c.r;
  } else {
    const auto h = haar_dual(inst);
    if (!h.value.is_finite())
      throw Error(ErrorCode::ValidationError, "no finite optimum to use as the level; pass --r");
    r = h.value.value();
  }
  const auto f = farkas_certificate(inst, r);
  json body = io::farkas_to_json(f);
  body["r"] = r;
  Table t{{"field", "value"}, {{"r", num(r)}, {"holds", yes_no(f.holds)}, {"mu", num(f.mu)}}};
  return {std::move(body), std::move(t)};
}

std::string vec_text(const std::vector<double>& v) {
  std::string s;
  for (double x : v) s += (s.empty() ? "" : " ") + num(x);
  return s;
}

Result run_conic_farkas(const RunConfig& c) {
  if (!c.r) throw Error(ErrorCode::ValidationError, "conic-farkas needs --r");
  const auto inst = io::conic_from_json(io::read_file(c.input_path));
  const auto f = uncertain_farkas(inst, *c.r, tol_of(c));
  Table t{{"field", "value"},
          {{"r", num(*c.r)},
           {"i", yes_no(f.i)},
           {"ii", yes_no(f.ii)},
           {"witness_u", f.witness ? f.witness->u : "none"},
           {"witness_y_star", f.witness ? vec_text(f.witness->y_star) : "none"}}};
  return {io::conic_farkas_to_json(f, *c.r), std::move(t)};
}

Result run_conic_opt(const RunConfig& c) {
  if (c.point.empty()) throw Error(ErrorCode::ValidationError, "conic-opt needs --point");
  const auto inst = io::conic_from_json(io::read_file(c.input_path));
  const auto o = optimality_test(inst, c.point, tol_of(c));
  Table t{{"field", "value"},
          {{"x_bar", c.point},
           {"optimal_on_grid", yes_no(o.optimal_on_grid)},
           {"certificate_u", o.certificate ? o.certificate->u : "none"},
           {"certificate_y_star", o.certificate ? vec_text(o.certificate->y_star) : "none"}}};
  return {io::optimality_to_json(o, c.point), std::move(t)};
}

json run_generate(const RunConfig& c) {
  if (c.kind == "random-family") {
    FamilyGenOptions opts;
    opts.nx = c.nx;
    opts.nx_star = c.nx_star;
    opts.nu = c.nu;
    opts.ny = c.ny;
    return io::family_to_json(random_family(c.seed, opts));
  }
  if (c.kind == "lsip-polygon") return io::lsip_to_json(lsip_polygon(c.cuts));
  if (c.kind == "conic-demo") return io::conic_to_json(conic_demo());
  if (c.kind == "random-lsip") return io::lsip_to_json(random_lsip(c.seed, c.n, c.rows));
  if (c.kind == "random-conic") return io::conic_to_json(random_conic(c.seed));
  throw Error(ErrorCode::ValidationError, "unknown generator kind '" + c.kind + "'");
}

Result dispatch(const RunConfig& c) {
  require_input(c);
  if (c.command == "diagnose") return run_diagnose(c);
  if (c.command == "conjugate") return run_conjugate(c);
  if (c.command == "lsip-solve") return run_lsip_solve(c);
  if (c.command == "lsip-discretize") return run_lsip_discretize(c);
  if (c.command == "lsip-reduce") return run_lsip_reduce(c);
  if (c.command == "lsip-farkas") return run_lsip_farkas(c);
  if (c.command == "conic-farkas") return run_conic_farkas(c);
  if (c.command == "conic-opt") return run_conic_opt(c);
  throw Error(ErrorCode::ValidationError, "unknown command '" + c.command + "'");
}

void emit(const RunConfig& c, const std::string& text) {
  if (c.output_path.empty()) {
    std::cout << text;
    std::cout.flush();
  } else {
    io::write_file(c.output_path, text);
  }
}

void validate_config(const RunConfig& c) {
  if (c.tolerance && !(*c.tolerance > 0.0))
    throw Error(ErrorCode::ValidationError, "--tol must be positive");
  for (double e : c.eps_grid)
    if (!(e >= 0.0)) throw Error(ErrorCode::NegativeEpsilon, "--eps-grid entries must be nonnegative");
}

void setup_logging() {
  auto logger = spdlog::stderr_logger_st("rdl");
  spdlog::set_default_logger(logger);
  spdlog::set_pattern("[rdl] %l: %v");
  spdlog::set_level(spdlog::level::warn);
  if (const char* env = std::getenv("RDL_LOG")) spdlog::set_level(spdlog::level::from_str(env));
}

}  // namespace

int run(const RunConfig& config) {
  try {
    validate_config(config);
    if (config.command == "generate") {
      if (config.format != Format::Json) throw Error(ErrorCode::ValidationError, "generate emits JSON only");
      emit(config, run_generate(config).dump(2) + "\n");
      return kExitOk;
    }
    Result res = dispatch(config);
    std::string text;
    switch (config.format) {
      case Format::Json: {
        json out{{"tool", "rdl"},
                 {"version", kVersion},
                 {"command", config.command},
                 {"config", config_echo(config)},
                 {"result", std::move(res.body)}};
        text = out.dump(2) + "\n";
        break;
      }
      case Format::Text:
        text = render_text(res.table, std::string("rdl ") + kVersion + "  " + config.command + "  input=" +
                                          config.input_path + "  tol=" + num(tol_of(config)));
        break;
      case Format::Csv:
        text = render_csv(res.table);
        break;
    }
    emit(config, text);
    return kExitOk;
  } catch (const Error& e) {
    spdlog::error("{}", e.what());
    const bool breakdown =
        e.code() == ErrorCode::NumericalBreakdown || e.code() == ErrorCode::InternalInconsistency;
    return breakdown ? kExitBreakdown : kExitInput;
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return kExitInput;
  }
}

int main(int argc, char** argv) {
  setup_logging();
  CLI::App app{"Robust duality diagnostics on finite grids"};
  app.set_version_flag("--version", std::string(kVersion));

  RunConfig c;
  std::string format = "json";
  double tol = 0.0;
  double r = 0.0;
  app.add_option("command", c.command, "Command to run")->required()->check(CLI::IsMember(kCommands));
  app.add_option("-i,--input", c.input_path, "Instance JSON file");
  app.add_option("-o,--output", c.output_path, "Write the result here instead of stdout");
  app.add_option("-f,--format", format, "Output format")->check(CLI::IsMember({"json", "text", "csv"}));
  auto* tol_opt = app.add_option("--tol", tol, "Comparison tolerance (positive)");
  app.add_option("--seed", c.seed, "Generator seed")->capture_default_str();
  app.add_option("--eps-grid", c.eps_grid, "Extra epsilon values for diagnose, comma separated")->delimiter(',');
  app.add_option("--schedule", c.schedule_path, "JSON list of label lists (discretization or candidates)");
  auto* r_opt = app.add_option("--r", r, "Level for the Farkas commands");
  app.add_option("--point", c.point, "Decision point label for conic-opt");
  app.add_option("--kind", c.kind, "Generator kind")->check(CLI::IsMember(kKinds));
  app.add_option("--nx", c.nx, "random-family: |X|");
  app.add_option("--nx-star", c.nx_star, "random-family: |X*|");
  app.add_option("--nu", c.nu, "random-family: |U|");
  app.add_option("--ny", c.ny, "random-family: |Y_u|");
  app.add_option("--cuts", c.cuts, "lsip-polygon: number of tangent cuts")->capture_default_str();
  app.add_option("--n", c.n, "random-lsip: dimension");
  app.add_option("--rows", c.rows, "random-lsip: number of rows");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }
  if (tol_opt->count()) c.tolerance = tol;
  if (r_opt->count()) c.r = r;
  c.format = format == "text" ? Format::Text : format == "csv" ? Format::Csv : Format::Json;
  if (c.command == "generate" && c.kind.empty()) {
    spdlog::error("generate needs --kind");
    return kExitInput;
  }
  spdlog::debug("command {} input '{}'", c.command, c.input_path);
  return run(c);
}

}  // namespace rdl::cli
