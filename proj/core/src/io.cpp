#include "rdl/io.hpp"

#include <fstream>
#include <sstream>

namespace rdl::io {
namespace {

// Runs `fn`, turning JSON access errors (missing keys, wrong types) into ParseError.
template <class Fn>
auto shape_checked(const char* what, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string(what) + ": " + e.what());
  }
}

std::string label_from_json(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  if (j.is_number()) return j.dump();
  throw Error(ErrorCode::ParseError, "labels must be strings or numbers, got " + j.dump());
}

std::vector<std::string> labels_from_json(const json& j) {
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(label_from_json(e));
  return out;
}

json optional_witness(const std::optional<DualWitness>& w) {
  if (!w) return nullptr;
  return {{"u", w->u}, {"y_star", w->y_star}};
}

json check_to_json(const TheoremCheck& c) {
  json j{{"lhs", c.lhs}, {"rhs", c.rhs}};
  if (c.rhs_local) j["rhs_local"] = *c.rhs_local;
  if (c.witness) j["witness"] = optional_witness(c.witness);
  return j;
}

json triple_to_json(const TripleCheck& t) { return {{"i", t.i}, {"ii", t.ii}, {"iii", t.iii}}; }

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

json ext_to_json(ExtReal v) {
  if (v.is_pos_inf()) return "+inf";
  if (v.is_neg_inf()) return "-inf";
  return v.value();
}

ExtReal ext_from_json(const json& j) {
  if (j.is_number()) return ExtReal(j.get<double>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "+inf" || s == "inf") return ExtReal::pos_inf();
    if (s == "-inf") return ExtReal::neg_inf();
  }
  throw Error(ErrorCode::ParseError, "expected a number, \"+inf\" or \"-inf\", got " + j.dump());
}

json parse(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // e.byte is one past the offending character.
    auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw Error(ErrorCode::ParseError, source + ":" + std::to_string(line) + ":" + std::to_string(col) +
                                           ": malformed JSON (" + e.what() + ")");
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::ValidationError, "cannot write '" + path + "'");
  out << text;
}

PairedSpace space_from_json(const json& j) {
  return shape_checked("paired space", [&] {
    auto table = j.at("pairing").get<std::vector<std::vector<double>>>();
    return PairedSpace(labels_from_json(j.at("primal")), labels_from_json(j.at("dual")), std::move(table),
                       label_from_json(j.value("zero", json("0"))), label_from_json(j.value("dual_zero", json("0"))));
  });
}

json space_to_json(const PairedSpace& s) {
  return {{"primal", s.labels(Side::Primal)},
          {"dual", s.labels(Side::Dual)},
          {"pairing", s.pairing_table()},
          {"zero", s.label(Side::Primal, s.zero(Side::Primal))},
          {"dual_zero", s.label(Side::Dual, s.zero(Side::Dual))}};
}

PerturbationFamily family_from_json(const json& j) {
  return shape_checked("family", [&] {
    PairedSpace decision = space_from_json(j.at("decision"));
    std::vector<ScenarioSpec> specs;
    for (const auto& s : j.at("scenarios")) {
      std::vector<std::vector<ExtReal>> F;
      for (const auto& row : s.at("F")) {
        std::vector<ExtReal> r;
        for (const auto& v : row) r.push_back(ext_from_json(v));
        F.push_back(std::move(r));
      }
      specs.push_back(ScenarioSpec{label_from_json(s.at("u")), space_from_json(s.at("parameter")), std::move(F)});
    }
    return PerturbationFamily(std::move(decision), std::move(specs));
  });
}

json family_to_json(const PerturbationFamily& fam) {
  json scenarios = json::array();
  for (const auto& spec : fam.specs()) {
    json F = json::array();
    for (const auto& row : spec.F) {
      json r = json::array();
      for (ExtReal v : row) r.push_back(ext_to_json(v));
      F.push_back(std::move(r));
    }
    scenarios.push_back({{"u", spec.label}, {"parameter", space_to_json(spec.parameter)}, {"F", std::move(F)}});
  }
  return {{"decision", space_to_json(fam.decision())}, {"scenarios", std::move(scenarios)}};
}

ConicUncertainInstance conic_from_json(const json& j) {
  return shape_checked("conic instance", [&] {
    PairedSpace decision(labels_from_json(j.at("points")), labels_from_json(j.at("duals")),
                         j.at("pairing").get<std::vector<std::vector<double>>>(),
                         label_from_json(j.value("zero", json("0"))), label_from_json(j.value("dual_zero", json("0"))));
    std::vector<ExtReal> f;
    for (const auto& v : j.at("f")) f.push_back(ext_from_json(v));
    std::vector<ConicScenario> scenarios;
    for (const auto& s : j.at("scenarios")) {
      ConicScenario cs;
      cs.u = label_from_json(s.at("u"));
      cs.H = s.at("H").get<std::vector<std::vector<double>>>();
      cs.dual_grid = s.at("dual_grid").get<std::vector<std::vector<double>>>();
      if (s.contains("shifts")) cs.shifts = s.at("shifts").get<std::vector<std::vector<double>>>();
      scenarios.push_back(std::move(cs));
    }
    ConicUncertainInstance inst{std::move(decision), std::move(f), std::move(scenarios)};
    inst.validate();
    return inst;
  });
}

json conic_to_json(const ConicUncertainInstance& inst) {
  json f = json::array();
  for (ExtReal v : inst.f) f.push_back(ext_to_json(v));
  json scenarios = json::array();
  for (const auto& s : inst.scenarios) {
    json js{{"u", s.u}, {"H", s.H}, {"dual_grid", s.dual_grid}};
    if (!s.shifts.empty()) js["shifts"] = s.shifts;
    scenarios.push_back(std::move(js));
  }
  const PairedSpace& d = inst.decision;
  return {{"points", d.labels(Side::Primal)},
          {"duals", d.labels(Side::Dual)},
          {"pairing", d.pairing_table()},
          {"zero", d.label(Side::Primal, d.zero(Side::Primal))},
          {"dual_zero", d.label(Side::Dual, d.zero(Side::Dual))},
          {"f", std::move(f)},
          {"scenarios", std::move(scenarios)}};
}

LinearSipInstance lsip_from_json(const json& j) {
  return shape_checked("LSIP instance", [&] {
    LinearSipInstance inst;
    inst.n = j.at("n").get<std::size_t>();
    inst.c = j.at("c").get<std::vector<double>>();
    for (const auto& r : j.at("rows")) {
      inst.rows.push_back(LsipRow{label_from_json(r.at("t")), r.at("a").get<std::vector<double>>(), r.at("b").get<double>()});
    }
    inst.validate();
    return inst;
  });
}

json lsip_to_json(const LinearSipInstance& inst) {
  json rows = json::array();
  for (const auto& r : inst.rows) rows.push_back({{"t", r.t}, {"a", r.a}, {"b", r.b}});
  return {{"n", inst.n}, {"c", inst.c}, {"rows", std::move(rows)}};
}

std::vector<std::vector<std::string>> schedule_from_json(const json& j) {
  return shape_checked("schedule", [&] {
    std::vector<std::vector<std::string>> out;
    for (const auto& step : j) out.push_back(labels_from_json(step));
    return out;
  });
}

TabulatedFunction function_from_json(const json& j) {
  return shape_checked("function", [&] {
    auto space = std::make_shared<const PairedSpace>(space_from_json(j.at("space")));
    const std::string side = j.value("side", std::string("primal"));
    if (side != "primal" && side != "dual")
      throw Error(ErrorCode::ParseError, "function side must be \"primal\" or \"dual\", got \"" + side + "\"");
    std::vector<ExtReal> values;
    for (const auto& v : j.at("values")) values.push_back(ext_from_json(v));
    return TabulatedFunction(std::move(space), side == "primal" ? Side::Primal : Side::Dual, std::move(values));
  });
}

json function_to_json(const TabulatedFunction& h) {
  json out = json::object();
  for (std::size_t i = 0; i < h.size(); ++i) out[h.space().label(h.side(), i)] = ext_to_json(h[i]);
  return out;
}

json report_to_json(const PerturbationFamily& fam, const DualityReport& rep) {
  json verdicts = json::array();
  for (const auto& v : rep.verdicts) {
    json checks = json::object();
    for (const auto& [id, c] : v.checks) checks[id] = check_to_json(c);
    verdicts.push_back({{"x_star", v.x_star},
                        {"p_star", ext_to_json(v.p_star)},
                        {"q", ext_to_json(v.q_val)},
                        {"robust", v.robust},
                        {"strong", v.strong},
                        {"reverse_strong", v.reverse_strong},
                        {"minmax", v.minmax},
                        {"both_neg_inf", v.both_neg_inf},
                        {"dual_witness", optional_witness(v.dual_witness)},
                        {"primal_witness", v.primal_witness ? json(*v.primal_witness) : json(nullptr)},
                        {"checks", std::move(checks)}});
  }
  json points = json::array();
  for (const auto& pc : rep.point_checks) {
    points.push_back({{"x", pc.x},
                      {"subdifferential_formula", triple_to_json(pc.subdifferential_formula)},
                      {"brsc", triple_to_json(pc.brsc)}});
  }
  json out{{"tolerance", rep.tol},
           {"dom_p_nonempty", fam.dom_p_nonempty()},
           {"p", function_to_json(fam.p())},
           {"p_conj", function_to_json(fam.p_conj())},
           {"q", function_to_json(fam.q())},
           {"verdicts", std::move(verdicts)},
           {"points", std::move(points)},
           {"notes", rep.notes}};
  if (fam.dom_p_nonempty()) {
    out["stable"] = {{"robust", check_to_json(rep.stable_robust)}, {"strong", check_to_json(rep.stable_strong)}};
  } else {
    out["stable"] = nullptr;
  }
  return out;
}

json lsip_solution_to_json(const LsipSolution& s) {
  json j{{"status", to_string(s.status)}, {"value", ext_to_json(s.value)}};
  j["x"] = s.status == LpStatus::Optimal ? json(s.x) : json(nullptr);
  return j;
}

json certificate_to_json(const DualCertificate& c) {
  json support = json::array();
  for (const auto& [t, lambda] : c.support) support.push_back({{"t", t}, {"lambda", lambda}});
  return {{"support", std::move(support)}, {"value", c.value}};
}

json haar_to_json(const HaarDualResult& h) {
  return {{"status", to_string(h.status)},
          {"value", ext_to_json(h.value)},
          {"certificate", h.certificate ? certificate_to_json(*h.certificate) : json(nullptr)}};
}

json discretization_to_json(const DiscretizationResult& d) {
  json steps = json::array();
  for (std::size_t r = 0; r < d.steps.size(); ++r) {
    steps.push_back({{"r", r + 1},
                     {"size", d.steps[r].size},
                     {"value", ext_to_json(d.steps[r].value)},
                     {"status", to_string(d.steps[r].status)}});
  }
  return {{"steps", std::move(steps)},
          {"full_value", ext_to_json(d.full_value)},
          {"nondecreasing", d.nondecreasing},
          {"reaches_final", d.reaches_final}};
}

json reducibility_to_json(const ReducibilityResult& r) {
  return {{"reducible", r.reducible},
          {"witness", r.witness ? json(*r.witness) : json(nullptr)},
          {"value", ext_to_json(r.value)},
          {"dual_attained", r.dual_attained},
          {"certificate", r.certificate ? certificate_to_json(*r.certificate) : json(nullptr)}};
}

json farkas_to_json(const FarkasResult& f) {
  return {{"holds", f.holds},
          {"mu", f.mu},
          {"certificate", f.certificate ? certificate_to_json(*f.certificate) : json(nullptr)}};
}

json conic_farkas_to_json(const FarkasOutcome& f, double r) {
  json w = nullptr;
  if (f.witness) w = {{"u", f.witness->u}, {"y_star", f.witness->y_star}};
  return {{"r", r},
          {"i", f.i},
          {"ii", f.ii},
          {"witness", std::move(w)},
          {"no_certificate_on_grid", f.no_certificate_on_grid()},
          {"note", "multipliers are searched per scenario on the supplied dual grids"}};
}

json optimality_to_json(const OptimalityOutcome& o, const std::string& x_bar) {
  json w = nullptr;
  if (o.certificate) w = {{"u", o.certificate->u}, {"y_star", o.certificate->y_star}};
  return {{"x_bar", x_bar}, {"optimal_on_grid", o.optimal_on_grid}, {"certificate", std::move(w)}};
}

}  // namespace rdl::io
