#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rdl/conic.hpp"
#include "rdl/diagnostics.hpp"
#include "rdl/family.hpp"
#include "rdl/lsip.hpp"

namespace rdl::io {

using nlohmann::json;

/// Extended reals travel as JSON numbers or the strings "+inf", "inf", "-inf".
json ext_to_json(ExtReal v);
ExtReal ext_from_json(const json& j);

/// Parses JSON text; syntax errors become ParseError with line and column.
json parse(const std::string& text, const std::string& source = "<input>");
json read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

// Instance formats. Shape errors raise ParseError; violated invariants raise
// ValidationError (or the more specific code of the failed check).

PairedSpace space_from_json(const json& j);
json space_to_json(const PairedSpace& s);

PerturbationFamily family_from_json(const json& j);
json family_to_json(const PerturbationFamily& fam);

ConicUncertainInstance conic_from_json(const json& j);
json conic_to_json(const ConicUncertainInstance& inst);

LinearSipInstance lsip_from_json(const json& j);
json lsip_to_json(const LinearSipInstance& inst);

/// {"space": <space>, "side": "primal"|"dual", "values": [...]}; side defaults to primal.
TabulatedFunction function_from_json(const json& j);

/// A list of label lists.
std::vector<std::vector<std::string>> schedule_from_json(const json& j);

// Results.

json report_to_json(const PerturbationFamily& fam, const DualityReport& rep);
json function_to_json(const TabulatedFunction& h);
json lsip_solution_to_json(const LsipSolution& s);
json haar_to_json(const HaarDualResult& h);
json certificate_to_json(const DualCertificate& c);
json discretization_to_json(const DiscretizationResult& d);
json reducibility_to_json(const ReducibilityResult& r);
json farkas_to_json(const FarkasResult& f);
json conic_farkas_to_json(const FarkasOutcome& f, double r);
json optimality_to_json(const OptimalityOutcome& o, const std::string& x_bar);

}  // namespace rdl::io
