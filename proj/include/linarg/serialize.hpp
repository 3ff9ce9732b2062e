#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "linarg/algebra.hpp"
#include "linarg/equations.hpp"
#include "linarg/reduction.hpp"
#include "linarg/scenarios.hpp"
#include "linarg/stability.hpp"

namespace linarg {

// Shortest round-trip-exact decimal form.
std::string format_double(double v);

nlohmann::json element_to_json(const Element& e);
Element element_from_json(const AlgebraContext& ctx, const nlohmann::json& j);

// Trajectory CSV: header "n,norm,c0,...,c{p-1}" then one row per index
// from -k to N, payload components in index order (matrix row-major).
std::string trajectory_to_csv(const Trajectory& traj);
nlohmann::json trajectory_to_json(const Trajectory& traj);

nlohmann::json reduction_outcome_to_json(const ReductionOutcome& outcome);
nlohmann::json stability_report_to_json(const StabilityReport& report);
std::string stability_report_to_table(const StabilityReport& report);

// Scan CSV columns: a, sig_ok, regime, tau (tau empty outside local_basin).
std::string scan_to_csv(const BifurcationScan& scan);

std::string axiom_report_to_table(const AxiomReport& report);
nlohmann::json axiom_report_to_json(const AxiomReport& report);

void write_file(const std::string& path, const std::string& content);

}  // namespace linarg
