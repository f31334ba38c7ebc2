#pragma once

#include <iosfwd>
#include <nlohmann/json_fwd.hpp>

#include "locallmo/oracle.hpp"

namespace locallmo {

using Json = nlohmann::json;

// Structured-text documents: a "variant" key plus parameter arrays. Numbers
// are emitted in shortest round-trip decimal form, so load(save(x)) == x
// bit-for-bit. Loaders validate and throw ConfigError on violations.

Json to_json(const ConstraintSet& set);
ConstraintSet set_from_json(const Json& j);

Json to_json(const Objective& obj);
Objective objective_from_json(const Json& j);

Json to_json(const RadiusRule& rule);
RadiusRule radius_rule_from_json(const Json& j);

Json to_json(const StepsizeRule& rule);
StepsizeRule stepsize_rule_from_json(const Json& j);

Json to_json(const SolverConfig& cfg);
SolverConfig solver_config_from_json(const Json& j);

Json to_json(const OracleResult& res);

// --- Trajectory CSV -------------------------------------------------------------
//
// One row per iterate: k, x0..x{d-1}, t_or_gamma, dist_sq, f_gap,
// grad_diff_sq, grad_map_norm, fw_gap. Floats carry 17 significant digits;
// absent metrics leave their cells empty; the final row has no t_or_gamma.
// A leading "# method=..." comment records run metadata for the checker.

void write_trajectory_csv(std::ostream& out, const Trajectory& traj);
void write_trajectory_csv(const std::string& path, const Trajectory& traj);

Trajectory read_trajectory_csv(const std::string& path);

std::string format_double(double v);  // %.17g

}  // namespace locallmo
