#pragma once

#include <map>
#include <optional>

#include "locallmo/serialization.hpp"

namespace locallmo {

// One labeled run within an experiment; the overrides support experiments
// that sweep constraint geometries (each geometry carries its own optimum
// metadata on the objective).
struct RunSpec {
    std::string label;
    SolverConfig config;
    std::vector<std::string> claims;  // invariant checks evaluated after the run
    std::optional<ConstraintSet> set_override;
    std::optional<Vector> x0_override;
    std::optional<Objective> objective_override;
};

struct ExperimentSpec {
    std::string name;
    ConstraintSet set;
    Objective objective;
    Vector x0;
    std::vector<RunSpec> runs;
};

struct RunOutcome {
    std::string label;
    Trajectory trajectory;
    std::string csv_path;
    std::map<std::string, double> final_metrics;
    std::vector<ClaimResult> checks;
    std::string error;  // empty on success; a failed run aborts only itself

    bool ok() const { return error.empty(); }
    bool checks_pass() const {
        for (const ClaimResult& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

struct RunReport {
    std::string name;
    std::vector<RunOutcome> outcomes;
    std::string summary_path;
};

// Executes every run, writes one trajectory CSV per label plus a summary
// table, and attaches the per-run invariant-check reports.
RunReport run_experiment(const ExperimentSpec& spec, const std::string& out_dir);

// Writes "<label>_bounds.csv" per run with the theoretical curves next to the
// observed metrics: the geometric contraction bound ((L-mu)/(L+mu))^{2k} R0^2
// and the smooth bound L^2 R0^2/(k+1). Requires optimum metadata and the
// constants involved.
std::vector<std::string> emit_bound_curves(const ExperimentSpec& spec, const RunReport& report,
                                           const std::string& out_dir);

// Built-in experiment registry.
std::vector<std::string> experiment_names();
ExperimentSpec get_experiment(const std::string& name);

Json to_json(const ExperimentSpec& spec);
ExperimentSpec experiment_from_json(const Json& j);
ExperimentSpec load_experiment_file(const std::string& path);

// Claim evaluation on a trajectory CSV alone (no objective): supports the
// claims whose inequalities close over the recorded columns. Constants that
// cannot be derived from the file come in through `options` (rho, L, G).
struct CsvCheckOptions {
    std::optional<double> rho;  // contraction factor
    std::optional<double> L;
    std::optional<double> G;
};
std::vector<ClaimResult> check_trajectory_csv(const std::string& path,
                                              const std::vector<std::string>& claims,
                                              const CsvCheckOptions& options = {});

// Command line front end. Subcommands: list, show <name>, run <name|file>
// [--out DIR] [--seed N] [--iters K], check <csv> --claims a,b [--rho R]
// [--L v] [--G v], oracle <set.json> <center> <radius> <g>. Returns 0 on
// success, 1 on solver/check failure, 2 on configuration or usage errors.
int cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace locallmo
