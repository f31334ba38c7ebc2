#pragma once

#include <cstdint>
#include <optional>

#include "locallmo/rules.hpp"

namespace locallmo {

enum class Method { LocalLMO, StochasticLocalLMO, NonsmoothLocalLMO, PGD, FrankWolfe };

enum class RunStatus { MaxIters, Stationary, Converged };

std::string method_name(Method m);
std::string status_name(RunStatus s);

struct SolverConfig {
    Method method = Method::LocalLMO;
    // Radius rules pair with the LMO methods, stepsize rules with PGD/FW.
    std::variant<RadiusRule, StepsizeRule> rule = RadiusRule{ConstantRadius{1.0}};
    int max_iters = 100;
    std::uint64_t seed = 0;     // stochastic runs only
    double stop_tol = 0.0;      // on ||x_{k+1} - x_k||; 0 disables
};

// Full record of a run: iterates (one more entry than radii_or_steps) plus
// per-iterate metrics. Metric vectors are either empty or aligned with
// iterates; optimum-referencing metrics are recorded only when the objective
// carries optimum metadata, fw_gap only for Frank-Wolfe on a bounded set.
struct Trajectory {
    Method method = Method::LocalLMO;
    std::vector<Vector> iterates;
    std::vector<double> radii_or_steps;

    std::vector<double> dist_sq_to_opt;
    std::vector<double> f_gap;
    std::vector<double> grad_diff_sq;
    std::vector<double> grad_map_norm;
    std::optional<double> grad_map_gamma;  // the gamma the column was computed with
    std::vector<double> fw_gap;
    std::vector<int> sampled_indices;

    RunStatus status = RunStatus::MaxIters;

    int steps() const { return static_cast<int>(radii_or_steps.size()); }
    const Vector& final_iterate() const { return iterates.back(); }
};

// x_{k+1} in argmin <grad f(x_k), z> over set ∩ B(x_k, t_k).
Trajectory run_local_lmo(const ConstraintSet& set, const Objective& obj, const Vector& x0,
                         const SolverConfig& cfg);

// x_{k+1} = Proj_set(x_k - gamma_k grad f(x_k)).
Trajectory run_pgd(const ConstraintSet& set, const Objective& obj, const Vector& x0,
                   const SolverConfig& cfg);

// s_k = lmo_set(grad f(x_k)); x_{k+1} = (1-gamma_k) x_k + gamma_k s_k.
// Aborts with a diagnostic when the set is not compact (unbounded LMO).
Trajectory run_frank_wolfe(const ConstraintSet& set, const Objective& obj, const Vector& x0,
                           const SolverConfig& cfg);

// Uniform component sampling i_k from a counter-based generator keyed by
// (seed, k); the radius rule is evaluated on the sampled component with its
// own constants and optimum metadata.
Trajectory run_stochastic_local_lmo(const ConstraintSet& set, const Objective& obj,
                                    const Vector& x0, const SolverConfig& cfg);

// Subgradient variant with the Polyak radius; terminates Stationary when the
// selected subgradient is zero.
Trajectory run_nonsmooth_local_lmo(const ConstraintSet& set, const Objective& obj,
                                   const Vector& x0, const SolverConfig& cfg);

// Dispatch on cfg.method.
Trajectory run_solver(const ConstraintSet& set, const Objective& obj, const Vector& x0,
                      const SolverConfig& cfg);

// Deterministic, platform-independent index sampler used by the stochastic
// driver (bitwise-reproducible given (seed, k)).
std::uint64_t sample_index(std::uint64_t seed, int k, std::uint64_t n);

}  // namespace locallmo
