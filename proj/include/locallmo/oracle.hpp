#pragma once

#include "locallmo/solvers.hpp"

namespace locallmo {

enum class OracleMethod { CandidateEnum2D, PenalizedProjection, GridRefine };

std::string oracle_method_name(OracleMethod m);

struct OracleResult {
    Vector point;
    double objective = 0.0;
    OracleMethod method_tag = OracleMethod::PenalizedProjection;
};

enum class OracleStrategy { Auto, ForcePenalized };

// Brute-force reference for the local linear minimization subproblem,
// structurally independent of ConstraintSet::local_lmo (no shared case
// analysis). 2-D box/diamond instances use exhaustive boundary-candidate
// enumeration plus a fine angular grid with local refinement; everything else
// uses Dykstra alternating projections of center - lambda*g over a geometric
// lambda sweep, polished by projected linear descent with halving steps.
// ForcePenalized routes 2-D box instances through the projection path too,
// for cross-checking the two oracle routes against each other.
// Guaranteed objective accuracy 1e-9 * (1 + ||g|| * radius).
OracleResult oracle_local_lmo(const ConstraintSet& set, const LocalBall& ball, const Vector& g,
                              OracleStrategy strategy = OracleStrategy::Auto);

// Named inequality checks re-evaluated at every step of a recorded run.
// max_violation is the worst lhs - rhs over the run with the claim's
// tolerance folded into rhs, so pass means max_violation <= 0.
struct ClaimResult {
    std::string claim;
    bool pass = false;
    double max_violation = 0.0;
    int checked = 0;
};

// Claims by method family:
//   local_lmo:           fejer, boundary_step, radius_bound, contraction,
//                        smooth_rate, polyak_rate, l0l1_rate, nonconvex_descent
//   nonsmooth_local_lmo: fejer, boundary_step, radius_bound, polyak_rate
//   stochastic:          boundary_step
//   pgd:                 pgd_descent, pgd_fejer, pgd_rate, pgd_grad_diff
//   frank_wolfe:         fw_gap_nonneg
// Throws UnknownClaim for an unknown name or a claim/method mismatch.
std::vector<ClaimResult> check_trajectory(const Trajectory& traj, const Objective& obj,
                                          const std::vector<std::string>& claims);

// Two PGD steps on f_alpha over R x R_+ with the 1/L stepsize: returns the
// quantities showing that no bound C*L*||x0-x*||^2/k can hold for all alpha.
struct CounterexampleReport {
    Vector x1;                        // exactly (4/5, 0)
    double grad_diff_sq_x0 = 0.0;     // 5 alpha^2 / 4
    double min_grad_diff_sq = 0.0;    // 4 alpha^2 / 5
    double hypothetical_bound = 0.0;  // C * L * ||x0-x*||^2 / 2
    bool violated = false;            // true iff alpha > 25 C / 16
};

CounterexampleReport pgd_counterexample(double alpha, double C);

}  // namespace locallmo
