#pragma once

#include <variant>

#include "locallmo/objectives.hpp"

namespace locallmo {

// --- Radius rules for Local LMO -----------------------------------------------
//
// Each rule computes the per-iteration ball radius t_k. The admissibility-based
// rules depend on declared constants and/or optimum metadata; they are the
// theoretically prescribed choices and are not estimated at runtime.

// t = ||grad f(x) - grad f(x*)|| / L. Needs L and grad_star.
struct SmoothGradDiff {};

// t = theta * ||x - x*|| with theta = 2 sqrt(mu L)/(L + mu). Needs mu, L, x*.
struct StronglyConvexTheta {};

// t = (f(x) - f*) / ||grad f(x)||, 0 at the optimum. Needs f*.
struct PolyakRadius {};

// t = (||D||/(L0 + L1||grad f(x)||) + ||D||/(L0 + L1||grad f(x*)||)) / 2
// with D = grad f(x) - grad f(x*). Needs L0, L1, grad_star.
struct AsymL0L1 {};

// t = gamma * ||G_gamma(x)||, the projected-gradient-mapping radius.
struct GradientMappingRadius {
    double gamma = 1.0;
};

// t = c * q^k.
struct GeometricSchedule {
    double c = 1.0;
    double q = 0.9;
};

struct ConstantRadius {
    double t = 1.0;
};

using RadiusRule = std::variant<SmoothGradDiff, StronglyConvexTheta, PolyakRadius, AsymL0L1,
                                GradientMappingRadius, GeometricSchedule, ConstantRadius>;

// --- Stepsize rules for PGD / Frank-Wolfe --------------------------------------

struct ConstantGamma {
    double gamma = 1.0;
};

struct InverseL {};

struct TwoOverLplusMu {};

// gamma_k = 2/(k+2).
struct FWClassic {};

// gamma_k = (1/(L0 + L1||grad f(x)||) + 1/(L0 + L1||grad f(x*)||)) / 2.
struct PGDAsymL0L1 {};

using StepsizeRule = std::variant<ConstantGamma, InverseL, TwoOverLplusMu, FWClassic, PGDAsymL0L1>;

// theta = 2 sqrt(mu L) / (L + mu), the contraction angle of the strongly
// convex radius rule (~0.198020 for mu=1, L=100).
double strong_convexity_theta(double mu, double L);

// G_gamma(x) = (x - Proj_set(x - gamma grad f(x))) / gamma. Zero exactly at
// constrained first-order stationary points; equals grad f(x) on the whole
// space.
Vector gradient_mapping(const ConstraintSet& set, const Objective& obj, const Vector& x,
                        double gamma);

// t_k per the rule. Throws MissingConstant when the objective lacks a
// required declared constant or optimum field, ZeroDenominator for the
// Polyak rule with a vanishing gradient at a non-optimal point.
double radius(const RadiusRule& rule, const Objective& obj, const ConstraintSet& set,
              const Vector& x, int k);

double stepsize(const StepsizeRule& rule, const Objective& obj, const Vector& x, int k);

// Validate that the objective carries everything the rule needs; throws
// MissingConstant otherwise. Called once before a run starts.
void check_rule_requirements(const RadiusRule& rule, const Objective& obj);
void check_rule_requirements(const StepsizeRule& rule, const Objective& obj);

// The optimum-aware geometric schedule c = theta * ||x0 - x*||, q as given.
GeometricSchedule make_geometric_from_optimum(const Objective& obj, const Vector& x0, double q);

std::string rule_name(const RadiusRule& rule);
std::string rule_name(const StepsizeRule& rule);

}  // namespace locallmo
