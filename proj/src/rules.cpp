#include "locallmo/rules.hpp"

#include <cmath>

namespace locallmo {

namespace {

double need(const std::optional<double>& c, const char* name) {
    if (!c) throw MissingConstant(std::string("rule requires declared constant ") + name);
    return *c;
}

const OptimumInfo& need_optimum(const Objective& obj, const char* what) {
    if (!obj.optimum())
        throw MissingConstant(std::string("rule requires optimum metadata (") + what + ")");
    return *obj.optimum();
}

}  // namespace

double strong_convexity_theta(double mu, double L) { return 2.0 * std::sqrt(mu * L) / (L + mu); }

Vector gradient_mapping(const ConstraintSet& set, const Objective& obj, const Vector& x,
                        double gamma) {
    if (!(gamma > 0)) throw BadRadius("gradient_mapping: gamma must be > 0");
    return (x - set.project(x - gamma * obj.gradient(x))) / gamma;
}

double radius(const RadiusRule& rule, const Objective& obj, const ConstraintSet& set,
              const Vector& x, int k) {
    return std::visit(
        [&](const auto& r) -> double {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, SmoothGradDiff>) {
                const double L = need(obj.constants().L, "L");
                const OptimumInfo& opt = need_optimum(obj, "grad_star");
                return (obj.gradient(x) - opt.grad_star).norm() / L;
            } else if constexpr (std::is_same_v<T, StronglyConvexTheta>) {
                const double L = need(obj.constants().L, "L");
                const double mu = need(obj.constants().mu, "mu");
                const OptimumInfo& opt = need_optimum(obj, "x_star");
                return strong_convexity_theta(mu, L) * (x - opt.x_star).norm();
            } else if constexpr (std::is_same_v<T, PolyakRadius>) {
                const OptimumInfo& opt = need_optimum(obj, "f_star");
                const double gap = obj.value(x) - opt.f_star;
                const double gn = obj.gradient(x).norm();
                if (gn == 0) {
                    if (gap <= 1e-12 * (1.0 + std::abs(opt.f_star))) return 0.0;
                    throw ZeroDenominator("polyak radius: zero gradient at a non-optimal point");
                }
                return std::max(0.0, gap) / gn;
            } else if constexpr (std::is_same_v<T, AsymL0L1>) {
                const double L0 = need(obj.constants().L0, "L0");
                const double L1 = need(obj.constants().L1, "L1");
                const OptimumInfo& opt = need_optimum(obj, "grad_star");
                const Vector g = obj.gradient(x);
                const double dn = (g - opt.grad_star).norm();
                if (dn == 0) return 0.0;
                return 0.5 * (dn / (L0 + L1 * g.norm()) + dn / (L0 + L1 * opt.grad_star.norm()));
            } else if constexpr (std::is_same_v<T, GradientMappingRadius>) {
                return r.gamma * gradient_mapping(set, obj, x, r.gamma).norm();
            } else if constexpr (std::is_same_v<T, GeometricSchedule>) {
                return r.c * std::pow(r.q, k);
            } else {
                return r.t;
            }
        },
        rule);
}

double stepsize(const StepsizeRule& rule, const Objective& obj, const Vector& x, int k) {
    return std::visit(
        [&](const auto& r) -> double {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, ConstantGamma>) {
                return r.gamma;
            } else if constexpr (std::is_same_v<T, InverseL>) {
                return 1.0 / need(obj.constants().L, "L");
            } else if constexpr (std::is_same_v<T, TwoOverLplusMu>) {
                return 2.0 / (need(obj.constants().L, "L") + need(obj.constants().mu, "mu"));
            } else if constexpr (std::is_same_v<T, FWClassic>) {
                return 2.0 / (k + 2.0);
            } else {
                const double L0 = need(obj.constants().L0, "L0");
                const double L1 = need(obj.constants().L1, "L1");
                const OptimumInfo& opt = need_optimum(obj, "grad_star");
                const double gn = obj.gradient(x).norm();
                return 0.5 *
                       (1.0 / (L0 + L1 * gn) + 1.0 / (L0 + L1 * opt.grad_star.norm()));
            }
        },
        rule);
}

void check_rule_requirements(const RadiusRule& rule, const Objective& obj) {
    std::visit(
        [&](const auto& r) {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, SmoothGradDiff>) {
                need(obj.constants().L, "L");
                need_optimum(obj, "grad_star");
            } else if constexpr (std::is_same_v<T, StronglyConvexTheta>) {
                need(obj.constants().L, "L");
                need(obj.constants().mu, "mu");
                need_optimum(obj, "x_star");
            } else if constexpr (std::is_same_v<T, PolyakRadius>) {
                need_optimum(obj, "f_star");
            } else if constexpr (std::is_same_v<T, AsymL0L1>) {
                need(obj.constants().L0, "L0");
                need(obj.constants().L1, "L1");
                need_optimum(obj, "grad_star");
            } else if constexpr (std::is_same_v<T, GradientMappingRadius>) {
                if (!(r.gamma > 0)) throw ConfigError("gradient-mapping radius: gamma must be > 0");
            } else if constexpr (std::is_same_v<T, GeometricSchedule>) {
                if (!(r.c > 0) || !(r.q > 0) || !(r.q < 1))
                    throw ConfigError("geometric schedule needs c > 0 and q in (0,1)");
            } else {
                if (!(r.t > 0)) throw ConfigError("constant radius must be > 0");
            }
        },
        rule);
}

void check_rule_requirements(const StepsizeRule& rule, const Objective& obj) {
    std::visit(
        [&](const auto& r) {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, ConstantGamma>) {
                if (!(r.gamma > 0)) throw ConfigError("constant stepsize must be > 0");
            } else if constexpr (std::is_same_v<T, InverseL>) {
                need(obj.constants().L, "L");
            } else if constexpr (std::is_same_v<T, TwoOverLplusMu>) {
                need(obj.constants().L, "L");
                need(obj.constants().mu, "mu");
            } else if constexpr (std::is_same_v<T, PGDAsymL0L1>) {
                need(obj.constants().L0, "L0");
                need(obj.constants().L1, "L1");
                need_optimum(obj, "grad_star");
            }
        },
        rule);
}

GeometricSchedule make_geometric_from_optimum(const Objective& obj, const Vector& x0, double q) {
    const double L = need(obj.constants().L, "L");
    const double mu = need(obj.constants().mu, "mu");
    const OptimumInfo& opt = need_optimum(obj, "x_star");
    return GeometricSchedule{strong_convexity_theta(mu, L) * (x0 - opt.x_star).norm(), q};
}

std::string rule_name(const RadiusRule& rule) {
    return std::visit(
        [](const auto& r) -> std::string {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, SmoothGradDiff>) return "smooth_grad_diff";
            else if constexpr (std::is_same_v<T, StronglyConvexTheta>) return "strongly_convex_theta";
            else if constexpr (std::is_same_v<T, PolyakRadius>) return "polyak";
            else if constexpr (std::is_same_v<T, AsymL0L1>) return "asym_l0l1";
            else if constexpr (std::is_same_v<T, GradientMappingRadius>) return "gradient_mapping";
            else if constexpr (std::is_same_v<T, GeometricSchedule>) return "geometric";
            else return "constant";
        },
        rule);
}

std::string rule_name(const StepsizeRule& rule) {
    return std::visit(
        [](const auto& r) -> std::string {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, ConstantGamma>) return "constant_gamma";
            else if constexpr (std::is_same_v<T, InverseL>) return "inverse_l";
            else if constexpr (std::is_same_v<T, TwoOverLplusMu>) return "two_over_l_plus_mu";
            else if constexpr (std::is_same_v<T, FWClassic>) return "fw_classic";
            else return "pgd_asym_l0l1";
        },
        rule);
}

}  // namespace locallmo
