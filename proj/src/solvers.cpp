#include "locallmo/solvers.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace locallmo {

namespace {

std::string format_vector(const Vector& v) {
    std::string out = "(";
    char buf[32];
    for (int i = 0; i < v.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g", v(i));
        out += buf;
        if (i + 1 < v.size()) out += ", ";
    }
    return out + ")";
}

[[noreturn]] void rethrow_with_context(const Error& e, int k, const Vector& x, const Vector& g,
                                       double t) {
    std::ostringstream msg;
    msg << "iteration " << k << ": " << e.what() << " [x=" << format_vector(x)
        << ", g=" << format_vector(g) << ", t=" << t << "]";
    throw SolverError(msg.str());
}

const RadiusRule& radius_rule_of(const SolverConfig& cfg) {
    const RadiusRule* r = std::get_if<RadiusRule>(&cfg.rule);
    if (!r) throw ConfigError("LMO methods require a radius rule, got a stepsize rule");
    return *r;
}

const StepsizeRule& stepsize_rule_of(const SolverConfig& cfg) {
    const StepsizeRule* r = std::get_if<StepsizeRule>(&cfg.rule);
    if (!r) throw ConfigError("PGD/FW require a stepsize rule, got a radius rule");
    return *r;
}

// Gamma used for the recorded gradient-mapping norms of an LMO-family run:
// the rule's own gamma when it drives the radii, else 1/L when declared.
std::optional<double> grad_map_gamma_for(const RadiusRule& rule, const Objective& obj) {
    if (const auto* gm = std::get_if<GradientMappingRadius>(&rule)) return gm->gamma;
    if (obj.constants().L) return 1.0 / *obj.constants().L;
    return std::nullopt;
}

struct MetricRecorder {
    const ConstraintSet& set;
    const Objective& obj;
    std::optional<double> gamma;
    bool record_fw = false;

    void push(Trajectory& traj, const Vector& x) const {
        if (obj.optimum()) {
            const OptimumInfo& opt = *obj.optimum();
            traj.dist_sq_to_opt.push_back((x - opt.x_star).squaredNorm());
            traj.f_gap.push_back(obj.value(x) - opt.f_star);
            traj.grad_diff_sq.push_back((obj.gradient(x) - opt.grad_star).squaredNorm());
        }
        if (gamma) traj.grad_map_norm.push_back(gradient_mapping(set, obj, x, *gamma).norm());
        if (record_fw) {
            const Vector g = obj.gradient(x);
            traj.fw_gap.push_back(g.dot(x - set.global_lmo(g)));
        }
    }
};

void require_feasible_start(const ConstraintSet& set, const Vector& x0) {
    if (!set.contains(x0, 1e-9)) throw ConfigError("starting point is not feasible");
}

}  // namespace

std::string method_name(Method m) {
    switch (m) {
        case Method::LocalLMO: return "local_lmo";
        case Method::StochasticLocalLMO: return "stochastic_local_lmo";
        case Method::NonsmoothLocalLMO: return "nonsmooth_local_lmo";
        case Method::PGD: return "pgd";
        case Method::FrankWolfe: return "frank_wolfe";
    }
    return "unknown";
}

std::string status_name(RunStatus s) {
    switch (s) {
        case RunStatus::MaxIters: return "max_iters";
        case RunStatus::Stationary: return "stationary";
        case RunStatus::Converged: return "converged";
    }
    return "unknown";
}

std::uint64_t sample_index(std::uint64_t seed, int k, std::uint64_t n) {
    std::uint64_t z = seed ^ (0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(k) + 1));
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z % n;
}

Trajectory run_local_lmo(const ConstraintSet& set, const Objective& obj, const Vector& x0,
                         const SolverConfig& cfg) {
    const RadiusRule& rule = radius_rule_of(cfg);
    check_rule_requirements(rule, obj);
    require_feasible_start(set, x0);

    Trajectory traj;
    traj.method = Method::LocalLMO;
    traj.grad_map_gamma = grad_map_gamma_for(rule, obj);
    MetricRecorder rec{set, obj, traj.grad_map_gamma};

    Vector x = x0;
    traj.iterates.push_back(x);
    rec.push(traj, x);
    for (int k = 0; k < cfg.max_iters; ++k) {
        Vector g = obj.gradient(x);
        double t = 0;
        try {
            t = radius(rule, obj, set, x, k);
            if (t == 0 || g.norm() == 0) {
                traj.radii_or_steps.push_back(0.0);
                traj.iterates.push_back(x);
                rec.push(traj, x);
                traj.status = RunStatus::Stationary;
                return traj;
            }
            Vector next = set.local_lmo(LocalBall{x, t}, g);
            traj.radii_or_steps.push_back(t);
            traj.iterates.push_back(next);
            rec.push(traj, next);
            const double move = (next - x).norm();
            x = std::move(next);
            if (cfg.stop_tol > 0 && move <= cfg.stop_tol) {
                traj.status = RunStatus::Converged;
                return traj;
            }
        } catch (const SolverError&) {
            throw;
        } catch (const Error& e) {
            rethrow_with_context(e, k, x, g, t);
        }
    }
    traj.status = RunStatus::MaxIters;
    return traj;
}

Trajectory run_pgd(const ConstraintSet& set, const Objective& obj, const Vector& x0,
                   const SolverConfig& cfg) {
    const StepsizeRule& rule = stepsize_rule_of(cfg);
    check_rule_requirements(rule, obj);
    require_feasible_start(set, x0);

    Trajectory traj;
    traj.method = Method::PGD;
    MetricRecorder rec{set, obj, std::nullopt};

    Vector x = x0;
    auto push_metrics = [&](const Vector& z, double gamma) {
        rec.push(traj, z);
        traj.grad_map_norm.push_back(gradient_mapping(set, obj, z, gamma).norm());
    };

    double gamma0 = stepsize(rule, obj, x, 0);
    traj.iterates.push_back(x);
    push_metrics(x, gamma0);
    for (int k = 0; k < cfg.max_iters; ++k) {
        Vector g = obj.gradient(x);
        double gamma = 0;
        try {
            gamma = stepsize(rule, obj, x, k);
            Vector next = set.project(x - gamma * g);
            traj.radii_or_steps.push_back(gamma);
            traj.iterates.push_back(next);
            push_metrics(next, stepsize(rule, obj, next, k + 1));
            const double move = (next - x).norm();
            x = std::move(next);
            if (cfg.stop_tol > 0 && move <= cfg.stop_tol) {
                traj.status = RunStatus::Converged;
                return traj;
            }
        } catch (const SolverError&) {
            throw;
        } catch (const Error& e) {
            rethrow_with_context(e, k, x, g, gamma);
        }
    }
    traj.status = RunStatus::MaxIters;
    return traj;
}

Trajectory run_frank_wolfe(const ConstraintSet& set, const Objective& obj, const Vector& x0,
                           const SolverConfig& cfg) {
    const StepsizeRule& rule = stepsize_rule_of(cfg);
    check_rule_requirements(rule, obj);
    require_feasible_start(set, x0);

    Trajectory traj;
    traj.method = Method::FrankWolfe;
    // The FW gap max_{s} <grad f(x), x - s> is defined for compact sets only;
    // the column is absent (never zero-filled) otherwise.
    MetricRecorder rec{set, obj, std::nullopt, set.is_bounded()};

    Vector x = x0;
    traj.iterates.push_back(x);
    try {
        rec.push(traj, x);
        for (int k = 0; k < cfg.max_iters; ++k) {
            const Vector g = obj.gradient(x);
            const double gamma = stepsize(rule, obj, x, k);
            Vector s = set.global_lmo(g);
            Vector next = (1.0 - gamma) * x + gamma * s;
            traj.radii_or_steps.push_back(gamma);
            traj.iterates.push_back(next);
            rec.push(traj, next);
            const double move = (next - x).norm();
            x = std::move(next);
            if (cfg.stop_tol > 0 && move <= cfg.stop_tol) {
                traj.status = RunStatus::Converged;
                return traj;
            }
        }
    } catch (const UnboundedObjective& e) {
        throw SolverError(std::string("frank_wolfe requires a compact constraint set: ") +
                          e.what());
    }
    traj.status = RunStatus::MaxIters;
    return traj;
}

Trajectory run_stochastic_local_lmo(const ConstraintSet& set, const Objective& obj,
                                    const Vector& x0, const SolverConfig& cfg) {
    const RadiusRule& rule = radius_rule_of(cfg);
    const FiniteSum* sum = obj.as<FiniteSum>();
    if (!sum || sum->components.empty())
        throw ConfigError("stochastic local LMO requires a finite-sum objective");
    for (const Objective& c : sum->components) check_rule_requirements(rule, c);
    require_feasible_start(set, x0);

    Trajectory traj;
    traj.method = Method::StochasticLocalLMO;
    traj.grad_map_gamma = grad_map_gamma_for(rule, obj);
    MetricRecorder rec{set, obj, traj.grad_map_gamma};

    const std::uint64_t n = sum->components.size();
    Vector x = x0;
    traj.iterates.push_back(x);
    rec.push(traj, x);
    for (int k = 0; k < cfg.max_iters; ++k) {
        const int i = static_cast<int>(sample_index(cfg.seed, k, n));
        const Objective& comp = sum->components[i];
        Vector g = comp.gradient(x);
        double t = 0;
        try {
            t = radius(rule, comp, set, x, k);
            traj.sampled_indices.push_back(i);
            if (t == 0 || g.norm() == 0) {
                traj.radii_or_steps.push_back(0.0);
                traj.iterates.push_back(x);
                rec.push(traj, x);
                continue;  // another component may still make progress
            }
            Vector next = set.local_lmo(LocalBall{x, t}, g);
            traj.radii_or_steps.push_back(t);
            traj.iterates.push_back(next);
            rec.push(traj, next);
            const double move = (next - x).norm();
            x = std::move(next);
            if (cfg.stop_tol > 0 && move <= cfg.stop_tol) {
                traj.status = RunStatus::Converged;
                return traj;
            }
        } catch (const SolverError&) {
            throw;
        } catch (const Error& e) {
            rethrow_with_context(e, k, x, g, t);
        }
    }
    traj.status = RunStatus::MaxIters;
    return traj;
}

Trajectory run_nonsmooth_local_lmo(const ConstraintSet& set, const Objective& obj,
                                   const Vector& x0, const SolverConfig& cfg) {
    const RadiusRule& rule = radius_rule_of(cfg);
    if (!std::holds_alternative<PolyakRadius>(rule))
        throw ConfigError("nonsmooth local LMO uses the Polyak radius (subgradient form)");
    if (!obj.optimum()) throw MissingConstant("nonsmooth local LMO requires f_star");
    require_feasible_start(set, x0);

    Trajectory traj;
    traj.method = Method::NonsmoothLocalLMO;
    const double f_star = obj.optimum()->f_star;

    Vector x = x0;
    auto push_metrics = [&](const Vector& z) {
        if (obj.optimum()) {
            const OptimumInfo& opt = *obj.optimum();
            traj.dist_sq_to_opt.push_back((z - opt.x_star).squaredNorm());
            traj.f_gap.push_back(obj.value(z) - opt.f_star);
            traj.grad_diff_sq.push_back((obj.subgradient(z) - opt.grad_star).squaredNorm());
        }
    };
    traj.iterates.push_back(x);
    push_metrics(x);
    for (int k = 0; k < cfg.max_iters; ++k) {
        Vector g = obj.subgradient(x);
        double t = 0;
        try {
            const double gn = g.norm();
            t = gn == 0 ? 0.0 : std::max(0.0, obj.value(x) - f_star) / gn;
            if (t == 0 || gn == 0) {
                traj.radii_or_steps.push_back(0.0);
                traj.iterates.push_back(x);
                push_metrics(x);
                traj.status = RunStatus::Stationary;
                return traj;
            }
            Vector next = set.local_lmo(LocalBall{x, t}, g);
            traj.radii_or_steps.push_back(t);
            traj.iterates.push_back(next);
            push_metrics(next);
            const double move = (next - x).norm();
            x = std::move(next);
            if (cfg.stop_tol > 0 && move <= cfg.stop_tol) {
                traj.status = RunStatus::Converged;
                return traj;
            }
        } catch (const SolverError&) {
            throw;
        } catch (const Error& e) {
            rethrow_with_context(e, k, x, g, t);
        }
    }
    traj.status = RunStatus::MaxIters;
    return traj;
}

Trajectory run_solver(const ConstraintSet& set, const Objective& obj, const Vector& x0,
                      const SolverConfig& cfg) {
    switch (cfg.method) {
        case Method::LocalLMO: return run_local_lmo(set, obj, x0, cfg);
        case Method::StochasticLocalLMO: return run_stochastic_local_lmo(set, obj, x0, cfg);
        case Method::NonsmoothLocalLMO: return run_nonsmooth_local_lmo(set, obj, x0, cfg);
        case Method::PGD: return run_pgd(set, obj, x0, cfg);
        case Method::FrankWolfe: return run_frank_wolfe(set, obj, x0, cfg);
    }
    throw ConfigError("unknown method");
}

}  // namespace locallmo
