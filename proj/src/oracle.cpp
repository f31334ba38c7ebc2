#include "locallmo/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace locallmo {

namespace {

constexpr int kDykstraMaxIters = 100000;

// Dykstra's alternating projections onto set ∩ B(ball). The intersection is
// nonempty (it contains ball.center). With throw_on_cap false the point
// reached at the iteration budget is returned as-is; the lambda sweep uses
// this mode because far-point projections toward a shallow lens corner can
// contract very slowly, and sweep outputs are only candidate seeds. The
// refinement phase projects near points, where the budget never binds, and
// keeps the throwing diagnostic.
Vector dykstra_project(const ConstraintSet& set, const LocalBall& ball, const Vector& y,
                       int max_iters = kDykstraMaxIters, bool throw_on_cap = true) {
    const ConstraintSet ball_set{EuclideanBall{ball.center, ball.radius}};
    Vector z = y;
    Vector p = Vector::Zero(y.size());
    Vector q = Vector::Zero(y.size());
    const double scale = 1.0 + y.norm() + ball.center.norm() + ball.radius;
    for (int it = 0; it < max_iters; ++it) {
        const Vector za = set.project(z + p);
        p = z + p - za;
        const Vector zb = ball_set.project(za + q);
        q = za + q - zb;
        const double change = (zb - z).norm();
        z = zb;
        if (change <= 1e-14 * scale && it > 0) return z;
    }
    if (throw_on_cap)
        throw NonConvergence("dykstra_project: no convergence after 100000 iterations");
    return z;
}

// Feasibility polish: points produced by Dykstra can sit a hair outside
// either constraint; one extra pair of projections is enough for 1e-9.
Vector snap_feasible(const ConstraintSet& set, const LocalBall& ball, Vector z) {
    const ConstraintSet ball_set{EuclideanBall{ball.center, ball.radius}};
    z = set.project(z);
    z = ball_set.project(z);
    return z;
}

struct ScoredPoint {
    Vector point;
    double value;
};

void consider(std::vector<ScoredPoint>& best, const Vector& g, const Vector& z) {
    best.push_back({z, g.dot(z)});
}

// Independent planar reference for box ∩ disc: boundary candidates plus a
// dense angular sweep of the circle with golden-section refinement around the
// best feasible angle.
OracleResult enumerate_box2d(const Box& box, const LocalBall& ball, const Vector& g) {
    const Vector& x = ball.center;
    const double t = ball.radius;
    auto feasible = [&](const Vector& z) {
        return z(0) >= box.lo(0) - 1e-12 && z(0) <= box.hi(0) + 1e-12 &&
               z(1) >= box.lo(1) - 1e-12 && z(1) <= box.hi(1) + 1e-12;
    };

    std::vector<ScoredPoint> cands;
    const double gn = g.norm();
    if (gn > 0) {
        Vector zfree = x - (t / gn) * g;
        if (feasible(zfree)) consider(cands, g, zfree);
    }
    for (double cx : {box.lo(0), box.hi(0)})
        for (double cy : {box.lo(1), box.hi(1)}) {
            Vector c(2);
            c << cx, cy;
            if ((c - x).norm() <= t + 1e-12) consider(cands, g, c);
        }
    for (int axis = 0; axis < 2; ++axis)
        for (double e : {box.lo(axis), box.hi(axis)}) {
            const double disc = t * t - (e - x(axis)) * (e - x(axis));
            if (disc < 0) continue;
            for (double sgn : {-1.0, 1.0}) {
                Vector z(2);
                z(axis) = e;
                z(1 - axis) = x(1 - axis) + sgn * std::sqrt(disc);
                if (feasible(z)) consider(cands, g, z);
            }
        }

    auto on_circle = [&](double theta) {
        Vector z(2);
        z << x(0) + t * std::cos(theta), x(1) + t * std::sin(theta);
        return z;
    };
    const int n_grid = 2048;
    double best_theta = 0;
    bool have_theta = false;
    double best_theta_val = 0;
    for (int j = 0; j < n_grid; ++j) {
        const double theta = 2 * M_PI * j / n_grid;
        const Vector z = on_circle(theta);
        if (!feasible(z)) continue;
        const double v = g.dot(z);
        if (!have_theta || v < best_theta_val) {
            have_theta = true;
            best_theta = theta;
            best_theta_val = v;
        }
    }
    if (have_theta) {
        consider(cands, g, on_circle(best_theta));
        double lo = best_theta - 2 * M_PI / n_grid;
        double hi = best_theta + 2 * M_PI / n_grid;
        for (int it = 0; it < 200; ++it) {
            const double m1 = lo + (hi - lo) / 3;
            const double m2 = hi - (hi - lo) / 3;
            if (g.dot(on_circle(m1)) <= g.dot(on_circle(m2))) hi = m2;
            else lo = m1;
        }
        const Vector z = on_circle(0.5 * (lo + hi));
        if (feasible(z)) consider(cands, g, z);
    }

    consider(cands, g, x);  // feasible fallback
    const ScoredPoint* best = &cands.front();
    for (const ScoredPoint& c : cands)
        if (c.value < best->value) best = &c;
    return OracleResult{best->point, best->value, OracleMethod::CandidateEnum2D};
}

}  // namespace

std::string oracle_method_name(OracleMethod m) {
    switch (m) {
        case OracleMethod::CandidateEnum2D: return "candidate_enum_2d";
        case OracleMethod::PenalizedProjection: return "penalized_projection";
        case OracleMethod::GridRefine: return "grid_refine";
    }
    return "unknown";
}

OracleResult oracle_local_lmo(const ConstraintSet& set, const LocalBall& ball, const Vector& g,
                              OracleStrategy strategy) {
    if (!std::isfinite(ball.radius) || ball.radius <= 0)
        throw BadRadius("oracle_local_lmo: radius must be finite and > 0");
    if (!set.contains(ball.center, 1e-9))
        throw InfeasibleCenter("oracle_local_lmo: ball center is not feasible");

    if (g.norm() == 0)
        return OracleResult{ball.center, 0.0, OracleMethod::PenalizedProjection};

    const bool enumerate = strategy == OracleStrategy::Auto;
    if (const auto* box = set.as<Box>(); box && box->lo.size() == 2 && enumerate)
        return enumerate_box2d(*box, ball, g);
    if (const auto* dmd = set.as<Diamond>(); dmd && enumerate) {
        Matrix S(2, 2);
        const double r = 1.0 / std::sqrt(2.0);
        S << r, -r, r, r;
        const double half = dmd->radius / std::sqrt(2.0);
        Box wbox{Vector::Constant(2, -half), Vector::Constant(2, half)};
        LocalBall wball{S.transpose() * (ball.center - dmd->center), ball.radius};
        OracleResult wres = enumerate_box2d(wbox, wball, S.transpose() * g);
        Vector z = dmd->center + S * wres.point;
        return OracleResult{z, g.dot(z), OracleMethod::CandidateEnum2D};
    }

    // Penalized projection: proj(center - lambda*g) solves
    // min <g,z> + ||z - center||^2 / (2 lambda) over the intersection, so a
    // geometric lambda sweep drives the regularization to zero.
    const Vector& x = ball.center;
    const double lambda_base = ball.radius / (g.norm() + 1e-300);
    Vector best = x;
    double best_val = g.dot(x);
    for (int p = 0; p <= 8; ++p) {
        const double lambda = std::pow(10.0, p) * lambda_base;
        const Vector z =
            snap_feasible(set, ball, dykstra_project(set, ball, x - lambda * g, 20000, false));
        const double v = g.dot(z);
        const bool stable = std::abs(v - best_val) <= 1e-12 * (1.0 + std::abs(best_val));
        if (v < best_val) {
            best = z;
            best_val = v;
        }
        if (p > 0 && stable) break;
    }

    // Refinement along the reachable face: projected linear descent with a
    // halving step. Every projection here starts within sigma*||g|| <= t of
    // the feasible region.
    OracleMethod tag = OracleMethod::PenalizedProjection;
    const double val_before = best_val;
    const double sigma_floor = 1e-15 * ball.radius / g.norm();
    double sigma = ball.radius / g.norm();
    Vector z = best;
    int steps_at_level = 0;
    while (sigma > sigma_floor) {
        const Vector znew = dykstra_project(set, ball, z - sigma * g);
        const double v = g.dot(znew);
        if (v < best_val - 1e-16 * (1.0 + std::abs(best_val)) && steps_at_level < 60) {
            best_val = v;
            z = znew;
            best = znew;
            ++steps_at_level;
        } else {
            sigma *= 0.5;
            steps_at_level = 0;
        }
    }
    if (best_val < val_before - 1e-12 * (1.0 + std::abs(val_before)))
        tag = OracleMethod::GridRefine;

    best = snap_feasible(set, ball, best);
    return OracleResult{best, g.dot(best), tag};
}

CounterexampleReport pgd_counterexample(double alpha, double C) {
    if (!(alpha > 0) || !(C > 0)) throw ConfigError("pgd_counterexample: alpha and C must be > 0");
    const Objective obj = make_counterexample(alpha);

    // R x R_+ realized as a huge box; only the v >= 0 face is ever active.
    Vector lo(2), hi(2);
    lo << -1e18, 0.0;
    hi << 1e18, 1e18;
    const ConstraintSet set = make_box(lo, hi);

    Vector x0(2);
    x0 << 1.0, 0.0;
    SolverConfig cfg;
    cfg.method = Method::PGD;
    cfg.rule = StepsizeRule{InverseL{}};  // gamma = 1/L = 2/(5 alpha)
    cfg.max_iters = 2;
    const Trajectory traj = run_pgd(set, obj, x0, cfg);

    const Vector grad_star = obj.optimum()->grad_star;
    CounterexampleReport rep;
    rep.x1 = traj.iterates[1];
    rep.grad_diff_sq_x0 = (obj.gradient(traj.iterates[0]) - grad_star).squaredNorm();
    const double d1 = (obj.gradient(traj.iterates[1]) - grad_star).squaredNorm();
    rep.min_grad_diff_sq = std::min(rep.grad_diff_sq_x0, d1);
    const double L = 2.5 * alpha;
    rep.hypothetical_bound = C * L * (x0 - obj.optimum()->x_star).squaredNorm() / 2.0;
    rep.violated = rep.min_grad_diff_sq > rep.hypothetical_bound;
    return rep;
}

namespace {

bool claim_applies(const std::string& claim, Method m) {
    auto in = [&](std::initializer_list<const char*> list) {
        for (const char* c : list)
            if (claim == c) return true;
        return false;
    };
    switch (m) {
        case Method::LocalLMO:
            return in({"fejer", "boundary_step", "radius_bound", "contraction", "smooth_rate",
                       "polyak_rate", "l0l1_rate", "nonconvex_descent"});
        case Method::NonsmoothLocalLMO:
            return in({"fejer", "boundary_step", "radius_bound", "polyak_rate"});
        case Method::StochasticLocalLMO:
            return in({"boundary_step"});
        case Method::PGD:
            return in({"pgd_descent", "pgd_fejer", "pgd_rate", "pgd_grad_diff"});
        case Method::FrankWolfe:
            return in({"fw_gap_nonneg"});
    }
    return false;
}

bool known_claim(const std::string& claim) {
    for (const char* c : {"fejer", "boundary_step", "radius_bound", "contraction", "smooth_rate",
                          "polyak_rate", "l0l1_rate", "nonconvex_descent", "pgd_descent",
                          "pgd_fejer", "pgd_rate", "pgd_grad_diff", "fw_gap_nonneg"})
        if (claim == c) return true;
    return false;
}

const OptimumInfo& claim_optimum(const Objective& obj, const std::string& claim) {
    if (!obj.optimum()) throw MissingConstant("claim " + claim + " requires optimum metadata");
    return *obj.optimum();
}

double need_const(const std::optional<double>& c, const std::string& claim, const char* name) {
    if (!c) throw MissingConstant("claim " + claim + " requires declared constant " + name);
    return *c;
}

ClaimResult evaluate_claim(const std::string& claim, const Trajectory& traj,
                           const Objective& obj) {
    ClaimResult res;
    res.claim = claim;
    const int K = traj.steps();
    const auto& xs = traj.iterates;
    const auto& ts = traj.radii_or_steps;
    double worst = -std::numeric_limits<double>::infinity();
    int checked = 0;
    auto track = [&](double lhs, double rhs) {
        worst = std::max(worst, lhs - rhs);
        ++checked;
    };

    if (claim == "fejer") {
        const OptimumInfo& opt = claim_optimum(obj, claim);
        for (int k = 0; k < K; ++k) {
            const double dk = (xs[k] - opt.x_star).squaredNorm();
            const double dk1 = (xs[k + 1] - opt.x_star).squaredNorm();
            track(dk1, dk - ts[k] * ts[k] + 1e-10 * (1.0 + dk));
        }
    } else if (claim == "boundary_step") {
        for (int k = 0; k < K; ++k) {
            if (ts[k] == 0) continue;  // stationary zero-radius record
            const double step = (xs[k + 1] - xs[k]).norm();
            track(std::abs(step - ts[k]), 1e-9 * std::max(1.0, ts[k]));
        }
    } else if (claim == "radius_bound") {
        const OptimumInfo& opt = claim_optimum(obj, claim);
        for (int k = 0; k < K; ++k) track(ts[k], (xs[k] - opt.x_star).norm() + 1e-9);
    } else if (claim == "contraction") {
        const OptimumInfo& opt = claim_optimum(obj, claim);
        const double L = need_const(obj.constants().L, claim, "L");
        const double mu = need_const(obj.constants().mu, claim, "mu");
        const double rho = (L - mu) / (L + mu);
        for (int k = 0; k < K; ++k)
            track((xs[k + 1] - opt.x_star).norm(), rho * (xs[k] - opt.x_star).norm() + 1e-9);
    } else if (claim == "smooth_rate") {
        const OptimumInfo& opt = claim_optimum(obj, claim);
        const double L = need_const(obj.constants().L, claim, "L");
        const double R0sq = (xs[0] - opt.x_star).squaredNorm();
        double running_min = std::numeric_limits<double>::infinity();
        for (int k = 0; k < K; ++k) {
            running_min = std::min(running_min,
                                   (obj.gradient(xs[k]) - opt.grad_star).squaredNorm());
            track(running_min, L * L * R0sq / (k + 1) + 1e-8);
        }
    } else if (claim == "polyak_rate") {
        const OptimumInfo& opt = claim_optimum(obj, claim);
        const double G = need_const(obj.constants().G, claim, "G");
        const double R0 = (xs[0] - opt.x_star).norm();
        double sq_sum = 0;
        Vector avg = Vector::Zero(xs[0].size());
        for (int k = 0; k < K; ++k) {
            const double gap = obj.value(xs[k]) - opt.f_star;
            sq_sum += gap * gap;
            avg += xs[k];
            const double Kd = k + 1;
            track(sq_sum / Kd, G * G * R0 * R0 / Kd + 1e-8);
            track(obj.value(avg / Kd) - opt.f_star, G * R0 / std::sqrt(Kd) + 1e-8);
        }
    } else if (claim == "l0l1_rate") {
        const OptimumInfo& opt = claim_optimum(obj, claim);
        const double L0 = need_const(obj.constants().L0, claim, "L0");
        const double L1 = need_const(obj.constants().L1, claim, "L1");
        const double R0sq = (xs[0] - opt.x_star).squaredNorm();
        const double cstar = L0 + L1 * opt.grad_star.norm();
        double acc = 0;
        for (int k = 0; k < K; ++k) {
            const Vector gk = obj.gradient(xs[k]);
            const double dn = (gk - opt.grad_star).norm();
            const double a = 0.5 * (dn / (L0 + L1 * gk.norm()) + dn / cstar);
            acc += a * a;
            track(acc / (k + 1), R0sq / (k + 1) + 1e-8);
        }
    } else if (claim == "nonconvex_descent") {
        if (!traj.grad_map_gamma || traj.grad_map_norm.size() != xs.size())
            throw MissingConstant("claim nonconvex_descent requires recorded gradient-mapping norms");
        const double gamma = *traj.grad_map_gamma;
        for (int k = 0; k < K; ++k) {
            const double gm = traj.grad_map_norm[k];
            track(obj.value(xs[k + 1]),
                  obj.value(xs[k]) - 0.5 * gamma * gm * gm + 1e-10);
        }
    } else if (claim == "pgd_descent") {
        for (int k = 0; k < K; ++k) {
            const double gamma = ts[k];
            const double gm = traj.grad_map_norm[k];
            track(obj.value(xs[k + 1]), obj.value(xs[k]) - 0.5 * gamma * gm * gm + 1e-9);
        }
    } else if (claim == "pgd_fejer") {
        const OptimumInfo& opt = claim_optimum(obj, claim);
        for (int k = 0; k < K; ++k) {
            const double dk = (xs[k] - opt.x_star).squaredNorm();
            const double dk1 = (xs[k + 1] - opt.x_star).squaredNorm();
            track(dk1, dk - 2 * ts[k] * (obj.value(xs[k + 1]) - opt.f_star) + 1e-9 * (1.0 + dk));
        }
    } else if (claim == "pgd_rate") {
        const OptimumInfo& opt = claim_optimum(obj, claim);
        const double R0sq = (xs[0] - opt.x_star).squaredNorm();
        for (int k = 1; k <= K; ++k)
            track(obj.value(xs[k]) - opt.f_star, R0sq / (2 * ts[k - 1] * k) + 1e-9);
    } else if (claim == "pgd_grad_diff") {
        const OptimumInfo& opt = claim_optimum(obj, claim);
        const double R0sq = (xs[0] - opt.x_star).squaredNorm();
        double running_min = std::numeric_limits<double>::infinity();
        for (int k = 1; k <= K; ++k) {
            running_min = std::min(
                running_min, (obj.gradient(xs[k - 1]) - opt.grad_star).squaredNorm());
            const double gamma = ts[k - 1];
            track(running_min, R0sq / (gamma * gamma * k) + 1e-9);
        }
    } else {  // fw_gap_nonneg
        if (traj.fw_gap.size() != xs.size())
            throw MissingConstant("claim fw_gap_nonneg requires recorded FW gaps");
        for (size_t k = 0; k < traj.fw_gap.size(); ++k) track(-traj.fw_gap[k], 1e-12);
    }

    res.checked = checked;
    res.max_violation = checked ? worst : 0.0;
    res.pass = res.max_violation <= 0.0;
    return res;
}

}  // namespace

std::vector<ClaimResult> check_trajectory(const Trajectory& traj, const Objective& obj,
                                          const std::vector<std::string>& claims) {
    std::vector<ClaimResult> out;
    for (const std::string& claim : claims) {
        if (!known_claim(claim)) throw UnknownClaim("unknown claim: " + claim);
        if (!claim_applies(claim, traj.method))
            throw UnknownClaim("claim " + claim + " does not apply to method " +
                               method_name(traj.method));
        out.push_back(evaluate_claim(claim, traj, obj));
    }
    return out;
}

}  // namespace locallmo
