#include "locallmo/objectives.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>

namespace locallmo {

namespace {

void require_dim(const Vector& x, int d, const char* op) {
    if (static_cast<int>(x.size()) != d)
        throw DimensionMismatch(std::string(op) + ": vector has dimension " +
                                std::to_string(x.size()) + ", objective has dimension " +
                                std::to_string(d));
}

Vector counterexample_gradient(double alpha, const Vector& x) {
    Vector g(2);
    g << 0.5 * alpha * x(0) + alpha * x(1), alpha * x(0) + 2.0 * alpha * x(1) + 1.0;
    return g;
}

}  // namespace

std::string Objective::kind() const {
    return std::visit(
        [](const auto& f) -> std::string {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, Quadratic>) return "quadratic";
            else if constexpr (std::is_same_v<T, PowerThreeHalves>) return "power_three_halves";
            else if constexpr (std::is_same_v<T, CounterexampleQuadratic>) return "counterexample_quadratic";
            else if constexpr (std::is_same_v<T, FiniteSum>) return "finite_sum";
            else if constexpr (std::is_same_v<T, QuarticTwoWell>) return "quartic_two_well";
            else return "abs_value";
        },
        v_);
}

int Objective::dim() const {
    return std::visit(
        [](const auto& f) -> int {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, Quadratic>) return static_cast<int>(f.Q.rows());
            else if constexpr (std::is_same_v<T, PowerThreeHalves>) return 1;
            else if constexpr (std::is_same_v<T, CounterexampleQuadratic>) return 2;
            else if constexpr (std::is_same_v<T, FiniteSum>)
                return f.components.empty() ? 0 : f.components.front().dim();
            else if constexpr (std::is_same_v<T, QuarticTwoWell>) return f.dim;
            else return 1;
        },
        v_);
}

double Objective::value(const Vector& x) const {
    require_dim(x, dim(), "value");
    return std::visit(
        [&](const auto& f) -> double {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, Quadratic>) {
                return 0.5 * x.dot(f.Q * x) + f.q.dot(x) + f.c0;
            } else if constexpr (std::is_same_v<T, PowerThreeHalves>) {
                if (x(0) < 0) throw DomainError("power_three_halves: x must be >= 0");
                return std::pow(x(0), 1.5);
            } else if constexpr (std::is_same_v<T, CounterexampleQuadratic>) {
                const double s = x(0) + 2.0 * x(1);
                return 0.25 * f.alpha * s * s + x(1);
            } else if constexpr (std::is_same_v<T, FiniteSum>) {
                double acc = 0;
                for (const Objective& c : f.components) acc += c.value(x);
                return acc / static_cast<double>(f.components.size());
            } else if constexpr (std::is_same_v<T, QuarticTwoWell>) {
                double acc = 0;
                for (int i = 0; i < x.size(); ++i) {
                    const double w = x(i) * x(i) - 1.0;
                    acc += w * w;
                }
                return acc;
            } else {
                return std::abs(x(0));
            }
        },
        v_);
}

Vector Objective::gradient(const Vector& x) const {
    require_dim(x, dim(), "gradient");
    return std::visit(
        [&](const auto& f) -> Vector {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, Quadratic>) {
                return Vector(f.Q * x + f.q);
            } else if constexpr (std::is_same_v<T, PowerThreeHalves>) {
                if (x(0) < 0) throw DomainError("power_three_halves: x must be >= 0");
                Vector g(1);
                g << 1.5 * std::sqrt(x(0));
                return g;
            } else if constexpr (std::is_same_v<T, CounterexampleQuadratic>) {
                return counterexample_gradient(f.alpha, x);
            } else if constexpr (std::is_same_v<T, FiniteSum>) {
                Vector g = Vector::Zero(x.size());
                for (const Objective& c : f.components) g += c.gradient(x);
                return Vector(g / static_cast<double>(f.components.size()));
            } else if constexpr (std::is_same_v<T, QuarticTwoWell>) {
                Vector g(x.size());
                for (int i = 0; i < x.size(); ++i) g(i) = 4.0 * x(i) * (x(i) * x(i) - 1.0);
                return g;
            } else {
                if (x(0) == 0) throw DomainError("abs_value: not differentiable at 0");
                Vector g(1);
                g << (x(0) > 0 ? 1.0 : -1.0);
                return g;
            }
        },
        v_);
}

Vector Objective::subgradient(const Vector& x) const {
    require_dim(x, dim(), "subgradient");
    if (const auto* f = as<AbsValue>()) {
        (void)f;
        Vector g(1);
        g << (x(0) > 0 ? 1.0 : (x(0) < 0 ? -1.0 : 0.0));
        return g;
    }
    if (const auto* f = as<FiniteSum>()) {
        Vector g = Vector::Zero(x.size());
        for (const Objective& c : f->components) g += c.subgradient(x);
        return Vector(g / static_cast<double>(f->components.size()));
    }
    return gradient(x);
}

std::vector<std::string> Objective::validate() const {
    std::vector<std::string> out;
    auto bad = [&](const std::string& msg) { out.push_back(kind() + ": " + msg); };
    if (const auto* f = as<Quadratic>()) {
        if (f->Q.rows() != f->Q.cols() || f->Q.rows() != f->q.size()) {
            bad("shape mismatch between Q and q");
            return out;
        }
        if ((f->Q - f->Q.transpose()).cwiseAbs().maxCoeff() > 1e-12) bad("Q is not symmetric");
        Eigen::SelfAdjointEigenSolver<Matrix> es(f->Q, Eigen::EigenvaluesOnly);
        const double lmin = es.eigenvalues().minCoeff();
        const double lmax = es.eigenvalues().maxCoeff();
        if (constants_.mu && lmin < *constants_.mu - 1e-9)
            bad("declared mu exceeds the smallest eigenvalue of Q");
        if (constants_.L && lmax > *constants_.L + 1e-9)
            bad("declared L is below the largest eigenvalue of Q");
    }
    if (const auto* f = as<FiniteSum>()) {
        if (f->components.empty()) bad("finite sum needs at least one component");
        for (const Objective& c : f->components) {
            if (c.dim() != dim()) bad("components do not share a dimension");
            for (const std::string& v : c.validate()) out.push_back("component " + v);
        }
    }
    if (const auto* f = as<QuarticTwoWell>()) {
        if (f->dim < 1) bad("dimension must be >= 1");
    }
    if (const auto* f = as<CounterexampleQuadratic>()) {
        if (!(f->alpha > 0)) bad("alpha must be > 0");
    }
    if (optimum_) {
        if (optimum_->x_star.size() != dim() || optimum_->grad_star.size() != dim()) {
            bad("optimum fields have wrong dimension");
        } else {
            // subgradient coincides with the gradient wherever f is
            // differentiable and stays defined at kinks
            if ((subgradient(optimum_->x_star) - optimum_->grad_star).norm() > 1e-9)
                bad("grad_star inconsistent with gradient(x_star)");
            if (std::abs(value(optimum_->x_star) - optimum_->f_star) > 1e-9)
                bad("f_star inconsistent with value(x_star)");
        }
    }
    return out;
}

double fd_gradient_check(const Objective& obj, const Vector& x, double h) {
    if (!(h > 0)) throw DomainError("fd_gradient_check: h must be > 0");
    const Vector g = obj.gradient(x);
    double worst = 0;
    for (int i = 0; i < x.size(); ++i) {
        Vector xp = x, xm = x;
        xp(i) += h;
        xm(i) -= h;
        const double fd = (obj.value(xp) - obj.value(xm)) / (2 * h);
        worst = std::max(worst, std::abs(fd - g(i)) / std::max(1.0, std::abs(g(i))));
    }
    return worst;
}

namespace {

bool in_box_tol(const Box& box, const Vector& z) {
    for (int i = 0; i < z.size(); ++i)
        if (z(i) < box.lo(i) - 1e-12 || z(i) > box.hi(i) + 1e-12) return false;
    return true;
}

// Exact active-set enumeration over a 2-D box: interior stationary point,
// four edge-restricted stationary points, four corners.
OptimumInfo quadratic_optimum_on_box2d(const Box& box, const Quadratic& f) {
    std::vector<Vector> cands;
    Eigen::Matrix2d Q = f.Q;
    Eigen::Vector2d q = f.q;

    Eigen::Vector2d zu = Q.ldlt().solve(-q);
    cands.emplace_back(zu);

    for (int j = 0; j < 2; ++j) {
        const int i = 1 - j;
        for (double e : {box.lo(j), box.hi(j)}) {
            if (Q(i, i) <= 0) continue;
            Vector z(2);
            z(j) = e;
            z(i) = -(Q(i, j) * e + q(i)) / Q(i, i);
            cands.push_back(z);
        }
    }
    for (double cx : {box.lo(0), box.hi(0)})
        for (double cy : {box.lo(1), box.hi(1)}) {
            Vector c(2);
            c << cx, cy;
            cands.push_back(c);
        }

    Objective probe{Quadratic{f.Q, f.q, f.c0}};
    bool found = false;
    Vector best;
    double best_val = 0;
    for (const Vector& z : cands) {
        if (!in_box_tol(box, z)) continue;
        const double v = probe.value(z);
        if (!found || v < best_val) {
            found = true;
            best = z;
            best_val = v;
        }
    }
    return OptimumInfo{best, best_val, probe.gradient(best)};
}

// Trust-region style multiplier bisection for min quadratic over a ball:
// boundary solutions satisfy (Q + kappa I) z = kappa c - q with
// ||z(kappa) - c|| decreasing in kappa.
OptimumInfo quadratic_optimum_on_ball(const EuclideanBall& ball, const Quadratic& f) {
    Objective probe{Quadratic{f.Q, f.q, f.c0}};
    Vector zu = f.Q.ldlt().solve(-f.q);
    if ((zu - ball.center).norm() <= ball.radius)
        return OptimumInfo{zu, probe.value(zu), probe.gradient(zu)};

    const int d = static_cast<int>(f.q.size());
    auto z_of = [&](double kappa) -> Vector {
        Matrix A = f.Q + kappa * Matrix::Identity(d, d);
        return A.ldlt().solve(kappa * ball.center - f.q);
    };
    double lo = 0.0, hi = 1.0;
    while ((z_of(hi) - ball.center).norm() > ball.radius) hi *= 2;
    for (int it = 0; it < 300; ++it) {
        const double mid = 0.5 * (lo + hi);
        ((z_of(mid) - ball.center).norm() > ball.radius ? lo : hi) = mid;
    }
    Vector z = z_of(hi);
    return OptimumInfo{z, probe.value(z), probe.gradient(z)};
}

}  // namespace

OptimumInfo quadratic_optimum_on(const ConstraintSet& set, const Quadratic& f) {
    if (set.as<WholeSpace>()) {
        Objective probe{Quadratic{f.Q, f.q, f.c0}};
        Vector z = f.Q.ldlt().solve(-f.q);
        return OptimumInfo{z, probe.value(z), probe.gradient(z)};
    }
    if (const auto* b = set.as<Box>()) {
        if (b->lo.size() != 2) throw ConfigError("quadratic_optimum_on: box solver is 2-D only");
        return quadratic_optimum_on_box2d(*b, f);
    }
    if (const auto* b = set.as<EuclideanBall>()) return quadratic_optimum_on_ball(*b, f);
    if (const auto* dmd = set.as<Diamond>()) {
        // Change of basis onto the rotated box: h(w) = f(c + S w).
        Matrix S(2, 2);
        const double r = 1.0 / std::sqrt(2.0);
        S << r, -r, r, r;
        Quadratic h;
        h.Q = S.transpose() * f.Q * S;
        h.q = S.transpose() * (f.Q * dmd->center + f.q);
        h.c0 = 0.5 * dmd->center.dot(f.Q * dmd->center) + f.q.dot(dmd->center) + f.c0;
        const double half = dmd->radius / std::sqrt(2.0);
        Box wb{Vector::Constant(2, -half), Vector::Constant(2, half)};
        OptimumInfo wopt = quadratic_optimum_on_box2d(wb, h);
        Objective probe{Quadratic{f.Q, f.q, f.c0}};
        Vector z = dmd->center + S * wopt.x_star;
        return OptimumInfo{z, probe.value(z), probe.gradient(z)};
    }
    throw ConfigError("quadratic_optimum_on: unsupported set variant " + set.kind());
}

Objective make_benchmark_quadratic() {
    // R diag(1, 100) R^T for a rotation by pi/6: entries print as
    // [[25.75, -42.86825749], [-42.86825749, 75.25]] while the spectrum stays
    // {1, 100} to machine precision.
    Matrix R(2, 2);
    const double c = std::cos(M_PI / 6), s = std::sin(M_PI / 6);
    R << c, -s, s, c;
    Matrix D = Matrix::Zero(2, 2);
    D(0, 0) = 1.0;
    D(1, 1) = 100.0;
    Matrix Q = R * D * R.transpose();
    Q = 0.5 * (Q + Q.transpose());
    Objective obj{Quadratic{Q, Vector::Zero(2), 0.0}};
    obj.constants().L = 100.0;
    obj.constants().mu = 1.0;
    obj.constants().strictly_convex = true;
    obj.optimum() = quadratic_optimum_on(make_box2d(2, 2, 4, 4), *obj.as<Quadratic>());
    return obj;
}

Objective make_counterexample(double alpha) {
    Objective obj{CounterexampleQuadratic{alpha}};
    obj.constants().L = 2.5 * alpha;
    OptimumInfo opt;
    opt.x_star = Vector::Zero(2);
    opt.f_star = 0.0;
    opt.grad_star = counterexample_gradient(alpha, opt.x_star);
    obj.optimum() = opt;
    return obj;
}

Objective make_power_three_halves() {
    Objective obj{PowerThreeHalves{}};
    obj.constants().G = 1.5;
    OptimumInfo opt;
    opt.x_star = Vector::Zero(1);
    opt.f_star = 0.0;
    opt.grad_star = Vector::Zero(1);
    obj.optimum() = opt;
    return obj;
}

Objective make_abs_value() {
    Objective obj{AbsValue{}};
    obj.constants().G = 1.0;
    OptimumInfo opt;
    opt.x_star = Vector::Zero(1);
    opt.f_star = 0.0;
    opt.grad_star = Vector::Zero(1);
    obj.optimum() = opt;
    return obj;
}

Objective make_two_well_on_box(const Box& box) {
    const int d = static_cast<int>(box.lo.size());
    Objective obj{QuarticTwoWell{d}};

    // Separable: per-coordinate minimum of (z^2-1)^2 over [lo, hi] is at an
    // endpoint or at +-1 when inside; |f''| = |12 z^2 - 4| peaks at an
    // endpoint or z = 0.
    Vector xs(d);
    double L = 0;
    for (int i = 0; i < d; ++i) {
        double best_z = box.lo(i);
        auto well = [](double z) { return (z * z - 1) * (z * z - 1); };
        for (double z : {box.hi(i), -1.0, 1.0})
            if (z >= box.lo(i) && z <= box.hi(i) && well(z) < well(best_z)) best_z = z;
        xs(i) = best_z;
        double curv = std::max(std::abs(12 * box.lo(i) * box.lo(i) - 4),
                               std::abs(12 * box.hi(i) * box.hi(i) - 4));
        if (box.lo(i) <= 0 && box.hi(i) >= 0) curv = std::max(curv, 4.0);
        L = std::max(L, curv);
    }
    obj.constants().L = L;
    obj.optimum() = OptimumInfo{xs, obj.value(xs), obj.gradient(xs)};
    return obj;
}

}  // namespace locallmo
