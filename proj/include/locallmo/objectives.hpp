#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "locallmo/geometry.hpp"

namespace locallmo {

class Objective;

// f(z) = 1/2 z^T Q z + q^T z + c0, Q symmetric.
struct Quadratic {
    Matrix Q;
    Vector q;
    double c0 = 0.0;
};

// f(x) = x^(3/2) on [0,1]; gradient (3/2)sqrt(x), one-sided derivative 0 at 0.
// Convex with 3/2-bounded gradients but no global smoothness constant.
struct PowerThreeHalves {};

// f_alpha(u,v) = (alpha/4)(u+2v)^2 + v. Convex, L = 5*alpha/2, with constrained
// minimizer (0,0) over R x R+; the working example where PGD's
// gradient-difference bound cannot scale linearly in L.
struct CounterexampleQuadratic {
    double alpha = 1.0;
};

// f(x) = (1/n) sum f_i(x), uniform weights. Components keep their own
// constants and optimum metadata for the stochastic radius rules.
struct FiniteSum {
    std::vector<Objective> components;
};

// f(z) = sum_i (z_i^2 - 1)^2: smooth, non-convex, separable two-well.
struct QuarticTwoWell {
    int dim = 2;
};

// f(x) = |x| on R: convex, non-differentiable at 0, subgradient selection 0.
struct AbsValue {};

// Declared analytic constants. Never estimated; rules throw MissingConstant
// when a required field is absent.
struct ObjectiveConstants {
    std::optional<double> L;
    std::optional<double> mu;
    std::optional<double> L0;
    std::optional<double> L1;
    std::optional<double> G;
    bool strictly_convex = false;
};

// Known constrained optimum (x*, f(x*), grad f(x*)) used by the
// theoretically prescribed radius rules and by trajectory metrics.
struct OptimumInfo {
    Vector x_star;
    double f_star = 0.0;
    Vector grad_star;
};

class Objective {
public:
    using Variant = std::variant<Quadratic, PowerThreeHalves, CounterexampleQuadratic, FiniteSum,
                                 QuarticTwoWell, AbsValue>;

    Objective(Variant v) : v_(std::move(v)) {}  // NOLINT: implicit by design

    const Variant& variant() const { return v_; }

    template <class T>
    const T* as() const {
        return std::get_if<T>(&v_);
    }

    std::string kind() const;
    int dim() const;

    double value(const Vector& x) const;
    Vector gradient(const Vector& x) const;

    // A member of the subdifferential; equals gradient() wherever f is
    // differentiable. AbsValue selects 0 at the kink.
    Vector subgradient(const Vector& x) const;

    ObjectiveConstants& constants() { return constants_; }
    const ObjectiveConstants& constants() const { return constants_; }

    std::optional<OptimumInfo>& optimum() { return optimum_; }
    const std::optional<OptimumInfo>& optimum() const { return optimum_; }

    // Checks the declared metadata against the analytic form: Q symmetric to
    // 1e-12, declared mu/L consistent with the spectrum to 1e-9, optimum
    // fields self-consistent to 1e-9, finite-sum components of equal
    // dimension.
    std::vector<std::string> validate() const;

private:
    Variant v_;
    ObjectiveConstants constants_;
    std::optional<OptimumInfo> optimum_;
};

// Max componentwise error between the analytic gradient and central finite
// differences with step h, relative to max(1, |g_i|).
double fd_gradient_check(const Objective& obj, const Vector& x, double h);

// The 2-D benchmark quadratic: rotated diagonal with eigenvalues {1, 100},
// declared L=100, mu=1, and the optimum over the box [2,4]^2 attached
// (computed by exact active-set enumeration, x* ~ (3.3295734, 2)).
Objective make_benchmark_quadratic();

// f_alpha with L = 5*alpha/2 declared and the R x R+ optimum
// (x* = (0,0), f* = 0, grad* = (0,1)) attached.
Objective make_counterexample(double alpha);

// PowerThreeHalves with G = 3/2 declared and the [0,1] optimum attached.
Objective make_power_three_halves();

Objective make_abs_value();

// Two-well quartic with smoothness constant and constrained optimum over the
// given box attached (both analytic: the Hessian is diagonal and the
// objective separable).
Objective make_two_well_on_box(const Box& box);

// Constrained minimizer of a quadratic over a supported set (whole space,
// 2-D box, Euclidean ball, diamond), exact up to multiplier bisection.
OptimumInfo quadratic_optimum_on(const ConstraintSet& set, const Quadratic& f);

}  // namespace locallmo
