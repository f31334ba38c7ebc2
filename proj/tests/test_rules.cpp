#include <doctest.h>

#include "locallmo/rules.hpp"
#include "test_support.hpp"

using namespace locallmo;
using namespace locallmo::testing;

namespace {

Vector vec2(double a, double b) {
    Vector v(2);
    v << a, b;
    return v;
}

Vector vec1(double a) {
    Vector v(1);
    v << a;
    return v;
}

// 1-D quadratic f(x) = x^2 / 2 with optimum at 0.
Objective half_square() {
    Matrix Q(1, 1);
    Q << 1.0;
    Objective obj{Quadratic{Q, Vector::Zero(1), 0.0}};
    obj.constants().L = 1.0;
    obj.constants().mu = 1.0;
    obj.optimum() = OptimumInfo{Vector::Zero(1), 0.0, Vector::Zero(1)};
    return obj;
}

}  // namespace

TEST_CASE("radius formulas") {
    const Objective bench = make_benchmark_quadratic();
    const ConstraintSet box = make_box2d(2, 2, 4, 4);

    CHECK(strong_convexity_theta(1, 100) == doctest::Approx(0.198020).epsilon(1e-6));
    CHECK(strong_convexity_theta(1, 100) == 20.0 / 101.0);

    // theta * ||x - x*||
    const Vector x0 = vec2(4, 4);
    const double t = radius(StronglyConvexTheta{}, bench, box, x0, 0);
    CHECK(t == doctest::Approx((20.0 / 101.0) * (x0 - bench.optimum()->x_star).norm())
                   .epsilon(1e-15));

    // Polyak on f(x) = x^2/2 at x = 2: (2 - 0) / 2 = 1
    const Objective sq = half_square();
    const ConstraintSet line{WholeSpace{1}};
    CHECK(radius(PolyakRadius{}, sq, line, vec1(2.0), 0) == doctest::Approx(1.0).epsilon(1e-15));

    // gradient difference vanishes at the optimum
    CHECK(radius(SmoothGradDiff{}, bench, box, bench.optimum()->x_star, 0) <= 1e-12);

    CHECK(radius(GeometricSchedule{0.7, 0.85}, bench, box, x0, 0) == 0.7);
    CHECK(radius(GeometricSchedule{0.7, 0.85}, bench, box, x0, 2) ==
          doctest::Approx(0.7 * 0.85 * 0.85).epsilon(1e-15));
    CHECK(radius(ConstantRadius{0.3}, bench, box, x0, 5) == 0.3);
}

TEST_CASE("stepsize formulas") {
    const Objective bench = make_benchmark_quadratic();
    const Vector x = vec2(3, 3);
    CHECK(stepsize(InverseL{}, bench, x, 0) == doctest::Approx(0.01).epsilon(1e-15));
    CHECK(stepsize(FWClassic{}, bench, x, 0) == 1.0);
    CHECK(stepsize(FWClassic{}, bench, x, 2) == 0.5);
    CHECK(stepsize(TwoOverLplusMu{}, bench, x, 0) == doctest::Approx(2.0 / 101.0).epsilon(1e-15));
    CHECK(stepsize(ConstantGamma{0.25}, bench, x, 9) == 0.25);

    Objective asym = make_benchmark_quadratic();
    asym.constants().L0 = 100.0;
    asym.constants().L1 = 0.5;
    const double gn = asym.gradient(x).norm();
    const double gs = asym.optimum()->grad_star.norm();
    CHECK(stepsize(PGDAsymL0L1{}, asym, x, 0) ==
          doctest::Approx(0.5 * (1 / (100 + 0.5 * gn) + 1 / (100 + 0.5 * gs))).epsilon(1e-14));
}

TEST_CASE("missing requirements are reported before a run") {
    Objective bare{QuarticTwoWell{2}};
    CHECK_THROWS_AS(check_rule_requirements(RadiusRule{StronglyConvexTheta{}}, bare),
                    MissingConstant);
    CHECK_THROWS_AS(check_rule_requirements(RadiusRule{PolyakRadius{}}, bare), MissingConstant);
    CHECK_THROWS_AS(check_rule_requirements(RadiusRule{AsymL0L1{}}, bare), MissingConstant);
    CHECK_THROWS_AS(check_rule_requirements(StepsizeRule{InverseL{}}, bare), MissingConstant);
    CHECK_THROWS_AS(check_rule_requirements(RadiusRule{GeometricSchedule{1.0, 1.5}}, bare),
                    ConfigError);

    // Polyak with a zero gradient away from the optimum signals stationarity
    Objective flat = make_two_well_on_box(Box{Vector::Constant(1, -2.0), Vector::Constant(1, 2.0)});
    const ConstraintSet line{WholeSpace{1}};
    CHECK_THROWS_AS(radius(PolyakRadius{}, flat, line, vec1(0.0), 0), ZeroDenominator);
}

TEST_CASE("gradient mapping") {
    const Objective bench = make_benchmark_quadratic();

    // whole space: G_gamma = grad f for any gamma
    const ConstraintSet space{WholeSpace{2}};
    const Vector x = vec2(1, 2);
    for (double gamma : {0.01, 0.3, 2.0})
        CHECK((gradient_mapping(space, bench, x, gamma) - bench.gradient(x)).norm() < 1e-12);

    // vanishes at the constrained minimizer
    const ConstraintSet box = make_box2d(2, 2, 4, 4);
    CHECK(gradient_mapping(box, bench, bench.optimum()->x_star, 0.01).norm() <= 1e-8);

    // f = x^2/2 over [1,2]: x = 1 is stationary
    const Objective sq = half_square();
    Vector lo(1), hi(1);
    lo << 1.0;
    hi << 2.0;
    const ConstraintSet seg = make_box(lo, hi);
    CHECK(gradient_mapping(seg, sq, vec1(1.0), 1.0).norm() == 0.0);

    CHECK_THROWS_AS(gradient_mapping(box, bench, x, 0.0), BadRadius);
}

TEST_CASE("gradient mapping radius reduces to grad norm over L on the whole space") {
    const Objective bench = make_benchmark_quadratic();
    const ConstraintSet space{WholeSpace{2}};
    const Vector x = vec2(0.5, -1.0);
    const double L = *bench.constants().L;
    CHECK(radius(GradientMappingRadius{1.0 / L}, bench, space, x, 0) ==
          doctest::Approx(bench.gradient(x).norm() / L).epsilon(1e-14));
}

TEST_CASE("admissibility of the prescribed radii on random instances") {
    Rng rng(17);
    int checked = 0;
    while (checked < 300) {
        const std::string family = set_families()[rng() % set_families().size()];
        const int d = family == "diamond" ? 2 : 1 + static_cast<int>(rng() % 3);
        const SetInstance inst = random_set_instance(rng, family, d);
        const double mu = uniform(rng, 0.5, 2.0);
        const double L = uniform(rng, 5.0, 50.0);
        const Objective obj = random_quadratic_with_optimum(rng, inst, mu, L);
        const Vector x = random_feasible_point(rng, inst.set);
        const Vector dg = obj.gradient(x) - obj.optimum()->grad_star;
        const Vector dx = x - obj.optimum()->x_star;
        if (dg.norm() < 1e-9 || dx.norm() < 1e-9) continue;
        ++checked;

        // Type-II bound for the strongly convex rule
        const double t2 = radius(StronglyConvexTheta{}, obj, inst.set, x, 0);
        CHECK(t2 <= dg.dot(dx) / dg.norm() + 1e-10);

        // Type-I bound for the Polyak rule
        const Vector g = obj.gradient(x);
        if (g.norm() > 1e-9) {
            const double tp = radius(PolyakRadius{}, obj, inst.set, x, 0);
            CHECK(tp <= g.dot(dx) / g.norm() + 1e-10);
            CHECK(tp <= dx.norm() + 1e-9);
        }

        // smooth rule is Type-II admissible by cocoercivity
        const double ts = radius(SmoothGradDiff{}, obj, inst.set, x, 0);
        CHECK(ts <= dg.dot(dx) / dg.norm() + 1e-10);
        CHECK(ts <= dx.norm() + 1e-9);
        CHECK(t2 <= dx.norm() + 1e-9);
    }
}

TEST_CASE("optimum-aware geometric schedule") {
    const Objective bench = make_benchmark_quadratic();
    const Vector x0 = vec2(4, 4);
    const GeometricSchedule sched = make_geometric_from_optimum(bench, x0, 0.85);
    CHECK(sched.q == 0.85);
    CHECK(sched.c == doctest::Approx((20.0 / 101.0) * (x0 - bench.optimum()->x_star).norm())
                         .epsilon(1e-15));
}
