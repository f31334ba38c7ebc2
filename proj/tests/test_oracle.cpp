#include <doctest.h>

#include "locallmo/oracle.hpp"
#include "test_support.hpp"

using namespace locallmo;
using namespace locallmo::testing;

namespace {

Vector vec2(double a, double b) {
    Vector v(2);
    v << a, b;
    return v;
}

}  // namespace

TEST_CASE("oracle worked cases") {
    const ConstraintSet box = make_box2d(2, 2, 4, 4);
    const OracleResult r = oracle_local_lmo(box, LocalBall{vec2(4, 4), 0.5}, vec2(0, 1));
    CHECK((r.point - vec2(4, 3.5)).norm() < 1e-12);
    CHECK(r.objective == doctest::Approx(3.5).epsilon(1e-12));
    CHECK(r.method_tag == OracleMethod::CandidateEnum2D);

    const ConstraintSet space{WholeSpace{2}};
    const OracleResult r2 = oracle_local_lmo(space, LocalBall{Vector::Zero(2), 1.0}, vec2(3, 4));
    CHECK((r2.point - vec2(-0.6, -0.8)).norm() < 1e-9);

    Vector c = vec2(1, -1);
    const ConstraintSet singleton{Singleton{c}};
    const OracleResult r3 = oracle_local_lmo(singleton, LocalBall{c, 2.0}, vec2(5, 5));
    CHECK((r3.point - c).norm() < 1e-12);

    CHECK_THROWS_AS(oracle_local_lmo(box, LocalBall{vec2(0, 0), 1.0}, vec2(1, 0)),
                    InfeasibleCenter);
    CHECK_THROWS_AS(oracle_local_lmo(box, LocalBall{vec2(3, 3), 0.0}, vec2(1, 0)), BadRadius);
}

TEST_CASE("oracle self-consistency: enumeration vs penalized projection on planar boxes") {
    Rng rng(41);
    for (int rep = 0; rep < 60; ++rep) {
        const SetInstance inst = random_set_instance(rng, "box", 2);
        const Vector center = random_feasible_point(rng, inst.set);
        const LocalBall ball{center, uniform(rng, 0.1, 1.5)};
        const Vector g = gaussian_vector(rng, 2);
        const OracleResult enumerated = oracle_local_lmo(inst.set, ball, g);
        const OracleResult projected =
            oracle_local_lmo(inst.set, ball, g, OracleStrategy::ForcePenalized);
        CHECK(enumerated.method_tag == OracleMethod::CandidateEnum2D);
        CHECK(projected.method_tag != OracleMethod::CandidateEnum2D);
        CHECK(std::abs(enumerated.objective - projected.objective) <= 1e-8 * (1 + g.norm()));
    }
}

TEST_CASE("closed-form local lmo never loses to the oracle") {
    Rng rng(43);
    for (const std::string& family : set_families()) {
        for (int rep = 0; rep < 40; ++rep) {
            const int d = family == "diamond" ? 2 : 1 + static_cast<int>(rng() % 3);
            const ConstraintSet set = random_set_instance(rng, family, d).set;
            const Vector center = random_feasible_point(rng, set);
            const LocalBall ball{center, uniform(rng, 0.1, 1.5)};
            const Vector g = gaussian_vector(rng, d);
            const Vector z = set.local_lmo(ball, g);
            const OracleResult ref = oracle_local_lmo(set, ball, g);
            CHECK(g.dot(z) <= ref.objective + 1e-8 * (1 + g.norm()));
        }
    }
}

TEST_CASE("oracle on the benchmark first step matches the closed form") {
    const Objective bench = make_benchmark_quadratic();
    const ConstraintSet box = make_box2d(2, 2, 4, 4);
    const Vector x0 = vec2(4, 4);
    const double theta = 20.0 / 101.0;
    const double t = theta * (x0 - bench.optimum()->x_star).norm();
    const Vector g = bench.gradient(x0);
    const Vector z = box.local_lmo(LocalBall{x0, t}, g);
    const OracleResult ref = oracle_local_lmo(box, LocalBall{x0, t}, g);
    CHECK(std::abs(g.dot(z) - ref.objective) < 1e-10);
}

TEST_CASE("pgd counterexample quantities") {
    for (double alpha : {0.3, 1.0, 10.0}) {
        const CounterexampleReport rep = pgd_counterexample(alpha, 1.0);
        CHECK((rep.x1 - vec2(0.8, 0)).norm() < 1e-12 * rep.x1.norm() + 1e-15);
        CHECK(rep.grad_diff_sq_x0 ==
              doctest::Approx(5 * alpha * alpha / 4).epsilon(1e-12));
        CHECK(rep.min_grad_diff_sq ==
              doctest::Approx(4 * alpha * alpha / 5).epsilon(1e-12));
    }

    CHECK(pgd_counterexample(10.0, 1.0).min_grad_diff_sq == doctest::Approx(80.0).epsilon(1e-12));
    CHECK(pgd_counterexample(10.0, 1.0).hypothetical_bound ==
          doctest::Approx(12.5).epsilon(1e-12));
    CHECK(pgd_counterexample(10.0, 1.0).violated);
    CHECK_FALSE(pgd_counterexample(1.0, 1.0).violated);

    // threshold alpha = 25 C / 16
    for (double C : {0.5, 1.0, 2.0}) {
        const double thr = 25.0 * C / 16.0;
        CHECK(pgd_counterexample(thr * 1.01, C).violated);
        CHECK_FALSE(pgd_counterexample(thr * 0.99, C).violated);
    }

    CHECK_THROWS_AS(pgd_counterexample(-1.0, 1.0), ConfigError);
}

TEST_CASE("trajectory checks accept matching claims and reject mismatches") {
    const Objective bench = make_benchmark_quadratic();
    const ConstraintSet box = make_box2d(2, 2, 4, 4);
    const Vector x0 = vec2(4, 4);

    SolverConfig lmo;
    lmo.method = Method::LocalLMO;
    lmo.rule = RadiusRule{StronglyConvexTheta{}};
    lmo.max_iters = 60;
    const Trajectory traj = run_local_lmo(box, bench, x0, lmo);
    for (const ClaimResult& c : check_trajectory(
             traj, bench, {"fejer", "boundary_step", "radius_bound", "contraction"})) {
        CHECK(c.pass);
        CHECK(c.checked > 0);
    }

    SolverConfig pgd;
    pgd.method = Method::PGD;
    pgd.rule = StepsizeRule{InverseL{}};
    pgd.max_iters = 60;
    const Trajectory ptraj = run_pgd(box, bench, x0, pgd);
    for (const ClaimResult& c : check_trajectory(
             ptraj, bench, {"pgd_descent", "pgd_fejer", "pgd_rate", "pgd_grad_diff"}))
        CHECK(c.pass);

    SolverConfig fw;
    fw.method = Method::FrankWolfe;
    fw.rule = StepsizeRule{FWClassic{}};
    fw.max_iters = 10;
    const Trajectory ftraj = run_frank_wolfe(box, bench, x0, fw);
    CHECK_THROWS_AS(check_trajectory(ftraj, bench, {"fejer"}), UnknownClaim);
    CHECK_THROWS_AS(check_trajectory(traj, bench, {"no_such_claim"}), UnknownClaim);
    CHECK(check_trajectory(ftraj, bench, {"fw_gap_nonneg"}).front().pass);
}
