#pragma once

#include <Eigen/Core>
#include <string>
#include <variant>
#include <vector>

#include "locallmo/errors.hpp"

namespace locallmo {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Ball B(center, radius) intersected with the constraint set in every local
// linear minimization subproblem.
struct LocalBall {
    Vector center;
    double radius = 0.0;
};

// --- Constraint set families -------------------------------------------------
//
// Each family is nonempty, closed and convex, and admits closed-form
// membership, Euclidean projection, global LMO, and local LMO over the
// intersection with a Euclidean ball centered at a feasible point.

struct WholeSpace {
    int dim = 1;
};

struct Singleton {
    Vector point;
};

// a + span(basis), basis pairwise orthonormal.
struct AffineSubspace {
    Vector origin;
    std::vector<Vector> basis;
};

// { z : normal^T z = offset }, normal != 0.
struct Hyperplane {
    Vector normal;
    double offset = 0.0;
};

// origin + span{direction}, direction a unit vector.
struct AffineLine {
    Vector origin;
    Vector direction;
};

// origin + { alpha * direction : alpha >= 0 }, direction a unit vector.
struct Ray {
    Vector origin;
    Vector direction;
};

struct Segment {
    Vector a;
    Vector b;
};

struct EuclideanBall {
    Vector center;
    double radius = 1.0;
};

struct Box {
    Vector lo;
    Vector hi;
};

// { z : lower <= normal^T z <= upper }, normal != 0.
struct Slab {
    Vector normal;
    double lower = 0.0;
    double upper = 0.0;
};

// 2-D l1 ball { z : |z1-c1| + |z2-c2| <= radius }. A box rotated by 45
// degrees; all oracles delegate to Box in the rotated frame.
struct Diamond {
    Vector center;
    double radius = 1.0;
};

class ConstraintSet {
public:
    using Variant = std::variant<WholeSpace, Singleton, AffineSubspace, Hyperplane, AffineLine,
                                 Ray, Segment, EuclideanBall, Box, Slab, Diamond>;

    ConstraintSet(Variant v) : v_(std::move(v)) {}  // NOLINT: implicit by design

    const Variant& variant() const { return v_; }

    template <class T>
    const T* as() const {
        return std::get_if<T>(&v_);
    }

    int dim() const;

    // Name of the variant as used by serialization and diagnostics.
    std::string kind() const;

    // Empty iff all parameter invariants of the variant hold
    // (orthonormality to 1e-12, unit directions, lo <= hi, radius > 0, ...).
    std::vector<std::string> validate() const;

    bool is_bounded() const;

    // Membership within tol: componentwise for Box, Euclidean distance
    // otherwise (Slab measured as distance, i.e. violation / ||normal||).
    bool contains(const Vector& x, double tol = 1e-9) const;

    // Unique Euclidean projection; idempotent, nonexpansive.
    Vector project(const Vector& x) const;

    // argmin_{z in set} <g, z>. Throws UnboundedObjective when the linear
    // form has no minimizer. Ties broken deterministically (lexicographically
    // smallest minimizer where one exists, a fixed anchor otherwise).
    Vector global_lmo(const Vector& g) const;

    // argmin_{z in set ∩ B(ball)} <g, z>, computed in closed form. Requires
    // the ball center feasible (tol 1e-9) and radius > 0. Returns the center
    // when g = 0 (every feasible point is optimal). Ties broken toward the
    // lexicographically smallest minimizer.
    Vector local_lmo(const LocalBall& ball, const Vector& g) const;

private:
    Variant v_;
};

// Convenience factories.
ConstraintSet make_box(const Vector& lo, const Vector& hi);
ConstraintSet make_box2d(double lo0, double lo1, double hi0, double hi1);
ConstraintSet make_ball(const Vector& center, double radius);
ConstraintSet make_segment1d(double a, double b);

// true iff a < b lexicographically (used for deterministic tie-breaking).
bool lex_less(const Vector& a, const Vector& b);

}  // namespace locallmo
