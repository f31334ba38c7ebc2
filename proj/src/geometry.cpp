#include "locallmo/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace locallmo {

namespace {

// Relative threshold below which a projected/tangential gradient component is
// treated as zero. Normalizing a pure-rounding residual would step the full
// radius in a noise direction (and, for hyperplane-like sets, off the set).
constexpr double kDegenerate = 1e-13;

bool all_finite(const Vector& v) { return v.allFinite(); }

void require_dim(const Vector& x, int d, const char* op) {
    if (static_cast<int>(x.size()) != d)
        throw DimensionMismatch(std::string(op) + ": vector has dimension " +
                                std::to_string(x.size()) + ", set has dimension " +
                                std::to_string(d));
}

Vector unit(const Vector& v) { return v / v.norm(); }

// Component of g tangential to the hyperplane with normal a.
Vector tangential(const Vector& g, const Vector& a) {
    return g - (a.dot(g) / a.squaredNorm()) * a;
}

// Projection of g onto span(basis), basis orthonormal.
Vector span_project(const Vector& g, const std::vector<Vector>& basis) {
    Vector p = Vector::Zero(g.size());
    for (const Vector& b : basis) p += b.dot(g) * b;
    return p;
}

// Lexicographically smallest unit vector direction within the orthogonal
// complement of e1, used when a whole sphere-slice of minimizers is optimal.
Vector lex_min_unit_orthogonal(const Vector& e1) {
    const int d = static_cast<int>(e1.size());
    for (int j = 0; j < d; ++j) {
        Vector p = -e1(j) * e1;
        p(j) += 1.0;
        const double n = p.norm();
        if (n > 1e-9) return Vector(p / n);
    }
    return Vector::Zero(d);  // d == 1: complement is trivial
}

// --- Box helpers --------------------------------------------------------------

bool in_box(const Box& s, const Vector& z, double tol) {
    for (int i = 0; i < z.size(); ++i)
        if (z(i) < s.lo(i) - tol || z(i) > s.hi(i) + tol) return false;
    return true;
}

Vector clip_box(const Box& s, const Vector& z) {
    return z.cwiseMax(s.lo).cwiseMin(s.hi);
}

// Exact solution on an interval: the feasible range is
// [max(lo, x - t), min(hi, x + t)] and a linear objective picks an endpoint.
Vector box_local_lmo_1d(const Box& s, const Vector& x, double t, const Vector& g) {
    const double left = std::max(s.lo(0), x(0) - t);
    const double right = std::min(s.hi(0), x(0) + t);
    Vector z(1);
    z(0) = g(0) > 0 ? left : (g(0) < 0 ? right : std::min(left, right));
    return z;
}

// Exact candidate enumeration in the plane: the minimizer of a linear form
// over box ∩ disc is the free ball minimizer (if feasible), a box corner
// inside the disc, or a circle-edge crossing.
Vector box_local_lmo_2d(const Box& s, const Vector& x, double t, const Vector& g) {
    const Vector u = unit(g);
    std::vector<Vector> cands;
    cands.reserve(14);

    Vector zball = x - t * u;
    if (in_box(s, zball, 0.0)) cands.push_back(zball);

    for (double cx : {s.lo(0), s.hi(0)})
        for (double cy : {s.lo(1), s.hi(1)}) {
            Vector c(2);
            c << cx, cy;
            if ((c - x).norm() <= t * (1.0 + 1e-15) + 1e-300) cands.push_back(c);
        }

    const double edge_tol = 1e-12 * (1.0 + t);
    for (int j = 0; j < 2; ++j) {
        const int i = 1 - j;
        for (double e : {s.lo(j), s.hi(j)}) {
            const double disc = t * t - (e - x(j)) * (e - x(j));
            if (disc < 0) continue;
            const double r = std::sqrt(disc);
            for (double sgn : {-1.0, 1.0}) {
                Vector z(2);
                z(j) = e;
                z(i) = x(i) + sgn * r;
                if (z(i) < s.lo(i) - edge_tol || z(i) > s.hi(i) + edge_tol) continue;
                z(i) = std::clamp(z(i), s.lo(i), s.hi(i));
                cands.push_back(z);
            }
        }
    }

    cands.push_back(x);  // always feasible; never wins unless optimal
    const Vector* best = &cands.front();
    for (const Vector& c : cands) {
        const double dv = g.dot(c) - g.dot(*best);
        if (dv < 0 || (dv == 0 && lex_less(c, *best))) best = &c;
    }
    return *best;
}

// d >= 3: KKT multiplier bisection. Either the free ball minimizer or a box
// minimizer is feasible, or the ball constraint is active and the solution is
// clip(x - g/kappa) with kappa > 0 chosen so the step length equals t. The
// clipped step length is nonincreasing and continuous in kappa.
Vector box_local_lmo_nd(const Box& s, const Vector& x, double t, const Vector& g) {
    const Vector u = unit(g);
    Vector zball = x - t * u;
    if (in_box(s, zball, 0.0)) return zball;

    Vector zbox(x.size());
    for (int i = 0; i < x.size(); ++i)
        zbox(i) = g(i) > 0 ? s.lo(i) : (g(i) < 0 ? s.hi(i) : x(i));
    if ((zbox - x).norm() <= t) return zbox;

    auto step_len = [&](double kappa) { return (clip_box(s, x - g / kappa) - x).norm(); };

    double hi = g.norm() / t;  // step length <= t here (clipping only shrinks)
    double lo = hi;
    while (step_len(lo) <= t) {
        lo *= 0.5;
        if (lo < 1e-300) break;  // unreachable: zbox is outside the ball
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (step_len(mid) > t ? lo : hi) = mid;
    }
    return clip_box(s, x - g / hi);
}

Vector box_local_lmo(const Box& s, const Vector& x, double t, const Vector& g) {
    switch (x.size()) {
        case 1:
            return box_local_lmo_1d(s, x, t, g);
        case 2:
            return box_local_lmo_2d(s, x, t, g);
        default:
            return box_local_lmo_nd(s, x, t, g);
    }
}

Vector box_global_lmo(const Box& s, const Vector& g) {
    Vector z(s.lo.size());
    for (int i = 0; i < z.size(); ++i) z(i) = g(i) >= 0 ? s.lo(i) : s.hi(i);
    return z;
}

// --- Diamond: 2-D l1 ball as a box in a rotated frame -------------------------
//
// With S the rotation by 45 degrees, z = c + S w maps ||w||_inf <= R/sqrt(2)
// onto ||z - c||_1 <= R; S is orthogonal, so Euclidean balls and projections
// carry over unchanged.

Matrix diamond_rot() {
    Matrix S(2, 2);
    const double r = 1.0 / std::sqrt(2.0);
    S << r, -r, r, r;
    return S;
}

Box diamond_box(const Diamond& s) {
    const double h = s.radius / std::sqrt(2.0);
    Box b;
    b.lo = Vector::Constant(2, -h);
    b.hi = Vector::Constant(2, h);
    return b;
}

}  // namespace

bool lex_less(const Vector& a, const Vector& b) {
    for (int i = 0; i < a.size(); ++i) {
        if (a(i) < b(i)) return true;
        if (a(i) > b(i)) return false;
    }
    return false;
}

int ConstraintSet::dim() const {
    return std::visit(
        [](const auto& s) -> int {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, WholeSpace>) return s.dim;
            else if constexpr (std::is_same_v<T, Singleton>) return static_cast<int>(s.point.size());
            else if constexpr (std::is_same_v<T, AffineSubspace>) return static_cast<int>(s.origin.size());
            else if constexpr (std::is_same_v<T, Hyperplane>) return static_cast<int>(s.normal.size());
            else if constexpr (std::is_same_v<T, AffineLine>) return static_cast<int>(s.origin.size());
            else if constexpr (std::is_same_v<T, Ray>) return static_cast<int>(s.origin.size());
            else if constexpr (std::is_same_v<T, Segment>) return static_cast<int>(s.a.size());
            else if constexpr (std::is_same_v<T, EuclideanBall>) return static_cast<int>(s.center.size());
            else if constexpr (std::is_same_v<T, Box>) return static_cast<int>(s.lo.size());
            else if constexpr (std::is_same_v<T, Slab>) return static_cast<int>(s.normal.size());
            else return 2;  // Diamond
        },
        v_);
}

std::string ConstraintSet::kind() const {
    return std::visit(
        [](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, WholeSpace>) return "whole_space";
            else if constexpr (std::is_same_v<T, Singleton>) return "singleton";
            else if constexpr (std::is_same_v<T, AffineSubspace>) return "affine_subspace";
            else if constexpr (std::is_same_v<T, Hyperplane>) return "hyperplane";
            else if constexpr (std::is_same_v<T, AffineLine>) return "affine_line";
            else if constexpr (std::is_same_v<T, Ray>) return "ray";
            else if constexpr (std::is_same_v<T, Segment>) return "segment";
            else if constexpr (std::is_same_v<T, EuclideanBall>) return "euclidean_ball";
            else if constexpr (std::is_same_v<T, Box>) return "box";
            else if constexpr (std::is_same_v<T, Slab>) return "slab";
            else return "diamond";
        },
        v_);
}

std::vector<std::string> ConstraintSet::validate() const {
    std::vector<std::string> out;
    auto bad = [&](const std::string& msg) { out.push_back(kind() + ": " + msg); };
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, WholeSpace>) {
                if (s.dim < 1) bad("dimension must be >= 1");
            } else if constexpr (std::is_same_v<T, Singleton>) {
                if (s.point.size() < 1) bad("dimension must be >= 1");
                if (!all_finite(s.point)) bad("point has non-finite entries");
            } else if constexpr (std::is_same_v<T, AffineSubspace>) {
                if (s.origin.size() < 1) bad("dimension must be >= 1");
                if (!all_finite(s.origin)) bad("origin has non-finite entries");
                if (s.basis.size() > static_cast<size_t>(s.origin.size()))
                    bad("more basis vectors than ambient dimensions");
                for (size_t i = 0; i < s.basis.size(); ++i) {
                    if (s.basis[i].size() != s.origin.size() || !all_finite(s.basis[i])) {
                        bad("basis vector " + std::to_string(i) + " invalid");
                        continue;
                    }
                    for (size_t j = 0; j <= i; ++j) {
                        const double want = i == j ? 1.0 : 0.0;
                        if (std::abs(s.basis[i].dot(s.basis[j]) - want) > 1e-12)
                            bad("basis not orthonormal at pair (" + std::to_string(i) + "," +
                                std::to_string(j) + ")");
                    }
                }
            } else if constexpr (std::is_same_v<T, Hyperplane>) {
                if (s.normal.size() < 1 || !all_finite(s.normal) || !std::isfinite(s.offset))
                    bad("parameters non-finite");
                else if (s.normal.norm() == 0.0)
                    bad("normal must be nonzero");
            } else if constexpr (std::is_same_v<T, AffineLine> || std::is_same_v<T, Ray>) {
                if (s.origin.size() != s.direction.size() || !all_finite(s.origin) ||
                    !all_finite(s.direction))
                    bad("parameters invalid");
                else if (std::abs(s.direction.norm() - 1.0) > 1e-12)
                    bad("direction must be a unit vector");
            } else if constexpr (std::is_same_v<T, Segment>) {
                if (s.a.size() != s.b.size() || !all_finite(s.a) || !all_finite(s.b))
                    bad("parameters invalid");
                else if ((s.a - s.b).norm() == 0.0)
                    bad("endpoints must differ");
            } else if constexpr (std::is_same_v<T, EuclideanBall>) {
                if (!all_finite(s.center) || !std::isfinite(s.radius)) bad("parameters non-finite");
                if (!(s.radius > 0)) bad("radius must be > 0");
            } else if constexpr (std::is_same_v<T, Box>) {
                if (s.lo.size() != s.hi.size() || !all_finite(s.lo) || !all_finite(s.hi))
                    bad("parameters invalid");
                else
                    for (int i = 0; i < s.lo.size(); ++i)
                        if (s.lo(i) > s.hi(i)) bad("lo <= hi violated at coordinate " + std::to_string(i));
            } else if constexpr (std::is_same_v<T, Slab>) {
                if (!all_finite(s.normal) || !std::isfinite(s.lower) || !std::isfinite(s.upper))
                    bad("parameters non-finite");
                else {
                    if (s.normal.norm() == 0.0) bad("normal must be nonzero");
                    if (s.lower > s.upper) bad("lower <= upper violated");
                }
            } else {  // Diamond
                if (s.center.size() != 2) bad("diamond is two-dimensional");
                if (!all_finite(s.center) || !(s.radius > 0)) bad("parameters invalid");
            }
        },
        v_);
    return out;
}

bool ConstraintSet::is_bounded() const {
    return std::visit(
        [&](const auto& s) -> bool {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, WholeSpace>) return false;
            else if constexpr (std::is_same_v<T, AffineSubspace>) return s.basis.empty();
            else if constexpr (std::is_same_v<T, Hyperplane>) return s.normal.size() == 1;
            else if constexpr (std::is_same_v<T, AffineLine>) return false;
            else if constexpr (std::is_same_v<T, Ray>) return false;
            else if constexpr (std::is_same_v<T, Slab>) return s.normal.size() == 1;
            else return true;
        },
        v_);
}

bool ConstraintSet::contains(const Vector& x, double tol) const {
    require_dim(x, dim(), "contains");
    if (const auto* b = as<Box>()) return in_box(*b, x, tol);
    if (as<WholeSpace>()) return true;
    return (x - project(x)).norm() <= tol + 1e-15 * (1.0 + x.norm());
}

Vector ConstraintSet::project(const Vector& x) const {
    require_dim(x, dim(), "project");
    return std::visit(
        [&](const auto& s) -> Vector {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, WholeSpace>) {
                return x;
            } else if constexpr (std::is_same_v<T, Singleton>) {
                return s.point;
            } else if constexpr (std::is_same_v<T, AffineSubspace>) {
                return Vector(s.origin + span_project(x - s.origin, s.basis));
            } else if constexpr (std::is_same_v<T, Hyperplane>) {
                return Vector(x - ((s.normal.dot(x) - s.offset) / s.normal.squaredNorm()) * s.normal);
            } else if constexpr (std::is_same_v<T, AffineLine>) {
                return Vector(s.origin + s.direction.dot(x - s.origin) * s.direction);
            } else if constexpr (std::is_same_v<T, Ray>) {
                const double alpha = std::max(0.0, s.direction.dot(x - s.origin));
                return Vector(s.origin + alpha * s.direction);
            } else if constexpr (std::is_same_v<T, Segment>) {
                const Vector d = s.b - s.a;
                const double lam = std::clamp(d.dot(x - s.a) / d.squaredNorm(), 0.0, 1.0);
                return Vector(s.a + lam * d);
            } else if constexpr (std::is_same_v<T, EuclideanBall>) {
                const Vector d = x - s.center;
                const double n = d.norm();
                if (n <= s.radius) return x;
                return Vector(s.center + (s.radius / n) * d);
            } else if constexpr (std::is_same_v<T, Box>) {
                return clip_box(s, x);
            } else if constexpr (std::is_same_v<T, Slab>) {
                const double v = s.normal.dot(x);
                const double c = std::clamp(v, s.lower, s.upper);
                return Vector(x - ((v - c) / s.normal.squaredNorm()) * s.normal);
            } else {  // Diamond
                const Matrix S = diamond_rot();
                const Vector w = S.transpose() * (x - s.center);
                return Vector(s.center + S * clip_box(diamond_box(s), w));
            }
        },
        v_);
}

Vector ConstraintSet::global_lmo(const Vector& g) const {
    require_dim(g, dim(), "global_lmo");
    if (!all_finite(g)) throw DomainError("global_lmo: gradient has non-finite entries");
    const double gn = g.norm();
    return std::visit(
        [&](const auto& s) -> Vector {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, WholeSpace>) {
                if (gn == 0) return Vector::Zero(s.dim);
                throw UnboundedObjective("global_lmo: linear form unbounded below on the whole space");
            } else if constexpr (std::is_same_v<T, Singleton>) {
                return s.point;
            } else if constexpr (std::is_same_v<T, AffineSubspace>) {
                if (gn > 0 && span_project(g, s.basis).norm() > kDegenerate * gn)
                    throw UnboundedObjective("global_lmo: linear form unbounded below on affine subspace");
                return s.origin;
            } else if constexpr (std::is_same_v<T, Hyperplane>) {
                if (gn > 0 && tangential(g, s.normal).norm() > kDegenerate * gn)
                    throw UnboundedObjective("global_lmo: linear form unbounded below on hyperplane");
                return Vector((s.offset / s.normal.squaredNorm()) * s.normal);
            } else if constexpr (std::is_same_v<T, AffineLine>) {
                if (std::abs(g.dot(s.direction)) > kDegenerate * gn)
                    throw UnboundedObjective("global_lmo: linear form unbounded below on affine line");
                return s.origin;
            } else if constexpr (std::is_same_v<T, Ray>) {
                if (g.dot(s.direction) < -kDegenerate * gn)
                    throw UnboundedObjective("global_lmo: linear form unbounded below on ray");
                return s.origin;
            } else if constexpr (std::is_same_v<T, Segment>) {
                const double d = g.dot(s.b - s.a);
                if (d > 0) return s.a;
                if (d < 0) return s.b;
                return lex_less(s.a, s.b) ? s.a : s.b;
            } else if constexpr (std::is_same_v<T, EuclideanBall>) {
                if (gn == 0) {
                    Vector z = s.center;
                    z(0) -= s.radius;
                    return z;
                }
                return Vector(s.center - (s.radius / gn) * g);
            } else if constexpr (std::is_same_v<T, Box>) {
                return box_global_lmo(s, g);
            } else if constexpr (std::is_same_v<T, Slab>) {
                if (gn == 0) return Vector((0.5 * (s.lower + s.upper) / s.normal.squaredNorm()) * s.normal);
                if (tangential(g, s.normal).norm() > kDegenerate * gn)
                    throw UnboundedObjective("global_lmo: linear form unbounded below on slab");
                const double b = s.normal.dot(g) > 0 ? s.lower : s.upper;
                return Vector((b / s.normal.squaredNorm()) * s.normal);
            } else {  // Diamond
                std::vector<Vector> verts;
                for (int i = 0; i < 2; ++i)
                    for (double sgn : {-1.0, 1.0}) {
                        Vector v = s.center;
                        v(i) += sgn * s.radius;
                        verts.push_back(v);
                    }
                const Vector* best = &verts.front();
                for (const Vector& v : verts) {
                    const double dv = g.dot(v) - g.dot(*best);
                    if (dv < 0 || (dv == 0 && lex_less(v, *best))) best = &v;
                }
                return *best;
            }
        },
        v_);
}

Vector ConstraintSet::local_lmo(const LocalBall& ball, const Vector& g) const {
    const Vector& x = ball.center;
    const double t = ball.radius;
    require_dim(x, dim(), "local_lmo");
    require_dim(g, dim(), "local_lmo");
    if (!std::isfinite(t) || t <= 0) throw BadRadius("local_lmo: radius must be finite and > 0");
    if (!all_finite(g)) throw DomainError("local_lmo: gradient has non-finite entries");
    if (!contains(x, 1e-9)) throw InfeasibleCenter("local_lmo: ball center is not feasible");

    const double gn = g.norm();
    if (gn == 0) return x;  // every feasible point is optimal

    return std::visit(
        [&](const auto& s) -> Vector {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, WholeSpace>) {
                return Vector(x - (t / gn) * g);
            } else if constexpr (std::is_same_v<T, Singleton>) {
                return s.point;
            } else if constexpr (std::is_same_v<T, AffineSubspace>) {
                const Vector p = span_project(g, s.basis);
                if (p.norm() <= kDegenerate * gn) return x;
                return Vector(x - (t / p.norm()) * p);
            } else if constexpr (std::is_same_v<T, Hyperplane>) {
                const Vector gt = tangential(g, s.normal);
                if (gt.norm() <= kDegenerate * gn) return x;
                return Vector(x - (t / gt.norm()) * gt);
            } else if constexpr (std::is_same_v<T, AffineLine>) {
                const double d = g.dot(s.direction);
                if (d > 0) return Vector(x - t * s.direction);
                if (d < 0) return Vector(x + t * s.direction);
                Vector zl = x - t * s.direction, zr = x + t * s.direction;
                return lex_less(zl, zr) ? zl : zr;
            } else if constexpr (std::is_same_v<T, Ray>) {
                const double ax = std::max(0.0, s.direction.dot(x - s.origin));
                const double left = std::max(0.0, ax - t), right = ax + t;
                const double d = g.dot(s.direction);
                double alpha;
                if (d > 0) alpha = left;
                else if (d < 0) alpha = right;
                else {
                    Vector zl = s.origin + left * s.direction, zr = s.origin + right * s.direction;
                    return lex_less(zl, zr) ? zl : zr;
                }
                return Vector(s.origin + alpha * s.direction);
            } else if constexpr (std::is_same_v<T, Segment>) {
                const Vector dir = s.b - s.a;
                const double len2 = dir.squaredNorm();
                const double lx = std::clamp(dir.dot(x - s.a) / len2, 0.0, 1.0);
                const double w = t / std::sqrt(len2);
                const double left = std::max(0.0, lx - w), right = std::min(1.0, lx + w);
                const double d = g.dot(dir);
                double lam;
                if (d > 0) lam = left;
                else if (d < 0) lam = right;
                else {
                    Vector zl = s.a + left * dir, zr = s.a + right * dir;
                    return lex_less(zl, zr) ? zl : zr;
                }
                return Vector(s.a + lam * dir);
            } else if constexpr (std::is_same_v<T, EuclideanBall>) {
                const Vector u = g / gn;
                Vector zfree = x - t * u;
                if ((zfree - s.center).norm() <= s.radius) return zfree;
                Vector zglob = s.center - s.radius * u;
                if ((zglob - x).norm() <= t) return zglob;
                // Both constraints active: the solution lies on the sphere
                // intersection ||z-x|| = t, ||z-c|| = R.
                const Vector d = s.center - x;
                const double rho = d.norm();
                const Vector e1 = d / rho;
                const double alpha = (rho * rho + t * t - s.radius * s.radius) / (2 * rho);
                const double sl = std::sqrt(std::max(0.0, t * t - alpha * alpha));
                Vector p = u - u.dot(e1) * e1;
                Vector q = x + alpha * e1;
                if (sl == 0.0) return q;
                if (p.norm() > kDegenerate) return Vector(q - (sl / p.norm()) * p);
                return Vector(q - sl * lex_min_unit_orthogonal(e1));
            } else if constexpr (std::is_same_v<T, Box>) {
                return box_local_lmo(s, x, t, g);
            } else if constexpr (std::is_same_v<T, Slab>) {
                const Vector u = g / gn;
                Vector zfree = x - t * u;
                const double v = s.normal.dot(zfree);
                if (v >= s.lower && v <= s.upper) return zfree;
                // One boundary is active; the optimum is the hyperplane-case
                // solution centered at the orthogonal projection of x, with
                // the radius budget left after reaching the plane.
                const double an = s.normal.norm();
                const double b = v < s.lower ? s.lower : s.upper;
                const double delta = std::abs(s.normal.dot(x) - b) / an;
                Vector xproj = x - ((s.normal.dot(x) - b) / (an * an)) * s.normal;
                const double resid = std::sqrt(std::max(0.0, t * t - delta * delta));
                const Vector gt = tangential(g, s.normal);
                if (gt.norm() <= kDegenerate * gn) return xproj;
                return Vector(xproj - (resid / gt.norm()) * gt);
            } else {  // Diamond
                const Matrix S = diamond_rot();
                const Vector wx = S.transpose() * (x - s.center);
                const Vector wg = S.transpose() * g;
                const Vector wz = box_local_lmo(diamond_box(s), wx, t, wg);
                return Vector(s.center + S * wz);
            }
        },
        v_);
}

ConstraintSet make_box(const Vector& lo, const Vector& hi) { return ConstraintSet(Box{lo, hi}); }

ConstraintSet make_box2d(double lo0, double lo1, double hi0, double hi1) {
    Vector lo(2), hi(2);
    lo << lo0, lo1;
    hi << hi0, hi1;
    return make_box(lo, hi);
}

ConstraintSet make_ball(const Vector& center, double radius) {
    return ConstraintSet(EuclideanBall{center, radius});
}

ConstraintSet make_segment1d(double a, double b) {
    Vector va(1), vb(1);
    va << a;
    vb << b;
    return ConstraintSet(Segment{va, vb});
}

}  // namespace locallmo
