#pragma once

#include <cmath>
#include <optional>

#include "sweepout/errors.hpp"

namespace sweepout {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3() = default;
    Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3 operator-() const { return {-x, -y, -z}; }

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm2() const { return dot(*this); }
    double norm() const { return std::sqrt(norm2()); }
    Vec3 normalized() const {
        double n = norm();
        return n > 0.0 ? *this / n : Vec3{0, 0, 0};
    }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

struct Vec2 {
    double x = 0.0, y = 0.0;
    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}
    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    double cross(const Vec2& o) const { return x * o.y - y * o.x; }
    double norm() const { return std::hypot(x, y); }
};

// A point on the unit sphere; invariants are checked where curves are built.
using SpherePoint = Vec3;

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

// Angle between two unit vectors, robust near 0 and pi.
inline double angle_between(const Vec3& a, const Vec3& b) {
    return std::atan2(a.cross(b).norm(), a.dot(b));
}

// Geodesic interpolation along the minor arc from a to b.
inline Vec3 slerp(const Vec3& a, const Vec3& b, double t) {
    double ang = angle_between(a, b);
    if (ang < 1e-14) return a;
    double s = std::sin(ang);
    return (a * (std::sin((1.0 - t) * ang) / s) + b * (std::sin(t * ang) / s)).normalized();
}

// Some unit vector orthogonal to p.
inline Vec3 any_orthonormal(const Vec3& p) {
    Vec3 a = std::abs(p.x) < 0.8 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    return p.cross(a).normalized();
}

// Rodrigues rotation of v about a unit axis.
inline Vec3 rotate_about(const Vec3& v, const Vec3& axis, double angle) {
    double c = std::cos(angle), s = std::sin(angle);
    return v * c + axis.cross(v) * s + axis * (axis.dot(v) * (1.0 - c));
}

// Distance from p to the minor great-circle arc [a, b].
double point_to_arc_distance(const Vec3& p, const Vec3& a, const Vec3& b);

// Transverse intersection of two minor arcs. Returns the crossing point and
// the arc parameters in [0, 1). Intersections at the far endpoint of either
// arc are attributed to the neighbouring edge by the half-open convention.
struct ArcHit {
    Vec3 point;
    double u = 0.0;  // parameter along [a0, a1]
    double v = 0.0;  // parameter along [b0, b1]
};
std::optional<ArcHit> intersect_arcs(const Vec3& a0, const Vec3& a1,
                                     const Vec3& b0, const Vec3& b1);

// True when the two arcs lie on one great circle and share a sub-arc of
// positive length.
bool arcs_overlap(const Vec3& a0, const Vec3& a1, const Vec3& b0, const Vec3& b1,
                  double tol_point);

// Oriented stereographic chart centred opposite the pole. The basis is chosen
// so that projection is orientation-preserving with respect to the
// outward-normal orientation of the sphere.
class Chart {
public:
    explicit Chart(const SpherePoint& pole)
        : pole_(pole.normalized()), e1_(any_orthonormal(pole_)), e2_(e1_.cross(pole_)) {}

    const SpherePoint& pole() const { return pole_; }

    Vec2 project(const SpherePoint& p) const {
        double denom = 1.0 - p.dot(pole_);
        Vec3 q = p - pole_ * p.dot(pole_);
        return {q.dot(e1_) / denom, q.dot(e2_) / denom};
    }

    SpherePoint unproject(const Vec2& q) const {
        double r2 = q.x * q.x + q.y * q.y;
        Vec3 v = (e1_ * (2.0 * q.x) + e2_ * (2.0 * q.y) + pole_ * (r2 - 1.0)) / (r2 + 1.0);
        return v.normalized();
    }

private:
    SpherePoint pole_;
    Vec3 e1_, e2_;
};

// Circular distance between parameters in [0, 1).
inline double circ_dist(double a, double b) {
    double d = std::abs(a - b);
    d -= std::floor(d);
    return std::min(d, 1.0 - d);
}

inline double wrap01(double t) {
    t -= std::floor(t);
    if (t >= 1.0) t = 0.0;
    return t;
}

}  // namespace sweepout
