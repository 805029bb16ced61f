#include "sweepout/geometry.hpp"

#include <algorithm>

namespace sweepout {

double point_to_arc_distance(const Vec3& p, const Vec3& a, const Vec3& b) {
    Vec3 n = a.cross(b);
    double nn = n.norm();
    if (nn < 1e-15) {
        // Degenerate edge; fall back to endpoint distance.
        return std::min(angle_between(p, a), angle_between(p, b));
    }
    n = n / nn;
    // Projection of p onto the great circle of the arc.
    Vec3 q = (p - n * p.dot(n));
    double qn = q.norm();
    if (qn < 1e-15) return kPi / 2.0;
    q = q / qn;
    double s1 = a.cross(q).dot(n);
    double s2 = q.cross(b).dot(n);
    if (s1 >= 0.0 && s2 >= 0.0) return std::abs(std::asin(std::clamp(p.dot(n), -1.0, 1.0)));
    return std::min(angle_between(p, a), angle_between(p, b));
}

namespace {

// Whether q (on the great circle with unit normal n) lies on the minor arc
// [a, b]; if so its parameter in [0, 1] is written to t.
bool on_minor_arc(const Vec3& q, const Vec3& a, const Vec3& b, const Vec3& n, double* t) {
    double s1 = a.cross(q).dot(n);
    double s2 = q.cross(b).dot(n);
    if (s1 < -1e-12 || s2 < -1e-12) return false;
    double full = angle_between(a, b);
    if (full < 1e-15) return false;
    *t = std::clamp(angle_between(a, q) / full, 0.0, 1.0);
    return true;
}

}  // namespace

std::optional<ArcHit> intersect_arcs(const Vec3& a0, const Vec3& a1,
                                     const Vec3& b0, const Vec3& b1) {
    Vec3 na = a0.cross(a1);
    Vec3 nb = b0.cross(b1);
    double nan_ = na.norm(), nbn = nb.norm();
    if (nan_ < 1e-15 || nbn < 1e-15) return std::nullopt;
    na = na / nan_;
    nb = nb / nbn;
    Vec3 dir = na.cross(nb);
    double dn = dir.norm();
    if (dn < 1e-12) return std::nullopt;  // coplanar; overlap handled separately
    dir = dir / dn;
    for (const Vec3& cand : {dir, -dir}) {
        double u, v;
        if (on_minor_arc(cand, a0, a1, na, &u) && on_minor_arc(cand, b0, b1, nb, &v)) {
            // Half-open edges: a hit at the far endpoint belongs to the next edge.
            if (u >= 1.0 - 1e-12 || v >= 1.0 - 1e-12) continue;
            return ArcHit{cand, u, v};
        }
    }
    return std::nullopt;
}

bool arcs_overlap(const Vec3& a0, const Vec3& a1, const Vec3& b0, const Vec3& b1,
                  double tol_point) {
    Vec3 na = a0.cross(a1);
    Vec3 nb = b0.cross(b1);
    double nan_ = na.norm(), nbn = nb.norm();
    if (nan_ < 1e-15 || nbn < 1e-15) return false;
    na = na / nan_;
    nb = nb / nbn;
    if (na.cross(nb).norm() > 1e-9) return false;
    // Same great circle: overlap iff some endpoint of one arc lies strictly
    // inside the other.
    auto inside = [&](const Vec3& q, const Vec3& a, const Vec3& b, const Vec3& n) {
        double t;
        if (!on_minor_arc(q, a, b, n, &t)) return false;
        return angle_between(q, a) > tol_point && angle_between(q, b) > tol_point;
    };
    return inside(b0, a0, a1, na) || inside(b1, a0, a1, na) ||
           inside(a0, b0, b1, nb) || inside(a1, b0, b1, nb);
}

}  // namespace sweepout
