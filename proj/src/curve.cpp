#include "sweepout/curve.hpp"

#include <algorithm>
#include <cmath>

namespace sweepout {

SpherePoint ClosedCurve::point_at(double t) const {
    if (is_constant()) return verts_[0];
    int n = size();
    t = wrap01(t);
    double x = t * n;
    int i = std::min(static_cast<int>(x), n - 1);
    double local = x - i;
    return slerp(verts_[i], verts_[mod(i + 1)], local);
}

Vec3 ClosedCurve::direction_at(double t) const {
    int n = size();
    t = wrap01(t);
    int i = std::min(static_cast<int>(t * n), n - 1);
    const Vec3& a = verts_[i];
    const Vec3& b = verts_[mod(i + 1)];
    SpherePoint p = point_at(t);
    // Tangent of the great circle through a, b at p.
    Vec3 nrm = a.cross(b).normalized();
    return nrm.cross(p).normalized();
}

ClosedCurve ClosedCurve::reversed() const {
    std::vector<SpherePoint> v(verts_.rbegin(), verts_.rend());
    return ClosedCurve(std::move(v));
}

ClosedCurve ClosedCurve::rotated_start(int k) const {
    int n = size();
    std::vector<SpherePoint> v;
    v.reserve(n);
    for (int i = 0; i < n; ++i) v.push_back(verts_[mod(k + i)]);
    return ClosedCurve(std::move(v));
}

void ClosedCurve::validate(const Tolerances& tol) const {
    if (verts_.empty()) throw InvalidCurve("curve has no vertices");
    for (const auto& v : verts_) {
        if (std::abs(v.norm() - 1.0) > tol.tol_unit)
            throw InvalidCurve("vertex is not on the unit sphere");
    }
    if (is_constant()) return;
    if (size() < 3) throw InvalidCurve("non-constant curve needs at least 3 vertices");
    int n = size();
    for (int i = 0; i < n; ++i) {
        double d = angle_between(verts_[i], verts_[mod(i + 1)]);
        if (d < tol.tol_point) throw InvalidCurve("consecutive vertices coincide");
        if (d > kPi - 1e-6) throw InvalidCurve("edge is not a minor arc");
    }
}

double length(const ClosedCurve& c) {
    if (c.is_constant()) return 0.0;
    double total = 0.0;
    for (int i = 0; i < c.size(); ++i) total += angle_between(c.vertex(i), c.vertex(i + 1));
    return total;
}

double energy(const ClosedCurve& c) {
    if (c.is_constant()) return 0.0;
    double sum = 0.0;
    for (int i = 0; i < c.size(); ++i) {
        double l = angle_between(c.vertex(i), c.vertex(i + 1));
        sum += l * l;
    }
    return sum * c.size();
}

double min_distance_to_curve(const SpherePoint& p, const ClosedCurve& c) {
    if (c.is_constant()) return angle_between(p, c.vertex(0));
    double best = kPi;
    for (int i = 0; i < c.size(); ++i)
        best = std::min(best, point_to_arc_distance(p, c.vertex(i), c.vertex(i + 1)));
    return best;
}

ChartCurve stereographic(const ClosedCurve& c, const SpherePoint& pole, const Tolerances& tol) {
    if (min_distance_to_curve(pole, c) < tol.tol_pole)
        throw PoleOnCurve("curve enters the excluded disc around the pole");
    Chart chart(pole);
    ChartCurve out;
    out.pole = pole.normalized();
    out.planar_vertices.reserve(c.size());
    for (const auto& v : c.vertices()) out.planar_vertices.push_back(chart.project(v));
    return out;
}

std::vector<SelfIntersection> self_intersections(const ClosedCurve& c, const Tolerances& tol) {
    std::vector<SelfIntersection> out;
    if (c.is_constant() || c.size() < 4) return out;
    int n = c.size();

    // Bounding-cap prune: edges can only meet when their midpoint caps touch.
    std::vector<Vec3> mid(n);
    std::vector<double> cosr(n), sinr(n);
    for (int i = 0; i < n; ++i) {
        const Vec3& a = c.vertex(i);
        const Vec3& b = c.vertex(i + 1);
        mid[i] = (a + b).normalized();
        double r = 0.5 * angle_between(a, b) + 1e-9;
        cosr[i] = std::cos(r);
        sinr[i] = std::sin(r);
    }

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent) continue;
            // cos(ri + rj) = cos ri cos rj - sin ri sin rj
            if (mid[i].dot(mid[j]) < cosr[i] * cosr[j] - sinr[i] * sinr[j]) continue;
            const Vec3 &a0 = c.vertex(i), &a1 = c.vertex(i + 1);
            const Vec3 &b0 = c.vertex(j), &b1 = c.vertex(j + 1);
            if (arcs_overlap(a0, a1, b0, b1, tol.tol_point))
                throw DegenerateOverlap("edges share a sub-arc");
            auto hit = intersect_arcs(a0, a1, b0, b1);
            if (!hit) continue;
            SelfIntersection s;
            s.t1 = (i + hit->u) / n;
            s.t2 = (j + hit->v) / n;
            s.point = hit->point;
            double ang = angle_between(c.direction_at(s.t1), c.direction_at(s.t2));
            s.transverse = (ang > tol.tol_angle && ang < kPi - tol.tol_angle);
            out.push_back(s);
        }
    }
    std::sort(out.begin(), out.end(), [](const SelfIntersection& a, const SelfIntersection& b) {
        if (a.t1 != b.t1) return a.t1 < b.t1;
        return a.t2 < b.t2;
    });
    // Drop duplicates produced by hits landing exactly on shared vertices.
    std::vector<SelfIntersection> dedup;
    double eps = 0.25 / n;
    for (const auto& s : out) {
        bool dup = false;
        for (const auto& d : dedup) {
            if (circ_dist(s.t1, d.t1) < eps && circ_dist(s.t2, d.t2) < eps &&
                angle_between(s.point, d.point) < tol.tol_point)
                dup = true;
        }
        if (!dup) dedup.push_back(s);
    }
    return dedup;
}

double turning_number_raw(const ChartCurve& cc) {
    // Collapse repeated planar points first.
    std::vector<Vec2> pts;
    for (const auto& p : cc.planar_vertices) {
        if (pts.empty() || (p - pts.back()).norm() > 1e-14) pts.push_back(p);
    }
    while (pts.size() > 1 && (pts.front() - pts.back()).norm() < 1e-14) pts.pop_back();
    if (pts.size() < 3) throw NonIntegralTurning("degenerate planar curve");
    int n = static_cast<int>(pts.size());
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        Vec2 din = pts[i] - pts[(i + n - 1) % n];
        Vec2 dout = pts[(i + 1) % n] - pts[i];
        sum += std::atan2(din.cross(dout), din.dot(dout));
    }
    return sum / kTwoPi;
}

int turning_number(const ChartCurve& cc) {
    double raw = turning_number_raw(cc);
    double nearest = std::round(raw);
    if (std::abs(raw - nearest) >= 0.25)
        throw NonIntegralTurning("exterior angles do not sum near a multiple of 2*pi");
    return static_cast<int>(nearest);
}

namespace {

void check_is_crossing(const ClosedCurve& c, const SelfIntersection& s, const Tolerances& tol) {
    if (!s.transverse) throw NotAnIntersection("crossing is not transverse");
    if (circ_dist(s.t1, s.t2) < 1e-12) throw NotAnIntersection("parameters coincide");
    double d1 = angle_between(c.point_at(s.t1), s.point);
    double d2 = angle_between(c.point_at(s.t2), s.point);
    if (d1 > 10 * tol.tol_point || d2 > 10 * tol.tol_point)
        throw NotAnIntersection("curve does not pass through the claimed point");
}

// Point at arc-distance d forward (dir=+1) or backward (dir=-1) from
// parameter t.
SpherePoint walk_arclen(const ClosedCurve& c, double t, double d, int dir) {
    int n = c.size();
    double tt = wrap01(t);
    int edge = std::min(static_cast<int>(tt * n), n - 1);
    double local = tt * n - edge;
    for (int step = 0; step < 2 * n + 2; ++step) {
        Vec3 a = c.vertex(edge);
        Vec3 b = c.vertex(edge + 1);
        double el = angle_between(a, b);
        double avail = dir > 0 ? (1.0 - local) * el : local * el;
        if (d <= avail || el < 1e-15) {
            double frac = el < 1e-15 ? local : local + dir * d / el;
            return slerp(a, b, std::clamp(frac, 0.0, 1.0));
        }
        d -= avail;
        if (dir > 0) {
            edge = c.mod(edge + 1);
            local = 0.0;
        } else {
            edge = c.mod(edge - 1);
            local = 1.0;
        }
    }
    return c.point_at(t);
}

}  // namespace

std::pair<Subcurve, Subcurve> split_at(const ClosedCurve& c, const SelfIntersection& s) {
    check_is_crossing(c, s, default_tolerances());
    Subcurve first{&c, s.t1, s.t2};
    Subcurve second{&c, s.t2, s.t1};
    return {first, second};
}

ClosedCurve Subcurve::to_curve(const Tolerances& tol) const {
    const ClosedCurve& c = *parent;
    if (circ_dist(a, b) < 1e-12 && a != b) {
        // Closed interval of circular width ~0: constant subcurve.
        return ClosedCurve::constant(c.point_at(a));
    }
    if (a == b) return ClosedCurve::constant(c.point_at(a));
    int n = c.size();
    double span = b - a;
    if (span <= 0.0) span += 1.0;
    std::vector<SpherePoint> verts;
    verts.push_back(c.point_at(a));
    // Vertices strictly inside (a, a + span).
    int first = static_cast<int>(std::ceil(a * n - 1e-9));
    for (int k = 0; k <= n; ++k) {
        double tv = static_cast<double>(first + k) / n;
        double off = tv - a;
        if (off < 1e-12 / n) continue;
        if (off > span - 1e-12 / n) break;
        verts.push_back(c.point_at(tv));
    }
    // Drop near-duplicate consecutive vertices.
    std::vector<SpherePoint> clean;
    for (const auto& v : verts) {
        if (clean.empty() || angle_between(clean.back(), v) > tol.tol_point) clean.push_back(v);
    }
    if (clean.size() > 1 && angle_between(clean.front(), clean.back()) <= tol.tol_point)
        clean.pop_back();
    if (clean.size() < 3) {
        // Tiny piece: synthesize a midpoint triangle on the carrier arcs.
        clean.clear();
        clean.push_back(c.point_at(a));
        clean.push_back(c.point_at(a + span / 3.0));
        clean.push_back(c.point_at(a + 2.0 * span / 3.0));
    }
    return ClosedCurve(std::move(clean));
}

ClosedCurve cut_corner(const ClosedCurve& c, int v, double r) {
    if (c.is_constant() || r <= 0.0) return c;
    double total = length(c);
    if (4.0 * r >= total) return c;
    int n = c.size();
    double tv = static_cast<double>(c.mod(v)) / n;
    SpherePoint q_out = walk_arclen(c, tv, r, +1);
    SpherePoint q_in = walk_arclen(c, tv, r, -1);
    // Keep vertices whose arc distance from v along the curve exceeds r.
    std::vector<SpherePoint> verts;
    verts.push_back(q_out);
    double acc = 0.0;
    // Walk forward from v; accumulate arc length edge by edge.
    int i = c.mod(v);
    acc = 0.0;
    for (int k = 1; k < n; ++k) {
        acc += angle_between(c.vertex(i + k - 1), c.vertex(i + k));
        double remaining = total - acc;
        if (acc > r && remaining > r) verts.push_back(c.vertex(i + k));
    }
    verts.push_back(q_in);
    // Drop degenerate duplicates.
    std::vector<SpherePoint> clean;
    for (const auto& p : verts) {
        if (clean.empty() || angle_between(clean.back(), p) > 1e-12) clean.push_back(p);
    }
    if (clean.size() < 3) return c;
    return ClosedCurve(std::move(clean));
}

std::pair<ClosedCurve, ClosedCurve> reglue(const ClosedCurve& c, const SelfIntersection& s,
                                           const Tolerances& tol) {
    auto [sa, sb] = split_at(c, s);
    ClosedCurve a = sa.to_curve(tol);
    ClosedCurve b = sb.to_curve(tol);
    double r = tol.smoothing_radius;
    a = cut_corner(a, 0, std::min(r, length(a) / 8.0));
    b = cut_corner(b, 0, std::min(r, length(b) / 8.0));
    return {a, b};
}

int local_orientation_L(const ClosedCurve& c, const SelfIntersection& s, Branch branch,
                        const Tolerances& tol) {
    check_is_crossing(c, s, tol);
    // Branch A leaves the crossing along the strand at the smaller parameter
    // and arrives along the other; its smoothing chord has tangent u + w and
    // cuts off the region in direction u - w, so the frame determinant
    // reduces to -det(u, w) in the oriented tangent plane.
    Vec3 u = c.direction_at(s.t1);
    Vec3 w = c.direction_at(s.t2);
    double det = u.cross(w).dot(s.point);
    if (det == 0.0) throw NotAnIntersection("degenerate frame at crossing");
    int l_a = det > 0.0 ? -1 : 1;
    return branch == Branch::A ? l_a : -l_a;
}

double loop_extent(const ClosedCurve& c, SpherePoint* centre_out) {
    Vec3 mean{0, 0, 0};
    for (const auto& v : c.vertices()) mean = mean + v;
    double mn = mean.norm();
    SpherePoint centre = mn > 1e-9 ? mean / mn : c.vertex(0);
    if (centre_out) *centre_out = centre;
    double ext = 0.0;
    for (const auto& v : c.vertices()) ext = std::max(ext, angle_between(centre, v));
    return ext;
}

int small_loop_orientation(const ClosedCurve& c, const Tolerances& tol) {
    if (c.is_constant()) throw NotSimple("constant curve has no orientation");
    if (!self_intersections(c, tol).empty()) throw NotSimple("curve crosses itself");
    Vec3 mean{0, 0, 0};
    for (const auto& v : c.vertices()) mean = mean + v;
    if (mean.norm() < 0.1 * c.size())
        throw NotSmall("curve is not contained in a small disc");
    SpherePoint centre;
    double ext = loop_extent(c, &centre);
    if (ext >= kPi / 4.0) throw NotSmall("curve does not bound a disc of diameter < pi/2");
    double area2 = 0.0;
    for (int i = 0; i < c.size(); ++i) area2 += c.vertex(i).cross(c.vertex(i + 1)).dot(centre);
    if (area2 == 0.0) throw NotSimple("degenerate loop");
    return area2 > 0.0 ? 1 : -1;
}

double hausdorff_distance(const ClosedCurve& a, const ClosedCurve& b) {
    auto one_sided = [](const ClosedCurve& from, const ClosedCurve& to) {
        double worst = 0.0;
        for (const auto& v : from.vertices()) worst = std::max(worst, min_distance_to_curve(v, to));
        return worst;
    };
    return std::max(one_sided(a, b), one_sided(b, a));
}

ClosedCurve refine(const ClosedCurve& c, int k) {
    if (c.is_constant() || k <= 1) return c;
    std::vector<SpherePoint> verts;
    verts.reserve(static_cast<size_t>(c.size()) * k);
    for (int i = 0; i < c.size(); ++i) {
        const Vec3& a = c.vertex(i);
        const Vec3& b = c.vertex(i + 1);
        for (int j = 0; j < k; ++j) verts.push_back(slerp(a, b, static_cast<double>(j) / k));
    }
    return ClosedCurve(std::move(verts));
}

}  // namespace sweepout
