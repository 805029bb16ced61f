#include "sweepout/degree.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace sweepout {

namespace {

// Union of the vertex parameter grids of two curves.
std::vector<double> merged_params(const ClosedCurve& a, const ClosedCurve& b) {
    std::vector<double> ps;
    if (!a.is_constant())
        for (int j = 0; j < a.size(); ++j) ps.push_back(static_cast<double>(j) / a.size());
    if (!b.is_constant())
        for (int j = 0; j < b.size(); ++j) ps.push_back(static_cast<double>(j) / b.size());
    if (ps.empty()) ps.push_back(0.0);
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end(),
                         [](double x, double y) { return std::abs(x - y) < 1e-12; }),
             ps.end());
    return ps;
}

}  // namespace

SweptSurface::SweptSurface(const CurveFamily& f, const Tolerances& tol) {
    margin_ = tol.tol_point;
    for (int i = 0; i + 1 < f.size(); ++i) {
        const ClosedCurve& A = f.curves[i];
        const ClosedCurve& B = f.curves[i + 1];
        if (A.is_constant() && B.is_constant()) continue;
        std::vector<double> ps = merged_params(A, B);
        int K = static_cast<int>(ps.size());
        std::vector<Vec3> pa(K), pb(K);
        for (int k = 0; k < K; ++k) {
            pa[k] = A.point_at(ps[k]);
            pb[k] = B.point_at(ps[k]);
        }
        int index = 0;
        auto add = [&](const Vec3& a, const Vec3& b, const Vec3& c) {
            Vec3 n = (b - a).cross(c - a);
            if (n.norm() < 1e-14) return;
            tris_.push_back({a, b, c, i, index++});
        };
        for (int k = 0; k < K; ++k) {
            int k1 = (k + 1) % K;
            // Quad (A_k, A_k1) x (B_k, B_k1), oriented so the domain frame
            // (time, curve parameter) is positive.
            add(pa[k], pb[k], pb[k1]);
            add(pa[k], pb[k1], pa[k1]);
        }
    }
}

std::optional<SweptSurface::Count> SweptSurface::count(const SpherePoint& probe,
                                                       bool collect_hits) const {
    Count out;
    const Vec3 d = probe.normalized();
    for (const auto& t : tris_) {
        // Safe rejection: any hit point is a convex combination of the
        // vertices, so it cannot sit forward of all of them or farther from
        // the ray line than the circumradius allows.
        if (t.a.dot(d) < 0.0 && t.b.dot(d) < 0.0 && t.c.dot(d) < 0.0) continue;
        Vec3 centroid = (t.a + t.b + t.c) / 3.0;
        double rad2 = std::max({(t.a - centroid).norm2(), (t.b - centroid).norm2(),
                                (t.c - centroid).norm2()});
        double dist2 = (centroid - d * centroid.dot(d)).norm2();
        if (dist2 > rad2 + 1e-9) continue;

        Vec3 n = (t.b - t.a).cross(t.c - t.a);
        double nn = n.norm();
        Vec3 nh = n / nn;
        double denom = nh.dot(d);
        if (std::abs(denom) < 1e-9) return std::nullopt;  // ray grazing the plane
        double plane = nh.dot(t.a);
        double s = plane / denom;
        if (s <= 0.0) continue;
        Vec3 p = d * s;
        // Signed distances from p to the triangle edges within the plane.
        double worst_inside = 1e9;
        bool outside = false;
        const Vec3* vs[4] = {&t.a, &t.b, &t.c, &t.a};
        for (int e = 0; e < 3; ++e) {
            Vec3 edge = *vs[e + 1] - *vs[e];
            double el = edge.norm();
            if (el < 1e-15) continue;
            double side = edge.cross(p - *vs[e]).dot(nh) / el;
            if (side <= -margin_) {
                outside = true;
                break;
            }
            if (side < margin_) return std::nullopt;  // too close to an edge
            worst_inside = std::min(worst_inside, side);
        }
        if (outside) continue;
        int sign = denom > 0 ? 1 : -1;
        out.signed_sum += sign;
        out.unsigned_count += 1;
        if (collect_hits) out.hits.push_back({t.band, t.index, sign});
    }
    return out;
}

namespace {

void check_closed(const CurveFamily& f, const Tolerances& tol) {
    if (f.topology == FamilyTopology::Circle) {
        f.validate(tol);
        return;
    }
    if (!f.curves.front().is_constant() || !f.curves.back().is_constant())
        throw PreconditionViolated(
            "degree needs a circle family or an interval family with constant ends");
}

}  // namespace

DegreeReport family_degree(const CurveFamily& f, const ProbeOptions& opt, const Tolerances& tol) {
    check_closed(f, tol);
    SweptSurface surf(f, tol);
    std::mt19937_64 rng(opt.seed ^ 0xd1b54a32d192ed03ULL);
    std::normal_distribution<double> gauss;
    DegreeReport rep;
    int rejections = 0;
    while (static_cast<int>(rep.witnesses.size()) < opt.probes) {
        if (++rejections > opt.max_rejections)
            throw NoAdmissibleProbe("could not find enough admissible probes");
        Vec3 v{gauss(rng), gauss(rng), gauss(rng)};
        if (v.norm() < 1e-3) continue;
        SpherePoint p = v.normalized();
        auto c = surf.count(p);
        if (!c) continue;
        rep.witnesses.push_back({p, c->unsigned_count, c->signed_sum});
    }
    rep.probes_used = opt.probes;
    rep.degree = rep.witnesses.front().signed_sum;
    for (const auto& w : rep.witnesses) {
        if (w.signed_sum != rep.degree)
            throw ProbeDisagreement("signed preimage sums differ between probes: " +
                                    std::to_string(rep.degree) + " vs " +
                                    std::to_string(w.signed_sum));
    }
    return rep;
}

int degree_from_type1_signs(const std::vector<ReidemeisterEvent>& events) {
    int sum = 0;
    for (const auto& e : events) {
        if (e.kind != EventKind::Type1Creation && e.kind != EventKind::Type1Destruction) continue;
        if (!e.sign) throw PreconditionViolated("type 1 event is missing its sign");
        sum += *e.sign;
    }
    if (sum % 2 != 0)
        throw OddSignSum("sum of type 1 signs is odd: " + std::to_string(sum));
    return sum / 2;
}

int endpoint_orientation_degree(const CurveFamily& f, const ProbeOptions& opt,
                                const Tolerances& tol) {
    if (f.topology != FamilyTopology::Circle)
        throw PreconditionViolated("endpoint orientation degree needs a circle family");
    int m = f.size() - 1;  // distinct samples
    std::vector<bool> is_const(m);
    int n_const = 0;
    for (int i = 0; i < m; ++i) {
        is_const[i] = f.curves[i].is_constant();
        n_const += is_const[i];
    }
    if (n_const == 0 || n_const == m)
        throw PreconditionViolated("family is not constant on a proper sub-interval");
    // The constant samples must form one cyclic run.
    int run_start = -1;
    for (int i = 0; i < m; ++i)
        if (is_const[i] && !is_const[(i + m - 1) % m]) {
            if (run_start >= 0) throw PreconditionViolated("constant samples form several runs");
            run_start = i;
        }
    int run_len = 0;
    while (is_const[(run_start + run_len) % m]) ++run_len;
    const ClosedCurve& before = f.curves[(run_start + m - 1) % m];
    const ClosedCurve& after = f.curves[(run_start + run_len) % m];

    auto evs = detect_events(f, tol);
    for (const auto& e : evs)
        if (e.kind == EventKind::Type1Creation || e.kind == EventKind::Type1Destruction)
            throw PreconditionViolated("family has a type 1 move outside the constant interval");

    int o1 = small_loop_orientation(after, tol);
    int o2 = small_loop_orientation(before, tol);
    if (o1 == o2) return 0;
    int d = family_degree(f, opt, tol).degree;
    if (d != 1 && d != -1)
        throw PreconditionViolated("orientation flip without degree +-1: " + std::to_string(d));
    return d;
}

CurveFamily contract_monotone(const ClosedCurve& c, int steps, const Tolerances& tol) {
    if (c.is_constant()) throw PreconditionViolated("cannot contract a constant curve");
    Vec3 area{0, 0, 0};
    for (int i = 0; i < c.size(); ++i) area = area + c.vertex(i).cross(c.vertex(i + 1));
    if (area.norm() < 1e-12) throw PreconditionViolated("curve has no preferred disc");
    SpherePoint centre = area.normalized();
    Chart chart(-centre);
    std::vector<Vec2> base;
    base.reserve(c.size());
    for (const auto& v : c.vertices()) base.push_back(chart.project(v));
    CurveFamily out;
    out.topology = FamilyTopology::Interval;
    out.times.push_back(0.0);
    out.curves.push_back(c);
    for (int k = 1; k < steps; ++k) {
        double sigma = 1.0 - static_cast<double>(k) / steps;
        std::vector<SpherePoint> verts;
        verts.reserve(base.size());
        for (const auto& q : base) verts.push_back(chart.unproject(q * sigma));
        out.times.push_back(static_cast<double>(k));
        out.curves.push_back(ClosedCurve(std::move(verts)));
    }
    out.times.push_back(steps);
    out.curves.push_back(ClosedCurve::constant(centre));
    (void)tol;
    return out;
}

EvenPreimageProbe even_preimage_probe(const CurveFamily& h, const ProbeOptions& opt,
                                      const Tolerances& tol) {
    if (h.topology != FamilyTopology::Interval)
        throw PreconditionViolated("even preimage search needs an interval family");
    const ClosedCurve& g0 = h.curves.front();
    const ClosedCurve& g1 = h.curves.back();
    if (!self_intersections(g0, tol).empty() || !self_intersections(g1, tol).empty())
        throw PreconditionViolated("end curves must be simple");

    CurveFamily cap0 = contract_monotone(g0, 8, tol);
    CurveFamily cap1 = contract_monotone(g1, 8, tol);
    CurveFamily g = concatenate(concatenate(reverse(cap0), h, tol), cap1, tol);
    int dg = family_degree(g, opt, tol).degree;

    SweptSurface sh(h, tol), s0(cap0, tol), s1(cap1, tol);
    std::mt19937_64 rng(opt.seed ^ 0x94d049bb133111ebULL);
    std::normal_distribution<double> gauss;
    bool want_caps_once = (dg % 2 + 2) % 2 == 1;
    for (int attempt = 0; attempt < opt.max_rejections; ++attempt) {
        Vec3 v{gauss(rng), gauss(rng), gauss(rng)};
        if (v.norm() < 1e-3) continue;
        SpherePoint p = v.normalized();
        auto ch = sh.count(p);
        auto c0 = s0.count(p);
        auto c1 = s1.count(p);
        if (!ch || !c0 || !c1) continue;
        int caps = c0->unsigned_count + c1->unsigned_count;
        if (want_caps_once ? caps != 1 : caps != 0) continue;
        // Parity bookkeeping of the closed-up map makes this count even.
        if (ch->unsigned_count % 2 != 0)
            throw ProbeDisagreement("preimage count parity contradicts the closed-up degree");
        return {p, ch->unsigned_count};
    }
    throw NoAdmissibleProbe("no probe found in the required region");
}

}  // namespace sweepout
