#include "support/fixtures.hpp"

#include <cmath>

namespace sweepout::fixtures {

ClosedCurve cap_boundary(const SpherePoint& centre, double radius, int n, int orientation) {
    SpherePoint m = centre.normalized();
    Vec3 u = any_orthonormal(m);
    Vec3 v = m.cross(u);
    std::vector<SpherePoint> verts;
    verts.reserve(n);
    for (int i = 0; i < n; ++i) {
        double s = orientation * kTwoPi * i / n;
        verts.push_back((m * std::cos(radius) + (u * std::cos(s) + v * std::sin(s)) * std::sin(radius))
                            .normalized());
    }
    return ClosedCurve(std::move(verts));
}

ClosedCurve chart_polyline(const SpherePoint& site, const std::vector<Vec2>& pts, double scale) {
    Chart chart(-site.normalized());
    std::vector<SpherePoint> verts;
    verts.reserve(pts.size());
    for (const auto& p : pts) verts.push_back(chart.unproject({p.x * scale, p.y * scale}));
    return ClosedCurve(std::move(verts));
}

std::vector<Vec2> lemniscate2d(double a, int n, double sigma_right, double sigma_left) {
    std::vector<Vec2> pts;
    pts.reserve(n);
    for (int i = 0; i < n; ++i) {
        double th = kTwoPi * i / n - kPi / 2.0;  // start at the crossing
        double den = 1.0 + std::sin(th) * std::sin(th);
        Vec2 p{a * std::cos(th) / den, a * std::sin(th) * std::cos(th) / den};
        double sigma = p.x >= 0.0 ? sigma_right : sigma_left;
        pts.push_back(p * sigma);
    }
    // Collapse any run of near-zero points produced by sigma = 0.
    std::vector<Vec2> clean;
    for (const auto& p : pts) {
        if (clean.empty() || (p - clean.back()).norm() > 1e-9 * std::max(1.0, a))
            clean.push_back(p);
    }
    while (clean.size() > 1 && (clean.front() - clean.back()).norm() < 1e-9 * std::max(1.0, a))
        clean.pop_back();
    return clean;
}

std::vector<Vec2> trefoil2d(double a, int n, double lobe) {
    std::vector<Vec2> pts;
    pts.reserve(n);
    for (int i = 0; i < n; ++i) {
        double th = kTwoPi * i / n;
        pts.push_back({a * (std::sin(th) + lobe * std::sin(2.0 * th)) / (1.0 + lobe),
                       a * (std::cos(th) - lobe * std::cos(2.0 * th)) / (1.0 + lobe)});
    }
    return pts;
}

std::vector<Vec2> circle2d(const Vec2& c, double r, int n, bool ccw) {
    std::vector<Vec2> pts;
    pts.reserve(n);
    for (int i = 0; i < n; ++i) {
        double s = (ccw ? 1.0 : -1.0) * kTwoPi * i / n;
        pts.push_back({c.x + r * std::cos(s), c.y + r * std::sin(s)});
    }
    return pts;
}

std::vector<Vec2> insert_kink(const std::vector<Vec2>& host, int at, double size,
                              int orientation, double sigma) {
    if (sigma <= 0.0) return host;
    int n = static_cast<int>(host.size());
    at = ((at % n) + n) % n;
    Vec2 q = host[at];
    Vec2 t = host[(at + 1) % n] - host[(at + n - 1) % n];
    double tn = t.norm();
    t = tn > 0 ? Vec2{t.x / tn, t.y / tn} : Vec2{1, 0};
    Vec2 nrm{-t.y, t.x};
    // Nodal cubic (u^2 - 1, u^3 - u): transverse crossing at the origin with
    // the loop on the u in (-1, 1) range; through-axis is +y.
    std::vector<Vec2> detour;
    const int K = 26;
    const double w = 0.3;
    for (int i = 0; i <= K; ++i) {
        double u = -(1.0 + w) + (2.0 + 2.0 * w) * i / K;
        Vec2 c{u * u - 1.0, u * u * u - u};
        c.x *= -orientation;  // mirror controls which way the loop encloses
        detour.push_back(q + (nrm * c.x + t * c.y) * (0.5 * size * sigma));
    }
    std::vector<Vec2> out;
    out.reserve(host.size() + detour.size());
    for (int i = 0; i < n; ++i) {
        if (i == at)
            out.insert(out.end(), detour.begin(), detour.end());
        else
            out.push_back(host[i]);
    }
    return out;
}

ClosedCurve equator(int n, bool uneven) {
    std::vector<SpherePoint> verts;
    verts.reserve(n);
    for (int i = 0; i < n; ++i) {
        double s = kTwoPi * i / n;
        if (uneven) s += 0.45 * (kTwoPi / n) * std::sin(s);
        verts.push_back({std::cos(s), std::sin(s), 0.0});
    }
    return ClosedCurve(std::move(verts));
}

}  // namespace sweepout::fixtures
