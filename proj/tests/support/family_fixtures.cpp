#include "support/family_fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace sweepout::fixtures {

double shoelace2d(const std::vector<Vec2>& pts) {
    double s = 0.0;
    int n = static_cast<int>(pts.size());
    for (int i = 0; i < n; ++i) s += pts[i].cross(pts[(i + 1) % n]);
    return 0.5 * s;
}

std::vector<Vec2> mirror2d_x(const std::vector<Vec2>& pts) {
    std::vector<Vec2> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back({-p.x, p.y});
    return out;
}

namespace {

Vec2 rot2(const Vec2& v, double ang) {
    double c = std::cos(ang), s = std::sin(ang);
    return {c * v.x - s * v.y, s * v.x + c * v.y};
}

bool seg_cross2d(const Vec2& a0, const Vec2& a1, const Vec2& b0, const Vec2& b1) {
    Vec2 d1 = a1 - a0, d2 = b1 - b0;
    double den = d1.cross(d2);
    if (std::abs(den) < 1e-14) return false;
    Vec2 w = b0 - a0;
    double u = w.cross(d2) / den;
    double v = w.cross(d1) / den;
    return u >= 0 && u < 1 && v >= 0 && v < 1;
}

// Self-crossing count of an open polyline.
int open_polyline_crossings(const std::vector<Vec2>& pts) {
    int n = static_cast<int>(pts.size());
    int count = 0;
    for (int i = 0; i + 1 < n; ++i)
        for (int j = i + 2; j + 1 < n; ++j)
            if (seg_cross2d(pts[i], pts[i + 1], pts[j], pts[j + 1])) ++count;
    return count;
}

std::vector<Vec2> lerp2d(const std::vector<Vec2>& a, const std::vector<Vec2>& b, double t) {
    std::vector<Vec2> out;
    out.reserve(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        out.push_back({a[i].x + (b[i].x - a[i].x) * t, a[i].y + (b[i].y - a[i].y) * t});
    return out;
}

Vec3 area_vector(const ClosedCurve& c) {
    Vec3 a{0, 0, 0};
    for (int i = 0; i < c.size(); ++i) a = a + c.vertex(i).cross(c.vertex(i + 1));
    return a;
}

void push_times(CurveFamily& f) {
    f.times.clear();
    for (int i = 0; i < f.size(); ++i) f.times.push_back(static_cast<double>(i));
}

}  // namespace

ClosedCurve cap_boundary_from(const SpherePoint& centre, double radius, int n,
                              const Vec3& azimuth_ref, int orientation) {
    SpherePoint m = centre.normalized();
    Vec3 u = azimuth_ref - m * m.dot(azimuth_ref);
    u = u.norm() > 1e-9 ? u.normalized() : any_orthonormal(m);
    Vec3 v = m.cross(u);
    std::vector<SpherePoint> verts;
    verts.reserve(n);
    for (int i = 0; i < n; ++i) {
        double s = orientation * kTwoPi * i / n;
        verts.push_back(
            (m * std::cos(radius) + (u * std::cos(s) + v * std::sin(s)) * std::sin(radius))
                .normalized());
    }
    return ClosedCurve(std::move(verts));
}

CurveFamily wobble_family(std::uint64_t seed, int samples, int verts) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> amp(0.08, 0.22), phase(0.0, kTwoPi);
    double a1 = amp(rng), a2 = amp(rng);
    double p1 = phase(rng), p2 = phase(rng), q1 = phase(rng), q2 = phase(rng);
    int k1 = 2, k2 = 3;
    SpherePoint site = Vec3{0.3, -0.2, -0.93}.normalized();
    auto shape = [&](double t) {
        std::vector<Vec2> pts;
        pts.reserve(verts);
        for (int i = 0; i < verts; ++i) {
            double th = kTwoPi * i / verts;
            double r = 1.0 + a1 * std::cos(k1 * th + p1) * std::cos(kTwoPi * t + q1) +
                       a2 * std::cos(k2 * th + p2) * std::cos(kTwoPi * t + q2);
            pts.push_back({r * std::cos(th), r * std::sin(th)});
        }
        return chart_polyline(site, pts, 0.4);
    };
    CurveFamily f;
    f.topology = FamilyTopology::Circle;
    for (int j = 0; j < samples; ++j) f.curves.push_back(shape(static_cast<double>(j) / samples));
    f.curves.push_back(f.curves.front());
    push_times(f);
    return f;
}

CurveFamily rotating_eight_family(int samples, int verts) {
    SpherePoint site = Vec3{-0.25, 0.35, -0.9}.normalized();
    std::vector<Vec2> base = lemniscate2d(1.0, verts);
    CurveFamily f;
    f.topology = FamilyTopology::Circle;
    for (int j = 0; j < samples; ++j) {
        double ang = kTwoPi * j / samples;
        std::vector<Vec2> pts;
        pts.reserve(base.size());
        for (const auto& p : base) pts.push_back(rot2(p, ang));
        f.curves.push_back(chart_polyline(site, pts, 0.35));
    }
    f.curves.push_back(f.curves.front());
    push_times(f);
    return f;
}

CurveFamily two_move_sweepout(int idle_prefix, int V, int V2, int sweep_steps) {
    const SpherePoint site{0, 0, -1};
    const double lam = 0.45;
    auto to_sphere = [&](const std::vector<Vec2>& pts) { return chart_polyline(site, pts, lam); };

    // Chart keyframes from the full figure-eight down to a round circle.
    std::vector<std::vector<Vec2>> key2d;
    for (double sr : {1.0, 0.7, 0.45, 0.25, 0.12, 0.04})
        key2d.push_back(lemniscate2d(1.0, V, sr, 1.0));
    std::vector<Vec2> tear = lemniscate2d(1.0, V, 0.0, 1.0);
    bool ccw = shoelace2d(tear) > 0;
    std::vector<Vec2> circ = circle2d({-0.5, 0.0}, 0.42, static_cast<int>(tear.size()), ccw);
    // Start the circle at its point nearest the teardrop corner.
    int best = 0;
    for (size_t i = 1; i < circ.size(); ++i)
        if ((circ[i] - tear[0]).norm() < (circ[best] - tear[0]).norm()) best = static_cast<int>(i);
    std::rotate(circ.begin(), circ.begin() + best, circ.end());
    key2d.push_back(tear);
    for (double t : {0.35, 0.7}) key2d.push_back(lerp2d(tear, circ, t));
    key2d.push_back(circ);

    CurveFamily f;
    f.topology = FamilyTopology::Circle;
    for (int j = 0; j <= idle_prefix; ++j) f.curves.push_back(to_sphere(key2d[0]));
    for (size_t k = 1; k < key2d.size(); ++k) f.curves.push_back(to_sphere(key2d[k]));

    // Sweep over the sphere: the circle is a spherical cap boundary; walk its
    // radius through pi - rho_far while keeping the axis fixed.
    ClosedCurve c2e = f.curves.back();
    Vec3 area = area_vector(c2e);
    SpherePoint u_near = (-area).normalized();
    double rho0 = 0.0;
    for (const auto& v : c2e.vertices()) rho0 += angle_between(u_near, v);
    rho0 /= c2e.size();
    const double rho_far = 0.18;
    for (int j = 1; j <= sweep_steps; ++j) {
        double rho = rho0 + (kPi - rho_far - rho0) * j / sweep_steps;
        f.curves.push_back(cap_boundary_from(u_near, rho, V2, c2e.vertex(0), -1));
    }

    // Slide the far small circle back to the mirrored site.
    std::vector<Vec2> circ_m = mirror2d_x(circ);
    ClosedCurve p5start = to_sphere(circ_m);
    SpherePoint c_tgt = area_vector(p5start).normalized();
    double r_tgt = 0.0;
    for (const auto& v : p5start.vertices()) r_tgt += angle_between(c_tgt, v);
    r_tgt /= p5start.size();
    SpherePoint c0 = -u_near;
    Vec3 axis = c0.cross(c_tgt);
    axis = axis.norm() > 1e-9 ? axis.normalized() : any_orthonormal(c0);
    double th_tot = angle_between(c0, c_tgt);
    Vec3 ref = f.curves.back().vertex(0);
    int slide_steps = std::max(6, (3 * sweep_steps) / 4);
    for (int j = 1; j <= slide_steps; ++j) {
        double t = static_cast<double>(j) / slide_steps;
        SpherePoint c = rotate_about(c0, axis, th_tot * t);
        Vec3 rj = rotate_about(ref, axis, th_tot * t);
        f.curves.push_back(cap_boundary_from(c, rho_far + (r_tgt - rho_far) * t, V2, rj, +1));
    }

    // Regrow the other lobe: the mirror image of the opening keyframes. The
    // figure-eight is symmetric under the mirror with a half-period parameter
    // shift, so the crossing-bearing frames are emitted directly with swapped
    // lobe scales to keep parameter labels aligned for tracking.
    for (int k = static_cast<int>(key2d.size()) - 1; k >= 1; --k) {
        if (k <= 5) {
            double sr = std::vector<double>{1.0, 0.7, 0.45, 0.25, 0.12, 0.04}[k];
            f.curves.push_back(to_sphere(lemniscate2d(1.0, V, 1.0, sr)));
        } else {
            f.curves.push_back(to_sphere(mirror2d_x(key2d[k])));
        }
    }
    f.curves.push_back(f.curves.front());
    push_times(f);
    return f;
}

CurveFamily strand_flip_family(int hold) {
    // Strand B runs at +60 degrees and strand C at +120 degrees through the
    // origin; strand A is horizontal at height h and slides across their
    // crossing. Connectors close the curve away from the scene; two of them
    // cross once, giving one stationary crossing.
    auto scene = [&](double h) {
        std::vector<Vec2> pts;
        auto line = [&](Vec2 from, Vec2 to, int k) {
            for (int i = 0; i < k; ++i)
                pts.push_back(from + (to - from) * (static_cast<double>(i) / k));
        };
        line({-2.2, h}, {2.2, h}, 24);             // A
        line({2.2, h}, {2.6, -0.7}, 3);            // connector 1
        line({2.6, -0.7}, {1.6, -1.9}, 3);
        line({1.6, -1.9}, {-0.4, -1.55}, 3);
        line({-0.4, -1.55}, {-0.55, -0.953}, 2);
        line({-0.55, -0.953}, {0.55, 0.953}, 24);  // B
        line({0.55, 0.953}, {1.6, 1.2}, 3);        // connector 2
        line({1.6, 1.2}, {2.5, 0.3}, 3);
        line({2.5, 0.3}, {2.5, -0.5}, 3);
        line({2.5, -0.5}, {1.6, -1.3}, 3);
        line({1.6, -1.3}, {0.55, -0.953}, 3);
        line({0.55, -0.953}, {-0.55, 0.953}, 24);  // C
        line({-0.55, 0.953}, {-1.3, 1.45}, 3);     // connector 3
        line({-1.3, 1.45}, {-2.15, 0.9}, 3);
        line({-2.15, 0.9}, {-2.45, h + 0.25}, 3);
        line({-2.45, h + 0.25}, {-2.2, h}, 2);
        return pts;
    };
    SpherePoint site = Vec3{0.15, 0.25, -0.95}.normalized();
    std::vector<double> heights;
    for (int k = 0; k <= 6; ++k) heights.push_back(-0.13 + 0.26 * k / 6.0 + 0.004);
    CurveFamily f;
    f.topology = FamilyTopology::Circle;
    for (double h : heights) f.curves.push_back(chart_polyline(site, scene(h), 0.28));
    for (int k = 0; k < hold; ++k) f.curves.push_back(f.curves.back());
    for (int k = static_cast<int>(heights.size()) - 2; k >= 0; --k)
        f.curves.push_back(chart_polyline(site, scene(heights[k]), 0.28));
    f.curves.back() = f.curves.front();
    push_times(f);
    return f;
}

// --- kink / roll template ----------------------------------------------------

namespace {

// Template points in local units: through-axis +y, loop toward +x for
// orientation +1. sigma scales the detour, tau swings the loop toward the
// outgoing strand.
std::vector<Vec2> kink_roll_template(double sigma, double tau, int orientation) {
    std::vector<Vec2> pts;
    if (sigma <= 0.0) return pts;
    const double w = 0.35;
    const int K = 30;
    pts.push_back({0.0, -1.5});
    for (int i = 0; i <= K; ++i) {
        double u = -(1.0 + w) + (2.0 + 2.0 * w) * i / K;
        double x = orientation * (1.0 - u * u);
        double y = u * u * u - u;
        Vec2 p{x, y};
        if (std::abs(u) > 1.0) {
            p.x *= std::max(0.0, (1.0 + w - std::abs(u)) / w);
        } else {
            p = rot2(p, orientation * tau);
        }
        pts.push_back(p * sigma);
    }
    pts.push_back({0.0, 1.5});
    // sigma scales the tail anchors as well so the detour vanishes smoothly.
    pts.front() = pts.front() * sigma;
    pts.back() = pts.back() * sigma;
    return pts;
}

}  // namespace

std::vector<KinkRollStage> kink_only_schedule() {
    return {{0.35, 0}, {0.7, 0}, {1.0, 0}, {1.0, 0}, {0.7, 0}, {0.35, 0}};
}

double site_clearance(const ClosedCurve& c, int v, double exclusion_radius) {
    SpherePoint site = c.vertex(v);
    double best = kPi;
    for (int i = 0; i < c.size(); ++i) {
        if (angle_between(c.vertex(i), site) < exclusion_radius ||
            angle_between(c.vertex(i + 1), site) < exclusion_radius)
            continue;
        best = std::min(best, point_to_arc_distance(site, c.vertex(i), c.vertex(i + 1)));
    }
    return best;
}

namespace {

ClosedCurve splice_kink_roll(const ClosedCurve& c, int v, double size, int orientation,
                             const KinkRollStage& st) {
    std::vector<Vec2> tmpl = kink_roll_template(st.sigma, st.tau, orientation);
    if (tmpl.empty()) return c;
    SpherePoint site = c.vertex(v);
    Chart chart(-site);
    Vec2 pv = chart.project(site);
    Vec2 pprev = chart.project(c.vertex(v - 1));
    Vec2 pnext = chart.project(c.vertex(v + 1));
    Vec2 t = pnext - pprev;
    double tn = t.norm();
    t = tn > 0 ? Vec2{t.x / tn, t.y / tn} : Vec2{1, 0};
    Vec2 nrm{-t.y, t.x};
    double s_chart = size / 2.0;
    // Replace every host vertex within the template span around the site.
    double removal = 1.55 * size;
    std::vector<SpherePoint> verts;
    int n = c.size();
    for (int i = 0; i < n; ++i) {
        int idx = c.mod(v + i);
        if (i != 0 && angle_between(c.vertex(idx), site) < removal) continue;
        if (i == 0) {
            for (const auto& q : tmpl) {
                Vec2 m = pv + (nrm * q.x + t * q.y) * s_chart;
                verts.push_back(chart.unproject(m));
            }
        } else {
            verts.push_back(c.vertex(idx));
        }
    }
    return ClosedCurve(std::move(verts));
}

}  // namespace

std::vector<KinkRollStage> kink_roll_schedule(const ClosedCurve& host, int host_vertex,
                                              double size, int orientation) {
    // The roll dynamics are local to the feature; count crossings among the
    // spliced edges near the site only.
    SpherePoint site = host.vertex(host_vertex);
    auto count_at = [&](double tau) {
        ClosedCurve c = splice_kink_roll(host, host_vertex, size, orientation, {1.0, tau});
        // The template sits at index 0 and the near-site run wraps around it.
        int n = c.size();
        int lo = 0, hi = 0;
        while (lo > -n && angle_between(c.vertex(lo - 1), site) < 2.3 * size) --lo;
        while (hi < n && angle_between(c.vertex(hi + 1), site) < 2.3 * size) ++hi;
        std::vector<SpherePoint> local;
        for (int i = lo; i <= hi; ++i) local.push_back(c.vertex(i));
        int count = 0;
        int m = static_cast<int>(local.size());
        for (int i = 0; i + 1 < m; ++i)
            for (int j = i + 2; j + 1 < m; ++j)
                if (intersect_arcs(local[i], local[i + 1], local[j], local[j + 1])) ++count;
        return count;
    };
    std::vector<std::pair<double, int>> grid;
    const double step = 0.002, tau_hi = 2.1;
    for (double t = 0.0; t <= tau_hi + 1e-9; t += step) grid.push_back({t, count_at(t)});
    for (int pass = 0; pass < 16; ++pass) {
        bool split = false;
        std::vector<std::pair<double, int>> next;
        for (size_t i = 0; i + 1 < grid.size(); ++i) {
            next.push_back(grid[i]);
            if (std::abs(grid[i + 1].second - grid[i].second) > 2 &&
                grid[i + 1].first - grid[i].first > 1e-6) {
                double mid = 0.5 * (grid[i].first + grid[i + 1].first);
                next.push_back({mid, count_at(mid)});
                split = true;
            }
        }
        next.push_back(grid.back());
        grid = std::move(next);
        if (!split) break;
    }
    // One keyframe per plateau of the crossing-count function, at the plateau
    // midpoint, so every transition crosses exactly one tangency.
    std::vector<KinkRollStage> stages = {{0.4, 0.0}, {0.8, 0.0}, {1.0, 0.0}};
    size_t i = 0;
    int last_count = 1;
    while (i < grid.size()) {
        size_t j = i;
        while (j + 1 < grid.size() && grid[j + 1].second == grid[i].second) ++j;
        double mid = 0.5 * (grid[i].first + grid[j].first);
        if (mid > 1e-9) {
            int delta = std::abs(grid[i].second - last_count);
            if (delta > 2 || grid[i].second < 0)
                throw PreconditionViolated("roll produced a non-elementary transition");
            stages.push_back({1.0, mid});
            last_count = grid[i].second;
        }
        i = j + 1;
    }
    if (last_count != 1)
        throw PreconditionViolated("kink roll did not settle to a single crossing");
    double tail = stages.back().tau;
    stages.push_back({0.6, tail});
    stages.push_back({0.3, tail});
    return stages;
}

void inject_kink_roll(CurveFamily& family, int begin, int host_vertex, double size,
                      int orientation, const std::vector<KinkRollStage>& schedule) {
    for (size_t s = 0; s < schedule.size(); ++s) {
        int k = begin + static_cast<int>(s);
        family.curves[k] = splice_kink_roll(family.curves[k], host_vertex, size, orientation,
                                            schedule[s]);
    }
}

CurveFamily random_generic_family(std::uint64_t seed, const RandomFamilyConfig& cfg) {
    for (int attempt = 0; attempt < cfg.max_attempts; ++attempt) {
        std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * attempt);
        int base = cfg.base >= 0 ? cfg.base : static_cast<int>(rng() % 4);
        int n_inj = cfg.max_injections > 0 ? 1 + static_cast<int>(rng() % cfg.max_injections) : 0;
        std::vector<bool> wants_roll;
        int prefix = 1;
        for (int i = 0; i < n_inj; ++i) {
            wants_roll.push_back(rng() % 2 == 0);
            // Roll schedules are site-dependent; reserve a generous window.
            prefix += (wants_roll.back() ? 16 : 6) + 2;
        }
        CurveFamily f;
        bool reversed_base = base == 3;
        switch (base) {
            case 0: f = wobble_family(rng(), 24 + prefix, 64); break;
            case 1: f = rotating_eight_family(20 + prefix, 72); break;
            default: f = two_move_sweepout(prefix, 96, 64, 10); break;
        }
        // Hold the opening curve through the injection windows.
        for (int j = 1; j <= prefix && base <= 1; ++j) f.curves[j] = f.curves[0];
        bool ok = true;
        int cursor = 2;
        std::vector<SpherePoint> sites;
        std::uniform_real_distribution<double> size_dist(0.05, 0.085);
        for (int i = 0; i < n_inj && ok; ++i) {
            double size = size_dist(rng);
            int orientation = rng() % 2 ? 1 : -1;
            const ClosedCurve& host = f.curves[cursor];
            int host_vertex = -1;
            for (int tries = 0; tries < 60; ++tries) {
                int v = static_cast<int>(rng() % host.size());
                if (site_clearance(host, v, 1.7 * size) < 1.6 * size) continue;
                bool clash = false;
                for (const auto& s : sites)
                    clash |= angle_between(s, host.vertex(v)) < 4.0 * size;
                if (clash) continue;
                host_vertex = v;
                break;
            }
            if (host_vertex < 0) {
                ok = false;
                break;
            }
            std::vector<KinkRollStage> schedule;
            try {
                schedule = wants_roll[i] ? kink_roll_schedule(host, host_vertex, size, orientation)
                                         : kink_only_schedule();
            } catch (const Error&) {
                ok = false;
                break;
            }
            if (cursor + static_cast<int>(schedule.size()) + 1 > prefix) {
                ok = false;
                break;
            }
            sites.push_back(host.vertex(host_vertex));
            inject_kink_roll(f, cursor, host_vertex, size, orientation, schedule);
            cursor += static_cast<int>(schedule.size()) + 2;
        }
        if (!ok) continue;
        if (reversed_base) f = reverse(f);
        GenericityReport rep = validate_genericity(f, 1e9, 1e9);
        if (rep.ok) return f;
    }
    throw PreconditionViolated("random family generation failed for this seed");
}

CurveFamily meridian_sweepout(int sweep_steps, int slide_steps, int verts) {
    SpherePoint north{0, 0, 1}, south{0, 0, -1};
    CurveFamily f;
    f.topology = FamilyTopology::Circle;
    f.curves.push_back(ClosedCurve::constant(south));
    for (int k = 1; k < sweep_steps; ++k) {
        double rho = kPi - (kPi - 0.12) * static_cast<double>(k) / sweep_steps;
        f.curves.push_back(cap_boundary(north, rho, verts));
    }
    f.curves.push_back(ClosedCurve::constant(north));
    for (int k = 1; k < slide_steps; ++k) {
        double ang = kPi * k / slide_steps;
        f.curves.push_back(ClosedCurve::constant(
            Vec3{std::sin(ang), 0.0, std::cos(ang)}.normalized()));
    }
    f.curves.push_back(ClosedCurve::constant(south));
    push_times(f);
    return f;
}

CurveFamily loop_pulse_family(int steps, int verts) {
    SpherePoint c = Vec3{0.4, 0.1, -0.91}.normalized();
    CurveFamily f;
    f.topology = FamilyTopology::Circle;
    for (int k = 0; k < 3; ++k) f.curves.push_back(ClosedCurve::constant(c));
    for (int k = 1; k <= steps; ++k)
        f.curves.push_back(cap_boundary(c, 0.45 * k / steps, verts));
    for (int k = steps; k >= 1; --k)
        f.curves.push_back(cap_boundary(c, 0.45 * k / steps, verts));
    f.curves.push_back(ClosedCurve::constant(c));
    f.curves.back() = f.curves.front();
    push_times(f);
    return f;
}

CurveFamily rotation_homotopy(int steps, int verts) {
    CurveFamily f;
    f.topology = FamilyTopology::Interval;
    ClosedCurve eq = equator(verts);
    Vec3 axis{1, 0, 0};
    for (int k = 0; k <= steps; ++k) {
        double ang = kPi * k / steps;
        std::vector<SpherePoint> verts3;
        for (const auto& v : eq.vertices()) verts3.push_back(rotate_about(v, axis, ang));
        f.curves.push_back(ClosedCurve(std::move(verts3)));
    }
    // Slide slightly south so the end curve has its own image.
    ClosedCurve last = f.curves.back();
    for (int k = 1; k <= 4; ++k) {
        std::vector<SpherePoint> verts3;
        for (const auto& v : last.vertices())
            verts3.push_back(slerp(v, Vec3{v.x, v.y, -0.35}.normalized(), 0.25 * k));
        f.curves.push_back(ClosedCurve(std::move(verts3)));
    }
    push_times(f);
    return f;
}

CurveFamily random_homotopy(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    int kind = static_cast<int>(rng() % 3);
    if (kind == 0) {
        // Star-shaped wobble morph in one chart.
        SpherePoint site = Vec3{uni(rng) - 0.5, uni(rng) - 0.5, -1.0}.normalized();
        double a1 = 0.25 * uni(rng), a2 = 0.25 * uni(rng);
        double p1 = kTwoPi * uni(rng), p2 = kTwoPi * uni(rng);
        int verts = 40;
        CurveFamily f;
        f.topology = FamilyTopology::Interval;
        for (int k = 0; k <= 14; ++k) {
            double t = static_cast<double>(k) / 14.0;
            std::vector<Vec2> pts;
            for (int i = 0; i < verts; ++i) {
                double th = kTwoPi * i / verts;
                double r = 1.0 + t * a1 * std::cos(3 * th + p1) +
                           (1.0 - t) * a2 * std::cos(2 * th + p2);
                pts.push_back({r * std::cos(th), r * std::sin(th)});
            }
            f.curves.push_back(chart_polyline(site, pts, 0.3 + 0.25 * t));
        }
        push_times(f);
        return f;
    }
    if (kind == 1) {
        // Latitude sweep between two small circles.
        double r0 = 0.2 + 0.3 * uni(rng), r1 = 0.2 + 0.3 * uni(rng);
        SpherePoint axis = Vec3{uni(rng) - 0.5, uni(rng) - 0.5, uni(rng) - 0.5}.normalized();
        CurveFamily f;
        f.topology = FamilyTopology::Interval;
        for (int k = 0; k <= 12; ++k) {
            double t = static_cast<double>(k) / 12.0;
            f.curves.push_back(cap_boundary(axis, r0 + (kPi - r0 - r1) * t, 40));
        }
        push_times(f);
        return f;
    }
    // Partial rotation of a latitude circle plus a morph.
    double ang_max = kPi * (0.5 + 0.5 * uni(rng));
    Vec3 axis = Vec3{1.0, uni(rng) - 0.5, uni(rng) - 0.5}.normalized();
    ClosedCurve base = cap_boundary({0, 0, 1}, 1.2 + 0.3 * uni(rng), 44);
    CurveFamily f;
    f.topology = FamilyTopology::Interval;
    for (int k = 0; k <= 16; ++k) {
        double ang = ang_max * k / 16.0;
        std::vector<SpherePoint> verts3;
        for (const auto& v : base.vertices()) verts3.push_back(rotate_about(v, axis, ang));
        f.curves.push_back(ClosedCurve(std::move(verts3)));
    }
    push_times(f);
    return f;
}

PathologyFixture replication_pathology() {
    SpherePoint c = Vec3{-0.3, 0.2, -0.93}.normalized();
    CurveFamily f;
    f.topology = FamilyTopology::Interval;
    f.curves.push_back(ClosedCurve::constant(c));
    for (int k = 1; k <= 4; ++k) f.curves.push_back(cap_boundary(c, 0.5 * k / 4.0, 48));
    for (int k = 0; k < 17; ++k) f.curves.push_back(f.curves.back());  // hold 5..21
    for (int k = 4; k >= 1; --k) f.curves.push_back(cap_boundary(c, 0.5 * k / 4.0, 48));
    f.curves.push_back(ClosedCurve::constant(c));
    push_times(f);

    const ClosedCurve host = f.curves[6];  // copy: injections mutate the samples
    int va = -1, vb = -1;
    for (int i = 0; i < host.size() && (va < 0 || vb < 0); ++i) {
        if (site_clearance(host, i, 0.12) < 0.11) continue;
        if (va < 0) {
            va = i;
        } else if (angle_between(host.vertex(i), host.vertex(va)) > 0.35) {
            vb = i;
        }
    }
    if (va < 0 || vb < 0) throw PreconditionViolated("no clear sites on the pathology host");
    std::vector<KinkRollStage> a_sched = {{0.35, 0}, {0.7, 0}, {1, 0}, {1, 0}, {1, 0},
                                          {1, 0},    {1, 0},   {1, 0}, {0.7, 0}, {0.35, 0}};
    std::vector<KinkRollStage> b_sched = {{0.35, 0}, {0.7, 0}, {1, 0}, {1, 0}, {0.7, 0}, {0.35, 0}};
    inject_kink_roll(f, 6, va, 0.07, +1, a_sched);
    // The second site must be located on the already-spliced curves.
    SpherePoint pb = host.vertex(vb);
    int vbs = 0;
    for (int i = 1; i < f.curves[8].size(); ++i)
        if (angle_between(f.curves[8].vertex(i), pb) < angle_between(f.curves[8].vertex(vbs), pb))
            vbs = i;
    inject_kink_roll(f, 8, vbs, 0.07, +1, b_sched);
    return {f, 5, 15, 7, 13};
}

void check_family_continuity(const CurveFamily& f, double hausdorff_cap) {
    for (int i = 0; i + 1 < f.size(); ++i) {
        double h = hausdorff_distance(f.curves[i], f.curves[i + 1]);
        if (h > hausdorff_cap)
            throw PreconditionViolated("family jump at sample " + std::to_string(i) + ": " +
                                       std::to_string(h));
        Vec3 a1 = area_vector(f.curves[i]);
        Vec3 a2 = area_vector(f.curves[i + 1]);
        if (a1.norm() > 0.05 && a2.norm() > 0.05 && a1.normalized().dot(a2.normalized()) < 0.0)
            throw PreconditionViolated("orientation flip at sample " + std::to_string(i));
    }
}

}  // namespace sweepout::fixtures
