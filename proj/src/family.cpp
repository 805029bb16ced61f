#include "sweepout/family.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace sweepout {

const char* to_string(EventKind k) {
    switch (k) {
        case EventKind::Type1Creation: return "type1_creation";
        case EventKind::Type1Destruction: return "type1_destruction";
        case EventKind::Type2Creation: return "type2_creation";
        case EventKind::Type2Destruction: return "type2_destruction";
        case EventKind::Type3: return "type3";
    }
    return "?";
}

bool curves_equal(const ClosedCurve& a, const ClosedCurve& b, double tol_point) {
    if (a.size() != b.size()) return false;
    for (int i = 0; i < a.size(); ++i)
        if (angle_between(a.vertex(i), b.vertex(i)) > tol_point) return false;
    return true;
}

void CurveFamily::validate(const Tolerances& tol) const {
    if (curves.empty()) throw InvalidFamily("family has no samples");
    if (times.size() != curves.size()) throw InvalidFamily("times and curves differ in length");
    for (size_t i = 1; i < times.size(); ++i)
        if (times[i] <= times[i - 1]) throw InvalidFamily("sample times are not increasing");
    for (const auto& c : curves) c.validate(tol);
    if (topology == FamilyTopology::Circle) {
        if (size() < 3) throw InvalidFamily("circle family needs at least 3 samples");
        if (!curves_equal(curves.front(), curves.back(), tol.tol_point))
            throw InvalidFamily("circle family does not close up");
    }
}

namespace {

struct Matching {
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> died;  // unmatched ids on the left sample
    std::vector<int> born;  // unmatched ids on the right sample
};

Matching match_crossings(const std::vector<SelfIntersection>& xs,
                         const std::vector<SelfIntersection>& ys, const Tolerances& tol) {
    struct Cand {
        double cost;
        double point_dist;
        int i, j;
    };
    std::vector<Cand> cands;
    for (size_t i = 0; i < xs.size(); ++i) {
        for (size_t j = 0; j < ys.size(); ++j) {
            double pd = angle_between(xs[i].point, ys[j].point);
            if (pd > tol.tol_track) continue;
            double par = std::min(circ_dist(xs[i].t1, ys[j].t1) + circ_dist(xs[i].t2, ys[j].t2),
                                  circ_dist(xs[i].t1, ys[j].t2) + circ_dist(xs[i].t2, ys[j].t1));
            cands.push_back({pd + 0.25 * par, pd, static_cast<int>(i), static_cast<int>(j)});
        }
    }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) { return a.cost < b.cost; });
    Matching m;
    std::vector<bool> usedL(xs.size(), false), usedR(ys.size(), false);
    for (size_t k = 0; k < cands.size(); ++k) {
        const Cand& c = cands[k];
        if (usedL[c.i] || usedR[c.j]) continue;
        // A genuinely ambiguous tie: another live candidate for the same
        // predecessor at indistinguishable cost.
        for (size_t l = k + 1; l < cands.size(); ++l) {
            if (cands[l].cost - c.cost > 1e-9) break;
            if ((cands[l].i == c.i) != (cands[l].j == c.j))
                throw AmbiguousTracking("two crossings at adjacent samples match one predecessor");
        }
        usedL[c.i] = usedR[c.j] = true;
        m.pairs.push_back({c.i, c.j});
    }
    for (size_t i = 0; i < xs.size(); ++i)
        if (!usedL[i]) m.died.push_back(static_cast<int>(i));
    for (size_t j = 0; j < ys.size(); ++j)
        if (!usedR[j]) m.born.push_back(static_cast<int>(j));
    return m;
}

// Cyclic word of crossing ids in curve-parameter order (each id twice).
std::vector<int> crossing_word(const std::vector<SelfIntersection>& xs) {
    std::vector<std::pair<double, int>> entries;
    for (size_t i = 0; i < xs.size(); ++i) {
        entries.push_back({xs[i].t1, static_cast<int>(i)});
        entries.push_back({xs[i].t2, static_cast<int>(i)});
    }
    std::sort(entries.begin(), entries.end());
    std::vector<int> w;
    w.reserve(entries.size());
    for (const auto& e : entries) w.push_back(e.second);
    return w;
}

bool cyclic_equal(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    int n = static_cast<int>(a.size());
    for (int off = 0; off < n; ++off) {
        bool eq = true;
        for (int i = 0; i < n && eq; ++i) eq = a[i] == b[(i + off) % n];
        if (eq) return true;
    }
    return false;
}

// Ids whose positions changed, minimized over cyclic alignments of b.
std::vector<int> changed_ids(const std::vector<int>& a, const std::vector<int>& b) {
    int n = static_cast<int>(a.size());
    if (n == 0) return {};
    std::vector<int> best;
    bool have = false;
    for (int off = 0; off < n; ++off) {
        std::vector<int> diff;
        for (int i = 0; i < n; ++i) {
            if (a[i] != b[(i + off) % n]) {
                if (diff.empty() || diff.back() != a[i]) diff.push_back(a[i]);
            }
        }
        std::sort(diff.begin(), diff.end());
        diff.erase(std::unique(diff.begin(), diff.end()), diff.end());
        if (!have || diff.size() < best.size()) {
            best = diff;
            have = true;
        }
    }
    return best;
}

double min_piece_diameter(const ClosedCurve& c, const SelfIntersection& s) {
    auto [p1, p2] = split_at(c, s);
    double d1 = 2.0 * loop_extent(p1.to_curve());
    double d2 = 2.0 * loop_extent(p2.to_curve());
    return std::min(d1, d2);
}

// Arc length of the curve between two parameters, walking forward.
double arc_span(const ClosedCurve& c, double from, double to) {
    double span = to - from;
    if (span < 0) span += 1.0;
    int n = c.size();
    double total = 0.0;
    double t = wrap01(from);
    double remaining = span;
    for (int guard = 0; guard < 4 * n + 8 && remaining > 1e-15; ++guard) {
        int edge = std::min(static_cast<int>(t * n), n - 1);
        double edge_end = static_cast<double>(edge + 1) / n;
        double avail = edge_end - t;
        if (avail <= 1e-15) {
            t = wrap01(edge_end);
            continue;
        }
        double step = std::min(remaining, avail);
        total += angle_between(c.vertex(edge), c.vertex(edge + 1)) * step * n;
        remaining -= step;
        t = wrap01(t + step);
    }
    return total;
}

struct TransitionClass {
    std::optional<ReidemeisterEvent> event;
    std::optional<std::string> error;
};

TransitionClass classify_transition(const CurveFamily& f, const FamilyAnalysis& an, int i,
                                    const Tolerances& tol) {
    const auto& xs = an.crossings[i];
    const auto& ys = an.crossings[i + 1];
    if (!an.match_errors[i].empty()) return {std::nullopt, an.match_errors[i]};
    Matching m;
    m.pairs = an.matches[i];
    {
        std::vector<bool> usedL(xs.size(), false), usedR(ys.size(), false);
        for (auto [a, b] : m.pairs) {
            usedL[a] = true;
            usedR[b] = true;
        }
        for (size_t k = 0; k < xs.size(); ++k)
            if (!usedL[k]) m.died.push_back(static_cast<int>(k));
        for (size_t k = 0; k < ys.size(); ++k)
            if (!usedR[k]) m.born.push_back(static_cast<int>(k));
    }

    // Word of surviving crossings before and after, in left-sample ids.
    std::vector<int> right_to_left(ys.size(), -1);
    for (auto [a, b] : m.pairs) right_to_left[b] = a;
    auto survivors_word = [&](const std::vector<SelfIntersection>& cs, bool right) {
        std::vector<std::pair<double, int>> entries;
        for (size_t k = 0; k < cs.size(); ++k) {
            int id = right ? right_to_left[k] : static_cast<int>(k);
            if (id < 0) continue;
            if (!right) {
                bool survives = false;
                for (auto [a, b] : m.pairs) survives |= (a == static_cast<int>(k));
                if (!survives) continue;
            }
            entries.push_back({cs[k].t1, id});
            entries.push_back({cs[k].t2, id});
        }
        std::sort(entries.begin(), entries.end());
        std::vector<int> w;
        for (const auto& e : entries) w.push_back(e.second);
        return w;
    };

    int nd = static_cast<int>(m.died.size());
    int nb = static_cast<int>(m.born.size());

    if (nd == 0 && nb == 0) {
        if (xs.empty()) return {};
        auto w1 = crossing_word(xs);
        auto w2 = survivors_word(ys, true);
        if (cyclic_equal(w1, w2)) return {};
        auto ch = changed_ids(w1, w2);
        if (ch.size() != 3)
            return {std::nullopt,
                    "arc order changed for " + std::to_string(ch.size()) + " crossings"};
        ReidemeisterEvent e;
        e.kind = EventKind::Type3;
        e.before = i;
        e.after = i + 1;
        e.involved = ch;
        return {e, std::nullopt};
    }

    if (nd + nb == 1) {
        bool creation = nb == 1;
        const auto& cs = creation ? ys : xs;
        int id = creation ? m.born[0] : m.died[0];
        double diam;
        try {
            diam = min_piece_diameter(f.curves[creation ? i + 1 : i], cs[id]);
        } catch (const Error& e) {
            return {std::nullopt, std::string(e.what())};
        }
        if (diam >= tol.loop_scale)
            return {std::nullopt, "single crossing appeared without a small loop"};
        auto w1 = survivors_word(xs, false);
        auto w2 = survivors_word(ys, true);
        if (!cyclic_equal(w1, w2))
            return {std::nullopt, "surviving crossings changed arc order during a type 1 move"};
        ReidemeisterEvent e;
        e.kind = creation ? EventKind::Type1Creation : EventKind::Type1Destruction;
        e.before = i;
        e.after = i + 1;
        (creation ? e.born : e.died).push_back(id);
        return {e, std::nullopt};
    }

    if ((nd == 2 && nb == 0) || (nd == 0 && nb == 2)) {
        bool creation = nb == 2;
        const auto& cs = creation ? ys : xs;
        const ClosedCurve& curve = f.curves[creation ? i + 1 : i];
        int ia = creation ? m.born[0] : m.died[0];
        int ib = creation ? m.born[1] : m.died[1];
        const SelfIntersection& x = cs[ia];
        const SelfIntersection& y = cs[ib];
        if (angle_between(x.point, y.point) >= tol.loop_scale)
            return {std::nullopt, "two crossings appeared too far apart for a bigon"};
        // Pair up the parameters of the two crossings along each strand and
        // require both connecting arcs to be short and free of other crossings.
        double direct = circ_dist(x.t1, y.t1) + circ_dist(x.t2, y.t2);
        double swapped = circ_dist(x.t1, y.t2) + circ_dist(x.t2, y.t1);
        double ya = direct <= swapped ? y.t1 : y.t2;
        double yb = direct <= swapped ? y.t2 : y.t1;
        auto arc_ok = [&](double u, double v) {
            double fwd = arc_span(curve, u, v);
            double bwd = arc_span(curve, v, u);
            double lo = std::min(fwd, bwd);
            if (lo > 4.0 * tol.loop_scale) return false;
            double a = lo == fwd ? u : v;
            double b = lo == fwd ? v : u;
            double span = b - a;
            if (span < 0) span += 1.0;
            for (size_t k = 0; k < cs.size(); ++k) {
                if (static_cast<int>(k) == ia || static_cast<int>(k) == ib) continue;
                for (double t : {cs[k].t1, cs[k].t2}) {
                    double off = t - a;
                    if (off < 0) off += 1.0;
                    if (off > 1e-12 && off < span - 1e-12) return false;
                }
            }
            return true;
        };
        if (!arc_ok(x.t1, ya) || !arc_ok(x.t2, yb))
            return {std::nullopt, "two crossings appeared but do not bound a bigon"};
        auto w1 = survivors_word(xs, false);
        auto w2 = survivors_word(ys, true);
        if (!cyclic_equal(w1, w2))
            return {std::nullopt, "surviving crossings changed arc order during a type 2 move"};
        ReidemeisterEvent e;
        e.kind = creation ? EventKind::Type2Creation : EventKind::Type2Destruction;
        e.before = i;
        e.after = i + 1;
        if (creation)
            e.born = {ia, ib};
        else
            e.died = {ia, ib};
        return {e, std::nullopt};
    }

    std::ostringstream os;
    os << "crossing set changed by " << nd << " deaths and " << nb
       << " births; not a single Reidemeister move";
    return {std::nullopt, os.str()};
}

}  // namespace

FamilyAnalysis analyze_family(const CurveFamily& f, const Tolerances& tol) {
    FamilyAnalysis an;
    an.crossings.resize(f.size());
    an.matches.resize(std::max(0, f.size() - 1));
    an.match_errors.resize(std::max(0, f.size() - 1));
    for (int i = 0; i < f.size(); ++i) an.crossings[i] = self_intersections(f.curves[i], tol);
    for (int i = 0; i + 1 < f.size(); ++i) {
        try {
            an.matches[i] = match_crossings(an.crossings[i], an.crossings[i + 1], tol).pairs;
        } catch (const AmbiguousTracking& e) {
            an.match_errors[i] = e.what();
        }
    }
    return an;
}

GenericityReport validate_genericity(const CurveFamily& f, double length_bound,
                                     double energy_bound, const Tolerances& tol) {
    GenericityReport rep;
    auto violation = [&](int sample, int transition, const std::string& kind,
                         const std::string& desc) {
        rep.violations.push_back({sample, transition, kind, desc});
    };

    try {
        f.validate(tol);
    } catch (const Error& e) {
        violation(-1, -1, "structure", e.what());
        rep.ok = false;
        return rep;
    }

    FamilyAnalysis an;
    an.crossings.resize(f.size());
    an.matches.resize(std::max(0, f.size() - 1));
    an.match_errors.resize(std::max(0, f.size() - 1));
    for (int i = 0; i < f.size(); ++i) {
        const ClosedCurve& c = f.curves[i];
        double len = length(c);
        double en = energy(c);
        if (len >= length_bound)
            violation(i, -1, "length_bound", "curve length " + std::to_string(len));
        if (en >= energy_bound)
            violation(i, -1, "energy_bound", "curve energy " + std::to_string(en));
        try {
            an.crossings[i] = self_intersections(f.curves[i], tol);
        } catch (const Error& e) {
            violation(i, -1, "overlap", e.what());
            continue;
        }
        const auto& xs = an.crossings[i];
        for (size_t a = 0; a < xs.size(); ++a) {
            if (!xs[a].transverse) violation(i, -1, "tangency", "non-transverse self-intersection");
            for (size_t b = a + 1; b < xs.size(); ++b) {
                if (angle_between(xs[a].point, xs[b].point) < tol.tol_point)
                    violation(i, -1, "not_isolated",
                              "two self-intersections coincide (triple point)");
            }
        }
    }
    if (!rep.violations.empty()) {
        rep.ok = false;
        return rep;
    }

    for (int i = 0; i + 1 < f.size(); ++i) {
        try {
            an.matches[i] = match_crossings(an.crossings[i], an.crossings[i + 1], tol).pairs;
        } catch (const AmbiguousTracking& e) {
            an.match_errors[i] = e.what();
        }
    }
    for (int i = 0; i + 1 < f.size(); ++i) {
        TransitionClass tc = classify_transition(f, an, i, tol);
        if (tc.error) {
            violation(-1, i, "transition", *tc.error);
        } else if (tc.event) {
            rep.event_count += 1;
        }
    }
    rep.ok = rep.violations.empty();
    return rep;
}

std::vector<ReidemeisterEvent> detect_events(const CurveFamily& f, const FamilyAnalysis& analysis,
                                             const Tolerances& tol) {
    std::vector<ReidemeisterEvent> events;
    for (int i = 0; i + 1 < f.size(); ++i) {
        TransitionClass tc = classify_transition(f, analysis, i, tol);
        if (tc.error)
            throw UnclassifiableTransition("transition " + std::to_string(i) + ": " + *tc.error);
        if (tc.event) events.push_back(*tc.event);
    }
    return events;
}

std::vector<ReidemeisterEvent> detect_events(const CurveFamily& f, const Tolerances& tol) {
    FamilyAnalysis an = analyze_family(f, tol);
    return detect_events(f, an, tol);
}

int sign_of_type1(const CurveFamily& f, const ReidemeisterEvent& e, const Tolerances& tol,
                  const ProbeOptions& opt) {
    if (e.kind != EventKind::Type1Creation && e.kind != EventKind::Type1Destruction)
        throw PreconditionViolated("event is not a type 1 move");
    const ClosedCurve& before = f.curves[e.before];
    const ClosedCurve& after = f.curves[e.after];
    std::mt19937_64 rng(opt.seed ^ (0x9e3779b97f4a7c15ULL * (e.before + 1)));
    std::normal_distribution<double> gauss;
    double clearance = std::max(tol.tol_pole, 0.02);
    for (int attempt = 0; attempt < opt.max_rejections; ++attempt) {
        SpherePoint p = Vec3{gauss(rng), gauss(rng), gauss(rng)}.normalized();
        if (p.norm() < 0.5) continue;
        if (min_distance_to_curve(p, before) < clearance) continue;
        if (min_distance_to_curve(p, after) < clearance) continue;
        try {
            int tb = turning_number(stereographic(before, p, tol));
            int ta = turning_number(stereographic(after, p, tol));
            int delta = ta - tb;
            if (delta == 1 || delta == -1) return delta;
            // A clean pole must see a unit jump; anything else means the
            // transition is not a single type 1 move.
            throw UnclassifiableTransition("turning number changed by " + std::to_string(delta) +
                                           " across a type 1 move");
        } catch (const NonIntegralTurning&) {
            continue;
        }
    }
    throw NoAdmissiblePole("no chart pole clears both curves around the move");
}

void assign_type1_signs(const CurveFamily& f, std::vector<ReidemeisterEvent>& events,
                        const Tolerances& tol, const ProbeOptions& opt) {
    for (auto& e : events) {
        if (e.kind == EventKind::Type1Creation || e.kind == EventKind::Type1Destruction)
            e.sign = sign_of_type1(f, e, tol, opt);
    }
}

std::vector<IntersectionTrack> track_intersections(const CurveFamily& f,
                                                   const FamilyAnalysis& analysis,
                                                   const std::vector<ReidemeisterEvent>& events,
                                                   const Tolerances& tol) {
    (void)tol;
    int m = f.size();
    for (const auto& err : analysis.match_errors)
        if (!err.empty()) throw AmbiguousTracking(err);
    // forward[i][id] = matched id at sample i+1, or -1.
    std::vector<std::vector<int>> forward(m), backward(m);
    for (int i = 0; i < m; ++i) {
        forward[i].assign(analysis.crossings[i].size(), -1);
        backward[i].assign(analysis.crossings[i].size(), -1);
    }
    for (int i = 0; i + 1 < m; ++i) {
        for (auto [a, b] : analysis.matches[i]) {
            forward[i][a] = b;
            backward[i + 1][b] = a;
        }
    }
    auto find_event = [&](int transition, bool creation, int id) {
        for (size_t k = 0; k < events.size(); ++k) {
            const auto& e = events[k];
            if (e.before != transition) continue;
            const auto& ids = creation ? e.born : e.died;
            for (int x : ids)
                if (x == id) return static_cast<int>(k);
        }
        return -1;
    };
    std::vector<IntersectionTrack> tracks;
    for (int i = 0; i < m; ++i) {
        for (size_t id = 0; id < analysis.crossings[i].size(); ++id) {
            if (backward[i][id] >= 0) continue;  // continues an earlier chain
            IntersectionTrack tr;
            int s = i, c = static_cast<int>(id);
            while (true) {
                tr.chain.push_back({s, c});
                if (s + 1 >= m || forward[s][c] < 0) break;
                c = forward[s][c];
                s += 1;
            }
            if (i == 0) {
                tr.birth = TrackEndpoint::Boundary;
            } else {
                tr.birth = TrackEndpoint::Event;
                tr.birth_event = find_event(i - 1, true, static_cast<int>(id));
                if (tr.birth_event < 0)
                    throw InconsistentTracks("crossing appears without a recorded event");
            }
            auto [ls, lc] = tr.chain.back();
            if (ls == m - 1) {
                tr.death = TrackEndpoint::Boundary;
            } else {
                tr.death = TrackEndpoint::Event;
                tr.death_event = find_event(ls, false, lc);
                if (tr.death_event < 0)
                    throw InconsistentTracks("crossing vanishes without a recorded event");
            }
            tracks.push_back(std::move(tr));
        }
    }
    return tracks;
}

CurveFamily concatenate(const CurveFamily& a, const CurveFamily& b, const Tolerances& tol) {
    if (a.curves.empty() || b.curves.empty()) throw InvalidFamily("empty family");
    if (!curves_equal(a.curves.back(), b.curves.front(), tol.tol_point))
        throw EndpointMismatch("families do not share the junction curve");
    CurveFamily out;
    double a_span = a.times.back() - a.times.front();
    double b_span = b.times.back() - b.times.front();
    if (a_span <= 0 || b_span <= 0) throw InvalidFamily("degenerate time range");
    for (int i = 0; i < a.size(); ++i) {
        out.times.push_back(0.5 * (a.times[i] - a.times.front()) / a_span);
        out.curves.push_back(a.curves[i]);
    }
    for (int i = 1; i < b.size(); ++i) {
        out.times.push_back(0.5 + 0.5 * (b.times[i] - b.times.front()) / b_span);
        out.curves.push_back(b.curves[i]);
    }
    out.topology = curves_equal(out.curves.front(), out.curves.back(), tol.tol_point)
                       ? FamilyTopology::Circle
                       : FamilyTopology::Interval;
    return out;
}

CurveFamily reverse(const CurveFamily& f) {
    CurveFamily out;
    out.topology = f.topology;
    double t0 = f.times.front(), t1 = f.times.back();
    for (int i = f.size() - 1; i >= 0; --i) {
        out.times.push_back(t0 + (t1 - f.times[i]));
        out.curves.push_back(f.curves[i]);
    }
    return out;
}

CurveFamily rotate_circle_family(const CurveFamily& f, int k, const Tolerances& tol) {
    if (f.topology != FamilyTopology::Circle) throw InvalidFamily("not a circle family");
    f.validate(tol);
    int m = f.size();
    int n = m - 1;  // distinct samples; the last duplicates the first
    k = ((k % n) + n) % n;
    CurveFamily out;
    out.topology = FamilyTopology::Circle;
    // Preserve the gap structure.
    std::vector<double> gaps(n);
    for (int i = 0; i < n; ++i) gaps[i] = f.times[i + 1] - f.times[i];
    double t = 0.0;
    for (int i = 0; i <= n; ++i) {
        out.times.push_back(t);
        out.curves.push_back(f.curves[(k + i) % n]);
        if (i < n) t += gaps[(k + i) % n];
    }
    out.curves.back() = out.curves.front();
    return out;
}

}  // namespace sweepout
