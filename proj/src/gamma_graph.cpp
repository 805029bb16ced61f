#include "sweepout/gamma_graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace sweepout {

std::vector<int> GammaGraph::edges_at(const GammaVertex& v) const {
    std::vector<int> out;
    for (size_t k = 0; k < edges.size(); ++k)
        if (edges[k].a == v || edges[k].b == v) out.push_back(static_cast<int>(k));
    return out;
}

int GammaGraph::degree(const GammaVertex& v, bool include_identification) const {
    int d = 0;
    for (const auto& e : edges) {
        if (!include_identification && e.rule == EdgeRule::Identification) continue;
        d += (e.a == v) + (e.b == v);
    }
    return d;
}

const MarkedVertex* GammaGraph::mark_of(const GammaVertex& v, bool birth) const {
    for (const auto& m : marked)
        if (m.v == v && m.birth == birth) return &m;
    return nullptr;
}

GammaGraph build_graph(const CurveFamily& f, const FamilyAnalysis& analysis,
                       const std::vector<ReidemeisterEvent>& events,
                       const std::vector<IntersectionTrack>& tracks, const Tolerances& tol) {
    GammaGraph g;
    g.slots = f.size();
    g.topology = f.topology;
    for (const auto& xs : analysis.crossings) g.slot_sizes.push_back(static_cast<int>(xs.size()));

    for (const auto& tr : tracks) {
        for (size_t k = 0; k + 1 < tr.chain.size(); ++k) {
            auto [s1, c1] = tr.chain[k];
            auto [s2, c2] = tr.chain[k + 1];
            if (s2 != s1 + 1) throw InconsistentTracks("track skips a sample");
            g.edges.push_back({{s1, c1}, {s2, c2}, EdgeRule::PassThrough});
        }
    }
    for (size_t k = 0; k < events.size(); ++k) {
        const auto& e = events[k];
        if (e.kind == EventKind::Type2Creation) {
            g.edges.push_back(
                {{e.after, e.born[0]}, {e.after, e.born[1]}, EdgeRule::Type2Cap});
        } else if (e.kind == EventKind::Type2Destruction) {
            g.edges.push_back(
                {{e.before, e.died[0]}, {e.before, e.died[1]}, EdgeRule::Type2Cap});
        } else if (e.kind == EventKind::Type1Creation) {
            int sign = e.sign ? *e.sign : 0;
            g.marked.push_back({{e.after, e.born[0]}, true, static_cast<int>(k), sign});
        } else if (e.kind == EventKind::Type1Destruction) {
            int sign = e.sign ? *e.sign : 0;
            g.marked.push_back({{e.before, e.died[0]}, false, static_cast<int>(k), sign});
        }
    }
    if (f.topology == FamilyTopology::Circle) {
        const auto& first = analysis.crossings.front();
        const auto& last = analysis.crossings.back();
        if (first.size() != last.size())
            throw InconsistentTracks("identified end slots carry different crossings");
        std::vector<bool> used(last.size(), false);
        for (size_t a = 0; a < first.size(); ++a) {
            int best = -1;
            double bd = 1e9;
            for (size_t b = 0; b < last.size(); ++b) {
                if (used[b]) continue;
                double d = angle_between(first[a].point, last[b].point);
                if (d < bd) {
                    bd = d;
                    best = static_cast<int>(b);
                }
            }
            if (best < 0 || bd > 10.0 * tol.tol_point)
                throw InconsistentTracks("cannot identify end-slot crossings");
            used[best] = true;
            g.edges.push_back({{0, static_cast<int>(a)},
                               {g.slots - 1, best},
                               EdgeRule::Identification});
        }
    }
    return g;
}

bool check_degree_law(const GammaGraph& g, const std::vector<ReidemeisterEvent>& events) {
    for (int i = 0; i < g.slots; ++i) {
        for (int c = 0; c < g.slot_sizes[i]; ++c) {
            GammaVertex v{i, c};
            bool x = i == g.slots - 1;
            bool y = i == 0;
            for (const auto& e : events) {
                if (e.kind == EventKind::Type1Destruction && e.before == i)
                    for (int id : e.died) x |= id == c;
                if (e.kind == EventKind::Type1Creation && e.after == i)
                    for (int id : e.born) y |= id == c;
            }
            int expected = 2 - static_cast<int>(x) - static_cast<int>(y);
            if (g.degree(v, false) != expected) return false;
            if (g.degree(v, true) > 2) return false;
        }
    }
    return true;
}

namespace {

GammaVertex other_end(const GammaEdge& e, const GammaVertex& v) {
    if (e.a == v) return e.b;
    if (e.b == v) return e.a;
    throw InconsistentTracks("path edge does not touch the current vertex");
}

}  // namespace

std::vector<PathPair> decompose_paths(const GammaGraph& g) {
    std::map<GammaVertex, std::vector<int>> adj;
    for (size_t k = 0; k < g.edges.size(); ++k) {
        adj[g.edges[k].a].push_back(static_cast<int>(k));
        adj[g.edges[k].b].push_back(static_cast<int>(k));
    }
    auto is_marked = [&](const GammaVertex& v) {
        return g.mark_of(v, true) != nullptr || g.mark_of(v, false) != nullptr;
    };
    std::vector<PathPair> pairs;
    std::set<int> used_edges;
    std::set<GammaVertex> consumed;

    for (int i = 0; i < g.slots; ++i) {
        for (int c = 0; c < g.slot_sizes[i]; ++c) {
            GammaVertex v{i, c};
            if (consumed.count(v)) continue;
            int deg = adj.count(v) ? static_cast<int>(adj[v].size()) : 0;
            if (deg == 0) {
                consumed.insert(v);
                bool b = g.mark_of(v, true), d = g.mark_of(v, false);
                if (!b && !d) continue;  // stray isolated vertex is impossible when the law holds
                if (!(b && d))
                    throw UnpairedMarkedVertex("isolated vertex carries only one type 1 mark");
                pairs.push_back({v, v, {}, false, false});
                continue;
            }
            if (deg != 1) continue;
            // Walk the path to its other endpoint.
            PathPair p;
            p.v = v;
            std::vector<int> path;
            GammaVertex cur = v;
            consumed.insert(v);
            while (true) {
                int next_edge = -1;
                for (int k : adj[cur])
                    if (!used_edges.count(k)) next_edge = k;
                if (next_edge < 0) break;
                used_edges.insert(next_edge);
                path.push_back(next_edge);
                cur = other_end(g.edges[next_edge], cur);
                consumed.insert(cur);
            }
            p.v_prime = cur;
            p.path = std::move(path);
            if (!is_marked(p.v) || !is_marked(p.v_prime))
                throw UnpairedMarkedVertex("path endpoint is not a type 1 mark");
            pairs.push_back(std::move(p));
        }
    }
    // The law guarantees every mark sits at a path end; verify.
    for (const auto& m : g.marked) {
        bool found = false;
        for (const auto& p : pairs) found |= p.v == m.v || p.v_prime == m.v;
        if (!found) throw UnpairedMarkedVertex("marked vertex not covered by the decomposition");
    }
    return pairs;
}

std::pair<double, double> loop_piece_params(const CurveFamily& f, const FamilyAnalysis& analysis,
                                            const std::vector<ReidemeisterEvent>& events,
                                            const MarkedVertex& m, const Tolerances& tol) {
    const ReidemeisterEvent& e = events[m.event];
    const ClosedCurve& curve = f.curves[m.v.slot];
    const ClosedCurve& neighbour = f.curves[m.birth ? e.before : e.after];
    const SelfIntersection& s = analysis.crossings[m.v.slot][m.v.crossing];
    auto [p1, p2] = split_at(curve, s);
    ClosedCurve c1 = p1.to_curve(tol);
    ClosedCurve c2 = p2.to_curve(tol);
    auto uncovered = [&](const ClosedCurve& piece) {
        double worst = 0.0;
        for (const auto& q : neighbour.vertices())
            worst = std::max(worst, min_distance_to_curve(q, piece));
        return worst;
    };
    // The loop is the piece that fails to cover the neighbouring curve.
    return uncovered(c1) > uncovered(c2) ? std::make_pair(s.t1, s.t2)
                                         : std::make_pair(s.t2, s.t1);
}

namespace {

// Strand correspondence across one step. Parameters are not comparable when
// the sampling changes, so passages are matched by their travel directions
// at the crossing.
std::pair<double, double> map_piece(const ClosedCurve& cf, const SelfIntersection& from,
                                    const ClosedCurve& ct, const SelfIntersection& to,
                                    std::pair<double, double> piece) {
    Vec3 f1 = cf.direction_at(from.t1), f2 = cf.direction_at(from.t2);
    Vec3 t1 = ct.direction_at(to.t1), t2 = ct.direction_at(to.t2);
    double direct = f1.dot(t1) + f2.dot(t2);
    double swapped = f1.dot(t2) + f2.dot(t1);
    bool take_direct = direct >= swapped;
    if (std::abs(direct - swapped) < 1e-6) {
        // Near-parallel strands (a bigon close to its tangency): fall back to
        // parameter proximity, which is stable within one sampling window.
        take_direct = circ_dist(from.t1, to.t1) + circ_dist(from.t2, to.t2) <=
                      circ_dist(from.t1, to.t2) + circ_dist(from.t2, to.t1);
    }
    auto image = [&](double t) {
        bool is_t1 = circ_dist(t, from.t1) <= circ_dist(t, from.t2);
        if (take_direct) return is_t1 ? to.t1 : to.t2;
        return is_t1 ? to.t2 : to.t1;
    };
    return {image(piece.first), image(piece.second)};
}

}  // namespace

std::vector<std::pair<double, double>> transport_piece_along_path(
    const CurveFamily& f, const FamilyAnalysis& analysis, const GammaGraph& g,
    const std::vector<int>& path, const GammaVertex& start, std::pair<double, double> piece,
    const Tolerances& tol) {
    (void)f;
    (void)tol;
    std::vector<std::pair<double, double>> out;
    GammaVertex cur = start;
    out.push_back(piece);
    for (int k : path) {
        const GammaEdge& e = g.edges[k];
        GammaVertex nxt = other_end(e, cur);
        const SelfIntersection& from = analysis.crossings[cur.slot][cur.crossing];
        const SelfIntersection& to = analysis.crossings[nxt.slot][nxt.crossing];
        piece = map_piece(f.curves[cur.slot], from, f.curves[nxt.slot], to, piece);
        out.push_back(piece);
        cur = nxt;
    }
    return out;
}

std::vector<GammaVertex> path_vertices(const GammaGraph& g, const std::vector<int>& path,
                                       const GammaVertex& start) {
    std::vector<GammaVertex> out{start};
    GammaVertex cur = start;
    for (int k : path) {
        cur = other_end(g.edges[k], cur);
        out.push_back(cur);
    }
    return out;
}

PathPair classify_pair(const CurveFamily& f, const FamilyAnalysis& analysis,
                       const std::vector<ReidemeisterEvent>& events, const GammaGraph& g,
                       PathPair p, const Tolerances& tol) {
    const MarkedVertex* mv;
    const MarkedVertex* mw;
    if (p.v == p.v_prime && p.path.empty()) {
        mv = g.mark_of(p.v, true);
        mw = g.mark_of(p.v_prime, false);
    } else {
        mv = g.mark_of(p.v, true) ? g.mark_of(p.v, true) : g.mark_of(p.v, false);
        mw = g.mark_of(p.v_prime, true) ? g.mark_of(p.v_prime, true)
                                        : g.mark_of(p.v_prime, false);
    }
    if (!mv || !mw) throw UnpairedMarkedVertex("pair endpoints are not marked");
    auto start_piece = loop_piece_params(f, analysis, events, *mv, tol);
    auto states = transport_piece_along_path(f, analysis, g, p.path, p.v, start_piece, tol);
    auto target_loop = loop_piece_params(f, analysis, events, *mw, tol);
    auto arrived = states.back();
    // Good when the transported loop lands on the complement of the target
    // loop (the same parameter pair, traversed the other way around).
    bool good = circ_dist(arrived.first, target_loop.second) < 1e-9 &&
                circ_dist(arrived.second, target_loop.first) < 1e-9;
    bool at_loop = circ_dist(arrived.first, target_loop.first) < 1e-9 &&
                   circ_dist(arrived.second, target_loop.second) < 1e-9;
    if (!good && !at_loop)
        throw InconsistentTracks("transported piece does not land on the target crossing");
    p.good = good;
    p.classified = true;
    return p;
}

PathLTrace l_trace_along_path(const CurveFamily& f, const FamilyAnalysis& analysis,
                              const GammaGraph& g, const PathPair& p,
                              std::pair<double, double> start_piece, const Tolerances& tol) {
    PathLTrace trace;
    auto states = transport_piece_along_path(f, analysis, g, p.path, p.v, start_piece, tol);
    auto verts = path_vertices(g, p.path, p.v);
    for (size_t k = 0; k < verts.size(); ++k) {
        const SelfIntersection& s = analysis.crossings[verts[k].slot][verts[k].crossing];
        bool is_a = circ_dist(states[k].first, s.t1) < 1e-9;
        int l = local_orientation_L(f.curves[verts[k].slot], s, is_a ? Branch::A : Branch::B, tol);
        trace.l_values.push_back(l);
    }
    for (int k : p.path)
        trace.direction_change.push_back(g.edges[k].rule == EdgeRule::Type2Cap);
    return trace;
}

std::optional<PathPair> find_good_pair(const CurveFamily& f, const FamilyAnalysis& analysis,
                                       const std::vector<ReidemeisterEvent>& events,
                                       const GammaGraph& g, const Tolerances& tol) {
    std::vector<PathPair> pairs = decompose_paths(g);
    auto sign_at = [&](const GammaVertex& v) {
        const MarkedVertex* m = g.mark_of(v, true);
        if (!m) m = g.mark_of(v, false);
        return m ? m->sign : 0;
    };
    auto category = [&](const PathPair& p) {
        int s1 = sign_at(p.v), s2 = sign_at(p.v_prime);
        if (s1 > 0 && s2 > 0) return 0;  // both positive first
        if (s1 < 0 && s2 < 0) return 1;
        return 2;
    };
    std::stable_sort(pairs.begin(), pairs.end(), [&](const PathPair& a, const PathPair& b) {
        int ca = category(a), cb = category(b);
        if (ca != cb) return ca < cb;
        if (a.path.size() != b.path.size()) return a.path.size() < b.path.size();
        return a.v < b.v;
    });
    for (auto& p : pairs) {
        PathPair cl = classify_pair(f, analysis, events, g, p, tol);
        if (cl.good) return cl;
    }
    return std::nullopt;
}

}  // namespace sweepout
