#pragma once

#include <optional>
#include <vector>

#include "sweepout/family.hpp"

namespace sweepout {

struct GammaVertex {
    int slot = 0;      // sample index
    int crossing = 0;  // crossing id within the slot
    bool operator==(const GammaVertex& o) const {
        return slot == o.slot && crossing == o.crossing;
    }
    bool operator<(const GammaVertex& o) const {
        return slot != o.slot ? slot < o.slot : crossing < o.crossing;
    }
};

enum class EdgeRule { PassThrough, Type2Cap, Identification };

struct GammaEdge {
    GammaVertex a, b;
    EdgeRule rule;
};

struct MarkedVertex {
    GammaVertex v;
    bool birth = false;  // true right after a type 1 creation, false just
                         // before a type 1 destruction
    int event = -1;
    int sign = 0;
};

// The self-intersection graph of a sampled family: one vertex per crossing
// per sample slot, edges induced by tracking across moves, type 2 caps, and
// the identification of the first and last slots of a circle family.
struct GammaGraph {
    int slots = 0;
    std::vector<int> slot_sizes;
    std::vector<GammaEdge> edges;
    std::vector<MarkedVertex> marked;
    FamilyTopology topology = FamilyTopology::Circle;

    std::vector<int> edges_at(const GammaVertex& v) const;
    int degree(const GammaVertex& v, bool include_identification = true) const;
    const MarkedVertex* mark_of(const GammaVertex& v, bool birth) const;
};

// A pair of marked vertices joined by a path of edge indices. `good` is set
// by classify_pair.
struct PathPair {
    GammaVertex v;
    GammaVertex v_prime;
    std::vector<int> path;  // edge indices into GammaGraph::edges
    bool good = false;
    bool classified = false;
};

GammaGraph build_graph(const CurveFamily& f, const FamilyAnalysis& analysis,
                       const std::vector<ReidemeisterEvent>& events,
                       const std::vector<IntersectionTrack>& tracks,
                       const Tolerances& tol = default_tolerances());

// Per-vertex degree law: the number of move-induced edges at a vertex is
// 2 - x - y, where x marks a type 1 death ahead (or the last slot) and y a
// type 1 birth behind (or the first slot).
bool check_degree_law(const GammaGraph& g, const std::vector<ReidemeisterEvent>& events);

// Marked vertices split into pairs joined by edge-disjoint paths; v = v' with
// an empty path is allowed. Throws UnpairedMarkedVertex when a path ends at
// an unmarked vertex.
std::vector<PathPair> decompose_paths(const GammaGraph& g);

// The ordered parameter pair of the small loop cut off at a marked vertex
// (the piece that fails to cover the curve on the far side of the move).
std::pair<double, double> loop_piece_params(const CurveFamily& f, const FamilyAnalysis& analysis,
                                            const std::vector<ReidemeisterEvent>& events,
                                            const MarkedVertex& m,
                                            const Tolerances& tol = default_tolerances());

// Follows the loop subcurve from p.v along the path; good when it arrives at
// the complement of the loop at p.v_prime.
PathPair classify_pair(const CurveFamily& f, const FamilyAnalysis& analysis,
                       const std::vector<ReidemeisterEvent>& events, const GammaGraph& g,
                       PathPair p, const Tolerances& tol = default_tolerances());

// Transport of an oriented piece (ordered parameter pair) along a path; used
// by classification, surgery, and the local-orientation bookkeeping.
std::vector<std::pair<double, double>> transport_piece_along_path(
    const CurveFamily& f, const FamilyAnalysis& analysis, const GammaGraph& g,
    const std::vector<int>& path, const GammaVertex& start,
    std::pair<double, double> piece, const Tolerances& tol = default_tolerances());

// Graph vertices visited by a path starting at `start`.
std::vector<GammaVertex> path_vertices(const GammaGraph& g, const std::vector<int>& path,
                                       const GammaVertex& start);

// Local orientation of the transported piece at each path vertex, plus a flag
// per step marking direction changes (type 2 cap edges).
struct PathLTrace {
    std::vector<int> l_values;
    std::vector<bool> direction_change;  // per step
};
PathLTrace l_trace_along_path(const CurveFamily& f, const FamilyAnalysis& analysis,
                              const GammaGraph& g, const PathPair& p,
                              std::pair<double, double> start_piece,
                              const Tolerances& tol = default_tolerances());

// A good pair, preferring same-sign endpoints (positive first) and shorter
// paths. Returns nullopt when no pair classifies good.
std::optional<PathPair> find_good_pair(const CurveFamily& f, const FamilyAnalysis& analysis,
                                       const std::vector<ReidemeisterEvent>& events,
                                       const GammaGraph& g,
                                       const Tolerances& tol = default_tolerances());

}  // namespace sweepout
