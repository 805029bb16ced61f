#pragma once

#include <cstdint>

namespace sweepout {

// Numeric thresholds shared across the library. Curves are geodesic
// polylines on the round unit sphere; all lengths and distances are in
// radians of arc.
struct Tolerances {
    double tol_unit = 1e-9;    // max deviation of a vertex from unit norm
    double tol_point = 1e-7;   // two points considered coincident below this
    double tol_angle = 1e-6;   // transversality threshold for crossing angles
    double tol_pole = 1e-3;    // clearance a chart pole must keep from a curve
    double loop_scale = 0.1;   // max diameter of a "small" loop or bigon
    double tol_track = 0.05;   // max motion of a crossing between samples
    double smoothing_radius = 1e-3;  // corner-cut radius at reglued crossings

    // Inserting a corner cut at a crossing touches two corners of each of the
    // two outgoing curves; 4 * r is a safe per-surgery length allowance.
    double length_budget() const { return 4.0 * smoothing_radius; }
};

inline const Tolerances& default_tolerances() {
    static const Tolerances t{};
    return t;
}

// Per-run knobs for randomized probing.
struct ProbeOptions {
    int probes = 100;
    std::uint64_t seed = 0x5eed5eed5eedULL;
    int max_rejections = 20000;
};

}  // namespace sweepout
