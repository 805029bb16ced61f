#pragma once

#include <utility>
#include <vector>

#include "sweepout/geometry.hpp"
#include "sweepout/options.hpp"

namespace sweepout {

// Closed oriented geodesic polyline on the unit sphere. A constant curve is
// represented by a single vertex; non-constant curves have >= 3 vertices,
// consecutive vertices distinct, and every edge shorter than pi. The curve
// carries an implicit uniform parameter on [0, 1): with n edges, vertex i
// sits at parameter i / n and each edge is traversed at constant speed.
class ClosedCurve {
public:
    ClosedCurve() = default;
    explicit ClosedCurve(std::vector<SpherePoint> vertices) : verts_(std::move(vertices)) {}

    static ClosedCurve constant(const SpherePoint& p) { return ClosedCurve({p}); }

    const std::vector<SpherePoint>& vertices() const { return verts_; }
    std::vector<SpherePoint>& vertices() { return verts_; }
    int size() const { return static_cast<int>(verts_.size()); }
    bool is_constant() const { return verts_.size() == 1; }

    const SpherePoint& vertex(int i) const { return verts_[mod(i)]; }

    // Point at curve parameter t in [0, 1).
    SpherePoint point_at(double t) const;
    // Unit tangent of the edge containing parameter t (direction of travel).
    Vec3 direction_at(double t) const;

    ClosedCurve reversed() const;
    // Cyclic re-indexing so that vertex k becomes vertex 0.
    ClosedCurve rotated_start(int k) const;

    // Throws InvalidCurve when an invariant fails.
    void validate(const Tolerances& tol = default_tolerances()) const;

    int mod(int i) const {
        int n = size();
        return ((i % n) + n) % n;
    }

private:
    std::vector<SpherePoint> verts_;
};

// A transverse double point of a curve: two distinct parameters mapping to
// the same point.
struct SelfIntersection {
    double t1 = 0.0;  // smaller parameter
    double t2 = 0.0;  // larger parameter
    SpherePoint point;
    bool transverse = true;
};

// Reference to a closed sub-arc [a, b] of a parent curve whose endpoints map
// to the same point (a self-intersection, or a = b for a constant subcurve).
struct Subcurve {
    const ClosedCurve* parent = nullptr;
    double a = 0.0;
    double b = 0.0;  // traversed from a forward to b (wrapping when b < a)

    // Materialize as a standalone closed curve whose first vertex is the
    // shared endpoint.
    ClosedCurve to_curve(const Tolerances& tol = default_tolerances()) const;
};

// A curve pushed through a stereographic chart.
struct ChartCurve {
    SpherePoint pole;
    std::vector<Vec2> planar_vertices;
};

enum class Branch { A, B };

// --- operations ---------------------------------------------------------

// Total length in radians of arc; 0 for constant curves.
double length(const ClosedCurve& c);

// Energy of the piecewise-constant-speed parametrization with equal parameter
// steps per edge: n * sum(edge_length^2). Equals length^2 when all edges are
// equal; 0 for constant curves.
double energy(const ClosedCurve& c);

double min_distance_to_curve(const SpherePoint& p, const ClosedCurve& c);

// Stereographic projection from `pole`; throws PoleOnCurve if the curve comes
// within tol.tol_pole of the pole.
ChartCurve stereographic(const ClosedCurve& c, const SpherePoint& pole,
                         const Tolerances& tol = default_tolerances());

// All transverse self-crossings, deduplicated and sorted by parameter pair.
// Throws DegenerateOverlap when two edges share a sub-arc.
std::vector<SelfIntersection> self_intersections(const ClosedCurve& c,
                                                 const Tolerances& tol = default_tolerances());

// Normalized sum of signed exterior angles. Throws NonIntegralTurning when
// the residual from the nearest integer exceeds 0.25.
int turning_number(const ChartCurve& cc);

// Signed exterior-angle sum / 2pi before rounding (used by oracles).
double turning_number_raw(const ChartCurve& cc);

// The two closed subcurves obtained by cutting at a transverse crossing,
// in traversal order from the smaller parameter.
std::pair<Subcurve, Subcurve> split_at(const ClosedCurve& c, const SelfIntersection& s);

// Orientation-preserving smoothing at a crossing: the two inherited closed
// curves, each with the corner at the crossing replaced by a chord within
// tol.smoothing_radius. Total length never grows by more than
// tol.length_budget().
std::pair<ClosedCurve, ClosedCurve> reglue(const ClosedCurve& c, const SelfIntersection& s,
                                           const Tolerances& tol = default_tolerances());

// Local orientation of one smoothed branch at a crossing: the sign of the
// frame (chord tangent, vector into the region cut off by the chord) in the
// oriented tangent plane at the crossing. Branch A is the piece starting at
// the smaller parameter.
int local_orientation_L(const ClosedCurve& c, const SelfIntersection& s, Branch branch,
                        const Tolerances& tol = default_tolerances());

// +1 when a simple small curve agrees with the boundary orientation induced
// from the sphere orientation on the small disc it bounds, -1 otherwise.
// Throws NotSimple / NotSmall.
int small_loop_orientation(const ClosedCurve& c, const Tolerances& tol = default_tolerances());

// Angular radius of the smallest centred cap containing the curve, about the
// normalized area-vector centre; helper shared by several modules.
double loop_extent(const ClosedCurve& c, SpherePoint* centre_out = nullptr);

// Hausdorff distance between two curves (max over both one-sided distances).
double hausdorff_distance(const ClosedCurve& a, const ClosedCurve& b);

// Uniform refinement: split every edge into k equal sub-edges (image is
// unchanged).
ClosedCurve refine(const ClosedCurve& c, int k);

// Corner cut: replace the corner at vertex index v by a geodesic chord
// between the points at arc-distance r along both incident directions.
// Falls back to the original curve when the corner is too tight to cut.
ClosedCurve cut_corner(const ClosedCurve& c, int v, double r);

}  // namespace sweepout
