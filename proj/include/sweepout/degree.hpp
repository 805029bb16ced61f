#pragma once

#include <vector>

#include "sweepout/family.hpp"

namespace sweepout {

// One signed crossing of the swept surface through a probe point.
struct SignedPreimage {
    int band = 0;      // transition index i (between samples i and i+1)
    int triangle = 0;  // triangle index within the band
    int sign = 0;      // orientation of the frame at the crossing
};

struct DegreeWitness {
    SpherePoint probe;
    int preimages = 0;   // unsigned crossing count
    int signed_sum = 0;  // must equal the degree
};

struct DegreeReport {
    int degree = 0;
    std::vector<DegreeWitness> witnesses;
    int probes_used = 0;
};

// The swept surface of a family, triangulated band by band. Adjacent samples
// are refined to the union of their vertex parameters, so every band shares
// its boundary polylines with its neighbours exactly.
class SweptSurface {
public:
    SweptSurface(const CurveFamily& f, const Tolerances& tol = default_tolerances());

    // Signed crossing count of the ray through a probe; nullopt when the
    // probe fails the admissibility margin against some triangle.
    struct Count {
        int signed_sum = 0;
        int unsigned_count = 0;
        std::vector<SignedPreimage> hits;
    };
    std::optional<Count> count(const SpherePoint& probe, bool collect_hits = false) const;

    // Minimum clearance required between an admissible probe and any curve.
    int triangle_count() const { return static_cast<int>(tris_.size()); }

private:
    struct Tri {
        Vec3 a, b, c;
        int band;
        int index;
    };
    std::vector<Tri> tris_;
    double margin_;
};

// Degree of the map induced by a closed family: circle topology, or interval
// topology with constant end curves. All probes must report the same signed
// sum; throws ProbeDisagreement otherwise and NoAdmissibleProbe when
// rejection sampling fails.
DegreeReport family_degree(const CurveFamily& f, const ProbeOptions& opt = ProbeOptions{},
                           const Tolerances& tol = default_tolerances());

// (sum of the signs of the type 1 moves) / 2; throws OddSignSum when the sum
// is odd. Events must carry signs.
int degree_from_type1_signs(const std::vector<ReidemeisterEvent>& events);

// Degree classification of a circle family that is constant on a
// sub-interval and has no type 1 moves elsewhere: 0 when the small curves at
// the two ends of the non-constant part have the same orientation, else the
// (verified) +-1 degree.
int endpoint_orientation_degree(const CurveFamily& f, const ProbeOptions& opt = ProbeOptions{},
                                const Tolerances& tol = default_tolerances());

// A regular point whose unsigned preimage count under the interval family h
// is even, found by closing h up with monotone contractions of its simple
// end curves and branching on the parity of the closed map's degree.
struct EvenPreimageProbe {
    SpherePoint probe;
    int count = 0;  // unsigned preimage count under h (always even)
};
EvenPreimageProbe even_preimage_probe(const CurveFamily& h,
                                      const ProbeOptions& opt = ProbeOptions{},
                                      const Tolerances& tol = default_tolerances());

// Monotone contraction of a simple closed curve to a point inside the disc
// it bounds (radial shrink in a stereographic chart), as an interval family
// from the curve to the constant curve.
CurveFamily contract_monotone(const ClosedCurve& c, int steps = 8,
                              const Tolerances& tol = default_tolerances());

}  // namespace sweepout
