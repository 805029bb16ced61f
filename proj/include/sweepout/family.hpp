#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sweepout/curve.hpp"
#include "sweepout/options.hpp"

namespace sweepout {

enum class FamilyTopology { Circle, Interval };

// A finitely sampled one-parameter family of closed curves. Sample times are
// strictly increasing; for circle topology the first and last samples carry
// the same curve and represent the identified endpoints of the parameter
// circle.
struct CurveFamily {
    FamilyTopology topology = FamilyTopology::Interval;
    std::vector<double> times;
    std::vector<ClosedCurve> curves;

    int size() const { return static_cast<int>(curves.size()); }
    void validate(const Tolerances& tol = default_tolerances()) const;
};

enum class EventKind { Type1Creation, Type1Destruction, Type2Creation, Type2Destruction, Type3 };

const char* to_string(EventKind k);

// A classified Reidemeister move between adjacent samples. Crossing ids are
// indices into the per-sample crossing lists (sorted by parameter pair).
struct ReidemeisterEvent {
    EventKind kind;
    int before = 0;                // sample index i; the move sits between i and i+1
    int after = 0;                 // sample index i+1
    std::vector<int> died;         // crossing ids at sample `before`
    std::vector<int> born;         // crossing ids at sample `after`
    std::vector<int> involved;     // Type 3 only: ids at `before` of the flipped triangle
    std::optional<int> sign;       // Type 1 only, filled by sign_of_type1
};

struct GenericityViolationEntry {
    int sample = -1;       // -1 when the violation sits on a transition
    int transition = -1;   // pair (i, i+1); -1 when per-sample
    std::string kind;
    std::string description;
};

struct GenericityReport {
    bool ok = true;
    std::vector<GenericityViolationEntry> violations;
    int event_count = 0;
};

enum class TrackEndpoint { Boundary, Event };

// The life of one self-intersection across samples.
struct IntersectionTrack {
    std::vector<std::pair<int, int>> chain;  // (sample index, crossing id)
    TrackEndpoint birth = TrackEndpoint::Boundary;
    TrackEndpoint death = TrackEndpoint::Boundary;
    int birth_event = -1;  // index into the event list when birth == Event
    int death_event = -1;
};

// Per-sample crossings plus adjacent-sample matchings; shared by event
// detection, tracking and the intersection graph.
struct FamilyAnalysis {
    std::vector<std::vector<SelfIntersection>> crossings;  // per sample, sorted
    // For each transition i -> i+1: matched pairs (id at i, id at i+1).
    std::vector<std::vector<std::pair<int, int>>> matches;
    // Non-empty entry = matching failed for that transition (ambiguous).
    std::vector<std::string> match_errors;
};

FamilyAnalysis analyze_family(const CurveFamily& f, const Tolerances& tol = default_tolerances());

// Checks the discrete genericity contract: bounds, curve validity, isolated
// transverse crossings, and at most one Reidemeister move per transition.
GenericityReport validate_genericity(const CurveFamily& f, double length_bound,
                                     double energy_bound,
                                     const Tolerances& tol = default_tolerances());

// One event per transition whose crossing set changes (plus triangle flips).
// Throws UnclassifiableTransition when a transition fits no single move.
std::vector<ReidemeisterEvent> detect_events(const CurveFamily& f,
                                             const FamilyAnalysis& analysis,
                                             const Tolerances& tol = default_tolerances());

std::vector<ReidemeisterEvent> detect_events(const CurveFamily& f,
                                             const Tolerances& tol = default_tolerances());

// Sign of a Type 1 move: +1 when the chart turning number increases by one
// across the move, for a chart pole clear of both flanking curves. Throws
// NoAdmissiblePole when no such pole is found.
int sign_of_type1(const CurveFamily& f, const ReidemeisterEvent& e,
                  const Tolerances& tol = default_tolerances(),
                  const ProbeOptions& opt = ProbeOptions{});

// Fill `sign` on every Type 1 event.
void assign_type1_signs(const CurveFamily& f, std::vector<ReidemeisterEvent>& events,
                        const Tolerances& tol = default_tolerances(),
                        const ProbeOptions& opt = ProbeOptions{});

// Partition of all crossings of all samples into tracks.
std::vector<IntersectionTrack> track_intersections(const CurveFamily& f,
                                                   const FamilyAnalysis& analysis,
                                                   const std::vector<ReidemeisterEvent>& events,
                                                   const Tolerances& tol = default_tolerances());

// Time-wise concatenation; the last curve of a must match the first of b.
// The result closes into circle topology when its own endpoints agree.
CurveFamily concatenate(const CurveFamily& a, const CurveFamily& b,
                        const Tolerances& tol = default_tolerances());

CurveFamily reverse(const CurveFamily& f);

// Re-base a circle-topology family so that sample k becomes sample 0.
CurveFamily rotate_circle_family(const CurveFamily& f, int k,
                                 const Tolerances& tol = default_tolerances());

bool curves_equal(const ClosedCurve& a, const ClosedCurve& b, double tol_point);

}  // namespace sweepout
