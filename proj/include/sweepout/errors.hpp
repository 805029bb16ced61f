#pragma once

#include <stdexcept>
#include <string>

namespace sweepout {

// Base class for all library errors. Subclasses exist per failure kind so
// callers can catch precisely; the kind string is stable for machine output.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

#define SWEEPOUT_DEFINE_ERROR(Name)                                   \
    class Name : public Error {                                       \
    public:                                                           \
        explicit Name(const std::string& what) : Error(#Name, what) {} \
    }

SWEEPOUT_DEFINE_ERROR(InvalidCurve);
SWEEPOUT_DEFINE_ERROR(InvalidFamily);
SWEEPOUT_DEFINE_ERROR(PoleOnCurve);
SWEEPOUT_DEFINE_ERROR(DegenerateOverlap);
SWEEPOUT_DEFINE_ERROR(NonIntegralTurning);
SWEEPOUT_DEFINE_ERROR(NotAnIntersection);
SWEEPOUT_DEFINE_ERROR(NotSimple);
SWEEPOUT_DEFINE_ERROR(NotSmall);
SWEEPOUT_DEFINE_ERROR(UnclassifiableTransition);
SWEEPOUT_DEFINE_ERROR(NoAdmissiblePole);
SWEEPOUT_DEFINE_ERROR(AmbiguousTracking);
SWEEPOUT_DEFINE_ERROR(EndpointMismatch);
SWEEPOUT_DEFINE_ERROR(ProbeDisagreement);
SWEEPOUT_DEFINE_ERROR(NoAdmissibleProbe);
SWEEPOUT_DEFINE_ERROR(OddSignSum);
SWEEPOUT_DEFINE_ERROR(PreconditionViolated);
SWEEPOUT_DEFINE_ERROR(InconsistentTracks);
SWEEPOUT_DEFINE_ERROR(UnpairedMarkedVertex);
SWEEPOUT_DEFINE_ERROR(NoGoodPair);
SWEEPOUT_DEFINE_ERROR(NotGoodPair);
SWEEPOUT_DEFINE_ERROR(Mismatch);
SWEEPOUT_DEFINE_ERROR(ScheduleOutOfRange);
SWEEPOUT_DEFINE_ERROR(NotASweepout);
SWEEPOUT_DEFINE_ERROR(GenericityViolation);
SWEEPOUT_DEFINE_ERROR(NonGeneric);
SWEEPOUT_DEFINE_ERROR(BudgetExceeded);
SWEEPOUT_DEFINE_ERROR(TooManyCrossings);
SWEEPOUT_DEFINE_ERROR(ParseError);

#undef SWEEPOUT_DEFINE_ERROR

}  // namespace sweepout
