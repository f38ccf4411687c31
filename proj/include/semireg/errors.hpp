#pragma once

#include <stdexcept>
#include <string>

namespace semireg {

// Error taxonomy. Precondition-style failures and invariant violations are
// kept apart: the latter signal a state that the underlying theory rules out,
// and callers are expected to let them surface.
enum class ErrorKind {
    DegreeMismatch,
    NotTransitive,
    WrongDegree,
    DegreeNotPrimePower,
    NotSolvable,
    TrivialGroup,
    BoundExceeded,
    NoSuchElement,
    NotInvariant,
    NotAutomorphism,
    NotNormal,
    NotAbelian,
    TooManyOrbits,
    NotCoprime,
    ImageNotSemiregular,
    NotFaithful,
    EmptyDigraph,
    DegenerateAlternet,
    ClassesNotUniform,
    QuotientNotCycle,
    IntraOrbitEdge,
    OrbitContainsBothDirections,
    NoWitness,
    Precondition,
    SubgroupHypothesis,   // a step valid for the full automorphism group failed for the supplied subgroup
    InvariantViolation,   // contradicts a proven fact; never caught internally
    Parse,
    UnknownFamily,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

inline void require(bool condition, ErrorKind kind, const std::string& message) {
    if (!condition) fail(kind, message);
}

} // namespace semireg
