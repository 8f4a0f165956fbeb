#pragma once

#include <stdexcept>
#include <string>

namespace borel {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Matrix/vector dimensions do not match.
struct DimensionError : Error {
    explicit DimensionError(const std::string& msg) : Error(msg) {}
};

/// A product or power exceeded the configured total-degree cap.
/// Signals a runaway symbolic computation rather than a wrong answer.
struct DegreeCapError : Error {
    explicit DegreeCapError(const std::string& msg) : Error(msg) {}
};

/// Polynomial evaluation was asked for a variable with no assignment.
struct MissingAssignmentError : Error {
    explicit MissingAssignmentError(const std::string& msg) : Error(msg) {}
};

/// Zero denominator, non-invertible group element, or repeated pivot failure.
struct SingularityError : Error {
    explicit SingularityError(const std::string& msg) : Error(msg) {}
};

/// Repeated eigenvalues where pairwise distinct ones are required.
struct EigenvalueCollisionError : Error {
    explicit EigenvalueCollisionError(const std::string& msg) : Error(msg) {}
};

/// i_a * j_a != 0 for some index a in a lift problem that needs a zero diagonal.
struct DiagonalIncompatibilityError : Error {
    explicit DiagonalIncompatibilityError(const std::string& msg) : Error(msg) {}
};

/// A one-parameter limit was requested in a direction that does not converge
/// (a negative power of t survives in a requested entry).
struct LimitError : Error {
    explicit LimitError(const std::string& msg) : Error(msg) {}
};

/// A construction-time certificate failed. This always indicates a bug in the
/// construction, never bad user data, so callers should not catch it.
struct CertificationError : Error {
    explicit CertificationError(const std::string& msg) : Error(msg) {}
};

/// A degree or time cap was exhausted. Reported as "incomplete", never as a
/// wrong result; CLI maps this to its own exit code.
struct CapExceededError : Error {
    explicit CapExceededError(const std::string& msg) : Error(msg) {}
};

/// A tracked denominator vanishes identically under a restriction map.
struct RestrictionError : Error {
    explicit RestrictionError(const std::string& msg) : Error(msg) {}
};

/// Malformed input (JSON, word specs, CLI values).
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

} // namespace borel
