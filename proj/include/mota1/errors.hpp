#pragma once

#include <stdexcept>
#include <string>

namespace mota1 {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An entry of a homogeneous map violates the forced-degree constraint.
struct DegreeConstraintViolation : Error {
    using Error::Error;
};

// Bases of composed maps do not line up.
struct CompositionMismatch : Error {
    using Error::Error;
};

// A map does not preserve the span of a submodule inclusion.
struct MembershipFailure : Error {
    using Error::Error;
};

// Module definition file is malformed; line is 1-based, 0 when not tied to a line.
struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& what_)
        : Error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
    explicit ParseError(const std::string& what_) : Error(what_), line(0) {}
};

struct UnknownName : Error {
    using Error::Error;
};

// An induced differential fails to square to zero (invalid input module).
struct SquareNotZero : Error {
    using Error::Error;
};

struct NotInvertible : Error {
    using Error::Error;
};

// Signature has no integer expression in the generator lattice.
struct LatticeInconsistency : Error {
    using Error::Error;
};

// A structural self-check failed; always indicates a bug, never bad input.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace mota1
