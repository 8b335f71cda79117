// Error taxonomy for the crosscolor library.
//
// Everything user-facing throws one of these; the CLI maps categories to exit
// codes.  InternalCaseGap is special: it flags that a structural fact the
// coloring routines rely on failed to hold at runtime.  The solver catches it,
// falls back to the exhaustive oracle, and records a minimized reproduction so
// the gap can be studied; test suites require zero activations.

#pragma once

#include <stdexcept>
#include <string>

namespace crosscolor {

// Broad categories, used for CLI exit codes and for filtering in tests.
enum class ErrorKind {
    BadInput,       // malformed instance text, bad CLI usage
    InvalidGraph,   // structure fails validation (rotations, Euler, crossings)
    InvalidLists,   // list assignment missing/short/ill-typed for the request
    Unsolvable,     // instance genuinely admits no coloring (oracle-confirmed)
    CaseGap,        // internal case analysis hit a state it claims impossible
    Internal,       // plain bug guard (should never fire)
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class BadInputError : public Error {
public:
    explicit BadInputError(std::string m) : Error(ErrorKind::BadInput, std::move(m)) {}
};

class InvalidGraphError : public Error {
public:
    explicit InvalidGraphError(std::string m) : Error(ErrorKind::InvalidGraph, std::move(m)) {}
};

class InvalidListsError : public Error {
public:
    explicit InvalidListsError(std::string m) : Error(ErrorKind::InvalidLists, std::move(m)) {}
};

class UnsolvableError : public Error {
public:
    explicit UnsolvableError(std::string m) : Error(ErrorKind::Unsolvable, std::move(m)) {}
};

// Raised when a case analysis reaches a branch whose precondition, believed
// structurally impossible, actually occurred.  Carries the tag of the failing
// case so the repro dump can name it.
class InternalCaseGap : public Error {
public:
    InternalCaseGap(std::string tag, std::string m)
        : Error(ErrorKind::CaseGap, tag + ": " + m), tag_(std::move(tag)) {}

    const std::string& tag() const noexcept { return tag_; }

private:
    std::string tag_;
};

class InternalError : public Error {
public:
    explicit InternalError(std::string m) : Error(ErrorKind::Internal, std::move(m)) {}
};

}  // namespace crosscolor
