#pragma once

#include <stdexcept>
#include <string>

namespace qlie {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Vectors of different ambient dimensions were mixed.
struct DimensionMismatchError : Error {
    using Error::Error;
};

/// complement_pick was asked for a complement of the full space.
struct NoComplementError : Error {
    using Error::Error;
};

/// quotient_dim received spaces without the required containment.
struct NotASubspaceError : Error {
    using Error::Error;
};

struct UnknownGeneratorError : Error {
    using Error::Error;
};

/// A differential assignment violates its degree contract.
struct MalformedDifferentialError : Error {
    using Error::Error;
};

/// A computation was requested beyond the configured truncation cap.
struct CapExceededError : Error {
    using Error::Error;
};

/// An argument is outside the documented range of a command.
struct RangeError : Error {
    using Error::Error;
};

struct PreconditionError : Error {
    using Error::Error;
};

/// Raised when a construction step that is guaranteed to succeed finds no
/// candidate. Firing indicates a bug, never a user error.
struct ConstructionContradictionError : Error {
    using Error::Error;
};

}  // namespace qlie
