#pragma once

#include <stdexcept>
#include <string>

namespace hadsimplex {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Requested size exceeds what the implementation is prepared to handle.
struct CapacityError : Error {
    using Error::Error;
};

struct InvalidParameterError : Error {
    using Error::Error;
};

/// Matrix input is not a square +-1 sign matrix (shape / character problems).
struct MalformedMatrixError : Error {
    using Error::Error;
};

/// A matrix operation required an all-ones last column first.
struct NormalizationRequiredError : Error {
    using Error::Error;
};

struct DegenerateSimplexError : Error {
    using Error::Error;
};

struct DimensionMismatchError : Error {
    using Error::Error;
};

/// A checked mathematical relation failed; the message names the relation.
struct InvariantViolationError : Error {
    using Error::Error;
};

} // namespace hadsimplex
