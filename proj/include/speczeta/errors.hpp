#pragma once

#include <stdexcept>
#include <string>

namespace speczeta {

// Common base so callers can catch any library error in one handler.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Arithmetic / algebra.
struct DivisionByZero : Error {
    using Error::Error;
};
struct ZeroLeadingCoefficient : Error {
    using Error::Error;
};
struct NonRationalResult : Error {
    using Error::Error;
};

// Domain violations.
struct PoleAtInteger : Error {
    using Error::Error;
};
struct AlphaIsPole : Error {
    using Error::Error;
};
struct OnDiagonal : Error {
    using Error::Error;
};
struct Divergent : Error {
    using Error::Error;
};
struct ParityMismatch : Error {
    using Error::Error;
};
struct NotPrimitive : Error {
    using Error::Error;
};
struct NonIntegerResult : Error {
    using Error::Error;
};
struct InstanceTooLarge : Error {
    using Error::Error;
};

// A cross-check between two internal routes to the same quantity failed.
// Any throw of this type is a bug in the library, not a caller mistake.
struct InternalIdentityViolation : Error {
    using Error::Error;
};

}  // namespace speczeta
