#pragma once

#include <stdexcept>
#include <string>

namespace baxterlab {

// Operands live in different coefficient rings (or base algebras).
struct RingMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A modulus that must be prime is not.
struct NotPrimeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Parameter outside the supported desk-scale range of an operation.
struct OutOfRangeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Composition norm does not match the required total.
struct NormMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Operation requires the polynomial base algebra.
struct UnsupportedBaseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed textual input (decimal literals, JSON documents).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace baxterlab
