#pragma once

#include <stdexcept>
#include <string>

namespace magicsq {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// 64-bit integer arithmetic would wrap around. Callers that need the value
/// anyway should go through the arbitrary-precision path (see charpoly).
class OverflowError : public Error {
public:
    using Error::Error;
};

/// Operands are not conformable (order/shape mismatch).
class ShapeError : public Error {
public:
    using Error::Error;
};

/// A documented precondition was violated (non-magic seed, non-regular
/// input, inconsistent grid, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Malformed textual input: square files or spectrum claim strings.
class ParseError : public Error {
public:
    using Error::Error;
};

/// An iterative method exhausted its sweep limit.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// Lookup of a named built-in constant failed.
class UnknownNameError : public Error {
public:
    using Error::Error;
};

} // namespace magicsq
