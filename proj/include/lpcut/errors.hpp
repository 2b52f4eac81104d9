#ifndef LPCUT_ERRORS_HPP
#define LPCUT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lpcut {

/// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed arguments: dimension mismatches, bad node ids, invalid capacities.
struct InputError : Error {
    using Error::Error;
};

/// Parameter outside the mathematical domain (p < 1, non-finite p).
struct DomainError : Error {
    using Error::Error;
};

/// A computation left the finite double range.
struct NumericRangeError : Error {
    using Error::Error;
};

/// Exhaustive enumeration refused (too many vertices).
struct SizeError : Error {
    using Error::Error;
};

/// Problem file could not be parsed or failed validation.
struct ParseError : Error {
    using Error::Error;
};

} // namespace lpcut

#endif
