#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bicx {

/// Base of every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A documented precondition was violated (zero polynomial, composite prime, ...).
struct InvalidArgument : Error {
    using Error::Error;
};

/// Arithmetic between component scalars of different kinds.
struct TagMismatch : Error {
    using Error::Error;
};

/// The element has a zero idempotent component and cannot be inverted.
struct NullConeError : Error {
    using Error::Error;
};

/// A radix expansion did not terminate within the digit cap.
struct NonTermination : Error {
    using Error::Error;
};

/// The requested field or ring is outside what the library supports.
struct Unsupported : Error {
    using Error::Error;
};

/// Malformed element or polynomial literal.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

}  // namespace bicx
