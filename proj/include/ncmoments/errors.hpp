#pragma once

#include <stdexcept>
#include <string>

namespace ncmoments {

/// Base class for all errors raised by this library.  Every failure mode has
/// a dedicated subclass so callers (and tests) can catch precisely.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A word (or ground-set size) has odd length where an even one is required.
struct InvalidWordLength : Error {
    explicit InvalidWordLength(const std::string& msg) : Error(msg) {}
};

/// A size parameter exceeds the configured safety limit.
struct LimitExceeded : Error {
    explicit LimitExceeded(const std::string& msg) : Error(msg) {}
};

/// A 1-based block or position index is out of range.
struct IndexError : Error {
    explicit IndexError(const std::string& msg) : Error(msg) {}
};

/// Two sequences that must agree in length do not.
struct LengthMismatch : Error {
    explicit LengthMismatch(const std::string& msg) : Error(msg) {}
};

/// An operation that requires an adapted pairing was given one that is not.
struct NotAdapted : Error {
    explicit NotAdapted(const std::string& msg) : Error(msg) {}
};

/// A block-pair query was made on a block whose nearest outer block is the
/// imaginary block.
struct NoOuterBlock : Error {
    explicit NoOuterBlock(const std::string& msg) : Error(msg) {}
};

/// Catch-all for malformed arguments not covered by a more specific error.
struct InvalidArgument : Error {
    explicit InvalidArgument(const std::string& msg) : Error(msg) {}
};

}  // namespace ncmoments
