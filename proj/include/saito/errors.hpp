#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace saito {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two values from different rings (or of incompatible shape) were combined.
class RingMismatchError : public Error {
public:
    using Error::Error;
};

/// Text input violated the grammar. `position` is a 0-based byte offset.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position(position) {}

    std::size_t position;
};

/// A precondition on the mathematical input failed (not a syntax problem).
class InvalidInputError : public Error {
public:
    using Error::Error;
};

}  // namespace saito
