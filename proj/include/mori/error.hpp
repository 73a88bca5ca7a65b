#pragma once

#include <stdexcept>
#include <string>

namespace mori {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed textual input: rationals, class expressions, JSON payloads.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

/// Structurally valid input that violates a precondition (dimension
/// mismatches, singular pairings, missing model data).
class DataError : public Error {
public:
    explicit DataError(const std::string& what) : Error(what) {}
};

} // namespace mori
