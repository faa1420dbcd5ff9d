#pragma once

#include <stdexcept>
#include <string>

namespace tkb {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Lexical/grammatical failure; offset is the byte position in the source text.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (at byte " + std::to_string(offset) + ")"), offset(offset) {}
    std::size_t offset;
};

// Evaluation left the declared domain box.
struct DomainError : Error {
    using Error::Error;
};

// log of a non-positive value, division by zero, sqrt of a negative, or a
// transcendental reaching the exact backend.
struct MathDomainError : Error {
    using Error::Error;
};

struct DimensionError : Error {
    using Error::Error;
};

// Scenario-level failure; keypath names the offending entry.
struct ValidationError : Error {
    ValidationError(const std::string& what, std::string keypath_)
        : Error(what + " [" + keypath_ + "]"), keypath(std::move(keypath_)) {}
    std::string keypath;
};

} // namespace tkb
