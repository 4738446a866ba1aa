#pragma once

#include <stdexcept>
#include <string>

namespace posetder {

// Root of every error thrown by the library. Callers that only need to
// distinguish "bad input" from "too large" can catch the intermediate bases.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input (bad poset, bad ring string, bad JSON).
struct InputError : Error {
    using Error::Error;
};

struct CycleError : InputError {
    using InputError::InputError;
};

struct NotReducedError : InputError {
    using InputError::InputError;
};

struct UnknownElementError : InputError {
    using InputError::InputError;
};

struct DuplicateError : InputError {
    using InputError::InputError;
};

struct UnsupportedRingError : InputError {
    using InputError::InputError;
};

struct DimensionError : InputError {
    using InputError::InputError;
};

struct NotComparableError : InputError {
    using InputError::InputError;
};

struct ParseError : InputError {
    using InputError::InputError;
};

struct UnknownFixtureError : InputError {
    using InputError::InputError;
};

struct SizeLimitError : InputError {
    using InputError::InputError;
};

// Raised when a (source, target) pair has more cover paths than the
// configured limit. Carries the offending pair by identifier.
struct PathLimitExceeded : Error {
    PathLimitExceeded(std::string source_id, std::string target_id, std::size_t limit)
        : Error("more than " + std::to_string(limit) + " cover paths from '" + source_id +
                "' to '" + target_id + "'"),
          source(std::move(source_id)),
          target(std::move(target_id)) {}

    std::string source;
    std::string target;
};

}  // namespace posetder
