#pragma once

#include <stdexcept>
#include <string>

namespace sqfr {

/// Malformed external input (graph6 record, edge list, matching text).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// An operation was called outside its documented precondition.
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

/// Instance exceeds a configured size cap.
struct CapExceededError : std::runtime_error {
    explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

/// A search that a proven theorem guarantees to succeed came up empty.
/// Never expected; must surface loudly, not be swallowed.
struct TheoremViolationError : std::runtime_error {
    explicit TheoremViolationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sqfr
