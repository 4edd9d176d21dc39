#pragma once
// Exception types shared across the library.  Everything derives from
// ggraph::Error so callers can catch one base type; the CLI maps these
// to exit code 2 (bad input) uniformly.

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ggraph {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Group spec text failed to parse.  offset is the byte position of the
// first offending character.
struct SyntaxError : Error {
    std::size_t offset;
    SyntaxError(const std::string& msg, std::size_t off)
        : Error(msg + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

// Structurally valid spec with an argument outside the atom's domain,
// e.g. Q(12) or PSL(2,6).
struct InvalidParameter : Error {
    using Error::Error;
};

// Requested group exceeds the configured order cap.
struct OrderLimitExceeded : Error {
    using Error::Error;
};

// A construction step produced something that is not a group.
struct GroupConstructionError : Error {
    using Error::Error;
};

struct NotAPrimePower : Error {
    using Error::Error;
};

struct TooManyDivisors : Error {
    using Error::Error;
};

struct GroundSetTooLarge : Error {
    using Error::Error;
};

// A bounded search ran out of its node-expansion budget before it could
// settle the question either way.
struct BudgetExceeded : Error {
    using Error::Error;
};

// Graph file did not match the expected JSON layout.
struct SchemaError : Error {
    using Error::Error;
};

// An operation's documented precondition does not hold, e.g. asking for
// the unique involution of a group that has none or several.
struct PreconditionFailed : Error {
    using Error::Error;
};

struct UnknownClaim : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace ggraph
