#pragma once

#include <stdexcept>
#include <string>

namespace combword {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structure file could not be read. Carries a 1-based line number when known.
struct ParseError : Error {
    ParseError(const std::string& origin, int line, const std::string& msg)
        : Error(origin + ":" + std::to_string(line) + ": " + msg), line(line) {}
    int line;
};

// A declared structure violates one of its construction invariants.
struct InvariantError : Error {
    using Error::Error;
};

// A reachable word difference exceeded the configured bound; the language
// is not a combing at this bound.
struct DifferenceExplosionError : Error {
    using Error::Error;
};

// The enumerative search ran past its length bound without finding the next
// normal form. Signals a broken structure, never a nontrivial element.
struct SearchExhaustedError : Error {
    using Error::Error;
};

// The fast step found no accepted continuation.
struct NoSolutionError : Error {
    using Error::Error;
};

// The fast step found two distinct continuations; uniqueness is violated.
struct AmbiguityError : Error {
    using Error::Error;
};

struct UnknownLetterError : Error {
    using Error::Error;
};

} // namespace combword
