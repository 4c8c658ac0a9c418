#pragma once

#include <stdexcept>
#include <string>

namespace abcmin {

// Base for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid numeric argument (bad degree, k = 2 bracket request, ...).
struct DomainError : Error {
    using Error::Error;
};

// abc_index on fewer than two vertices.
struct EmptyTreeError : Error {
    using Error::Error;
};

// Edge-list input that does not describe a tree.
struct ParseError : Error {
    enum class Kind { BadToken, DuplicateEdge, CycleDetected, Disconnected };

    ParseError(Kind kind, int line, const std::string& what)
        : Error(what), kind(kind), line(line) {}

    Kind kind;
    int line;  // 1-based line in the input that triggered the error
};

// CandidateShape violating the structural constraint system.
struct InfeasibleShapeError : Error {
    using Error::Error;
};

// Rewrite preconditions (see transforms.hpp).
struct OverlappingSubtreesError : Error {
    using Error::Error;
};
struct NotBothRootsError : Error {
    using Error::Error;
};
struct BranchesNotSiblingsError : Error {
    using Error::Error;
};
struct OrderGapTooSmallError : Error {
    using Error::Error;
};

// Exhaustive enumeration asked to exceed its configured size cap.
struct LimitExceededError : Error {
    using Error::Error;
};

// Closed-form / asymptotic evaluation outside the validated t range.
struct OutOfValidatedRangeError : Error {
    using Error::Error;
};

}  // namespace abcmin
