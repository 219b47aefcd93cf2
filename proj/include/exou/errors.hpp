#pragma once

#include <stdexcept>
#include <string>

namespace exou {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : Error {
    using Error::Error;
};

/// Parts given in non-decreasing order without an explicit sort request.
struct NotDecreasing : Error {
    using Error::Error;
};

/// A computation would exceed the configured enumeration cap.
struct SizeLimit : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

struct DegreeMismatch : Error {
    using Error::Error;
};

/// No standard tableau realizes the given content vector.
struct Inconsistent : Error {
    using Error::Error;
};

/// Input violates the hypothesis of the requested criterion.
struct HypothesisViolated : Error {
    using Error::Error;
};

/// A one-dimensional (trivial) partition where a nontrivial one is required.
struct TrivialPartition : Error {
    using Error::Error;
};

/// A partition has more rows than the physical state count d allows.
struct RowBound : Error {
    using Error::Error;
};

struct SingleMember : Error {
    using Error::Error;
};

/// The linear solve did not produce a one-dimensional solution space.
struct Degenerate : Error {
    using Error::Error;
};

struct BudgetExceeded : Error {
    using Error::Error;
};

}  // namespace exou
