#ifndef POLAR_ERRORS_HPP
#define POLAR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polar {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Syntax error in polynomial or problem-file input; position is a byte offset.
struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct ValidationError : Error {
    std::string pointer;  // JSON-pointer-like path into the problem document
    ValidationError(const std::string& msg, std::string ptr)
        : Error(msg + " [" + ptr + "]"), pointer(std::move(ptr)) {}
};

// The Groebner engine exceeded its S-pair budget.
struct BudgetError : Error {
    long budget;
    explicit BudgetError(long b)
        : Error("computation budget exceeded (" + std::to_string(b) +
                " S-pairs); raise --budget or POLAR_BUDGET"),
          budget(b) {}
};

struct DimensionError : Error {
    using Error::Error;
};

struct NonProperError : Error {
    using Error::Error;
};

struct PolarNotCurveError : Error {
    using Error::Error;
};

struct NeedsTestPointError : Error {
    using Error::Error;
};

// Candidate-driven decomposition failed to account for the whole top-dimensional part.
struct UnresolvedComponentError : Error {
    std::string residual;
    UnresolvedComponentError(const std::string& msg, std::string res)
        : Error(msg), residual(std::move(res)) {}
};

struct GenericityError : Error {
    using Error::Error;
};

struct UnautomatedStratumError : Error {
    using Error::Error;
};

struct PresentationError : Error {
    using Error::Error;
};

}  // namespace polar

#endif
