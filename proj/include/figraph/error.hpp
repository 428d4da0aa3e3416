#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace figraph {

/// Base class of every domain error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ValidationCode {
    duplicate_orbit_id,
    duplicate_label,
    incompatible_label,
    unknown_orbit_ref,
    loop_on_singleton,
    ordered_pair_unsupported,
};

inline const char* to_string(ValidationCode code) {
    switch (code) {
    case ValidationCode::duplicate_orbit_id: return "DuplicateOrbitId";
    case ValidationCode::duplicate_label: return "DuplicateLabel";
    case ValidationCode::incompatible_label: return "IncompatibleLabel";
    case ValidationCode::unknown_orbit_ref: return "UnknownOrbitRef";
    case ValidationCode::loop_on_singleton: return "LoopOnSingleton";
    case ValidationCode::ordered_pair_unsupported: return "OrderedPairUnsupported";
    }
    return "?";
}

/// A classification graph broke one of its structural rules. `rule()` is the
/// rule number from the table in README.md; `subject()` names the offending
/// orbit, loop or edge.
class ValidationError : public Error {
public:
    ValidationError(ValidationCode code, int rule, std::string subject, const std::string& what)
        : Error(std::string(to_string(code)) + " (rule " + std::to_string(rule) + ", " + subject +
                "): " + what),
          code_(code), rule_(rule), subject_(std::move(subject)) {}

    ValidationCode code() const noexcept { return code_; }
    int rule() const noexcept { return rule_; }
    const std::string& subject() const noexcept { return subject_; }

private:
    ValidationCode code_;
    int rule_;
    std::string subject_;
};

/// Malformed document or schema violation. Line and column are 1-based; 0 when unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
        : Error(line == 0 ? what
                          : "line " + std::to_string(line) + ", column " + std::to_string(column) +
                                ": " + what),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Input exceeds the size an exhaustive routine accepts.
class TooLarge : public Error {
public:
    using Error::Error;
};

/// Parameters fall outside the range a closed form is known for.
class Unsupported : public Error {
public:
    using Error::Error;
};

class InsufficientData : public Error {
public:
    using Error::Error;
};

/// Raised when a post-hoc consistency check fails (e.g. a non-monotone alpha scan).
class InvariantViolation : public Error {
public:
    using Error::Error;
};

/// The exact search ran out of nodes or wall-clock time. Carries the bounds
/// proven so far: lower_bound is witnessed by best_witness, upper_bound comes
/// from the clique cover of the root problem.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(int lower_bound, int upper_bound, std::vector<std::size_t> best_witness,
                   std::uint64_t nodes, std::chrono::nanoseconds elapsed)
        : Error("search budget exceeded: alpha in [" + std::to_string(lower_bound) + ", " +
                std::to_string(upper_bound) + "]"),
          lower_bound_(lower_bound), upper_bound_(upper_bound),
          best_witness_(std::move(best_witness)), nodes_(nodes), elapsed_(elapsed) {}

    int lower_bound() const noexcept { return lower_bound_; }
    int upper_bound() const noexcept { return upper_bound_; }
    const std::vector<std::size_t>& best_witness() const noexcept { return best_witness_; }
    std::uint64_t nodes_explored() const noexcept { return nodes_; }
    std::chrono::nanoseconds elapsed() const noexcept { return elapsed_; }

private:
    int lower_bound_;
    int upper_bound_;
    std::vector<std::size_t> best_witness_;
    std::uint64_t nodes_;
    std::chrono::nanoseconds elapsed_;
};

} // namespace figraph
