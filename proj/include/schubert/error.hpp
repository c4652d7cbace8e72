#pragma once

#include <stdexcept>
#include <string>

namespace schubert {

/// Raised when an input violates a documented precondition (bad diagram,
/// out-of-range parameter, mismatched contexts).
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when a brute-force enumeration would exceed its budget.
/// Enumerations never return partial results.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw ValidationError(msg);
}

} // namespace detail
} // namespace schubert
