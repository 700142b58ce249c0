#pragma once

#include <stdexcept>
#include <string>

namespace sunit {

// Raised when an interval comparison cannot be decided below the configured
// precision cap. Callers treat this as a budget error, not a wrong answer.
struct precision_exhausted_error : std::runtime_error {
    explicit precision_exhausted_error(const std::string& what)
        : std::runtime_error(what) {}
};

// Raised when Pollard rho gives up on a factorization within its budget.
struct factorization_budget_error : std::runtime_error {
    explicit factorization_budget_error(const std::string& what)
        : std::runtime_error(what) {}
};

// Raised by lattice point enumeration when the output would exceed the
// caller-supplied cap. The solver uses this to detect too-weak sieves.
struct candidate_overflow_error : std::runtime_error {
    explicit candidate_overflow_error(const std::string& what)
        : std::runtime_error(what) {}
};

}  // namespace sunit
