#pragma once

#include <stdexcept>
#include <string>

namespace orient {

// Raised when an operation would exceed its configured enumeration or
// search budget. Callers can shrink the instance or raise the budget.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when certificate construction cannot establish that propagation
// recovers the full orientation.
struct CertificationError : std::runtime_error {
    explicit CertificationError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace orient
