#pragma once

#include <stdexcept>
#include <string>

namespace primword {

// Violated value-domain precondition (bad length, parity, non-primitive input, ...).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An enumeration would materialize more state than the caller allowed.
struct BudgetError : std::runtime_error {
    BudgetError(const std::string& what, std::string required, std::uint64_t budget)
        : std::runtime_error(what), required_count(std::move(required)), budget_limit(budget) {}

    std::string required_count;  // decimal; may exceed 2^64
    std::uint64_t budget_limit;
};

}  // namespace primword
