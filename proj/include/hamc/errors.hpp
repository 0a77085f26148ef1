#pragma once

#include <stdexcept>
#include <string>

namespace hamc {

// Raised when an operation declines to run because it would exceed an
// explicit resource budget (node limits, object-count caps, size caps).
// The CLI maps this to its own exit code, distinct from bad input.
struct resource_limit_error : std::runtime_error {
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when input violates a documented precondition (bad primes, size
// mismatches, malformed files).  The CLI maps this to the usage exit code.
struct precondition_error : std::invalid_argument {
    explicit precondition_error(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace hamc
