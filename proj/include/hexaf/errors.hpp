#pragma once

#include <stdexcept>
#include <string>

namespace hexaf {

// Rejected input: malformed cell sets, bad parameters, bad files.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource cap was hit (cycle cap, census budget, set cap).
// Callers turn this into an explicit skip, never into a silent truncation.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hexaf
