#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mutalg {

// Malformed input text or JSON. CLI exit code 2.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Well-formed input that violates a mathematical precondition. CLI exit code 3.
struct SemanticError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A search exceeded its node cap. CLI exit code 4.
struct BudgetExceeded : std::runtime_error {
    std::size_t explored;
    BudgetExceeded(const std::string& what, std::size_t explored_)
        : std::runtime_error(what + " (explored " + std::to_string(explored_) + ")"), explored(explored_) {}
};

// Quiver-level mutation at k is undefined: arrows i->k->j plus an arrow between i and j
// whose three signs multiply to -1. Indices are 0-based.
struct PositiveThreeCycleViolation : SemanticError {
    int i, j, k;
    PositiveThreeCycleViolation(int i_, int j_, int k_)
        : SemanticError("positive 3-cycle condition fails at vertex " + std::to_string(k_ + 1) + " (path " +
                        std::to_string(i_ + 1) + "->" + std::to_string(k_ + 1) + "->" + std::to_string(j_ + 1) + ")"),
          i(i_), j(j_), k(k_) {}
};

}  // namespace mutalg
