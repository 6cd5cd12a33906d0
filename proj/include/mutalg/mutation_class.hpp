#pragma once

#include "mutalg/dynkin.hpp"
#include "mutalg/gss_matrix.hpp"
#include "mutalg/quiver.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace mutalg {

// Breadth-first closure under all mu_k with labeled vertices, in discovery order
// (k ascending at each node). Throws BudgetExceeded past `budget` members unless
// `truncate` is set, in which case the first `budget` members are returned.
std::vector<GssMatrix> mutation_class_matrices(const GssMatrix& B, std::size_t budget = default_budget(),
                                               bool truncate = false);

// Quiver version. Throws SemanticError if the class leaves the pure matrices.
// With `canonical`, members are identified up to relabeling (see canonical_key).
std::vector<SignedValuedQuiver> mutation_class(const SignedValuedQuiver& Q, std::size_t budget = default_budget(),
                                               bool canonical = false);

// Invariant of a quiver up to vertex relabeling: the lexicographically least encoding over
// the relabelings allowed by colour refinement on (symmetrizer, arrow value, direction).
std::string canonical_key(const SignedValuedQuiver& Q);

// For a tree quiver Q and a quiver Q2 obtained from it by reversing and/or negating arrows:
// a sequence taking Q to Q2 (source mutations for reversals, products of mu_k^2 for
// negations). Throws SemanticError when Q is not a tree or Q2 is not of that form.
MutationSequence tree_equivalence_sequence(const SignedValuedQuiver& Q, const SignedValuedQuiver& Q2);

}  // namespace mutalg
