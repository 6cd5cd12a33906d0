#pragma once

// Conventions shared by the root and Lie modules. With C = (c_ij):
//   s_i(alpha_j) = alpha_j - c_ij alpha_i
//   (alpha_j, alpha_i^vee) = c_ij, so (alpha_i, alpha_j^vee) = c_ji
//   [h_i, e_j] = c_ij e_j, i.e. alpha_j(h_i) = c_ij
//   |c_ij| > |c_ji| iff i > j in the diagram
// Inner product (u, v) = u^T M v with M = D C.

#include "mutalg/dynkin.hpp"
#include "mutalg/gss_matrix.hpp"
#include "mutalg/quiver.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace mutalg {

struct CartanCounterpart {
    Mat<long long> c;
    Symmetrizer d;
    int n() const { return c.n(); }
    long long operator()(int i, int j) const { return c(i, j); }
    // M = D C
    Mat<Int> gram() const;
    friend bool operator==(const CartanCounterpart& x, const CartanCounterpart& y) { return x.c == y.c; }
};

// 2 on the diagonal and |a| - |b| at b_ij = a + bt. Total on gss matrices.
CartanCounterpart cartan_counterpart(const GssMatrix& B);
CartanCounterpart cartan_counterpart(const SignedValuedQuiver& Q);
CartanCounterpart classical_counterpart(const DynkinType& t);

// c'_ij = c_ij - c_ik c_kj when exactly one of i, j has an arrow to k in Q.
CartanCounterpart mutate_cartan(const CartanCounterpart& C, const SignedValuedQuiver& Q, int k);

// D^{-1} E^s_{rs} D C E^s_{sr}; throws SemanticError if the result is not integral.
CartanCounterpart transform_t(const CartanCounterpart& C, int s, int r, long long sigma);
// D^{-1} I_r D C I_r
CartanCounterpart transform_j(const CartanCounterpart& C, int r);
// T^{-c_sr}_{sr}
CartanCounterpart transform_u(const CartanCounterpart& C, int s, int r);

// Quasi-Cartan companion of `btilde` whose symmetrization is positive definite
// (all leading principal minors of D C positive).
bool is_positive_quasi_cartan(const CartanCounterpart& C, const Mat<Int>& btilde);
bool is_positive(const CartanCounterpart& C);

using Root = std::vector<long long>;

Root simple_root(int n, int i);
Root simple_reflection(const CartanCounterpart& C, int i, const Root& beta);

struct RootSystem {
    CartanCounterpart cartan;
    std::vector<Root> roots;  // sorted lexicographically
    bool contains(const Root& r) const;
    std::size_t index_of(const Root& r) const;  // throws SemanticError when absent
};

// Orbit of the simple roots under the simple reflections. Throws BudgetExceeded
// once more than `cap` roots have been found.
RootSystem generate_root_system(const CartanCounterpart& C, std::size_t cap = 100000);

Int inner_product(const CartanCounterpart& C, const Root& u, const Root& v);
// (beta, gamma^vee) = 2 (beta, gamma) / (gamma, gamma); throws SemanticError if (gamma, gamma) = 0.
Rat coroot_pairing(const CartanCounterpart& C, const Root& beta, const Root& gamma);

// Checks reflection closure, integral pairings, R alpha cap Phi = {+-alpha}, and
// that the roots span. Returns an empty string on success, else a description.
std::string check_root_system_axioms(const RootSystem& rs);

// rho_k : Phi' -> Phi for Q' = mu_k(Q), extended linearly. `Q` is the quiver before mutation.
Root mutate_root(const SignedValuedQuiver& Q, int k, const Root& beta_prime);
// rho_k^{-1} : Phi -> Phi', with Qp = mu_k(Q).
Root inverse_mutate_root(const SignedValuedQuiver& Qp, int k, const Root& beta);

// Images rho(alpha_i) in the coordinates of Phi_Delta for B = mu_seq(B_Delta),
// B_Delta the all-negative Dynkin quiver of type t.
std::vector<Root> composite_rho(const DynkinType& t, const MutationSequence& seq);

struct CompanionCheck {
    bool ok = false;
    std::string detail;  // offending entry when !ok
};
// gammas in the simple-root coordinates of the classical system of type t.
CompanionCheck is_signed_companion_basis(const std::vector<Root>& gammas, const CartanCounterpart& target,
                                         const DynkinType& t);

// Root system of a type-A member by peeling extremal vertices; throws SemanticError
// when the quiver is not of that shape.
std::vector<Root> type_a_roots_recursive(const SignedValuedQuiver& Q);

// "a1+a2-2a3"
std::string root_to_string(const Root& r);

}  // namespace mutalg
