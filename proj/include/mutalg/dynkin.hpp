#pragma once

#include "mutalg/gss_matrix.hpp"
#include "mutalg/quiver.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace mutalg {

struct DynkinType {
    char family = 'A';
    int rank = 1;

    // Throws SemanticError outside A1+, B2+, C2+, D4+, E6-8, F4, G2.
    static DynkinType make(char family, int rank);
    friend bool operator==(const DynkinType&, const DynkinType&) = default;
    friend auto operator<=>(const DynkinType&, const DynkinType&) = default;
};

std::string to_string(const DynkinType& t);
// "A3", "B_4", "g2"
DynkinType parse_dynkin_type(const std::string& s);

// Edge data for a joined pair i < j.
struct DiagramEdge {
    long long multiplicity = 1;
    // Only meaningful when multiplicity >= 2: +1 means i > j, -1 means i < j, 0 means equal.
    int order = 0;
    // Signed diagrams only: sgn of the arrow value.
    int sign = 0;
    friend bool operator==(const DiagramEdge&, const DiagramEdge&) = default;
};

struct UnsignedDiagram {
    int n = 0;
    std::map<std::pair<int, int>, DiagramEdge> edges;
    friend bool operator==(const UnsignedDiagram&, const UnsignedDiagram&) = default;
};

UnsignedDiagram unsigned_diagram(const SignedValuedQuiver& Q);
UnsignedDiagram signed_diagram(const SignedValuedQuiver& Q);
// Diagram of an integer skew-symmetrizable matrix: |b_ij b_ji| edges, i > j iff |b_ij| > |b_ji|.
UnsignedDiagram diagram_of(const Mat<long long>& B);

std::optional<DynkinType> recognize_dynkin(const UnsignedDiagram& g);

// Classical Cartan matrix with the order convention used throughout: for B_n the
// extremity n is the smaller end of the double edge (c_{n-1,n} = -2), for C_n the larger.
Mat<long long> classical_cartan(const DynkinType& t);
// Every edge as a negative arrow from the larger index to the smaller.
SignedValuedQuiver dynkin_quiver(const DynkinType& t);

// Node cap for mutation-class searches: MUTALG_BUDGET if set, else 1e6.
std::size_t default_budget();

// Empty if B is not pure, has a dangerous cycle, or its specialization is not of
// finite type. Throws BudgetExceeded when the unsigned class search exceeds `budget`.
std::optional<DynkinType> is_mutation_dynkin(const GssMatrix& B, std::size_t budget = default_budget());

}  // namespace mutalg
