#pragma once

#include "mutalg/gss_matrix.hpp"

#include <optional>
#include <utility>
#include <string>
#include <vector>

namespace mutalg {

inline std::pair<int, int> ordered_pair(int i, int j) { return i < j ? std::pair(i, j) : std::pair(j, i); }

struct Arrow {
    int src = 0;
    int tgt = 0;
    long long v1 = 0;
    long long v2 = 0;

    int sign() const { return v1 > 0 ? 1 : -1; }
    long long weight() const { return v1 * v2; }

    friend bool operator==(const Arrow&, const Arrow&) = default;
    friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

Arrow reverse(const Arrow& a);
Arrow negate(const Arrow& a);
// [ab] for a: i -> j, b: j -> h. Throws SemanticError if the arrows are not composable.
Arrow compose(const Arrow& a, const Arrow& b);

enum class Comparability { Smaller, Bigger, Same, Incomparable };
// a: i -> j against an antiparallel b: j -> i.
Comparability compare(const Arrow& a, const Arrow& b);

// Simple digraph with same-sign value pairs compatible with a symmetrizer.
class SignedValuedQuiver {
public:
    SignedValuedQuiver() = default;
    // Validates simplicity, value signs and d_src v1 = d_tgt v2. Throws SemanticError.
    SignedValuedQuiver(int n, Symmetrizer d, std::vector<Arrow> arrows);
    // Infers the minimal symmetrizer; throws SemanticError if none exists.
    SignedValuedQuiver(int n, std::vector<Arrow> arrows);

    int n() const { return n_; }
    const Symmetrizer& symmetrizer() const { return d_; }
    // Sorted by (src, tgt).
    const std::vector<Arrow>& arrows() const { return arrows_; }
    // The arrow joining i and j in either direction.
    std::optional<Arrow> between(int i, int j) const;
    bool has_arrow(int i, int j) const;

    friend bool operator==(const SignedValuedQuiver& x, const SignedValuedQuiver& y) {
        return x.n_ == y.n_ && x.arrows_ == y.arrows_ && x.d_ == y.d_;
    }
    friend bool operator!=(const SignedValuedQuiver& x, const SignedValuedQuiver& y) { return !(x == y); }

private:
    int n_ = 0;
    Symmetrizer d_;
    std::vector<Arrow> arrows_;
};

// Requires B pure; arrow i -> j iff sgn(b_ij) = 1, with value (b_ij(-1), -b_ji(-1)).
SignedValuedQuiver quiver_from_matrix(const GssMatrix& B);
GssMatrix matrix_from_quiver(const SignedValuedQuiver& Q);

// Arrows i -> k -> j with an arrow between i and j whose signs multiply to -1.
std::optional<std::array<int, 3>> positive_3cycle_violation(const SignedValuedQuiver& Q, int k);

// The three-step graphical mutation. Throws PositiveThreeCycleViolation.
SignedValuedQuiver mutate_quiver(const SignedValuedQuiver& Q, int k);
SignedValuedQuiver mutate_quiver_sequence(SignedValuedQuiver Q, const MutationSequence& seq);

// Inline text form, one arrow per clause: "1 -(-1,-1)-> 2; 3 -(2,1)-> 2".
// An optional leading "n=4:" fixes the vertex count and "d=1,1,2:" the symmetrizer.
SignedValuedQuiver parse_quiver_dsl(const std::string& text);
std::string to_dsl(const SignedValuedQuiver& Q);

}  // namespace mutalg
