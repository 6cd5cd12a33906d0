#pragma once

#include "mutalg/matrix.hpp"
#include "mutalg/telem.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace mutalg {

using Symmetrizer = std::vector<long long>;
// Vertex indices are 0-based in the C++ API and 1-based in every text or JSON format.
using MutationSequence = std::vector<int>;

// Square matrix over Z[t]/(t^2-1) with a positive diagonal D such that D*B is skew.
// The stored symmetrizer is the minimal one: on each connected component of the
// support graph its entries have gcd 1.
class GssMatrix {
public:
    // Throws SemanticError if no symmetrizer exists.
    explicit GssMatrix(Mat<TElem> entries);
    // Validates d; the stored symmetrizer is still the normalized one.
    GssMatrix(Mat<TElem> entries, const Symmetrizer& d);

    static GssMatrix zero(int n) { return GssMatrix(Mat<TElem>(n)); }

    int n() const { return b_.n(); }
    const TElem& operator()(int i, int j) const { return b_(i, j); }
    const Mat<TElem>& entries() const { return b_; }
    const Symmetrizer& symmetrizer() const { return d_; }

    friend bool operator==(const GssMatrix& x, const GssMatrix& y) { return x.b_ == y.b_; }
    friend bool operator!=(const GssMatrix& x, const GssMatrix& y) { return !(x == y); }

private:
    struct Trusted {};
    GssMatrix(Mat<TElem> entries, Symmetrizer d, Trusted) : b_(std::move(entries)), d_(std::move(d)) {}
    friend GssMatrix mutate_matrix(const GssMatrix& B, int k);

    Mat<TElem> b_;
    Symmetrizer d_;
};

std::optional<Symmetrizer> find_symmetrizer(const Mat<TElem>& entries);

// Signed mutation; defined for every gss matrix, pure or not.
GssMatrix mutate_matrix(const GssMatrix& B, int k);
GssMatrix mutate_sequence(GssMatrix B, const MutationSequence& seq);

// Entrywise evaluation at t = 1.
Mat<Int> specialize(const GssMatrix& B);

// Classical Fomin-Zelevinsky mutation of an integer matrix.
template <class T>
Mat<T> fz_mutate(const Mat<T>& B, int k) {
    const int n = B.n();
    Mat<T> R = B;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == k || j == k) {
                R(i, j) = -B(i, j);
                continue;
            }
            const T& bik = B(i, k);
            const T& bkj = B(k, j);
            if ((bik > 0 && bkj > 0) || (bik < 0 && bkj < 0)) R(i, j) = B(i, j) + (bik > 0 ? bik : T(-bik)) * bkj;
        }
    return R;
}

bool is_pure(const GssMatrix& B);

// First triple (i, j, k) breaking the positive 3-cycle condition at k, if any.
// Requires B pure (throws SemanticError otherwise).
std::optional<std::array<int, 3>> positive_3cycle_violation(const GssMatrix& B, int k);
bool positive_3cycle_ok(const GssMatrix& B, int k);

// Matrix text: rows separated by ';' or newlines, entries by ',' or spaces,
// e.g. "0,-t,0; t,0,-2t; 0,t,0".
std::string to_string(const GssMatrix& B);
GssMatrix parse_gss(const std::string& text);

}  // namespace mutalg
