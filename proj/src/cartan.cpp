#include "mutalg/cartan.hpp"

#include "mutalg/errors.hpp"
#include "mutalg/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <set>

namespace mutalg {

namespace {

long long abs_ll(const Int& x) { return Int(abs(x)).get_si(); }

// I + sigma e_a e_b^T
Mat<Int> elementary(int n, int a, int b, long long sigma) {
    Mat<Int> e = Mat<Int>::identity(n);
    e(a, b) += to_int(sigma);
    return e;
}

// D^{-1} L (D C) R, exactly.
CartanCounterpart conjugate(const CartanCounterpart& C, const Mat<Int>& L, const Mat<Int>& R) {
    Mat<Int> m = L * (C.gram() * R);
    CartanCounterpart out{Mat<long long>(C.n()), C.d};
    for (int i = 0; i < C.n(); ++i)
        for (int j = 0; j < C.n(); ++j) {
            Int di = to_int(C.d[i]);
            if (m(i, j) % di != 0) throw SemanticError("transform leaves the integers at (" + std::to_string(i + 1) + "," +
                                                       std::to_string(j + 1) + ")");
            Int q = m(i, j) / di;
            out.c(i, j) = q.get_si();
        }
    return out;
}

// c_ij read off the arrow joining i and j
long long entry(const SignedValuedQuiver& Q, int i, int j) {
    if (i == j) return 2;
    auto a = Q.between(i, j);
    if (!a) return 0;
    return a->src == i ? a->v1 : a->v2;
}

void check_index(int n, int i, const char* what) {
    if (i < 0 || i >= n) throw SemanticError(std::string(what) + ": vertex out of range");
}

}  // namespace

Mat<Int> CartanCounterpart::gram() const {
    Mat<Int> m(n());
    for (int i = 0; i < n(); ++i)
        for (int j = 0; j < n(); ++j) m(i, j) = to_int(d[i]) * to_int(c(i, j));
    return m;
}

CartanCounterpart cartan_counterpart(const GssMatrix& B) {
    const int n = B.n();
    CartanCounterpart C{Mat<long long>(n), B.symmetrizer()};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) C.c(i, j) = i == j ? 2 : abs_ll(B(i, j).a) - abs_ll(B(i, j).b);
    return C;
}

CartanCounterpart cartan_counterpart(const SignedValuedQuiver& Q) { return cartan_counterpart(matrix_from_quiver(Q)); }

CartanCounterpart classical_counterpart(const DynkinType& t) {
    return CartanCounterpart{classical_cartan(t), dynkin_quiver(t).symmetrizer()};
}

CartanCounterpart mutate_cartan(const CartanCounterpart& C, const SignedValuedQuiver& Q, int k) {
    const int n = C.n();
    check_index(n, k, "mutate_cartan");
    std::vector<bool> in(n);
    for (int i = 0; i < n; ++i) in[i] = Q.has_arrow(i, k);
    CartanCounterpart out = C;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (in[i] != in[j]) out.c(i, j) = C(i, j) - C(i, k) * C(k, j);
    return out;
}

CartanCounterpart transform_t(const CartanCounterpart& C, int s, int r, long long sigma) {
    check_index(C.n(), s, "transform_t");
    check_index(C.n(), r, "transform_t");
    if (s == r) throw SemanticError("transform_t needs s != r");
    return conjugate(C, elementary(C.n(), r, s, sigma), elementary(C.n(), s, r, sigma));
}

CartanCounterpart transform_j(const CartanCounterpart& C, int r) {
    check_index(C.n(), r, "transform_j");
    Mat<Int> ir = elementary(C.n(), r, r, -2);
    return conjugate(C, ir, ir);
}

CartanCounterpart transform_u(const CartanCounterpart& C, int s, int r) { return transform_t(C, s, r, -C(s, r)); }

bool is_positive(const CartanCounterpart& C) {
    for (const Int& m : leading_minors(C.gram()))
        if (m <= 0) return false;
    return true;
}

bool is_positive_quasi_cartan(const CartanCounterpart& C, const Mat<Int>& btilde) {
    if (btilde.n() != C.n()) return false;
    for (int i = 0; i < C.n(); ++i)
        for (int j = 0; j < C.n(); ++j) {
            if (i == j) {
                if (C(i, i) != 2) return false;
            } else if (to_int(std::llabs(C(i, j))) != abs(btilde(i, j))) {
                return false;
            }
        }
    return is_positive(C);
}

Root simple_root(int n, int i) {
    Root r(n, 0);
    r.at(i) = 1;
    return r;
}

Root simple_reflection(const CartanCounterpart& C, int i, const Root& beta) {
    // s_i(beta) = beta - (sum_j beta_j c_ij) alpha_i
    long long coeff = 0;
    for (int j = 0; j < C.n(); ++j) coeff += beta[j] * C(i, j);
    Root r = beta;
    r[i] -= coeff;
    return r;
}

bool RootSystem::contains(const Root& r) const { return std::binary_search(roots.begin(), roots.end(), r); }

std::size_t RootSystem::index_of(const Root& r) const {
    auto it = std::lower_bound(roots.begin(), roots.end(), r);
    if (it == roots.end() || *it != r) throw SemanticError("not a root: " + root_to_string(r));
    return static_cast<std::size_t>(it - roots.begin());
}

RootSystem generate_root_system(const CartanCounterpart& C, std::size_t cap) {
    const int n = C.n();
    std::set<Root> seen;
    std::deque<Root> work;
    for (int i = 0; i < n; ++i) {
        Root a = simple_root(n, i);
        if (seen.insert(a).second) work.push_back(a);
    }
    while (!work.empty()) {
        Root b = std::move(work.front());
        work.pop_front();
        for (int i = 0; i < n; ++i) {
            Root r = simple_reflection(C, i, b);
            if (seen.insert(r).second) {
                if (seen.size() > cap) throw BudgetExceeded("root orbit is larger than the cap", seen.size());
                work.push_back(std::move(r));
            }
        }
    }
    return RootSystem{C, std::vector<Root>(seen.begin(), seen.end())};
}

Int inner_product(const CartanCounterpart& C, const Root& u, const Root& v) {
    // m_ij = d_i c_ij
    Int s = 0;
    for (int i = 0; i < C.n(); ++i) {
        if (u[i] == 0) continue;
        Int row = 0;
        for (int j = 0; j < C.n(); ++j) row += to_int(C(i, j)) * to_int(v[j]);
        s += to_int(C.d[i]) * to_int(u[i]) * row;
    }
    return s;
}

Rat coroot_pairing(const CartanCounterpart& C, const Root& beta, const Root& gamma) {
    Int gg = inner_product(C, gamma, gamma);
    if (gg == 0) throw SemanticError("coroot of a zero-length vector");
    Rat r(2 * inner_product(C, beta, gamma), gg);
    r.canonicalize();
    return r;
}

std::string check_root_system_axioms(const RootSystem& rs) {
    const CartanCounterpart& C = rs.cartan;
    const int n = C.n();
    if (rs.roots.empty()) return "empty root set";
    std::vector<std::vector<Rat>> rows;
    for (const Root& a : rs.roots) {
        if (std::all_of(a.begin(), a.end(), [](long long x) { return x == 0; })) return "zero vector in root set";
        std::vector<Rat> row;
        for (long long x : a) row.emplace_back(to_int(x));
        rows.push_back(std::move(row));
        if (inner_product(C, a, a) <= 0) return "non-positive length " + root_to_string(a);
    }
    if (rank_of(rows) != static_cast<std::size_t>(n)) return "roots do not span";
    for (const Root& a : rs.roots) {
        for (const Root& b : rs.roots) {
            Rat p = coroot_pairing(C, b, a);
            if (p.get_den() != 1) return "non-integral pairing (" + root_to_string(b) + ", " + root_to_string(a) + "^vee)";
            Root r = b;
            long long pk = p.get_num().get_si();
            for (int i = 0; i < n; ++i) r[i] -= pk * a[i];
            if (!rs.contains(r)) return "reflection of " + root_to_string(b) + " in " + root_to_string(a) + " leaves the set";
            if (a == b) continue;
            Root na = a;
            for (auto& x : na) x = -x;
            if (b == na) continue;
            // proportional iff every 2x2 minor vanishes
            bool prop = true;
            for (int i = 0; i < n && prop; ++i)
                for (int j = i + 1; j < n && prop; ++j)
                    if (a[i] * b[j] != a[j] * b[i]) prop = false;
            if (prop) return "proportional roots " + root_to_string(a) + " and " + root_to_string(b);
        }
    }
    return {};
}

Root mutate_root(const SignedValuedQuiver& Q, int k, const Root& beta_prime) {
    const int n = Q.n();
    check_index(n, k, "mutate_root");
    // alpha'_i -> alpha_i - c_ki alpha_k when i -> k in Q
    Root r = beta_prime;
    for (int i = 0; i < n; ++i)
        if (Q.has_arrow(i, k)) r[k] -= entry(Q, k, i) * beta_prime[i];
    return r;
}

Root inverse_mutate_root(const SignedValuedQuiver& Qp, int k, const Root& beta) {
    const int n = Qp.n();
    check_index(n, k, "inverse_mutate_root");
    Root r = beta;
    for (int j = 0; j < n; ++j)
        if (Qp.has_arrow(k, j)) r[k] -= entry(Qp, k, j) * beta[j];
    return r;
}

std::vector<Root> composite_rho(const DynkinType& t, const MutationSequence& seq) {
    SignedValuedQuiver Q = dynkin_quiver(t);
    const int n = Q.n();
    std::vector<Root> g;
    for (int i = 0; i < n; ++i) g.push_back(simple_root(n, i));
    for (int k : seq) {
        check_index(n, k, "composite_rho");
        for (int i = 0; i < n; ++i) {
            if (!Q.has_arrow(i, k)) continue;
            long long cki = entry(Q, k, i);
            for (int x = 0; x < n; ++x) g[i][x] -= cki * g[k][x];
        }
        Q = mutate_quiver(Q, k);
    }
    return g;
}

CompanionCheck is_signed_companion_basis(const std::vector<Root>& gammas, const CartanCounterpart& target,
                                         const DynkinType& t) {
    CartanCounterpart cl = classical_counterpart(t);
    const int n = cl.n();
    if (static_cast<int>(gammas.size()) != n || target.n() != n) return {false, "size mismatch"};
    Mat<Int> coords(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(gammas[i].size()) != n) return {false, "gamma" + std::to_string(i + 1) + " has wrong length"};
        for (int j = 0; j < n; ++j) coords(i, j) = to_int(gammas[i][j]);
    }
    Int det = determinant(coords);
    if (det != 1 && det != -1) return {false, "coordinate determinant " + det.get_str() + " is not a unit"};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rat p = coroot_pairing(cl, gammas[j], gammas[i]);
            if (p != Rat(to_int(target(i, j))))
                return {false, "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): pairing " +
                                   p.get_str() + " but C has " + std::to_string(target(i, j))};
        }
    return {true, {}};
}

std::vector<Root> type_a_roots_recursive(const SignedValuedQuiver& Q) {
    const int n = Q.n();
    if (n == 0) return {};
    auto ty = is_mutation_dynkin(matrix_from_quiver(Q));
    if (!ty || ty->family != 'A') throw SemanticError("type-A recursion needs a quiver of mutation type A");
    CartanCounterpart C = cartan_counterpart(Q);

    std::function<std::set<Root>(const std::vector<int>&)> rec = [&](const std::vector<int>& S) -> std::set<Root> {
        auto adjacent = [&](int x, int y) { return x != y && C(x, y) != 0; };
        auto neighbours = [&](int v) {
            std::vector<int> out;
            for (int u : S)
                if (adjacent(v, u)) out.push_back(u);
            return out;
        };
        auto without = [&](int v) {
            std::vector<int> r;
            for (int u : S)
                if (u != v) r.push_back(u);
            return r;
        };
        if (S.size() == 1) {
            Root a = simple_root(n, S[0]), na = a;
            na[S[0]] = -1;
            return {a, na};
        }
        // shape (a): a leaf
        for (int v : S) {
            auto nb = neighbours(v);
            if (nb.size() != 1) continue;
            int u = nb[0];
            long long eps = C(v, u);
            std::set<Root> phi = rec(without(v));
            std::set<Root> out = phi;
            for (const Root& b : phi) {
                Root r = b;
                r[v] -= eps * b[u];
                out.insert(r);
            }
            out.insert(simple_root(n, v));
            Root na(n, 0);
            na[v] = -1;
            out.insert(na);
            return out;
        }
        // shape (b): v and w of degree 2 closing a triangle with u
        for (int v : S) {
            auto nb = neighbours(v);
            if (nb.size() != 2 || !adjacent(nb[0], nb[1])) continue;
            for (int w : nb) {
                if (neighbours(w).size() != 2) continue;
                std::set<Root> out = rec(without(v));
                std::set<Root> other = rec(without(w));
                out.insert(other.begin(), other.end());
                Root r = simple_root(n, w);
                r[v] -= C(v, w);
                Root nr = r;
                for (auto& x : nr) x = -x;
                out.insert(r);
                out.insert(nr);
                return out;
            }
        }
        throw SemanticError("no extremal vertex of type-A shape");
    };

    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    std::set<Root> s = rec(all);
    return std::vector<Root>(s.begin(), s.end());
}

std::string root_to_string(const Root& r) {
    std::string s;
    for (std::size_t i = 0; i < r.size(); ++i) {
        long long c = r[i];
        if (c == 0) continue;
        if (c < 0)
            s += '-';
        else if (!s.empty())
            s += '+';
        if (std::llabs(c) != 1) s += std::to_string(std::llabs(c));
        s += "a" + std::to_string(i + 1);
    }
    return s.empty() ? "0" : s;
}

}  // namespace mutalg
