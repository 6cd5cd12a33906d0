#include "mutalg/lie.hpp"

#include "mutalg/errors.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace mutalg {

bool LieElement::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& x) { return x == 0; });
}

LieElement& LieElement::operator+=(const LieElement& y) {
    if (y.dim() != dim()) throw SemanticError("Lie element dimension mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (y.c_[i] != 0) c_[i] += y.c_[i];
    return *this;
}

LieElement& LieElement::operator-=(const LieElement& y) {
    if (y.dim() != dim()) throw SemanticError("Lie element dimension mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (y.c_[i] != 0) c_[i] -= y.c_[i];
    return *this;
}

LieElement& LieElement::operator*=(const Rat& s) {
    for (auto& x : c_)
        if (x != 0) x *= s;
    return *this;
}

namespace {

Root add(const Root& a, const Root& b) {
    Root r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Root neg(const Root& a) {
    Root r = a;
    for (auto& x : r) x = -x;
    return r;
}

bool positive(const Root& a) {
    return std::all_of(a.begin(), a.end(), [](long long x) { return x >= 0; });
}

long long height(const Root& a) {
    long long h = 0;
    for (long long x : a) h += x;
    return h;
}

// Chevalley constants from extraspecial pairs, all extraspecial signs +1.
class ConstantSolver {
public:
    ConstantSolver(const CartanCounterpart& C, const RootSystem& rs) : C_(C), rs_(rs) {
        for (const Root& r : rs.roots)
            if (positive(r)) pos_.push_back(r);
        std::sort(pos_.begin(), pos_.end(), [](const Root& a, const Root& b) {
            long long ha = height(a), hb = height(b);
            return ha != hb ? ha < hb : a < b;
        });
        for (const Root& xi : pos_) {
            for (const Root& a : pos_) {
                Root b = add(xi, neg(a));
                if (positive(b) && rs_.contains(b)) {
                    extraspecial_[xi] = {a, b};
                    break;
                }
            }
        }
    }

    long norm(const Root& r) const { return inner_product(C_, r, r).get_si(); }

    int p_of(const Root& a, const Root& b) const {
        int p = 0;
        Root x = add(b, neg(a));
        while (rs_.contains(x)) {
            ++p;
            x = add(x, neg(a));
        }
        return p;
    }

    Rat n(const Root& x, const Root& y) {
        Root z = add(x, y);
        if (!rs_.contains(z)) return 0;
        bool px = positive(x), py = positive(y);
        if (!px && !py) return -n(neg(x), neg(y));
        if (!px && py) return -n(y, x);
        if (px && !py) {
            // x + y + (-z) = 0: N_{x,y}/|z|^2 = N_{y,-z}/|x|^2 = N_{-z,x}/|y|^2
            if (positive(z)) return (Rat(norm(z)) / norm(x)) * -n(neg(y), z);
            return (Rat(norm(z)) / norm(y)) * n(neg(z), x);
        }
        auto key = std::make_pair(x, y);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        const auto& [g, d] = extraspecial_.at(z);
        Rat r;
        if (x == g && y == d) {
            r = p_of(g, d) + 1;
        } else if (x == d && y == g) {
            r = -(p_of(g, d) + 1);
        } else {
            // x + y + (-g) + (-d) = 0 with no opposite pair
            Rat t = 0;
            Root yg = add(y, neg(g)), xg = add(x, neg(g));
            if (rs_.contains(yg)) t += n(y, neg(g)) * n(x, neg(d)) / Rat(norm(yg));
            if (rs_.contains(xg)) t += n(neg(g), x) * n(y, neg(d)) / Rat(norm(xg));
            r = Rat(norm(z)) * t / Rat(p_of(g, d) + 1);
        }
        r.canonicalize();
        memo_[key] = r;
        return r;
    }

private:
    const CartanCounterpart& C_;
    const RootSystem& rs_;
    std::vector<Root> pos_;
    std::map<Root, std::pair<Root, Root>> extraspecial_;
    std::map<std::pair<Root, Root>, Rat> memo_;
};

}  // namespace

StructureAlgebra chevalley_algebra(const DynkinType& t) {
    StructureAlgebra alg;
    alg.type_ = t;
    alg.cartan_ = classical_counterpart(t);
    alg.roots_ = generate_root_system(alg.cartan_);
    const int n = alg.rank();
    const auto& roots = alg.roots_.roots;
    for (int i = 0; i < n; ++i) alg.labels_.push_back("h" + std::to_string(i + 1));
    for (const Root& r : roots) alg.labels_.push_back("x[" + root_to_string(r) + "]");
    const std::size_t dim = alg.labels_.size();
    alg.table_.assign(dim * dim, {});

    ConstantSolver solve(alg.cartan_, alg.roots_);
    auto set = [&](int a, int b, std::vector<StructureAlgebra::Term> v) {
        alg.table_[static_cast<std::size_t>(a) * dim + b] = v;
        for (auto& term : v) term.coeff = -term.coeff;
        alg.table_[static_cast<std::size_t>(b) * dim + a] = std::move(v);
    };

    for (std::size_t bi = 0; bi < roots.size(); ++bi) {
        const Root& b = roots[bi];
        int xb = n + static_cast<int>(bi);
        // [h_i, x_b] = <b, alpha_i^vee> x_b = (sum_j b_j c_ij) x_b
        for (int i = 0; i < n; ++i) {
            long long v = 0;
            for (int j = 0; j < n; ++j) v += b[j] * alg.cartan_(i, j);
            if (v != 0) set(i, xb, {{xb, v}});
        }
        for (std::size_t ai = 0; ai < bi; ++ai) {
            const Root& a = roots[ai];
            int xa = n + static_cast<int>(ai);
            Root s = add(a, b);
            if (std::all_of(s.begin(), s.end(), [](long long x) { return x == 0; })) {
                // [x_a, x_{-a}] = h_a = sum_i a_i |alpha_i|^2 / |a|^2 h_i
                std::vector<StructureAlgebra::Term> h;
                long long na = solve.norm(a);
                for (int i = 0; i < n; ++i) {
                    if (a[i] == 0) continue;
                    long long num = a[i] * solve.norm(simple_root(n, i));
                    if (num % na != 0) throw std::logic_error("non-integral coroot");
                    h.push_back({i, num / na});
                }
                set(xa, xb, std::move(h));
            } else if (alg.roots_.contains(s)) {
                Rat c = solve.n(a, b);
                if (c.get_den() != 1) throw std::logic_error("non-integral structure constant");
                long long cv = c.get_num().get_si();
                int p = solve.p_of(a, b);
                if (cv * cv != static_cast<long long>(p + 1) * (p + 1))
                    throw std::logic_error("structure constant " + std::to_string(cv) + " is not +-(p+1)");
                set(xa, xb, {{alg.x_index(s), cv}});
            }
        }
    }
    return alg;
}

Root StructureAlgebra::root_of(int index) const {
    if (index < rank()) return {};
    return roots_.roots.at(static_cast<std::size_t>(index - rank()));
}

LieElement StructureAlgebra::basis(int index) const {
    LieElement x(dim());
    x[static_cast<std::size_t>(index)] = 1;
    return x;
}

LieElement StructureAlgebra::bracket(const LieElement& x, const LieElement& y) const {
    if (x.dim() != dim() || y.dim() != dim()) throw SemanticError("Lie element dimension mismatch");
    LieElement r(dim());
    std::vector<std::size_t> ys;
    for (std::size_t j = 0; j < dim(); ++j)
        if (y[j] != 0) ys.push_back(j);
    for (std::size_t i = 0; i < dim(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j : ys) {
            const auto& terms = table_[i * dim() + j];
            if (terms.empty()) continue;
            Rat s = x[i] * y[j];
            for (const Term& t : terms) r[static_cast<std::size_t>(t.index)] += s * static_cast<long>(t.coeff);
        }
    }
    return r;
}

std::vector<std::vector<Rat>> StructureAlgebra::ad_matrix(const LieElement& x) const {
    std::vector<std::vector<Rat>> m(dim(), std::vector<Rat>(dim()));
    for (std::size_t b = 0; b < dim(); ++b) {
        LieElement col = bracket(x, basis(static_cast<int>(b)));
        for (std::size_t r = 0; r < dim(); ++r) m[r][b] = col[r];
    }
    return m;
}

long long StructureAlgebra::structure_constant(const Root& a, const Root& b) const {
    Root s = add(a, b);
    if (!roots_.contains(s)) throw SemanticError("sum of roots is not a root");
    for (const Term& t : bracket_basis(x_index(a), x_index(b)))
        if (t.index == x_index(s)) return t.coeff;
    return 0;
}

std::string StructureAlgebra::to_string(const LieElement& x) const {
    std::string s;
    for (std::size_t i = 0; i < x.dim(); ++i) {
        if (x[i] == 0) continue;
        Rat c = x[i];
        if (c < 0) {
            s += s.empty() ? "-" : " - ";
            c = -c;
        } else if (!s.empty()) {
            s += " + ";
        }
        if (c != 1) s += c.get_str() + " ";
        s += labels_[i];
    }
    return s.empty() ? "0" : s;
}

std::string check_jacobi(const StructureAlgebra& alg, std::size_t samples, std::uint64_t seed) {
    const int d = static_cast<int>(alg.dim());
    auto check = [&](int a, int b, int c) -> std::string {
        LieElement x = alg.basis(a), y = alg.basis(b), z = alg.basis(c);
        LieElement s = alg.bracket(x, alg.bracket(y, z)) + alg.bracket(y, alg.bracket(z, x)) +
                       alg.bracket(z, alg.bracket(x, y));
        if (!s.is_zero())
            return "Jacobi fails on (" + alg.labels()[a] + ", " + alg.labels()[b] + ", " + alg.labels()[c] + ")";
        return {};
    };
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            auto ab = alg.bracket_basis(a, b), ba = alg.bracket_basis(b, a);
            if (ab.size() != ba.size()) return "antisymmetry fails";
            for (std::size_t i = 0; i < ab.size(); ++i)
                if (ab[i].index != ba[i].index || ab[i].coeff != -ba[i].coeff) return "antisymmetry fails";
        }
    if (samples == 0) {
        for (int a = 0; a < d; ++a)
            for (int b = a + 1; b < d; ++b)
                for (int c = b + 1; c < d; ++c)
                    if (auto e = check(a, b, c); !e.empty()) return e;
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> pick(0, d - 1);
        for (std::size_t s = 0; s < samples; ++s)
            if (auto e = check(pick(rng), pick(rng), pick(rng)); !e.empty()) return e;
    }
    return {};
}

LieElement ad_power(const StructureAlgebra& alg, const LieElement& x, int m, const LieElement& y) {
    LieElement r = y;
    for (int i = 0; i < m; ++i) r = alg.bracket(x, r);
    return r;
}

}  // namespace mutalg
