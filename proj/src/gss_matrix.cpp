#include "mutalg/gss_matrix.hpp"

#include "mutalg/errors.hpp"

#include <numeric>
#include <queue>
#include <sstream>

namespace mutalg {

std::optional<Symmetrizer> find_symmetrizer(const Mat<TElem>& B) {
    const int n = B.n();
    for (int i = 0; i < n; ++i)
        if (!B(i, i).is_zero()) return std::nullopt;

    std::vector<Rat> d(n, Rat(0));
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int root = 0; root < n; ++root) {
        if (comp[root] >= 0) continue;
        d[root] = 1;
        comp[root] = ncomp;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int i = q.front();
            q.pop();
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                const TElem& bij = B(i, j);
                const TElem& bji = B(j, i);
                if (bij.is_zero() != bji.is_zero()) return std::nullopt;
                if (bij.is_zero()) continue;
                // d_j / d_i = -b_ij / b_ji, read off a nonzero coefficient
                Rat r = bji.a != 0 ? Rat(-bij.a, bji.a) : Rat(-bij.b, bji.b);
                r.canonicalize();
                if (r <= 0) return std::nullopt;
                Rat dj = d[i] * r;
                if (comp[j] < 0) {
                    comp[j] = ncomp;
                    d[j] = dj;
                    q.push(j);
                } else if (d[j] != dj) {
                    return std::nullopt;
                }
                // full check d_i b_ij = -d_j b_ji on both coefficients
                if (d[i] * Rat(bij.a) != -d[j] * Rat(bji.a) || d[i] * Rat(bij.b) != -d[j] * Rat(bji.b))
                    return std::nullopt;
            }
        }
        ++ncomp;
    }

    Symmetrizer out(n);
    for (int c = 0; c < ncomp; ++c) {
        Int l = 1;
        for (int i = 0; i < n; ++i)
            if (comp[i] == c) l = lcm(l, Int(d[i].get_den()));
        Int g = 0;
        for (int i = 0; i < n; ++i)
            if (comp[i] == c) g = gcd(g, Int(d[i].get_num() * (l / d[i].get_den())));
        for (int i = 0; i < n; ++i) {
            if (comp[i] != c) continue;
            Int v = d[i].get_num() * (l / d[i].get_den()) / g;
            if (!v.fits_slong_p()) throw SemanticError("symmetrizer entry out of range");
            out[i] = v.get_si();
        }
    }
    return out;
}

GssMatrix::GssMatrix(Mat<TElem> entries) : b_(std::move(entries)) {
    auto d = find_symmetrizer(b_);
    if (!d) throw SemanticError("matrix is not skew-symmetrizable");
    d_ = std::move(*d);
}

GssMatrix::GssMatrix(Mat<TElem> entries, const Symmetrizer& d) : GssMatrix(std::move(entries)) {
    const int n = b_.n();
    if (static_cast<int>(d.size()) != n) throw SemanticError("symmetrizer has wrong length");
    for (long long x : d)
        if (x <= 0) throw SemanticError("symmetrizer entries must be positive");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (Int(static_cast<long>(d[i])) * b_(i, j) != -(Int(static_cast<long>(d[j])) * b_(j, i)))
                throw SemanticError("given symmetrizer does not skew-symmetrize the matrix");
}

GssMatrix mutate_matrix(const GssMatrix& B, int k) {
    const int n = B.n();
    if (k < 0 || k >= n) throw SemanticError("mutation vertex out of range");
    Mat<TElem> R(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const TElem& b = B(i, j);
            const int s = t_sign(b);
            if ((i == k && s == 1) || (j == k && s == -1)) {
                R(i, j) = -b;
            } else if ((i == k && s == -1) || (j == k && s == 1)) {
                R(i, j) = -b.times_t();
            } else {
                TElem p = B(i, k) * B(k, j);
                if (t_sign(p) == 1) {
                    TElem sum = t_sign(B(i, k)) == 1 ? b + p : b - p;
                    R(i, j) = sum.times_t();
                } else {
                    R(i, j) = b;
                }
            }
        }
    return GssMatrix(std::move(R), B.symmetrizer(), GssMatrix::Trusted{});
}

GssMatrix mutate_sequence(GssMatrix B, const MutationSequence& seq) {
    for (int k : seq) B = mutate_matrix(B, k);
    return B;
}

Mat<Int> specialize(const GssMatrix& B) {
    Mat<Int> R(B.n());
    for (int i = 0; i < B.n(); ++i)
        for (int j = 0; j < B.n(); ++j) R(i, j) = B(i, j).eval_at(1);
    return R;
}

bool is_pure(const GssMatrix& B) {
    for (const TElem& x : B.entries().data())
        if (!x.is_pure()) return false;
    return true;
}

std::optional<std::array<int, 3>> positive_3cycle_violation(const GssMatrix& B, int k) {
    if (!is_pure(B)) throw SemanticError("positive 3-cycle condition needs a pure matrix");
    const int n = B.n();
    for (int i = 0; i < n; ++i) {
        if (i == k) continue;
        for (int j = 0; j < n; ++j) {
            if (j == k || j == i) continue;
            if (B(i, j).is_zero()) continue;
            TElem p = B(i, k) * B(k, j);
            if (t_sign(p) != 1) continue;
            if (!(B(i, j) * p).in_z()) return std::array<int, 3>{i, j, k};
        }
    }
    return std::nullopt;
}

bool positive_3cycle_ok(const GssMatrix& B, int k) { return !positive_3cycle_violation(B, k).has_value(); }

std::string to_string(const GssMatrix& B) {
    std::ostringstream os;
    for (int i = 0; i < B.n(); ++i) {
        if (i) os << "; ";
        for (int j = 0; j < B.n(); ++j) os << (j ? "," : "") << to_string(B(i, j));
    }
    return os.str();
}

GssMatrix parse_gss(const std::string& text) {
    std::vector<std::vector<TElem>> rows;
    std::string row;
    std::istringstream rs(text);
    while (std::getline(rs, row, ';')) {
        std::vector<TElem> r;
        std::string cell;
        std::istringstream cs(row);
        while (std::getline(cs, cell, ',')) {
            bool blank = cell.find_first_not_of(" \t\r\n") == std::string::npos;
            if (blank) continue;
            try {
                r.push_back(parse_telem(cell));
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what());
            }
        }
        if (!r.empty()) rows.push_back(std::move(r));
    }
    const int n = static_cast<int>(rows.size());
    if (n == 0) throw ParseError("empty matrix");
    Mat<TElem> m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n) throw ParseError("matrix is not square");
        for (int j = 0; j < n; ++j) m(i, j) = rows[i][j];
    }
    return GssMatrix(std::move(m));
}

}  // namespace mutalg
