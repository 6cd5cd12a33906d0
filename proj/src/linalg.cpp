#include "mutalg/linalg.hpp"

#include <utility>

namespace mutalg {

Int determinant(Mat<Int> a) {
    const int n = a.n();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a(k, k) == 0) {
            int p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            for (int j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = v;
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::vector<Int> leading_minors(const Mat<Int>& a) {
    std::vector<Int> out;
    for (int m = 1; m <= a.n(); ++m) {
        Mat<Int> s(m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) s(i, j) = a(i, j);
        out.push_back(determinant(std::move(s)));
    }
    return out;
}

std::vector<std::vector<Rat>> rref(std::vector<std::vector<Rat>> rows, std::vector<std::size_t>* pivots) {
    if (pivots) pivots->clear();
    if (rows.empty()) return rows;
    const std::size_t cols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        Rat inv = 1 / rows[r][c];
        for (std::size_t j = c; j < cols; ++j)
            if (rows[r][j] != 0) rows[r][j] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rat f = rows[i][c];
            for (std::size_t j = c; j < cols; ++j)
                if (rows[r][j] != 0) rows[i][j] -= f * rows[r][j];
        }
        if (pivots) pivots->push_back(c);
        ++r;
    }
    rows.resize(r);
    return rows;
}

std::size_t rank_of(std::vector<std::vector<Rat>> rows) { return rref(std::move(rows)).size(); }

std::vector<std::vector<Rat>> nullspace(const std::vector<std::vector<Rat>>& rows, std::size_t cols) {
    std::vector<std::size_t> piv;
    auto r = rref(rows, &piv);
    std::vector<char> is_pivot(cols, 0);
    for (auto p : piv) is_pivot[p] = 1;
    std::vector<std::vector<Rat>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[f] = 1;
        for (std::size_t i = 0; i < r.size(); ++i) v[piv[i]] = -r[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace mutalg
