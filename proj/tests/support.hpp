#pragma once

#include "mutalg/gss_matrix.hpp"
#include "mutalg/quiver.hpp"

#include <cstdlib>
#include <initializer_list>
#include <numeric>
#include <random>
#include <string>

namespace testsupport {

using namespace mutalg;

// Paper-style 1-based vertex lists to the 0-based API.
inline MutationSequence seq1(std::initializer_list<int> ks) {
    MutationSequence s;
    for (int k : ks) s.push_back(k - 1);
    return s;
}

inline GssMatrix gss(const std::string& text) { return parse_gss(text); }
inline SignedValuedQuiver quiver(const std::string& dsl) { return parse_quiver_dsl(dsl); }

inline std::uint64_t seed() {
    if (const char* s = std::getenv("MUTALG_SEED")) return std::strtoull(s, nullptr, 10);
    return 20240611;
}

// Random gss matrix: symmetrizer entries in {1,2}, coefficients bounded by `bound`.
// With `pure`, every entry lies in Z or tZ.
inline GssMatrix random_gss(std::mt19937_64& rng, int n, int bound = 3, bool pure = false) {
    std::uniform_int_distribution<int> dpick(1, 2), coin(0, 2);
    std::vector<long long> d(n);
    for (auto& x : d) x = dpick(rng);
    Mat<TElem> b(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (coin(rng) == 0) continue;
            long long g = std::gcd(d[i], d[j]);
            long long ui = d[j] / g, uj = d[i] / g;
            int lim = bound / static_cast<int>(std::max(ui, uj));
            if (lim == 0) continue;
            std::uniform_int_distribution<int> c(-lim, lim);
            TElem x;
            do {
                x = TElem(c(rng), c(rng));
                if (pure) (coin(rng) == 0 ? x.a : x.b) = 0;
            } while (x.is_zero());
            b(i, j) = to_int(ui) * x;
            b(j, i) = to_int(-uj) * x;
        }
    return GssMatrix(std::move(b));
}

}  // namespace testsupport
