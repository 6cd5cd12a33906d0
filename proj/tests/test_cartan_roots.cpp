#include "doctest.h"
#include "support.hpp"

#include "mutalg/cartan.hpp"
#include "mutalg/errors.hpp"
#include "mutalg/linalg.hpp"
#include "mutalg/mutation_class.hpp"

#include <algorithm>
#include <set>

using namespace mutalg;
using namespace testsupport;

namespace {

Mat<long long> lmat(std::initializer_list<std::initializer_list<long long>> rows) { return Mat<long long>(rows); }

// 1 <- 2 <- 3, all arrows negative
SignedValuedQuiver a3_linear() { return dynkin_quiver(DynkinType::make('A', 3)); }

SignedValuedQuiver a3_mutated() { return mutate_quiver(a3_linear(), 1); }

Mat<long long> c_prime() { return lmat({{2, -1, -1}, {-1, 2, 1}, {-1, 1, 2}}); }

Root neg(Root r) {
    for (auto& x : r) x = -x;
    return r;
}

Mat<long long> small_gram(const CartanCounterpart& C) {
    Mat<long long> m(C.n());
    for (int i = 0; i < C.n(); ++i)
        for (int j = 0; j < C.n(); ++j) m(i, j) = C.d[i] * C(i, j);
    return m;
}

long long form(const Mat<long long>& m, const Root& u, const Root& v) {
    long long s = 0;
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j) s += u[i] * m(i, j) * v[j];
    return s;
}

std::vector<DynkinType> small_types() {
    return {DynkinType::make('A', 1), DynkinType::make('A', 2), DynkinType::make('A', 3), DynkinType::make('A', 4),
            DynkinType::make('B', 2), DynkinType::make('B', 3), DynkinType::make('C', 3), DynkinType::make('D', 4),
            DynkinType::make('G', 2)};
}

}  // namespace

TEST_CASE("Cartan counterpart of a gss matrix") {
    auto B = gss("0,1,-t; -1,0,t; t,-t,0");
    CHECK(cartan_counterpart(B).c == lmat({{2, 1, -1}, {1, 2, -1}, {-1, -1, 2}}));
    CHECK(cartan_counterpart(a3_mutated()).c == c_prime());
    CHECK(cartan_counterpart(matrix_from_quiver(a3_mutated())).c == c_prime());
    CHECK(to_dsl(a3_mutated()) == to_dsl(quiver("1 -(-1,-1)-> 2; 2 -(1,1)-> 3; 3 -(-1,-1)-> 1")));
}

TEST_CASE("the all-negative embedding recovers the classical counterpart") {
    std::mt19937_64 rng(seed());
    for (int it = 0; it < 200; ++it) {
        auto R = random_gss(rng, 1 + static_cast<int>(rng() % 5));
        Mat<TElem> integral(R.n()), scaled(R.n());
        for (int i = 0; i < R.n(); ++i)
            for (int j = 0; j < R.n(); ++j) {
                integral(i, j) = TElem(R(i, j).a, 0);
                scaled(i, j) = integral(i, j).times_t();
            }
        GssMatrix Bt(integral), tB(scaled);
        auto C = cartan_counterpart(tB);
        for (int i = 0; i < R.n(); ++i)
            for (int j = 0; j < R.n(); ++j) {
                long long expect = i == j ? 2 : -Int(abs(Bt(i, j).a)).get_si();
                REQUIRE(C(i, j) == expect);
            }
    }
    for (const char* name : {"A5", "B4", "C4", "D5", "E6", "E8", "F4", "G2"}) {
        auto t = parse_dynkin_type(name);
        auto C = classical_counterpart(t);
        CHECK(cartan_counterpart(dynkin_quiver(t)) == C);
        auto M = C.gram();
        for (int i = 0; i < C.n(); ++i)
            for (int j = 0; j < C.n(); ++j) CHECK(M(i, j) == M(j, i));
        CHECK(is_positive(C));
    }
}

TEST_CASE("Cartan mutation agrees with matrix mutation and the U-product") {
    for (const auto& t : small_types()) {
        for (const auto& Q : mutation_class(dynkin_quiver(t))) {
            auto C = cartan_counterpart(Q);
            CHECK(is_positive_quasi_cartan(C, specialize(matrix_from_quiver(Q))));
            for (int k = 0; k < Q.n(); ++k) {
                auto Qk = mutate_quiver(Q, k);
                auto direct = cartan_counterpart(Qk);
                REQUIRE(mutate_cartan(C, Q, k) == direct);
                REQUIRE(cartan_counterpart(mutate_matrix(matrix_from_quiver(Q), k)) == direct);

                std::vector<int> in;
                for (int i = 0; i < Q.n(); ++i)
                    if (Q.has_arrow(i, k)) in.push_back(i);
                auto P = C;
                for (int i : in) P = transform_u(P, k, i);
                REQUIRE(P == direct);
                auto R = C;
                for (auto it = in.rbegin(); it != in.rend(); ++it) R = transform_u(R, k, *it);
                REQUIRE(R == direct);
            }
        }
    }
}

TEST_CASE("U, T and J transforms") {
    auto C = CartanCounterpart{c_prime(), {1, 1, 1}};
    for (int r = 0; r < 3; ++r) {
        CHECK(transform_j(transform_j(C, r), r) == C);
        for (int s = 0; s < 3; ++s) {
            if (s == r) continue;
            CHECK(transform_t(C, s, r, 0) == C);
            // U_sr = J_r T^{c_sr}_sr J_r
            CHECK(transform_u(C, s, r) == transform_j(transform_t(transform_j(C, r), s, r, C(s, r)), r));
            // entries away from row and column r are fixed; the rest follow the two-case rule
            auto U = transform_u(C, s, r);
            for (int x = 0; x < 3; ++x)
                for (int y = 0; y < 3; ++y) {
                    long long e = (x == r) != (y == r) ? C(x, y) - C(x, s) * C(s, y) : C(x, y);
                    CHECK(U(x, y) == e);
                }
        }
    }
    // the G2 case
    CartanCounterpart g{lmat({{2, -3}, {-1, 2}}), {1, 3}};
    CHECK(transform_t(g, 0, 1, 3).c == lmat({{2, 3}, {1, 2}}));
    CHECK_THROWS_AS(transform_t(C, 1, 1, 1), SemanticError);
}

TEST_CASE("positivity") {
    CHECK(is_positive_quasi_cartan(CartanCounterpart{lmat({{2, 0}, {0, 2}}), {1, 1}}, Mat<Int>(2)));
    // classical counterpart of the oriented 3-cycle reached from linear A3
    Mat<Int> cyc = fz_mutate(specialize(matrix_from_quiver(a3_linear())), 1);
    CartanCounterpart classical{Mat<long long>(3), {1, 1, 1}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) classical.c(i, j) = i == j ? 2 : -Int(abs(cyc(i, j))).get_si();
    CHECK(determinant(classical.gram()) == 0);
    CHECK_FALSE(is_positive(classical));
    CHECK_FALSE(is_positive_quasi_cartan(classical, cyc));
    // the signed counterpart of the same quiver is positive
    CHECK(is_positive_quasi_cartan(cartan_counterpart(a3_mutated()), cyc));
    // wrong absolute values
    CHECK_FALSE(is_positive_quasi_cartan(CartanCounterpart{lmat({{2, 0}, {0, 2}}), {1, 1}}, Mat<Int>{{0, 1}, {-1, 0}}));
}

TEST_CASE("simple reflections") {
    auto A2 = classical_counterpart(DynkinType::make('A', 2));
    CHECK(simple_reflection(A2, 0, Root{0, 1}) == Root{1, 1});
    CartanCounterpart Cp{c_prime(), {1, 1, 1}};
    CHECK(simple_reflection(Cp, 1, Root{0, 0, 1}) == Root{0, -1, 1});
    CHECK(simple_reflection(Cp, 0, Root{0, 1, 0}) == Root{1, 1, 0});
    CHECK(simple_reflection(Cp, 0, Root{0, 0, 1}) == Root{1, 0, 1});
    std::mt19937_64 rng(seed());
    std::uniform_int_distribution<int> c(-5, 5);
    for (const auto& t : small_types()) {
        auto C = classical_counterpart(t);
        for (int it = 0; it < 100; ++it) {
            Root b(C.n());
            for (auto& x : b) x = c(rng);
            int i = static_cast<int>(rng() % C.n());
            REQUIRE(simple_reflection(C, i, simple_reflection(C, i, b)) == b);
        }
    }
}

TEST_CASE("root systems by orbit") {
    CartanCounterpart Cp{c_prime(), {1, 1, 1}};
    auto rs = generate_root_system(Cp);
    std::set<Root> expect;
    for (Root r : {Root{1, 0, 0}, Root{0, 1, 0}, Root{0, 0, 1}, Root{1, 1, 0}, Root{1, 0, 1}, Root{0, -1, 1}}) {
        expect.insert(r);
        expect.insert(neg(r));
    }
    CHECK(std::set<Root>(rs.roots.begin(), rs.roots.end()) == expect);
    CHECK(std::is_sorted(rs.roots.begin(), rs.roots.end()));
    CHECK(check_root_system_axioms(rs).empty());

    CHECK(generate_root_system(classical_counterpart(DynkinType::make('A', 1))).roots ==
          std::vector<Root>{Root{-1}, Root{1}});
    const std::pair<const char*, std::size_t> counts[] = {{"A2", 6},  {"A3", 12}, {"A4", 20}, {"B2", 8},
                                                          {"B3", 18}, {"C3", 18}, {"D4", 24}, {"F4", 48},
                                                          {"G2", 12}, {"E6", 72}};
    for (auto [name, n] : counts) {
        auto sys = generate_root_system(classical_counterpart(parse_dynkin_type(name)));
        CHECK_MESSAGE(sys.roots.size() == n, name);
        CHECK(check_root_system_axioms(sys).empty());
    }
    // affine A1 has an infinite orbit
    CHECK_THROWS_AS(generate_root_system(CartanCounterpart{lmat({{2, -2}, {-2, 2}}), {1, 1}}, 1000), BudgetExceeded);
}

TEST_CASE("root systems of every class member satisfy the axioms") {
    for (const auto& t : small_types()) {
        std::size_t size = generate_root_system(classical_counterpart(t)).roots.size();
        for (const auto& Q : mutation_class(dynkin_quiver(t))) {
            auto rs = generate_root_system(cartan_counterpart(Q));
            REQUIRE(rs.roots.size() == size);
            REQUIRE(check_root_system_axioms(rs) == "");
        }
    }
}

TEST_CASE("inner product and coroot pairing") {
    std::mt19937_64 rng(seed());
    std::uniform_int_distribution<int> c(-3, 3);
    for (const auto& t : small_types()) {
        auto C = classical_counterpart(t);
        const int n = C.n();
        for (int i = 0; i < n; ++i) {
            CHECK(inner_product(C, simple_root(n, i), simple_root(n, i)) == to_int(2 * C.d[i]));
            for (int j = 0; j < n; ++j)
                CHECK(coroot_pairing(C, simple_root(n, i), simple_root(n, j)) == Rat(to_int(C(j, i))));
        }
        for (int it = 0; it < 500 / static_cast<int>(small_types().size()); ++it) {
            Root u(n), v(n);
            for (auto& x : u) x = c(rng);
            for (auto& x : v) x = c(rng);
            int k = static_cast<int>(rng() % n);
            REQUIRE(inner_product(C, u, v) == inner_product(C, v, u));
            REQUIRE(inner_product(C, simple_reflection(C, k, u), simple_reflection(C, k, v)) == inner_product(C, u, v));
        }
    }
    CHECK_THROWS_AS(coroot_pairing(classical_counterpart(DynkinType::make('A', 2)), Root{1, 0}, Root{0, 0}),
                    SemanticError);
}

TEST_CASE("mutation of roots in the A3 example") {
    auto Q = a3_linear();
    CHECK(mutate_root(Q, 1, Root{1, 0, 0}) == Root{1, 0, 0});
    CHECK(mutate_root(Q, 1, Root{0, 1, 0}) == Root{0, 1, 0});
    CHECK(mutate_root(Q, 1, Root{0, 0, 1}) == Root{0, 1, 1});
    CHECK(mutate_root(Q, 1, Root{1, 1, 0}) == Root{1, 1, 0});
    CHECK(mutate_root(Q, 1, Root{1, 0, 1}) == Root{1, 1, 1});
    CHECK(mutate_root(Q, 1, Root{0, -1, 1}) == Root{0, 0, 1});
}

TEST_CASE("mutation of roots is a pairing-preserving bijection") {
    for (const auto& t : small_types()) {
        for (const auto& Q : mutation_class(dynkin_quiver(t))) {
            auto C = cartan_counterpart(Q);
            auto phi = generate_root_system(C);
            for (int k = 0; k < Q.n(); ++k) {
                auto Qp = mutate_quiver(Q, k);
                auto Cp = cartan_counterpart(Qp);
                auto phip = generate_root_system(Cp);
                std::vector<Root> image;
                for (const auto& b : phip.roots) {
                    Root r = mutate_root(Q, k, b);
                    REQUIRE(phi.contains(r));
                    REQUIRE(inverse_mutate_root(Qp, k, r) == b);
                    image.push_back(r);
                }
                REQUIRE(std::set<Root>(image.begin(), image.end()).size() == phi.roots.size());
                for (const auto& b : phi.roots) REQUIRE(mutate_root(Q, k, inverse_mutate_root(Qp, k, b)) == b);
                // equal inner products on all pairs give equal coroot pairings
                auto M = small_gram(C), Mp = small_gram(Cp);
                for (std::size_t x = 0; x < image.size(); ++x)
                    for (std::size_t y = 0; y < image.size(); ++y)
                        REQUIRE(form(M, image[x], image[y]) == form(Mp, phip.roots[x], phip.roots[y]));
            }
        }
    }
}

TEST_CASE("composite root mutation gives signed companion bases") {
    auto A3 = DynkinType::make('A', 3);
    auto id = composite_rho(A3, {});
    CHECK(id == std::vector<Root>{Root{1, 0, 0}, Root{0, 1, 0}, Root{0, 0, 1}});
    CHECK(is_signed_companion_basis(id, classical_counterpart(A3), A3).ok);

    auto g = composite_rho(A3, seq1({2}));
    CHECK(g == std::vector<Root>{Root{1, 0, 0}, Root{0, 1, 0}, Root{0, 1, 1}});
    CHECK(is_signed_companion_basis(g, CartanCounterpart{c_prime(), {1, 1, 1}}, A3).ok);

    auto bad = is_signed_companion_basis(g, classical_counterpart(A3), A3);
    CHECK_FALSE(bad.ok);
    CHECK(bad.detail.find("entry") != std::string::npos);
    auto singular = is_signed_companion_basis({Root{1, 0, 0}, Root{0, 1, 0}, Root{1, 1, 0}}, classical_counterpart(A3), A3);
    CHECK_FALSE(singular.ok);
    CHECK(singular.detail.find("determinant") != std::string::npos);

    std::mt19937_64 rng(seed());
    for (const auto& t : small_types()) {
        for (int it = 0; it < 50; ++it) {
            MutationSequence s(rng() % 9);
            for (auto& k : s) k = static_cast<int>(rng() % t.rank);
            auto B = mutate_sequence(matrix_from_quiver(dynkin_quiver(t)), s);
            auto check = is_signed_companion_basis(composite_rho(t, s), cartan_counterpart(B), t);
            REQUIRE_MESSAGE(check.ok, check.detail);
        }
    }
}

TEST_CASE("type A recursion matches the orbit") {
    auto A1 = dynkin_quiver(DynkinType::make('A', 1));
    CHECK(type_a_roots_recursive(A1) == std::vector<Root>{Root{-1}, Root{1}});
    auto rec = type_a_roots_recursive(a3_mutated());
    CHECK(rec == generate_root_system(cartan_counterpart(a3_mutated())).roots);
    CHECK(std::find(rec.begin(), rec.end(), Root{0, 1, -1}) != rec.end());
    for (int n = 2; n <= 4; ++n)
        for (const auto& Q : mutation_class(dynkin_quiver(DynkinType::make('A', n))))
            REQUIRE(type_a_roots_recursive(Q) == generate_root_system(cartan_counterpart(Q)).roots);
    CHECK_THROWS_AS(type_a_roots_recursive(dynkin_quiver(DynkinType::make('D', 4))), SemanticError);
    CHECK_THROWS_AS(type_a_roots_recursive(dynkin_quiver(DynkinType::make('B', 3))), SemanticError);
}

TEST_CASE("root text") {
    CHECK(root_to_string(Root{1, 1, -2}) == "a1+a2-2a3");
    CHECK(root_to_string(Root{0, -1, 1}) == "-a2+a3");
    CHECK(root_to_string(Root{0, 0}) == "0");
}

TEST_CASE("quiver arrows read as Cartan entries") {
    std::mt19937_64 rng(seed());
    for (int it = 0; it < 200; ++it) {
        auto B = random_gss(rng, 1 + static_cast<int>(rng() % 5), 3, true);
        auto Q = quiver_from_matrix(B);
        auto C = cartan_counterpart(B);
        for (const auto& a : Q.arrows()) {
            REQUIRE(C(a.src, a.tgt) == a.v1);
            REQUIRE(C(a.tgt, a.src) == a.v2);
        }
    }
}
