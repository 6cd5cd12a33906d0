#include "mutalg/lie.hpp"

#include "mutalg/errors.hpp"
#include "mutalg/linalg.hpp"

namespace mutalg {

namespace {

long long factorial(long long m) {
    long long r = 1;
    for (long long i = 2; i <= m; ++i) r *= i;
    return r;
}

void check_vertex(const SignedValuedQuiver& Q, int k) {
    if (k < 0 || k >= Q.n()) throw SemanticError("vertex " + std::to_string(k + 1) + " out of range");
}

// (-eps)^{|c|} / |c|! * ad^{|c|}(x)(y)
LieElement twisted(const StructureAlgebra& alg, long long c, int eps, const LieElement& x, const LieElement& y) {
    long long lam = c < 0 ? -c : c;
    long long sign = (lam % 2 == 0 || eps < 0) ? 1 : -1;
    return Rat(to_int(sign)) / to_int(factorial(lam)) * ad_power(alg, x, static_cast<int>(lam), y);
}

}  // namespace

GeneratorImages phi_k(const StructureAlgebra& alg, const SignedValuedQuiver& Q, int k, const GeneratorImages& images) {
    check_vertex(Q, k);
    GeneratorImages out = images;
    for (const Arrow& a : Q.arrows()) {
        if (a.tgt != k) continue;
        const int i = a.src;
        const int delta = a.sign();
        // arrow i -> k: c_ik = v1, c_ki = v2
        const long long cik = a.v1, cki = a.v2;
        for (int eps : {1, -1}) {
            const LieElement& ek = images.of(Generator::e(k, -delta * eps));
            LieElement img = twisted(alg, cki, eps, ek, images.of(Generator::e(i, eps)));
            (eps > 0 ? out.e : out.f)[static_cast<std::size_t>(i)] = std::move(img);
        }
        out.h[static_cast<std::size_t>(i)] = images.h[static_cast<std::size_t>(i)] - Rat(to_int(cik)) * images.h[static_cast<std::size_t>(k)];
    }
    return out;
}

GeneratorImages psi_k(const StructureAlgebra& alg, const SignedValuedQuiver& Q, int k,
                      const GeneratorImages& images_mutated) {
    check_vertex(Q, k);
    const GeneratorImages& im = images_mutated;
    GeneratorImages out = im;
    for (const Arrow& a : Q.arrows()) {
        if (a.tgt != k) continue;
        const int i = a.src;
        const int delta = a.sign();
        const long long cik = a.v1, cki = a.v2;
        for (int eps : {1, -1}) {
            const LieElement& ek = im.of(Generator::e(k, delta * eps));
            LieElement img = twisted(alg, cki, eps, ek, im.of(Generator::e(i, eps)));
            (eps > 0 ? out.e : out.f)[static_cast<std::size_t>(i)] = std::move(img);
        }
        out.h[static_cast<std::size_t>(i)] = im.h[static_cast<std::size_t>(i)] + Rat(to_int(cik)) * im.h[static_cast<std::size_t>(k)];
    }
    return out;
}

Realization realize(const StructureAlgebra& alg, const MutationSequence& seq) {
    Realization r{dynkin_quiver(alg.type()), classical_images(alg)};
    if (!(cartan_counterpart(r.quiver) == alg.cartan())) throw std::logic_error("Dynkin quiver disagrees with the algebra");
    for (int k : seq) {
        check_vertex(r.quiver, k);
        r.images = phi_k(alg, r.quiver, k, r.images);
        r.quiver = mutate_quiver(r.quiver, k);
    }
    return r;
}

namespace {

using RatMatrix = std::vector<std::vector<Rat>>;

std::vector<RatMatrix> ad_matrices(const StructureAlgebra& alg, const std::vector<LieElement>& hs) {
    for (std::size_t a = 0; a < hs.size(); ++a)
        for (std::size_t b = a + 1; b < hs.size(); ++b)
            if (!alg.bracket(hs[a], hs[b]).is_zero()) throw SemanticError("h images do not commute");
    std::vector<RatMatrix> out;
    for (const auto& h : hs) out.push_back(alg.ad_matrix(h));
    return out;
}

std::vector<LieElement> eigenspace(const StructureAlgebra& alg, const std::vector<RatMatrix>& ads,
                                   const CartanCounterpart& C, const Root& beta) {
    const std::size_t dim = alg.dim();
    RatMatrix rows;
    for (int i = 0; i < C.n(); ++i) {
        // beta(h_i) = sum_j beta_j c_ij
        long long lam = 0;
        for (int j = 0; j < C.n(); ++j) lam += beta[static_cast<std::size_t>(j)] * C(i, j);
        for (std::size_t r = 0; r < dim; ++r) {
            std::vector<Rat> row = ads[static_cast<std::size_t>(i)][r];
            row[r] -= Rat(to_int(lam));
            rows.push_back(std::move(row));
        }
    }
    std::vector<LieElement> out;
    for (auto& v : nullspace(rows, dim)) {
        LieElement x(dim);
        for (std::size_t i = 0; i < dim; ++i) x[i] = v[i];
        out.push_back(std::move(x));
    }
    return out;
}

bool same_line(const LieElement& a, const LieElement& b) {
    std::vector<std::vector<Rat>> rows{a.coeffs(), b.coeffs()};
    return rank_of(rows) == 1;
}

}  // namespace

std::vector<LieElement> root_space(const StructureAlgebra& alg, const std::vector<LieElement>& h_images,
                                   const CartanCounterpart& C, const Root& beta) {
    if (static_cast<int>(h_images.size()) != C.n() || static_cast<int>(beta.size()) != C.n())
        throw SemanticError("root space: rank mismatch");
    return eigenspace(alg, ad_matrices(alg, h_images), C, beta);
}

RootSpaceReport verify_rootspace_mutation(const StructureAlgebra& alg, const SignedValuedQuiver& Q, int k,
                                          const GeneratorImages& images) {
    check_vertex(Q, k);
    RootSpaceReport rep;
    SignedValuedQuiver Qp = mutate_quiver(Q, k);
    CartanCounterpart C = cartan_counterpart(Q), Cp = cartan_counterpart(Qp);
    GeneratorImages imp = phi_k(alg, Q, k, images);
    auto ads = ad_matrices(alg, images.h), adsp = ad_matrices(alg, imp.h);
    for (const Root& bp : generate_root_system(Cp).roots) {
        ++rep.checked;
        Root b = mutate_root(Q, k, bp);
        auto vp = eigenspace(alg, adsp, Cp, bp);
        auto v = eigenspace(alg, ads, C, b);
        if (vp.size() != 1 || v.size() != 1) {
            rep.failures.push_back("root space of " + root_to_string(bp) + " has dimension " + std::to_string(vp.size()) +
                                   ", of its image " + root_to_string(b) + " " + std::to_string(v.size()));
        } else if (!same_line(vp[0], v[0])) {
            rep.failures.push_back("phi_k moves the root space of " + root_to_string(bp) + " off that of " +
                                   root_to_string(b));
        }
    }
    return rep;
}

}  // namespace mutalg
