#pragma once

// Presentations are checked inside a concrete split simple Lie algebra given by a
// Chevalley basis: a generator set of g(Q,v) is realized by its images there, and
// relations are evaluated on the images. Iterated brackets are right-nested:
// [x1, x2, ..., xn] = [x1, [x2, [..., xn]]].

#include "mutalg/cartan.hpp"
#include "mutalg/cycles.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mutalg {

class LieElement {
public:
    LieElement() = default;
    explicit LieElement(std::size_t dim) : c_(dim) {}

    std::size_t dim() const { return c_.size(); }
    Rat& operator[](std::size_t i) { return c_[i]; }
    const Rat& operator[](std::size_t i) const { return c_[i]; }
    const std::vector<Rat>& coeffs() const { return c_; }
    bool is_zero() const;

    LieElement& operator+=(const LieElement& y);
    LieElement& operator-=(const LieElement& y);
    LieElement& operator*=(const Rat& s);
    friend LieElement operator+(LieElement x, const LieElement& y) { return x += y; }
    friend LieElement operator-(LieElement x, const LieElement& y) { return x -= y; }
    friend LieElement operator*(const Rat& s, LieElement x) { return x *= s; }
    friend LieElement operator-(LieElement x) { return x *= Rat(-1); }
    friend bool operator==(const LieElement&, const LieElement&) = default;

private:
    std::vector<Rat> c_;
};

// Basis h_1..h_n, then x_beta for the roots of the classical system in
// lexicographic order. Structure constants are integers.
class StructureAlgebra {
public:
    struct Term {
        int index;
        long long coeff;
    };

    const DynkinType& type() const { return type_; }
    int rank() const { return cartan_.n(); }
    std::size_t dim() const { return labels_.size(); }
    const CartanCounterpart& cartan() const { return cartan_; }
    const RootSystem& roots() const { return roots_; }
    const std::vector<std::string>& labels() const { return labels_; }

    int h_index(int i) const { return i; }
    int x_index(const Root& r) const { return rank() + static_cast<int>(roots_.index_of(r)); }
    // Root of a basis vector; empty for the h_i.
    Root root_of(int index) const;

    LieElement basis(int index) const;
    LieElement zero() const { return LieElement(dim()); }
    const std::vector<Term>& bracket_basis(int a, int b) const { return table_[static_cast<std::size_t>(a) * dim() + b]; }
    LieElement bracket(const LieElement& x, const LieElement& y) const;
    // rows r, columns b: coefficient of basis r in [x, basis b]
    std::vector<std::vector<Rat>> ad_matrix(const LieElement& x) const;

    // N_{alpha,beta} for roots with alpha + beta a root.
    long long structure_constant(const Root& a, const Root& b) const;

    std::string to_string(const LieElement& x) const;

private:
    friend StructureAlgebra chevalley_algebra(const DynkinType& t);

    DynkinType type_;
    CartanCounterpart cartan_;
    RootSystem roots_;
    std::vector<std::string> labels_;
    std::vector<std::vector<Term>> table_;
};

// Throws std::logic_error if the constants fail their own consistency checks.
StructureAlgebra chevalley_algebra(const DynkinType& t);

// Empty on success. Exhaustive over basis triples when `samples` is 0, else
// that many random triples.
std::string check_jacobi(const StructureAlgebra& alg, std::size_t samples = 0, std::uint64_t seed = 1);

LieElement ad_power(const StructureAlgebra& alg, const LieElement& x, int m, const LieElement& y);

// h_i, or e_{sign i} for sign = +1 / -1 (f_i = e_{-i}). Indices 0-based.
struct Generator {
    enum class Kind { H, E } kind = Kind::E;
    int index = 0;
    int sign = 1;

    static Generator h(int i) { return {Kind::H, i, 1}; }
    static Generator e(int i, int sign = 1) { return {Kind::E, i, sign}; }
    friend bool operator==(const Generator&, const Generator&) = default;
};
std::string to_string(const Generator& g);

struct GeneratorImages {
    std::vector<LieElement> h, e, f;
    int rank() const { return static_cast<int>(h.size()); }
    const LieElement& of(const Generator& g) const;
    friend bool operator==(const GeneratorImages&, const GeneratorImages&) = default;
};

// The Chevalley generators h_i, x_{alpha_i}, x_{-alpha_i}.
GeneratorImages classical_images(const StructureAlgebra& alg);

// A generator or a bracket of two words.
struct Word {
    std::optional<Generator> gen;
    std::vector<Word> kids;

    static Word leaf(const Generator& g) { return Word{g, {}}; }
    static Word bracket(Word a, Word b);
    // [g1, g2, ..., gn], right-nested
    static Word iterated(const std::vector<Generator>& gs);
};
std::string to_string(const Word& w);

LieElement bracket_eval(const StructureAlgebra& alg, const Word& w, const GeneratorImages& images);

struct Relation {
    int kind = 0;  // 1..5
    Word lhs;
    std::vector<std::pair<Rat, Generator>> rhs;  // empty means zero
    std::string text() const;
};
using RelationSet = std::vector<Relation>;

RelationSet relations_r1_r4(const CartanCounterpart& C);

// A chordless cycle of the support of C together with its classification.
struct CycleData {
    enum class Shape { Simple, B3, C3, F4 } shape = Shape::Simple;
    std::vector<int> vertices;  // cyclic order
    std::vector<bool> long_vertex;  // parallel to vertices; all false for Simple
};
std::vector<CycleData> classify_cycles(const CartanCounterpart& C);
std::string to_string(CycleData::Shape s);

// All sign-chained words along the cycle, both directions, every start, both epsilon_1.
std::vector<std::vector<Generator>> cycle_words(const CartanCounterpart& C, const CycleData& cyc);

// (R5): sign-chained words, minus those starting and ending at long vertices of
// B3/F4 cycles. `one_per_cycle` keeps a single relation per cycle (experimental).
RelationSet relations_r5(const CartanCounterpart& C, bool one_per_cycle = false);
RelationSet relations_r5(const CartanCounterpart& C, const std::vector<CycleData>& cycles, bool one_per_cycle = false);
// The sign-chained words left out of (R5).
RelationSet excluded_relations(const CartanCounterpart& C);
RelationSet all_relations(const CartanCounterpart& C);

struct VerifyFailure {
    std::string relation;
    LieElement residual;
};
struct VerifyReport {
    std::size_t relations_checked = 0;
    std::vector<VerifyFailure> failures;
    std::optional<std::size_t> dimension;
    std::optional<bool> isomorphism;
    bool ok() const { return failures.empty() && isomorphism.value_or(true); }
};

VerifyReport verify_homomorphism(const StructureAlgebra& alg, const GeneratorImages& images, const RelationSet& rels);

// Dimension of the subalgebra generated by the images.
std::size_t generated_dimension(const StructureAlgebra& alg, const GeneratorImages& images);
// Fills `dimension` and `isomorphism` (surjective onto the simple algebra alg).
void verify_isomorphism(const StructureAlgebra& alg, const GeneratorImages& images, VerifyReport& report);

// phi_k: images of the generators of g(mu_k Q), given images of those of g(Q).
GeneratorImages phi_k(const StructureAlgebra& alg, const SignedValuedQuiver& Q, int k, const GeneratorImages& images);
// psi_k: images of the generators of g(Q), given images of those of g(mu_k Q). Q is unmutated.
GeneratorImages psi_k(const StructureAlgebra& alg, const SignedValuedQuiver& Q, int k,
                      const GeneratorImages& images_mutated);

// g(mu_seq(Q_Delta)) realized in g(Delta) by composing the phi's step by step.
struct Realization {
    SignedValuedQuiver quiver;
    GeneratorImages images;
};
Realization realize(const StructureAlgebra& alg, const MutationSequence& seq);

// Basis of {x : [h_i, x] = beta(h_i) x for all i} with beta(h_i) = sum_j beta_j c_ij.
// Throws SemanticError if the h images do not commute.
std::vector<LieElement> root_space(const StructureAlgebra& alg, const std::vector<LieElement>& h_images,
                                   const CartanCounterpart& C, const Root& beta);

struct RootSpaceReport {
    std::size_t checked = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};
// For every root beta' of mu_k Q: the image of its root space equals the root space of rho_k(beta').
RootSpaceReport verify_rootspace_mutation(const StructureAlgebra& alg, const SignedValuedQuiver& Q, int k,
                                          const GeneratorImages& images);

struct ExcludedReport {
    std::vector<std::pair<std::string, bool>> words;  // text, nonzero
    bool ok() const;
};
// Evaluates the left-out sign-chained words; each must be nonzero.
ExcludedReport excluded_relation_nonzero(const StructureAlgebra& alg, const GeneratorImages& images,
                                         const CartanCounterpart& C);

}  // namespace mutalg
