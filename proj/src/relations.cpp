#include "mutalg/lie.hpp"

#include "mutalg/errors.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace mutalg {

std::string to_string(const Generator& g) {
    if (g.kind == Generator::Kind::H) return "h" + std::to_string(g.index + 1);
    return (g.sign > 0 ? "e" : "f") + std::to_string(g.index + 1);
}

const LieElement& GeneratorImages::of(const Generator& g) const {
    if (g.index < 0 || g.index >= rank()) throw SemanticError("generator index out of range");
    if (g.kind == Generator::Kind::H) return h[static_cast<std::size_t>(g.index)];
    return g.sign > 0 ? e[static_cast<std::size_t>(g.index)] : f[static_cast<std::size_t>(g.index)];
}

GeneratorImages classical_images(const StructureAlgebra& alg) {
    GeneratorImages im;
    const int n = alg.rank();
    for (int i = 0; i < n; ++i) {
        Root a = simple_root(n, i), na = a;
        na[i] = -1;
        im.h.push_back(alg.basis(alg.h_index(i)));
        im.e.push_back(alg.basis(alg.x_index(a)));
        im.f.push_back(alg.basis(alg.x_index(na)));
    }
    return im;
}

Word Word::bracket(Word a, Word b) {
    Word w;
    w.kids.push_back(std::move(a));
    w.kids.push_back(std::move(b));
    return w;
}

Word Word::iterated(const std::vector<Generator>& gs) {
    if (gs.empty()) throw SemanticError("empty bracket word");
    Word w = leaf(gs.back());
    for (auto it = gs.rbegin() + 1; it != gs.rend(); ++it) w = bracket(leaf(*it), std::move(w));
    return w;
}

std::string to_string(const Word& w) {
    if (w.gen) return to_string(*w.gen);
    // flatten right-nested brackets
    std::string s = "[";
    const Word* cur = &w;
    while (!cur->gen) {
        s += to_string(cur->kids[0]) + ",";
        cur = &cur->kids[1];
    }
    return s + to_string(*cur) + "]";
}

LieElement bracket_eval(const StructureAlgebra& alg, const Word& w, const GeneratorImages& images) {
    if (w.gen) {
        const LieElement& x = images.of(*w.gen);
        if (x.dim() != alg.dim()) throw SemanticError("generator image has the wrong dimension");
        return x;
    }
    if (w.kids.size() != 2) throw SemanticError("malformed bracket word");
    return alg.bracket(bracket_eval(alg, w.kids[0], images), bracket_eval(alg, w.kids[1], images));
}

std::string Relation::text() const {
    std::string s = to_string(lhs) + " = ";
    if (rhs.empty()) return s + "0";
    bool first = true;
    for (const auto& [c, g] : rhs) {
        Rat a = c;
        if (a < 0) {
            s += first ? "-" : " - ";
            a = -a;
        } else if (!first) {
            s += " + ";
        }
        if (a != 1) s += a.get_str() + " ";
        s += to_string(g);
        first = false;
    }
    return s;
}

RelationSet relations_r1_r4(const CartanCounterpart& C) {
    const int n = C.n();
    RelationSet out;
    using G = Generator;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) out.push_back({1, Word::iterated({G::h(i), G::h(j)}), {}});
    for (int i = 0; i < n; ++i) out.push_back({2, Word::iterated({G::e(i, 1), G::e(i, -1)}), {{Rat(1), G::h(i)}}});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int eps : {1, -1}) {
                Relation r{3, Word::iterated({G::h(i), G::e(j, eps)}), {}};
                long long v = eps * C(i, j);
                if (v != 0) r.rhs.push_back({Rat(to_int(v)), G::e(j, eps)});
                out.push_back(std::move(r));
            }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            for (int eps : {1, -1})
                for (int del : {1, -1}) {
                    long long m = std::min<long long>(0, eps * del * C(i, j));
                    std::vector<G> w(static_cast<std::size_t>(1 - m), G::e(i, eps));
                    w.push_back(G::e(j, del));
                    out.push_back({4, Word::iterated(w), {}});
                }
        }
    return out;
}

std::string to_string(CycleData::Shape s) {
    switch (s) {
        case CycleData::Shape::Simple: return "simple";
        case CycleData::Shape::B3: return "B3";
        case CycleData::Shape::C3: return "C3";
        case CycleData::Shape::F4: return "F4";
    }
    return "?";
}

std::vector<CycleData> classify_cycles(const CartanCounterpart& C) {
    const int n = C.n();
    auto adj = [&](int a, int b) { return a != b && C(a, b) != 0; };
    std::vector<std::vector<int>> found;
    // simple cycles through their least vertex s, listed once per direction pair
    std::vector<int> path;
    std::vector<bool> on(n);
    std::function<void(int, int)> dfs = [&](int s, int v) {
        for (int w = s + 1; w < n; ++w) {
            if (!adj(v, w) || on[w]) continue;
            // chordless: w may touch only v among path vertices other than s
            bool chord = false;
            for (std::size_t q = 1; q + 1 < path.size(); ++q)
                if (adj(path[q], w)) chord = true;
            if (chord) continue;
            path.push_back(w);
            on[w] = true;
            if (path.size() == 2) {
                dfs(s, w);
            } else if (adj(w, s)) {
                if (path[1] < path.back()) found.push_back(path);
            } else {
                dfs(s, w);
            }
            on[w] = false;
            path.pop_back();
        }
    };
    for (int s = 0; s < n; ++s) {
        path = {s};
        on.assign(n, false);
        on[s] = true;
        dfs(s, s);
    }
    std::sort(found.begin(), found.end());

    std::vector<CycleData> out;
    for (auto& cyc : found) {
        const std::size_t t = cyc.size();
        CycleData d;
        d.vertices = cyc;
        d.long_vertex.assign(t, false);
        int heavy = 0;
        for (std::size_t q = 0; q < t; ++q) {
            int a = cyc[q], b = cyc[(q + 1) % t];
            long long w = C(a, b) * C(b, a);
            if (w == 2)
                ++heavy;
            else if (w != 1)
                throw SemanticError("chordless cycle with an edge of weight " + std::to_string(w));
        }
        if (heavy == 0) {
            out.push_back(std::move(d));
            continue;
        }
        long long dmin = C.d[cyc[0]];
        for (int v : cyc) dmin = std::min(dmin, C.d[v]);
        int longs = 0;
        for (std::size_t q = 0; q < t; ++q)
            if (C.d[cyc[q]] == dmin) {
                d.long_vertex[q] = true;
                ++longs;
            }
        if (t == 3 && heavy == 2 && longs == 2)
            d.shape = CycleData::Shape::B3;
        else if (t == 3 && heavy == 2 && longs == 1)
            d.shape = CycleData::Shape::C3;
        else if (t == 4 && heavy == 2 && longs == 2)
            d.shape = CycleData::Shape::F4;
        else
            throw SemanticError("unknown cycle shape");
        out.push_back(std::move(d));
    }
    return out;
}

std::vector<std::vector<Generator>> cycle_words(const CartanCounterpart& C, const CycleData& cyc) {
    const int t = static_cast<int>(cyc.vertices.size());
    std::vector<std::vector<Generator>> out;
    for (int dir : {1, -1})
        for (int s = 0; s < t; ++s)
            for (int eps1 : {1, -1}) {
                std::vector<Generator> w;
                int eps = eps1;
                for (int q = 0; q < t; ++q) {
                    int v = cyc.vertices[static_cast<std::size_t>(((s + dir * q) % t + t) % t)];
                    if (q > 0) {
                        int u = w.back().index;
                        eps = C(u, v) > 0 ? -eps : eps;
                    }
                    w.push_back(Generator::e(v, eps));
                }
                out.push_back(std::move(w));
            }
    return out;
}

namespace {

bool long_ends(const CycleData& cyc, const std::vector<Generator>& w) {
    auto is_long = [&](int v) {
        auto it = std::find(cyc.vertices.begin(), cyc.vertices.end(), v);
        return cyc.long_vertex[static_cast<std::size_t>(it - cyc.vertices.begin())];
    };
    return is_long(w.front().index) && is_long(w.back().index);
}

}  // namespace

RelationSet relations_r5(const CartanCounterpart& C, const std::vector<CycleData>& cycles, bool one_per_cycle) {
    RelationSet out;
    for (const auto& cyc : cycles)
        for (const auto& w : cycle_words(C, cyc)) {
            if (long_ends(cyc, w)) continue;
            out.push_back({5, Word::iterated(w), {}});
            if (one_per_cycle) break;
        }
    return out;
}

RelationSet relations_r5(const CartanCounterpart& C, bool one_per_cycle) {
    return relations_r5(C, classify_cycles(C), one_per_cycle);
}

RelationSet excluded_relations(const CartanCounterpart& C) {
    RelationSet out;
    for (const auto& cyc : classify_cycles(C))
        for (const auto& w : cycle_words(C, cyc))
            if (long_ends(cyc, w)) out.push_back({5, Word::iterated(w), {}});
    return out;
}

RelationSet all_relations(const CartanCounterpart& C) {
    RelationSet r = relations_r1_r4(C);
    RelationSet r5 = relations_r5(C);
    r.insert(r.end(), r5.begin(), r5.end());
    return r;
}

VerifyReport verify_homomorphism(const StructureAlgebra& alg, const GeneratorImages& images, const RelationSet& rels) {
    VerifyReport rep;
    for (const auto& r : rels) {
        LieElement res = bracket_eval(alg, r.lhs, images);
        for (const auto& [c, g] : r.rhs) res -= c * images.of(g);
        ++rep.relations_checked;
        if (!res.is_zero()) rep.failures.push_back({r.text(), std::move(res)});
    }
    return rep;
}

namespace {

// Semi-echelon basis over Q for incremental independence tests.
class Echelon {
public:
    bool add(LieElement v) {
        for (const auto& [p, row] : rows_) {
            if (v[p] == 0) continue;
            Rat c = v[p];
            v -= c * row;
        }
        for (std::size_t i = 0; i < v.dim(); ++i)
            if (v[i] != 0) {
                Rat inv = 1 / v[i];
                v *= inv;
                rows_.push_back({i, std::move(v)});
                return true;
            }
        return false;
    }
    std::size_t size() const { return rows_.size(); }

private:
    std::vector<std::pair<std::size_t, LieElement>> rows_;
};

}  // namespace

std::size_t generated_dimension(const StructureAlgebra& alg, const GeneratorImages& images) {
    std::vector<LieElement> gens;
    for (const auto* v : {&images.h, &images.e, &images.f}) gens.insert(gens.end(), v->begin(), v->end());
    Echelon ech;
    std::vector<LieElement> work;
    for (const auto& g : gens)
        if (ech.add(g)) work.push_back(g);
    // spanned by right-nested words, so left multiplication by generators suffices
    for (std::size_t q = 0; q < work.size() && ech.size() < alg.dim(); ++q)
        for (const auto& g : gens) {
            LieElement b = alg.bracket(g, work[q]);
            if (!b.is_zero() && ech.add(b)) work.push_back(std::move(b));
        }
    return ech.size();
}

void verify_isomorphism(const StructureAlgebra& alg, const GeneratorImages& images, VerifyReport& report) {
    std::size_t d = generated_dimension(alg, images);
    report.dimension = d;
    report.isomorphism = d == alg.dim();
}

bool ExcludedReport::ok() const {
    return !words.empty() && std::all_of(words.begin(), words.end(), [](const auto& w) { return w.second; });
}

ExcludedReport excluded_relation_nonzero(const StructureAlgebra& alg, const GeneratorImages& images,
                                         const CartanCounterpart& C) {
    ExcludedReport rep;
    for (const auto& r : excluded_relations(C))
        rep.words.push_back({to_string(r.lhs), !bracket_eval(alg, r.lhs, images).is_zero()});
    return rep;
}

}  // namespace mutalg
