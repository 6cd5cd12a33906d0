#include "mutalg/mutation_class.hpp"

#include "mutalg/errors.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

namespace mutalg {

namespace {

std::string matrix_key(const GssMatrix& B) {
    std::string key;
    for (const TElem& x : B.entries().data()) {
        key += x.a.get_str();
        key += ',';
        key += x.b.get_str();
        key += ';';
    }
    return key;
}

std::vector<std::vector<int>> tree_adjacency(const SignedValuedQuiver& Q) {
    std::vector<std::vector<int>> adj(Q.n());
    for (const Arrow& a : Q.arrows()) {
        adj[a.src].push_back(a.tgt);
        adj[a.tgt].push_back(a.src);
    }
    return adj;
}

// Vertices reachable from `from` without crossing the edge {from, blocked}, with their distance.
std::vector<std::pair<int, int>> side_of(const std::vector<std::vector<int>>& adj, int from, int blocked) {
    std::vector<std::pair<int, int>> out{{from, 0}};
    std::vector<char> seen(adj.size(), 0);
    seen[from] = 1;
    seen[blocked] = 1;
    for (std::size_t q = 0; q < out.size(); ++q)
        for (int w : adj[out[q].first])
            if (!seen[w]) {
                seen[w] = 1;
                out.push_back({w, out[q].second + 1});
            }
    return out;
}

bool is_tree(const SignedValuedQuiver& Q) {
    if (static_cast<int>(Q.arrows().size()) != Q.n() - 1) return false;
    auto adj = tree_adjacency(Q);
    return static_cast<int>(side_of(adj, 0, 0).size()) == Q.n() || Q.n() == 1;
}

}  // namespace

std::vector<GssMatrix> mutation_class_matrices(const GssMatrix& B, std::size_t budget, bool truncate) {
    std::vector<GssMatrix> members{B};
    std::unordered_set<std::string> seen{matrix_key(B)};
    for (std::size_t q = 0; q < members.size(); ++q) {
        for (int k = 0; k < B.n(); ++k) {
            GssMatrix M = mutate_matrix(members[q], k);
            if (!seen.insert(matrix_key(M)).second) continue;
            if (members.size() >= budget) {
                if (truncate) return members;
                throw BudgetExceeded("mutation class search", members.size() + 1);
            }
            members.push_back(std::move(M));
        }
    }
    return members;
}

std::vector<SignedValuedQuiver> mutation_class(const SignedValuedQuiver& Q, std::size_t budget, bool canonical) {
    // same discovery order as mutation_class_matrices, failing at the first impure step
    std::vector<SignedValuedQuiver> members{Q};
    std::unordered_set<std::string> seen{matrix_key(matrix_from_quiver(Q))};
    for (std::size_t q = 0; q < members.size(); ++q) {
        for (int k = 0; k < Q.n(); ++k) {
            if (positive_3cycle_violation(members[q], k))
                throw SemanticError("mutation class contains a matrix that is not pure");
            SignedValuedQuiver R = mutate_quiver(members[q], k);
            if (!seen.insert(matrix_key(matrix_from_quiver(R))).second) continue;
            if (members.size() >= budget) throw BudgetExceeded("mutation class search", members.size() + 1);
            members.push_back(std::move(R));
        }
    }
    if (!canonical) return members;
    std::vector<SignedValuedQuiver> out;
    std::set<std::string> keys;
    for (auto& R : members)
        if (keys.insert(canonical_key(R)).second) out.push_back(std::move(R));
    return out;
}

std::string canonical_key(const SignedValuedQuiver& Q) {
    const int n = Q.n();
    // colour refinement
    std::vector<long long> colour(Q.symmetrizer().begin(), Q.symmetrizer().end());
    for (int round = 0; round <= n; ++round) {
        std::vector<std::vector<long long>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<std::array<long long, 4>> nb;
            for (const Arrow& a : Q.arrows()) {
                if (a.src == v) nb.push_back({1, a.v1, a.v2, colour[a.tgt]});
                if (a.tgt == v) nb.push_back({-1, a.v1, a.v2, colour[a.src]});
            }
            std::sort(nb.begin(), nb.end());
            sig[v].push_back(colour[v]);
            for (const auto& e : nb) sig[v].insert(sig[v].end(), e.begin(), e.end());
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<long long> next(n);
        for (int v = 0; v < n; ++v)
            next[v] = std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin();
        std::set<long long> before(colour.begin(), colour.end()), after(next.begin(), next.end());
        colour = next;
        if (after.size() == before.size() && round > 0) break;
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return colour[x] < colour[y]; });
    std::vector<std::pair<int, int>> cells;  // [begin, end) in order
    for (int s = 0; s < n;) {
        int e = s;
        while (e < n && colour[order[e]] == colour[order[s]]) ++e;
        cells.push_back({s, e});
        s = e;
    }

    std::string best;
    bool have = false;
    std::vector<int> pos(n);
    auto encode = [&] {
        for (int p = 0; p < n; ++p) pos[order[p]] = p;
        std::vector<std::array<long long, 4>> arrows;
        for (const Arrow& a : Q.arrows()) arrows.push_back({pos[a.src], pos[a.tgt], a.v1, a.v2});
        std::sort(arrows.begin(), arrows.end());
        std::ostringstream os;
        for (int p = 0; p < n; ++p) os << Q.symmetrizer()[order[p]] << ',';
        os << '|';
        for (const auto& a : arrows) os << a[0] << '>' << a[1] << '(' << a[2] << ',' << a[3] << ')';
        std::string s = os.str();
        if (!have || s < best) {
            best = std::move(s);
            have = true;
        }
    };
    std::function<void(std::size_t)> walk = [&](std::size_t c) {
        if (c == cells.size()) {
            encode();
            return;
        }
        auto b = order.begin() + cells[c].first, e = order.begin() + cells[c].second;
        std::sort(b, e);
        do {
            walk(c + 1);
        } while (std::next_permutation(b, e));
    };
    walk(0);
    return best;
}

MutationSequence tree_equivalence_sequence(const SignedValuedQuiver& Q, const SignedValuedQuiver& Q2) {
    if (!is_tree(Q)) throw SemanticError("source quiver is not a tree");
    if (Q2.n() != Q.n() || Q2.arrows().size() != Q.arrows().size())
        throw SemanticError("target is not a reorientation of the source");
    for (const Arrow& a : Q2.arrows())
        if (!Q.between(a.src, a.tgt)) throw SemanticError("target has an edge the source lacks");

    auto adj = tree_adjacency(Q);
    SignedValuedQuiver cur = Q;
    MutationSequence seq;
    auto mutate = [&](int k) {
        cur = mutate_quiver(cur, k);
        seq.push_back(k);
    };

    // reversals: mutate the tail side of the edge in a topological order, so each
    // vertex is a source when it is mutated
    for (const Arrow& want : Q2.arrows()) {
        Arrow a = *cur.between(want.src, want.tgt);
        if (a.src == want.src) continue;
        std::vector<int> side;
        for (auto [v, dist] : side_of(adj, a.src, a.tgt)) side.push_back(v);
        std::set<int> in_side(side.begin(), side.end());
        std::map<int, int> indeg;
        for (int v : side) indeg[v] = 0;
        for (const Arrow& b : cur.arrows())
            if (in_side.count(b.src) && in_side.count(b.tgt)) ++indeg[b.tgt];
        std::vector<int> ready;
        for (int v : side)
            if (indeg[v] == 0) ready.push_back(v);
        std::vector<int> topo;
        while (!ready.empty()) {
            std::sort(ready.begin(), ready.end(), std::greater<>());
            int v = ready.back();
            ready.pop_back();
            topo.push_back(v);
            for (const Arrow& b : cur.arrows())
                if (b.src == v && in_side.count(b.tgt) && --indeg[b.tgt] == 0) ready.push_back(b.tgt);
        }
        for (int v : topo) mutate(v);
    }

    // negations: mu_k^2 over the vertices whose path to the tail avoids the head,
    // even distances first
    for (const Arrow& want : Q2.arrows()) {
        Arrow a = *cur.between(want.src, want.tgt);
        if (a.sign() == want.sign()) continue;
        auto side = side_of(adj, a.src, a.tgt);
        std::vector<int> even, odd;
        for (auto [v, dist] : side) (dist % 2 == 0 ? even : odd).push_back(v);
        std::sort(even.begin(), even.end());
        std::sort(odd.begin(), odd.end());
        for (const auto* part : {&even, &odd})
            for (int v : *part) {
                mutate(v);
                mutate(v);
            }
    }

    if (cur != Q2) throw SemanticError("target is not obtained by reversing or negating arrows of the source");
    return seq;
}

}  // namespace mutalg
