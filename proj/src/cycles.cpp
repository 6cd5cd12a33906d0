#include "mutalg/cycles.hpp"

#include "mutalg/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace mutalg {

namespace {

bool adjacent(const GssMatrix& B, int i, int j) { return !B(i, j).is_zero(); }

bool along(const GssMatrix& B, const std::vector<int>& v) {
    const std::size_t p = v.size();
    for (std::size_t q = 0; q < p; ++q)
        if (t_sign(B(v[q], v[(q + 1) % p])) != 1) return false;
    return true;
}

std::vector<int> reversed_from_front(const std::vector<int>& v) {
    std::vector<int> r{v[0]};
    for (std::size_t q = v.size() - 1; q >= 1; --q) r.push_back(v[q]);
    return r;
}

}  // namespace

CycleReport analyze_cycle(const GssMatrix& B, std::vector<int> v) {
    const std::size_t p = v.size();
    if (p < 3) throw SemanticError("a cycle needs at least 3 vertices");
    {
        auto sorted = v;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw SemanticError("cycle vertices must be distinct");
        if (sorted.front() < 0 || sorted.back() >= B.n()) throw SemanticError("cycle vertex out of range");
    }
    for (std::size_t q = 0; q < p; ++q)
        if (!adjacent(B, v[q], v[(q + 1) % p])) throw SemanticError("consecutive cycle vertices are not joined");

    std::rotate(v.begin(), std::min_element(v.begin(), v.end()), v.end());
    auto rev = reversed_from_front(v);

    CycleReport c;
    if (along(B, v)) {
        c.oriented = true;
    } else if (along(B, rev)) {
        c.oriented = true;
        v = rev;
    } else if (rev[1] < v[1]) {
        v = rev;
    }
    c.vertices = v;

    c.chordless = true;
    for (std::size_t x = 0; x < p && c.chordless; ++x)
        for (std::size_t y = x + 2; y < p; ++y) {
            if (x == 0 && y == p - 1) continue;
            if (adjacent(B, v[x], v[y])) {
                c.chordless = false;
                break;
            }
        }

    if (c.chordless) {
        TElem prod(1);
        for (std::size_t q = 0; q < p; ++q) prod = prod * B(v[q], v[(q + 1) % p]);
        c.dangerous = p % 2 == 0 ? prod.in_z() : prod.in_tz();
    }
    return c;
}

std::vector<CycleReport> chordless_cycles(const GssMatrix& B) {
    const int n = B.n();
    std::vector<CycleReport> out;
    std::vector<int> path;
    std::vector<char> used(n, 0);

    // Paths start at their smallest vertex s; a new vertex may touch only the path's
    // last vertex, or also s when it closes the cycle.
    auto extend = [&](auto&& self, int s) -> void {
        const int last = path.back();
        for (int v = s + 1; v < n; ++v) {
            if (used[v] || !adjacent(B, last, v)) continue;
            bool chord = false;
            for (std::size_t q = 1; q + 1 < path.size(); ++q)
                if (adjacent(B, path[q], v)) {
                    chord = true;
                    break;
                }
            if (chord) continue;
            const bool closes = path.size() >= 2 && adjacent(B, s, v);
            if (closes) {
                if (path[1] < v) {
                    auto cyc = path;
                    cyc.push_back(v);
                    out.push_back(analyze_cycle(B, cyc));
                }
                continue;
            }
            used[v] = 1;
            path.push_back(v);
            self(self, s);
            path.pop_back();
            used[v] = 0;
        }
    };

    for (int s = 0; s < n; ++s) {
        path = {s};
        used.assign(n, 0);
        used[s] = 1;
        extend(extend, s);
    }
    std::sort(out.begin(), out.end(),
              [](const CycleReport& x, const CycleReport& y) { return x.vertices < y.vertices; });
    return out;
}

std::vector<CycleReport> dangerous_cycles(const GssMatrix& B) {
    std::vector<CycleReport> out;
    for (auto& c : chordless_cycles(B))
        if (c.dangerous) out.push_back(std::move(c));
    return out;
}

MutationSequence nonpure_witness(const GssMatrix& B, const CycleReport& c) {
    if (!is_pure(B)) throw SemanticError("witness search needs a pure matrix");
    CycleReport checked = analyze_cycle(B, c.vertices);
    if (!checked.dangerous) throw SemanticError("cycle is not dangerous");

    GssMatrix M = B;
    std::vector<int> cyc = checked.vertices;
    MutationSequence seq;
    auto mutate = [&](int k) {
        M = mutate_matrix(M, k);
        seq.push_back(k);
    };

    while (cyc.size() > 3) {
        if (!is_pure(M)) return seq;
        const std::size_t p = cyc.size();
        int pos = -1;
        for (std::size_t q = 0; q < p && pos < 0; ++q) {
            int prev = cyc[(q + p - 1) % p], cur = cyc[q], next = cyc[(q + 1) % p];
            bool fwd = t_sign(M(prev, cur)) == 1 && t_sign(M(cur, next)) == 1;
            bool bwd = t_sign(M(next, cur)) == 1 && t_sign(M(cur, prev)) == 1;
            if (fwd || bwd) pos = static_cast<int>(q);
        }
        if (pos < 0) {
            // every cycle vertex is a sink or a source along the cycle: flip one
            mutate(cyc.back());
            continue;
        }
        mutate(cyc[pos]);
        cyc.erase(cyc.begin() + pos);
    }

    if (!is_pure(M)) return seq;
    bool found = false;
    for (int k : cyc)
        if (!positive_3cycle_ok(M, k)) {
            mutate(k);
            found = true;
            break;
        }
    if (!found || is_pure(M)) throw std::logic_error("dangerous cycle reduction did not leave the pure matrices");
    return seq;
}

}  // namespace mutalg
