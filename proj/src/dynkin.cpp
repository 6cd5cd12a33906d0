#include "mutalg/dynkin.hpp"

#include "mutalg/cycles.hpp"
#include "mutalg/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <set>
#include <vector>

namespace mutalg {

DynkinType DynkinType::make(char family, int rank) {
    family = static_cast<char>(std::toupper(static_cast<unsigned char>(family)));
    bool ok = false;
    switch (family) {
        case 'A': ok = rank >= 1; break;
        case 'B':
        case 'C': ok = rank >= 2; break;
        case 'D': ok = rank >= 4; break;
        case 'E': ok = rank >= 6 && rank <= 8; break;
        case 'F': ok = rank == 4; break;
        case 'G': ok = rank == 2; break;
        default: break;
    }
    if (!ok) throw SemanticError(std::string("no Dynkin type ") + family + std::to_string(rank));
    return DynkinType{family, rank};
}

std::string to_string(const DynkinType& t) { return std::string(1, t.family) + std::to_string(t.rank); }

DynkinType parse_dynkin_type(const std::string& s) {
    std::string digits;
    char family = 0;
    for (char c : s) {
        if (std::isalpha(static_cast<unsigned char>(c)) && !family)
            family = c;
        else if (std::isdigit(static_cast<unsigned char>(c)))
            digits += c;
        else if (c != '_' && !std::isspace(static_cast<unsigned char>(c)))
            throw ParseError("bad Dynkin type: " + s);
    }
    if (!family || digits.empty() || digits.size() > 3) throw ParseError("bad Dynkin type: " + s);
    return DynkinType::make(family, std::stoi(digits));
}

namespace {

long long labs_(long long x) { return x < 0 ? -x : x; }

DiagramEdge edge_from_values(int i, int j, long long vij, long long vji) {
    // vij plays the role of |v1| for the direction i -> j
    DiagramEdge e;
    e.multiplicity = labs_(vij * vji);
    if (e.multiplicity >= 2) {
        long long a = labs_(vij), b = labs_(vji);
        int ord = a > b ? 1 : (a < b ? -1 : 0);
        e.order = i < j ? ord : -ord;
    }
    return e;
}

UnsignedDiagram diagram_impl(const SignedValuedQuiver& Q, bool with_sign) {
    UnsignedDiagram g;
    g.n = Q.n();
    for (const Arrow& a : Q.arrows()) {
        DiagramEdge e = edge_from_values(a.src, a.tgt, a.v1, a.v2);
        if (with_sign) e.sign = a.sign();
        g.edges[ordered_pair(a.src, a.tgt)] = e;
    }
    return g;
}

std::vector<std::vector<int>> adjacency(const UnsignedDiagram& g) {
    std::vector<std::vector<int>> adj(g.n);
    for (const auto& [p, e] : g.edges) {
        adj[p.first].push_back(p.second);
        adj[p.second].push_back(p.first);
    }
    return adj;
}

bool connected(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n;
}

// larger end of a double edge stored under (i, j), i < j
int larger_end(const std::pair<int, int>& p, const DiagramEdge& e) { return e.order > 0 ? p.first : p.second; }

}  // namespace

UnsignedDiagram unsigned_diagram(const SignedValuedQuiver& Q) { return diagram_impl(Q, false); }
UnsignedDiagram signed_diagram(const SignedValuedQuiver& Q) { return diagram_impl(Q, true); }

UnsignedDiagram diagram_of(const Mat<long long>& B) {
    UnsignedDiagram g;
    g.n = B.n();
    for (int i = 0; i < B.n(); ++i)
        for (int j = i + 1; j < B.n(); ++j)
            if (B(i, j) != 0 || B(j, i) != 0) g.edges[{i, j}] = edge_from_values(i, j, B(i, j), B(j, i));
    return g;
}

std::optional<DynkinType> recognize_dynkin(const UnsignedDiagram& g) {
    const int n = g.n;
    if (n < 1) return std::nullopt;
    if (static_cast<int>(g.edges.size()) != n - 1) return std::nullopt;
    auto adj = adjacency(g);
    if (!connected(adj)) return std::nullopt;
    if (n == 1) return DynkinType::make('A', 1);

    const std::pair<int, int>* heavy = nullptr;
    const DiagramEdge* heavy_edge = nullptr;
    for (const auto& [p, e] : g.edges) {
        if (e.multiplicity <= 0 || e.multiplicity >= 4) return std::nullopt;
        if (e.multiplicity >= 2) {
            if (heavy || e.order == 0) return std::nullopt;
            heavy = &p;
            heavy_edge = &e;
        }
    }
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = static_cast<int>(adj[v].size());
    const int maxdeg = *std::max_element(deg.begin(), deg.end());

    if (heavy) {
        if (heavy_edge->multiplicity == 3) return n == 2 ? std::optional(DynkinType::make('G', 2)) : std::nullopt;
        if (maxdeg > 2) return std::nullopt;
        if (n == 2) return DynkinType::make('B', 2);
        const int u = heavy->first, v = heavy->second;
        const bool u_end = deg[u] == 1, v_end = deg[v] == 1;
        if (u_end || v_end) {
            const int extremity = u_end ? u : v;
            return DynkinType::make(larger_end(*heavy, *heavy_edge) == extremity ? 'C' : 'B', n);
        }
        // double edge between the two interior vertices of a 4-path
        return n == 4 ? std::optional(DynkinType::make('F', 4)) : std::nullopt;
    }

    if (maxdeg <= 2) return DynkinType::make('A', n);
    if (maxdeg > 3) return std::nullopt;
    int centre = -1;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 3) {
            if (centre >= 0) return std::nullopt;
            centre = v;
        }
    std::vector<int> legs;
    for (int w : adj[centre]) {
        int prev = centre, cur = w, len = 1;
        while (deg[cur] == 2) {
            int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = nxt;
            ++len;
        }
        legs.push_back(len);
    }
    std::sort(legs.begin(), legs.end());
    if (legs[0] == 1 && legs[1] == 1) return DynkinType::make('D', n);
    if (legs[0] == 1 && legs[1] == 2 && legs[2] >= 2 && legs[2] <= 4) return DynkinType::make('E', n);
    return std::nullopt;
}

Mat<long long> classical_cartan(const DynkinType& t) {
    const int n = t.rank;
    Mat<long long> c(n, 0);
    for (int i = 0; i < n; ++i) c(i, i) = 2;
    auto join = [&](int i, int j, long long cij = -1, long long cji = -1) {
        c(i, j) = cij;
        c(j, i) = cji;
    };
    switch (t.family) {
        case 'A':
            for (int i = 0; i + 1 < n; ++i) join(i, i + 1);
            break;
        case 'B':
        case 'C':
            for (int i = 0; i + 2 < n; ++i) join(i, i + 1);
            if (t.family == 'B')
                join(n - 2, n - 1, -2, -1);
            else
                join(n - 2, n - 1, -1, -2);
            break;
        case 'D':
            for (int i = 0; i + 2 < n; ++i) join(i, i + 1);
            join(n - 3, n - 1);
            break;
        case 'E':
            join(0, 2);
            join(1, 3);
            for (int i = 2; i + 1 < n; ++i) join(i, i + 1);
            break;
        case 'F':
            join(0, 1);
            join(1, 2, -2, -1);
            join(2, 3);
            break;
        case 'G':
            join(0, 1, -3, -1);
            break;
        default:
            throw SemanticError("unknown Dynkin family");
    }
    return c;
}

SignedValuedQuiver dynkin_quiver(const DynkinType& t) {
    Mat<long long> c = classical_cartan(t);
    std::vector<Arrow> arrows;
    for (int i = 0; i < t.rank; ++i)
        for (int j = i + 1; j < t.rank; ++j)
            if (c(i, j) != 0) arrows.push_back({j, i, c(j, i), c(i, j)});
    return SignedValuedQuiver(t.rank, std::move(arrows));
}

std::size_t default_budget() {
    if (const char* env = std::getenv("MUTALG_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 1000000;
}

std::optional<DynkinType> is_mutation_dynkin(const GssMatrix& B, std::size_t budget) {
    if (!is_pure(B)) return std::nullopt;
    if (!dangerous_cycles(B).empty()) return std::nullopt;

    const int n = B.n();
    Mat<long long> start(n, 0);
    Mat<Int> s = specialize(B);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!s(i, j).fits_slong_p()) return std::nullopt;
            start(i, j) = s(i, j).get_si();
        }
    if (!connected(adjacency(diagram_of(start)))) return std::nullopt;

    std::set<std::vector<long long>> seen{start.data()};
    std::deque<Mat<long long>> queue{start};
    while (!queue.empty()) {
        Mat<long long> M = std::move(queue.front());
        queue.pop_front();
        int edges = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                if (M(i, j) == 0) continue;
                ++edges;
                // 2-finiteness: a pair with |b_ij b_ji| >= 4 certifies infinite type
                if (labs_(M(i, j) * M(j, i)) >= 4) return std::nullopt;
            }
        if (edges == n - 1) return recognize_dynkin(diagram_of(M));
        for (int k = 0; k < n; ++k) {
            Mat<long long> N = fz_mutate(M, k);
            if (seen.insert(N.data()).second) {
                if (seen.size() > budget) throw BudgetExceeded("unsigned mutation class search", seen.size());
                queue.push_back(std::move(N));
            }
        }
    }
    return std::nullopt;
}

}  // namespace mutalg
