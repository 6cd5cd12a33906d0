#include "mutalg/quiver.hpp"

#include "mutalg/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <regex>
#include <sstream>

namespace mutalg {

Arrow reverse(const Arrow& a) { return {a.tgt, a.src, a.v2, a.v1}; }
Arrow negate(const Arrow& a) { return {a.src, a.tgt, -a.v1, -a.v2}; }

Arrow compose(const Arrow& a, const Arrow& b) {
    if (a.tgt != b.src) throw SemanticError("arrows are not composable");
    return {a.src, b.tgt, a.v1 * b.v1, a.v2 * b.v2};
}

Comparability compare(const Arrow& a, const Arrow& b) {
    if (a.src != b.tgt || a.tgt != b.src) throw SemanticError("comparison needs antiparallel arrows");
    auto abs = [](long long x) { return x < 0 ? -x : x; };
    if (a.v1 == b.v2 && a.v2 == b.v1) return Comparability::Same;
    if (abs(a.v1) < abs(b.v2) && abs(a.v2) < abs(b.v1)) return Comparability::Smaller;
    if (abs(a.v1) > abs(b.v2) && abs(a.v2) > abs(b.v1)) return Comparability::Bigger;
    return Comparability::Incomparable;
}

namespace {

Mat<TElem> entries_of(int n, const std::vector<Arrow>& arrows) {
    Mat<TElem> b(n);
    for (const Arrow& a : arrows) {
        if (a.src < 0 || a.src >= n || a.tgt < 0 || a.tgt >= n) throw SemanticError("arrow endpoint out of range");
        if (a.sign() > 0) {
            b(a.src, a.tgt) = TElem(to_int(a.v1), 0);
            b(a.tgt, a.src) = TElem(to_int(-a.v2), 0);
        } else {
            b(a.src, a.tgt) = TElem(0, -a.v1);
            b(a.tgt, a.src) = TElem(0, a.v2);
        }
    }
    return b;
}

void validate_shape(int n, const std::vector<Arrow>& arrows) {
    if (n <= 0) throw SemanticError("a quiver needs at least one vertex");
    std::map<std::pair<int, int>, int> seen;
    for (const Arrow& a : arrows) {
        if (a.src < 0 || a.src >= n || a.tgt < 0 || a.tgt >= n) throw SemanticError("arrow endpoint out of range");
        if (a.src == a.tgt) throw SemanticError("loops are not allowed");
        if (a.v1 == 0 || a.v2 == 0 || (a.v1 > 0) != (a.v2 > 0))
            throw SemanticError("arrow values must be nonzero with equal signs");
        auto key = ordered_pair(a.src, a.tgt);
        if (seen[{key.first, key.second}]++) throw SemanticError("at most one arrow between two vertices");
    }
}

long long to_ll(const Int& x) {
    if (!x.fits_slong_p()) throw SemanticError("arrow value out of range");
    return x.get_si();
}

}  // namespace

SignedValuedQuiver::SignedValuedQuiver(int n, Symmetrizer d, std::vector<Arrow> arrows)
    : n_(n), d_(std::move(d)), arrows_(std::move(arrows)) {
    validate_shape(n_, arrows_);
    if (static_cast<int>(d_.size()) != n_) throw SemanticError("symmetrizer has wrong length");
    for (long long x : d_)
        if (x <= 0) throw SemanticError("symmetrizer entries must be positive");
    for (const Arrow& a : arrows_)
        if (d_[a.src] * a.v1 != d_[a.tgt] * a.v2) throw SemanticError("values incompatible with the symmetrizer");
    std::sort(arrows_.begin(), arrows_.end());
    // store the normalized symmetrizer, as GssMatrix does
    d_ = *find_symmetrizer(entries_of(n_, arrows_));
}

SignedValuedQuiver::SignedValuedQuiver(int n, std::vector<Arrow> arrows) : n_(n), arrows_(std::move(arrows)) {
    validate_shape(n_, arrows_);
    auto d = find_symmetrizer(entries_of(n_, arrows_));
    if (!d) throw SemanticError("arrow values admit no symmetrizer");
    d_ = std::move(*d);
    std::sort(arrows_.begin(), arrows_.end());
}

std::optional<Arrow> SignedValuedQuiver::between(int i, int j) const {
    for (const Arrow& a : arrows_)
        if ((a.src == i && a.tgt == j) || (a.src == j && a.tgt == i)) return a;
    return std::nullopt;
}

bool SignedValuedQuiver::has_arrow(int i, int j) const {
    auto a = between(i, j);
    return a && a->src == i;
}

SignedValuedQuiver quiver_from_matrix(const GssMatrix& B) {
    if (!is_pure(B)) throw SemanticError("only pure matrices have a signed valued quiver");
    std::vector<Arrow> arrows;
    for (int i = 0; i < B.n(); ++i)
        for (int j = 0; j < B.n(); ++j)
            if (t_sign(B(i, j)) == 1)
                arrows.push_back({i, j, to_ll(B(i, j).eval_at(-1)), to_ll(-B(j, i).eval_at(-1))});
    return SignedValuedQuiver(B.n(), B.symmetrizer(), std::move(arrows));
}

GssMatrix matrix_from_quiver(const SignedValuedQuiver& Q) {
    return GssMatrix(entries_of(Q.n(), Q.arrows()), Q.symmetrizer());
}

std::optional<std::array<int, 3>> positive_3cycle_violation(const SignedValuedQuiver& Q, int k) {
    for (const Arrow& a : Q.arrows()) {
        if (a.tgt != k) continue;
        for (const Arrow& b : Q.arrows()) {
            if (b.src != k) continue;
            auto g = Q.between(a.src, b.tgt);
            if (g && a.sign() * b.sign() * g->sign() < 0) return std::array<int, 3>{a.src, b.tgt, k};
        }
    }
    return std::nullopt;
}

SignedValuedQuiver mutate_quiver(const SignedValuedQuiver& Q, int k) {
    if (k < 0 || k >= Q.n()) throw SemanticError("mutation vertex out of range");
    if (auto v = positive_3cycle_violation(Q, k)) throw PositiveThreeCycleViolation((*v)[0], (*v)[1], (*v)[2]);

    // Step 1
    std::vector<Arrow> added;
    std::vector<std::pair<int, int>> touched;
    for (const Arrow& a : Q.arrows()) {
        if (a.tgt != k) continue;
        for (const Arrow& b : Q.arrows()) {
            if (b.src != k) continue;
            added.push_back(negate(compose(a, b)));
            touched.push_back(ordered_pair(a.src, b.tgt));
        }
    }
    std::vector<Arrow> arrows;
    for (Arrow a : Q.arrows()) {
        if (std::find(touched.begin(), touched.end(), ordered_pair(a.src, a.tgt)) != touched.end()) a = negate(a);
        // Step 2
        if (a.src == k)
            a = reverse(a);
        else if (a.tgt == k)
            a = reverse(negate(a));
        arrows.push_back(a);
    }
    arrows.insert(arrows.end(), added.begin(), added.end());

    // Step 3
    std::map<std::pair<int, int>, std::vector<Arrow>> by_pair;
    for (const Arrow& a : arrows) by_pair[ordered_pair(a.src, a.tgt)].push_back(a);
    std::vector<Arrow> merged;
    for (auto& [pair, group] : by_pair) {
        if (group.size() == 1) {
            merged.push_back(group[0]);
            continue;
        }
        if (group.size() != 2) throw std::logic_error("more than two arrows between a pair after step 1");
        Arrow g = group[0], h = group[1];
        if (g.src != h.src) {
            Comparability c = compare(g, h);
            if (c == Comparability::Incomparable) throw std::logic_error("incomparable antiparallel arrows in step 3");
            if (c == Comparability::Bigger)
                h = reverse(negate(h));
            else
                g = reverse(negate(g));
        }
        Arrow sum{g.src, g.tgt, g.v1 + h.v1, g.v2 + h.v2};
        if (sum.v1 == 0 && sum.v2 == 0) continue;
        if (sum.v1 == 0 || sum.v2 == 0 || (sum.v1 > 0) != (sum.v2 > 0))
            throw std::logic_error("merged arrow has an invalid value");
        merged.push_back(sum);
    }
    return SignedValuedQuiver(Q.n(), Q.symmetrizer(), std::move(merged));
}

SignedValuedQuiver mutate_quiver_sequence(SignedValuedQuiver Q, const MutationSequence& seq) {
    for (int k : seq) Q = mutate_quiver(Q, k);
    return Q;
}

SignedValuedQuiver parse_quiver_dsl(const std::string& text) {
    static const std::regex arrow_re(R"(^\s*(\d+)\s*-\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)->\s*(\d+)\s*$)");
    static const std::regex n_re(R"(^\s*n\s*=\s*(\d+)\s*$)");
    static const std::regex d_re(R"(^\s*d\s*=\s*([\d,\s]+)$)");

    std::string body = text;
    int n = 0;
    std::optional<Symmetrizer> d;
    // header fields end with ':'
    for (;;) {
        auto colon = body.find(':');
        if (colon == std::string::npos) break;
        std::string head = body.substr(0, colon);
        std::smatch m;
        if (std::regex_match(head, m, n_re)) {
            n = std::stoi(m[1]);
        } else if (std::regex_match(head, m, d_re)) {
            Symmetrizer dv;
            std::istringstream ds(m[1].str());
            std::string tok;
            while (std::getline(ds, tok, ','))
                if (tok.find_first_not_of(" \t") != std::string::npos) dv.push_back(std::stoll(tok));
            d = dv;
        } else {
            throw ParseError("unknown quiver header: " + head);
        }
        body = body.substr(colon + 1);
    }

    std::vector<Arrow> arrows;
    std::string clause;
    std::istringstream cs(body);
    int max_vertex = 0;
    while (std::getline(cs, clause, ';')) {
        if (clause.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        std::smatch m;
        if (!std::regex_match(clause, m, arrow_re)) throw ParseError("cannot parse arrow: " + clause);
        int s = std::stoi(m[1]), t = std::stoi(m[4]);
        if (s < 1 || t < 1) throw ParseError("vertices are numbered from 1");
        arrows.push_back({s - 1, t - 1, std::stoll(m[2]), std::stoll(m[3])});
        max_vertex = std::max({max_vertex, s, t});
    }
    if (n == 0) n = std::max(max_vertex, d ? static_cast<int>(d->size()) : 0);
    if (n == 0) throw ParseError("empty quiver; give n=...: for arrowless quivers");
    if (max_vertex > n) throw ParseError("arrow endpoint exceeds n");
    if (d) return SignedValuedQuiver(n, *d, std::move(arrows));
    return SignedValuedQuiver(n, std::move(arrows));
}

std::string to_dsl(const SignedValuedQuiver& Q) {
    std::ostringstream os;
    os << "n=" << Q.n() << ": ";
    bool first = true;
    for (const Arrow& a : Q.arrows()) {
        if (!first) os << "; ";
        first = false;
        os << a.src + 1 << " -(" << a.v1 << "," << a.v2 << ")-> " << a.tgt + 1;
    }
    return os.str();
}

}  // namespace mutalg
