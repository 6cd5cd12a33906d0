#include "mutalg/commands.hpp"

#include "mutalg/cycles.hpp"
#include "mutalg/errors.hpp"
#include "mutalg/mutation_class.hpp"

#include <deque>
#include <map>
#include <random>
#include <regex>
#include <sstream>

namespace mutalg {

namespace {

template <class F>
CommandResult run(F&& f) {
    CommandResult r;
    try {
        r = f();
    } catch (const ParseError& e) {
        r = {2, {{"error", e.what()}, {"kind", "parse"}}, std::string("parse error: ") + e.what() + "\n"};
    } catch (const BudgetExceeded& e) {
        r = {4, {{"error", e.what()}, {"kind", "budget"}}, std::string("budget exceeded: ") + e.what() + "\n"};
    } catch (const SemanticError& e) {
        r = {3, {{"error", e.what()}, {"kind", "semantic"}}, std::string("error: ") + e.what() + "\n"};
    } catch (const json::exception& e) {
        r = {2, {{"error", e.what()}, {"kind", "parse"}}, std::string("parse error: ") + e.what() + "\n"};
    }
    return r;
}

// Names like "A3", "b_4"; errors in such names propagate.
std::optional<DynkinType> try_type(const std::string& s) {
    static const std::regex name(R"(\s*[A-Ga-g]_?[0-9]+\s*)");
    if (!std::regex_match(s, name)) return std::nullopt;
    return parse_dynkin_type(s);
}

SignedValuedQuiver as_quiver(const QuiverOrMatrix& x) {
    if (const auto* q = std::get_if<SignedValuedQuiver>(&x)) return *q;
    const auto& B = std::get<GssMatrix>(x);
    if (!is_pure(B)) throw SemanticError("matrix is not pure and has no quiver");
    return quiver_from_matrix(B);
}

SignedValuedQuiver source_quiver(const std::string& source) {
    if (auto t = try_type(source)) return dynkin_quiver(*t);
    return as_quiver(parse_input(source));
}

std::string pretty_root(const Root& r) {
    std::string s = root_to_string(r), out;
    for (char c : s) {
        if (c == 'a')
            out += "α";
        else
            out += c;
    }
    return out;
}

json cycles_json(const std::vector<CycleReport>& cs) {
    json a = json::array();
    for (const auto& c : cs) {
        json v = json::array();
        for (int x : c.vertices) v.push_back(x + 1);
        a.push_back({{"vertices", v}, {"oriented", c.oriented}});
    }
    return a;
}

std::string seq_text(const MutationSequence& s) {
    std::string t;
    for (int k : s) t += (t.empty() ? "" : ",") + std::to_string(k + 1);
    return "(" + t + ")";
}

void check_vertices(const MutationSequence& seq, int n) {
    for (int k : seq)
        if (k >= n) throw SemanticError("vertex " + std::to_string(k + 1) + " out of range 1.." + std::to_string(n));
}

}  // namespace

std::vector<Root> companion_coordinates(const SignedValuedQuiver& Q0, const MutationSequence& seq) {
    const int n = Q0.n();
    check_vertices(seq, n);
    std::vector<Root> g;
    for (int i = 0; i < n; ++i) g.push_back(simple_root(n, i));
    SignedValuedQuiver Q = Q0;
    for (int k : seq) {
        for (const Arrow& a : Q.arrows()) {
            if (a.tgt != k) continue;
            // arrow i -> k: c_ki = v2
            for (int x = 0; x < n; ++x) g[a.src][x] -= a.v2 * g[k][x];
        }
        Q = mutate_quiver(Q, k);
    }
    return g;
}

json describe_quiver(const SignedValuedQuiver& Q, const std::vector<Root>* companion) {
    json j;
    j["quiver"] = to_json(Q);
    j["dsl"] = to_dsl(Q);
    CartanCounterpart C = cartan_counterpart(Q);
    j["cartan"] = to_json(C);
    GssMatrix B = matrix_from_quiver(Q);
    j["dangerous_cycles"] = cycles_json(dangerous_cycles(B));
    try {
        auto t = is_mutation_dynkin(B, 20000);
        j["dynkin"] = t ? json(to_string(*t)) : json(nullptr);
    } catch (const BudgetExceeded&) {
        j["dynkin"] = nullptr;
    }
    try {
        j["root_count"] = generate_root_system(C, 5000).roots.size();
    } catch (const BudgetExceeded&) {
        j["root_count"] = nullptr;
    }
    json rel;
    RelationSet r14 = relations_r1_r4(C);
    std::map<int, int> by_kind;
    for (const auto& r : r14) ++by_kind[r.kind];
    for (int k = 1; k <= 4; ++k) rel["R" + std::to_string(k)] = by_kind[k];
    try {
        auto cycles = classify_cycles(C);
        rel["R5"] = relations_r5(C, cycles).size();
        rel["excluded"] = excluded_relations(C).size();
        json cj = json::array();
        for (const auto& c : cycles) {
            json v = json::array(), lv = json::array();
            for (std::size_t q = 0; q < c.vertices.size(); ++q) {
                v.push_back(c.vertices[q] + 1);
                if (c.long_vertex[q]) lv.push_back(c.vertices[q] + 1);
            }
            cj.push_back({{"vertices", v}, {"shape", to_string(c.shape)}, {"long", lv}});
        }
        rel["cycles"] = cj;
        json words = json::array();
        for (const auto& r : relations_r5(C, cycles)) words.push_back(r.text());
        rel["r5_words"] = words;
    } catch (const SemanticError& e) {
        rel["R5"] = nullptr;
        rel["error"] = e.what();
    }
    j["relations"] = rel;
    if (companion) j["companion_basis"] = *companion;
    return j;
}

CommandResult cmd_mutate(const std::string& input, const MutationSequence& seq) {
    return run([&] {
        QuiverOrMatrix x = parse_input(input);
        const bool from_quiver = std::holds_alternative<SignedValuedQuiver>(x);
        GssMatrix B = from_quiver ? matrix_from_quiver(std::get<SignedValuedQuiver>(x)) : std::get<GssMatrix>(x);
        check_vertices(seq, B.n());
        json warnings = json::array();
        std::string text;
        for (std::size_t s = 0; s < seq.size(); ++s) {
            const int k = seq[s];
            if (is_pure(B)) {
                if (auto v = positive_3cycle_violation(B, k)) {
                    PositiveThreeCycleViolation e((*v)[0], (*v)[1], (*v)[2]);
                    warnings.push_back({{"step", s + 1},
                                        {"vertex", k + 1},
                                        {"triple", {(*v)[0] + 1, (*v)[1] + 1, (*v)[2] + 1}},
                                        {"message", e.what()}});
                    text += std::string("warning: step ") + std::to_string(s + 1) + ": " + e.what() + "\n";
                }
            }
            B = mutate_matrix(B, k);
        }
        CommandResult r;
        r.payload["sequence"] = sequence_to_json(seq);
        r.payload["input_kind"] = from_quiver ? "quiver" : "matrix";
        r.payload["matrix"] = to_json(B);
        const bool pure = is_pure(B);
        r.payload["pure"] = pure;
        r.payload["warnings"] = warnings;
        r.payload["quiver"] = pure ? to_json(quiver_from_matrix(B)) : json(nullptr);
        r.payload["dangerous_cycles"] = pure ? cycles_json(dangerous_cycles(B)) : json(nullptr);
        std::ostringstream os;
        os << text << to_string(B) << "\n";
        os << "pure: " << (pure ? "true" : "false") << "\n";
        if (pure) os << "quiver: " << to_dsl(quiver_from_matrix(B)) << "\n";
        r.text = os.str();
        return r;
    });
}

CommandResult cmd_class(const std::string& source, bool canonical, std::size_t budget) {
    return run([&] {
        SignedValuedQuiver Q = source_quiver(source);
        auto members = mutation_class(Q, budget, canonical);
        CommandResult r;
        json ms = json::array();
        std::ostringstream os;
        os << members.size() << (members.size() == 1 ? " member" : " members") << (canonical ? " up to relabeling" : "")
           << "\n";
        for (const auto& m : members) {
            ms.push_back(to_json(m));
            os << "  " << (m.arrows().empty() ? "(no arrows)" : to_dsl(m)) << "\n";
        }
        r.payload = {{"count", members.size()}, {"canonical", canonical}, {"members", std::move(ms)}};
        r.text = os.str();
        return r;
    });
}

CommandResult cmd_roots(const std::string& source) {
    return run([&] {
        CartanCounterpart C;
        if (auto t = try_type(source))
            C = classical_counterpart(*t);
        else {
            QuiverOrMatrix x = parse_input(source);
            if (const auto* B = std::get_if<GssMatrix>(&x))
                C = cartan_counterpart(*B);
            else
                C = cartan_counterpart(std::get<SignedValuedQuiver>(x));
        }
        RootSystem rs = generate_root_system(C);
        CommandResult r;
        r.payload = to_json(rs);
        r.payload["count"] = rs.roots.size();
        std::ostringstream os;
        os << rs.roots.size() << " roots\n";
        for (const Root& b : rs.roots) os << "  " << pretty_root(b) << "\n";
        r.text = os.str();
        return r;
    });
}

namespace {

// Labeled breadth-first search from the Dynkin quiver of t to Q.
MutationSequence path_to(const DynkinType& t, const SignedValuedQuiver& target, std::size_t budget) {
    SignedValuedQuiver start = dynkin_quiver(t);
    std::map<std::string, MutationSequence> seen;
    auto key = [](const SignedValuedQuiver& q) { return to_string(matrix_from_quiver(q)); };
    const std::string goal = key(target);
    std::deque<SignedValuedQuiver> q{start};
    seen[key(start)] = {};
    while (!q.empty()) {
        SignedValuedQuiver cur = q.front();
        q.pop_front();
        const MutationSequence s = seen[key(cur)];
        if (key(cur) == goal) return s;
        for (int k = 0; k < cur.n(); ++k) {
            SignedValuedQuiver nx = mutate_quiver(cur, k);
            auto [it, fresh] = seen.emplace(key(nx), s);
            if (!fresh) continue;
            it->second.push_back(k);
            if (seen.size() > budget) throw BudgetExceeded("path search", seen.size());
            q.push_back(std::move(nx));
        }
    }
    throw SemanticError("quiver is not in the labeled mutation class of the " + to_string(t) + " Dynkin quiver");
}

struct VerifyRun {
    json payload;
    bool ok = true;
    std::string line;
};

VerifyRun verify_one(const StructureAlgebra& alg, const MutationSequence& seq, bool rootspaces) {
    VerifyRun out;
    check_vertices(seq, alg.rank());
    Realization r = realize(alg, seq);
    CartanCounterpart C = cartan_counterpart(r.quiver);
    VerifyReport rep = verify_homomorphism(alg, r.images, all_relations(C));
    verify_isomorphism(alg, r.images, rep);
    bool inverse = true;
    for (int k = 0; k < alg.rank(); ++k)
        if (!(psi_k(alg, r.quiver, k, phi_k(alg, r.quiver, k, r.images)) == r.images)) inverse = false;
    json rs = nullptr;
    bool rs_ok = true;
    if (rootspaces) {
        std::size_t checked = 0;
        json fails = json::array();
        for (int k = 0; k < alg.rank(); ++k) {
            auto v = verify_rootspace_mutation(alg, r.quiver, k, r.images);
            checked += v.checked;
            for (auto& f : v.failures) fails.push_back(f);
        }
        rs_ok = fails.empty();
        rs = {{"checked", checked}, {"failures", fails}};
    }
    ExcludedReport ex = excluded_relation_nonzero(alg, r.images, C);
    json exj = json::array();
    for (const auto& [w, nz] : ex.words) exj.push_back({{"word", w}, {"nonzero", nz}});
    const bool ex_ok = ex.words.empty() || ex.ok();

    out.ok = rep.ok() && inverse && rs_ok && ex_ok;
    out.payload = {{"sequence", sequence_to_json(seq)},
                   {"quiver", to_json(r.quiver)},
                   {"cartan", to_json(C)},
                   {"report", to_json(rep)},
                   {"phi_psi_identity", inverse},
                   {"rootspace", rs},
                   {"excluded", exj},
                   {"ok", out.ok}};
    std::ostringstream os;
    os << "dimension " << rep.dimension.value_or(0) << ", isomorphism: " << (rep.isomorphism.value_or(false) ? "true" : "false")
       << "; relations " << rep.relations_checked - rep.failures.size() << "/" << rep.relations_checked
       << " hold; phi_k psi_k = id: " << (inverse ? "true" : "false");
    if (rootspaces) os << "; root spaces " << (rs_ok ? "compatible" : "INCOMPATIBLE") << " (" << rs["checked"] << " checked)";
    if (!exj.empty()) os << "; excluded words nonzero: " << (ex_ok ? "true" : "false");
    out.line = os.str();
    return out;
}

}  // namespace

CommandResult cmd_verify(const std::string& source, const VerifyOptions& opt, std::size_t budget) {
    return run([&] {
        DynkinType t;
        MutationSequence base;
        if (auto ty = try_type(source)) {
            t = *ty;
        } else {
            SignedValuedQuiver Q = as_quiver(parse_input(source));
            auto found = is_mutation_dynkin(matrix_from_quiver(Q), budget);
            if (!found) throw SemanticError("quiver is not mutation Dynkin");
            t = *found;
            base = path_to(t, Q, budget);
        }
        StructureAlgebra alg = chevalley_algebra(t);
        std::vector<MutationSequence> seqs;
        if (opt.random > 0) {
            std::mt19937_64 rng(opt.seed);
            std::uniform_int_distribution<int> len(0, opt.max_length), vert(0, alg.rank() - 1);
            for (int i = 0; i < opt.random; ++i) {
                MutationSequence s = base;
                int l = len(rng);
                for (int q = 0; q < l; ++q) s.push_back(vert(rng));
                seqs.push_back(std::move(s));
            }
        } else {
            MutationSequence s = base;
            s.insert(s.end(), opt.sequence.begin(), opt.sequence.end());
            seqs.push_back(std::move(s));
        }
        CommandResult r;
        json runs = json::array();
        bool ok = true;
        std::ostringstream os;
        for (const auto& s : seqs) {
            VerifyRun v = verify_one(alg, s, opt.rootspaces);
            ok = ok && v.ok;
            runs.push_back(std::move(v.payload));
            os << to_string(t) << " " << seq_text(s) << ": " << v.line << "\n";
        }
        r.payload = {{"type", to_string(t)}, {"algebra_dimension", alg.dim()}, {"runs", std::move(runs)}, {"ok", ok}};
        if (opt.random > 0) r.payload["seed"] = opt.seed;
        r.exit = ok ? 0 : 1;
        r.text = os.str();
        return r;
    });
}

}  // namespace mutalg
