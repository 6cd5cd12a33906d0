#include "mutalg/io.hpp"

#include "mutalg/errors.hpp"

#include <algorithm>
#include <sstream>

namespace mutalg {

namespace {

// Wraps nlohmann type errors so callers see one exception type per failure class.
template <class F>
auto guarded(const char* what, F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

long long get_ll(const json& j, const char* key) {
    if (!j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
    const json& v = j.at(key);
    if (!v.is_number_integer()) throw ParseError(std::string("field \"") + key + "\" must be an integer");
    return v.get<long long>();
}

Symmetrizer get_d(const json& j, int n) {
    Symmetrizer d;
    if (!j.contains("d")) return d;
    const json& v = j.at("d");
    if (!v.is_array() || static_cast<int>(v.size()) != n) throw ParseError("field \"d\" must be an array of length n");
    for (const auto& x : v) {
        if (!x.is_number_integer()) throw ParseError("field \"d\" must hold integers");
        d.push_back(x.get<long long>());
    }
    return d;
}

int get_n(const json& j) {
    long long n = get_ll(j, "n");
    if (n < 1 || n > 64) throw ParseError("field \"n\" must lie in 1..64");
    return static_cast<int>(n);
}

}  // namespace

std::string rat_to_string(const Rat& x) {
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rat parse_rat(const std::string& s) {
    Rat r;
    if (s.empty() || r.set_str(s, 10) != 0 || r.get_den() == 0) throw ParseError("bad rational \"" + s + "\"");
    r.canonicalize();
    return r;
}

json to_json(const GssMatrix& B) {
    json rows = json::array();
    for (int i = 0; i < B.n(); ++i) {
        json row = json::array();
        for (int j = 0; j < B.n(); ++j) row.push_back({{"a", B(i, j).a.get_si()}, {"b", B(i, j).b.get_si()}});
        rows.push_back(std::move(row));
    }
    return {{"n", B.n()}, {"d", B.symmetrizer()}, {"entries", std::move(rows)}};
}

GssMatrix gss_from_json(const json& j) {
    return guarded("matrix", [&] {
        if (!j.is_object()) throw ParseError("matrix must be an object");
        const int n = get_n(j);
        const json& rows = j.at("entries");
        if (!rows.is_array() || static_cast<int>(rows.size()) != n) throw ParseError("\"entries\" must have n rows");
        Mat<TElem> m(n);
        for (int r = 0; r < n; ++r) {
            const json& row = rows[static_cast<std::size_t>(r)];
            if (!row.is_array() || static_cast<int>(row.size()) != n)
                throw ParseError("\"entries\" row " + std::to_string(r + 1) + " must have n entries");
            for (int c = 0; c < n; ++c) {
                const json& e = row[static_cast<std::size_t>(c)];
                if (e.is_string()) {
                    try {
                        m(r, c) = parse_telem(e.get<std::string>());
                    } catch (const std::invalid_argument&) {
                        throw ParseError("bad entry \"" + e.get<std::string>() + "\"");
                    }
                } else {
                    if (!e.is_object()) throw ParseError("entry must be {\"a\",\"b\"} or a string");
                    m(r, c) = TElem(get_ll(e, "a"), e.contains("b") ? get_ll(e, "b") : 0);
                }
            }
        }
        Symmetrizer d = get_d(j, n);
        return d.empty() ? GssMatrix(std::move(m)) : GssMatrix(std::move(m), d);
    });
}

json to_json(const SignedValuedQuiver& Q) {
    json arrows = json::array();
    for (const Arrow& a : Q.arrows())
        arrows.push_back({{"src", a.src + 1}, {"tgt", a.tgt + 1}, {"v", {a.v1, a.v2}}});
    return {{"n", Q.n()}, {"d", Q.symmetrizer()}, {"arrows", std::move(arrows)}};
}

SignedValuedQuiver quiver_from_json(const json& j) {
    return guarded("quiver", [&] {
        if (!j.is_object()) throw ParseError("quiver must be an object");
        const int n = get_n(j);
        const json& arr = j.at("arrows");
        if (!arr.is_array()) throw ParseError("\"arrows\" must be an array");
        std::vector<Arrow> arrows;
        for (const auto& a : arr) {
            if (!a.is_object()) throw ParseError("arrow must be an object");
            long long s = get_ll(a, "src"), t = get_ll(a, "tgt");
            if (s < 1 || s > n || t < 1 || t > n) throw ParseError("arrow endpoint out of range");
            const json& v = a.at("v");
            if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer())
                throw ParseError("arrow value must be [v1, v2]");
            arrows.push_back({static_cast<int>(s - 1), static_cast<int>(t - 1), v[0].get<long long>(), v[1].get<long long>()});
        }
        Symmetrizer d = get_d(j, n);
        return d.empty() ? SignedValuedQuiver(n, std::move(arrows)) : SignedValuedQuiver(n, d, std::move(arrows));
    });
}

json to_json(const CartanCounterpart& C) {
    json rows = json::array();
    for (int i = 0; i < C.n(); ++i) {
        json row = json::array();
        for (int j = 0; j < C.n(); ++j) row.push_back(C(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const RootSystem& rs) {
    return {{"cartan", to_json(rs.cartan)}, {"d", rs.cartan.d}, {"roots", rs.roots}};
}

RootSystem root_system_from_json(const json& j) {
    return guarded("root system", [&] {
        RootSystem rs;
        auto rows = j.at("cartan").get<std::vector<std::vector<long long>>>();
        const int n = static_cast<int>(rows.size());
        rs.cartan.c = Mat<long long>(n);
        for (int i = 0; i < n; ++i) {
            if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n) throw ParseError("cartan must be square");
            for (int k = 0; k < n; ++k) rs.cartan.c(i, k) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
        }
        rs.cartan.d = j.at("d").get<Symmetrizer>();
        if (static_cast<int>(rs.cartan.d.size()) != n) throw ParseError("d must have length n");
        rs.roots = j.at("roots").get<std::vector<Root>>();
        for (const auto& r : rs.roots)
            if (static_cast<int>(r.size()) != n) throw ParseError("root of the wrong length");
        std::sort(rs.roots.begin(), rs.roots.end());
        return rs;
    });
}

json to_json(const VerifyReport& r) {
    json fails = json::array();
    for (const auto& f : r.failures) {
        json res = json::array();
        for (const Rat& x : f.residual.coeffs()) res.push_back(rat_to_string(x));
        fails.push_back({{"relation", f.relation}, {"residual", std::move(res)}});
    }
    json j = {{"relations_checked", r.relations_checked}, {"failures", std::move(fails)}};
    j["dimension"] = r.dimension ? json(*r.dimension) : json(nullptr);
    j["isomorphism"] = r.isomorphism ? json(*r.isomorphism) : json(nullptr);
    return j;
}

VerifyReport verify_report_from_json(const json& j) {
    return guarded("report", [&] {
        VerifyReport r;
        r.relations_checked = j.at("relations_checked").get<std::size_t>();
        for (const auto& f : j.at("failures")) {
            VerifyFailure vf;
            vf.relation = f.at("relation").get<std::string>();
            const auto& res = f.at("residual");
            vf.residual = LieElement(res.size());
            for (std::size_t i = 0; i < res.size(); ++i) vf.residual[i] = parse_rat(res[i].get<std::string>());
            r.failures.push_back(std::move(vf));
        }
        if (j.contains("dimension") && !j["dimension"].is_null()) r.dimension = j["dimension"].get<std::size_t>();
        if (j.contains("isomorphism") && !j["isomorphism"].is_null()) r.isomorphism = j["isomorphism"].get<bool>();
        return r;
    });
}

json sequence_to_json(const MutationSequence& s) {
    json a = json::array();
    for (int k : s) a.push_back(k + 1);
    return a;
}

MutationSequence parse_sequence(const std::string& s) {
    MutationSequence out;
    std::string tok;
    std::istringstream in(s);
    auto flush = [&] {
        if (tok.empty()) return;
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size() || v < 1 || v > 64) throw ParseError("bad vertex \"" + tok + "\" in sequence");
        out.push_back(static_cast<int>(v - 1));
        tok.clear();
    };
    for (char c : s) {
        if (c == ',' || c == ' ' || c == '(' || c == ')' || c == '\t')
            flush();
        else
            tok += c;
    }
    flush();
    return out;
}

std::string to_dot(const SignedValuedQuiver& Q) {
    std::ostringstream os;
    os << "// signed valued quiver\n"
       << "// legend: solid edge = negative arrow, dashed edge = positive arrow, label (v1,v2)\n"
       << "digraph Q {\n";
    for (int i = 0; i < Q.n(); ++i)
        os << "  " << i + 1 << " [label=\"" << i + 1 << "\\nd=" << Q.symmetrizer()[static_cast<std::size_t>(i)] << "\"];\n";
    for (const Arrow& a : Q.arrows())
        os << "  " << a.src + 1 << " -> " << a.tgt + 1 << " [label=\"(" << a.v1 << "," << a.v2 << ")\", style="
           << (a.sign() < 0 ? "solid" : "dashed") << "];\n";
    os << "}\n";
    return os.str();
}

QuiverOrMatrix from_json(const json& j) {
    if (j.is_object() && j.contains("arrows")) return quiver_from_json(j);
    if (j.is_object() && j.contains("entries")) return gss_from_json(j);
    throw ParseError("JSON input is neither a quiver (\"arrows\") nor a matrix (\"entries\")");
}

QuiverOrMatrix parse_input(const std::string& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw ParseError("empty input");
    if (text[first] == '{') {
        json j = json::parse(text, nullptr, false);
        if (j.is_discarded()) throw ParseError("invalid JSON");
        return from_json(j);
    }
    if (text.find("->") != std::string::npos || text.compare(first, 2, "n=") == 0) return parse_quiver_dsl(text);
    return parse_gss(text);
}

}  // namespace mutalg
