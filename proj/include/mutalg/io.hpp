#pragma once

// JSON and DOT encodings. Vertices and indices are 1-based in every format.

#include "mutalg/cartan.hpp"
#include "mutalg/lie.hpp"

#include "json.hpp"

#include <string>
#include <variant>

namespace mutalg {

using json = nlohmann::json;

// Always "p/q", also for integers ("3/1"). The parser accepts "p" too.
std::string rat_to_string(const Rat& x);
Rat parse_rat(const std::string& s);

// {"n", "d", "entries": [[{"a","b"}]]}
json to_json(const GssMatrix& B);
GssMatrix gss_from_json(const json& j);

// {"n", "d", "arrows": [{"src","tgt","v":[v1,v2]}]}
json to_json(const SignedValuedQuiver& Q);
SignedValuedQuiver quiver_from_json(const json& j);

json to_json(const CartanCounterpart& C);
// {"cartan", "d", "roots"}, roots in lexicographic order
json to_json(const RootSystem& rs);
RootSystem root_system_from_json(const json& j);

// {"relations_checked", "failures": [{"relation", "residual"}], "dimension", "isomorphism"}
json to_json(const VerifyReport& r);
VerifyReport verify_report_from_json(const json& j);

json sequence_to_json(const MutationSequence& s);
// "2,1,3" or "2 1 3", 1-based in, 0-based out.
MutationSequence parse_sequence(const std::string& s);

// Graphviz digraph, negative arrows solid, positive dashed.
std::string to_dot(const SignedValuedQuiver& Q);

using QuiverOrMatrix = std::variant<SignedValuedQuiver, GssMatrix>;

// Auto-detects JSON (quiver by "arrows", matrix by "entries"), the arrow DSL
// (contains "->") or matrix text. Throws ParseError.
QuiverOrMatrix parse_input(const std::string& text);
QuiverOrMatrix from_json(const json& j);

}  // namespace mutalg
