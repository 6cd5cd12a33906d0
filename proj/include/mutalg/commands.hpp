#pragma once

#include "mutalg/io.hpp"

#include <cstddef>
#include <cstdint>
#include <string>

namespace mutalg {

// Exit codes: 0 ok, 1 verification failed, 2 parse error, 3 semantic error, 4 budget exceeded.
struct CommandResult {
    int exit = 0;
    json payload;
    std::string text;
};

// `input` is JSON, the arrow DSL or matrix text. Blocked quiver-level steps are
// reported as warnings; the matrix-level result is always emitted.
CommandResult cmd_mutate(const std::string& input, const MutationSequence& seq);

// `source` is a Dynkin type name ("A3") or an input as for cmd_mutate.
CommandResult cmd_class(const std::string& source, bool canonical, std::size_t budget);
CommandResult cmd_roots(const std::string& source);

struct VerifyOptions {
    MutationSequence sequence;
    // When nonzero: that many random sequences of length <= max_length instead.
    int random = 0;
    int max_length = 6;
    std::uint64_t seed = 1;
    bool rootspaces = true;
};
// `source` is a type (the sequence is applied to its Dynkin quiver) or a quiver
// in the labeled class of one, reached by breadth-first search.
CommandResult cmd_verify(const std::string& source, const VerifyOptions& opt, std::size_t budget);

// Derived data for a quiver: Cartan counterpart, Dynkin classification, dangerous
// cycles, root count, relation summary. `companion` (roots of the start quiver,
// 1-based coordinates) is included when given.
json describe_quiver(const SignedValuedQuiver& Q, const std::vector<Root>* companion = nullptr);

// rho of the simple roots of mu_seq(Q0), as coordinates over the simple roots of Q0.
std::vector<Root> companion_coordinates(const SignedValuedQuiver& Q0, const MutationSequence& seq);

}  // namespace mutalg
