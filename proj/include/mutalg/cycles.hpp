#pragma once

#include "mutalg/gss_matrix.hpp"

#include <vector>

namespace mutalg {

struct CycleReport {
    // Starts at the smallest vertex. An oriented cycle is listed along its arrows
    // (sgn b_{v[q],v[q+1]} = 1); otherwise the smaller neighbour comes second.
    std::vector<int> vertices;
    bool oriented = false;
    bool chordless = false;
    bool dangerous = false;

    friend bool operator==(const CycleReport&, const CycleReport&) = default;
};

// Recomputes the flags of the closed walk `vertices` in B.
CycleReport analyze_cycle(const GssMatrix& B, std::vector<int> vertices);

// Every chordless cycle (length >= 3) of the support graph, once each, sorted by vertex list.
std::vector<CycleReport> chordless_cycles(const GssMatrix& B);
std::vector<CycleReport> dangerous_cycles(const GssMatrix& B);

// A mutation sequence taking B out of the pure matrices, built from the dangerous cycle c.
// Oriented cycles give (i_1, ..., i_{p-2}); otherwise cycle vertices that are sinks or
// sources along the cycle are flipped first. Throws SemanticError if c is not a
// dangerous cycle of B or B is not pure.
MutationSequence nonpure_witness(const GssMatrix& B, const CycleReport& c);

}  // namespace mutalg
