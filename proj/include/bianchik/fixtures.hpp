#pragma once

// Bundled input data: the m = 5 matrix-level differentials with their
// printed labels, the toy pruned-edge complex, and the six-term rank hints
// that pin the m = 5 answer.  Fixture emission is deterministic; emitting
// twice produces byte-identical files.

#include <string>
#include <vector>

#include "bianchik/documents.hpp"

namespace bianchik {

// d1 (13 x 13) and d2 (13 x 3, stored un-transposed from its 3 x 13 source
// layout) for m = 5, class number 2.
MatrixDocument m5_matrix_document();

// Single vertex orbit plus one pruned edge orbit with trivial stabilizers;
// its modified Bredon homology vanishes in all degrees.
ComplexDocument toy_edge_document();

// The same edge with both endpoints present, for contrast: H0 = Z.
ComplexDocument unpruned_edge_document();

HintsDocument m5_hints_document();

struct EmittedFixtures {
    std::string matrix_path;
    std::string toy_edge_path;
    std::string hints_path;
};

// Writes m5_matrices.json, toy_edge.json and m5_hints.json under outdir
// (created if missing).  Throws std::runtime_error on I/O failure.
EmittedFixtures emit_fixtures(const std::string& outdir);

}  // namespace bianchik
