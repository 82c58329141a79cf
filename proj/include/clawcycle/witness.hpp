#pragma once

// Constructive witness extraction.
//
// find_witness_inductive halves the cube on the first coordinate until the
// chosen side is a Q_4 that still holds at least 9 vertices, solves that base
// case, and lifts the witness back. base_case_solve_structured replays the
// four-case analysis of the Q_4 base case step by step; it is kept off the
// production path and cross-checked against the brute-force solver.

#include <string>
#include <utility>
#include <vector>

#include "clawcycle/detect.hpp"
#include "clawcycle/hypercube.hpp"

namespace clawcycle {

struct ExtractionStep {
    int dim = 0;
    int split_coord = 1;
    int chosen_side = 0;
    std::pair<std::size_t, std::size_t> side_cardinalities{0, 0};
};

struct ExtractionTrace {
    std::vector<ExtractionStep> steps;
    std::string base;
};

struct InductiveResult {
    Witness witness;
    ExtractionTrace trace;
};

/// Required cardinality 2^{n-1} + 1.
std::size_t theorem_bound(int n);

/// Throws InvalidDimension for n < 4 and InsufficientCardinality below the
/// bound.
InductiveResult find_witness_inductive(const VertexSet& set);

/// Brute-force Q_4 solver; accepts any |set| >= 9.
Witness base_case_solve(const VertexSet& set);

struct StructuredResult {
    Witness witness;
    int case_id = 0;  // 1..4
};

/// Case-by-case Q_4 solver for |set| = 9. Claw-centre degrees are counted in
/// the whole set, cross edges included.
StructuredResult base_case_solve_structured(const VertexSet& set);

}  // namespace clawcycle
