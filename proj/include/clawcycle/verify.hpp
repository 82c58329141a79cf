#pragma once

// Exhaustive certification, case-claim checking and extremal search.
//
// Every exhaustive check walks its configurations in a fixed order (subsets in
// increasing mask order) and records one outcome per configuration. Workers
// take fixed contiguous index ranges and the outcome stream is reassembled in
// order, so the digest does not depend on the worker count.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "clawcycle/detect.hpp"
#include "clawcycle/hypercube.hpp"

namespace clawcycle {

inline constexpr std::size_t kMaxCounterexamples = 16;

/// Name of the pinned random subset generator, recorded in report headers.
inline constexpr const char* kGeneratorName = "mt19937_64 + Fisher-Yates (rejection-sampled bounds), prefix";

struct VerificationReport {
    std::string check_name;
    std::uint64_t universe_size = 0;
    std::uint64_t passed = 0;
    std::uint64_t failed = 0;
    std::vector<std::string> counterexamples;  // hex masks, first failures in order
    double wall_time = 0.0;
    int worker_count = 1;
    std::string deterministic_digest;  // FNV-1a 64 over the pass/fail stream
    // Informational reports surface findings and never affect the exit status.
    bool informational = false;
    std::map<std::string, std::uint64_t> counters;
    std::vector<std::string> findings;

    bool ok() const noexcept { return informational || failed == 0; }
};

struct ExtremalResult {
    int dim = 0;
    int cycle_length = 8;
    std::vector<std::string> forbidden;
    std::size_t max_size = 0;
    VertexSet certificate{CubeDim(1)};
    std::uint64_t nodes_explored = 0;
    double wall_time = 0.0;
};

enum class CaseFourKind { ClawInV2, CycleAfterDeletion, Unresolved };

struct CaseFourChoice {
    VertexSet second_side{CubeDim(4)};  // V'_2 in Q_4 labels
    CaseFourKind kind = CaseFourKind::Unresolved;
    Vertex center{};                    // ClawInV2
    Vertex z{};                         // CycleAfterDeletion
    std::optional<InducedCycle> cycle;  // CycleAfterDeletion
};

struct CaseFourOutcome {
    PathClassification p5;
    VertexSet first_side{CubeDim(4)};  // V'_1 in Q_4 labels
    std::vector<VertexSet> admissible_v2_choices;
    std::vector<CaseFourChoice> per_choice;
};

/// Uniform random subset of the given size: shuffle all labels with
/// Fisher-Yates driven by `rng` and keep the first `size`.
VertexSet random_subset(CubeDim dim, std::size_t size, std::mt19937_64& rng);

/// All size-subsets of Q_4 must contain a claw or an induced 8-cycle.
/// With symmetry_reduced only orbit representatives are checked and their
/// orbit sizes are tallied against the raw count.
VerificationReport verify_theorem_exhaustive(int n, int size, int workers = 1,
                                             bool symmetry_reduced = false);

/// All 6-subsets of Q_3 must contain a claw or an induced 6-cycle.
VerificationReport verify_proposition_exhaustive(int workers = 1);

/// Machine-checks the base-case claims. case_id 0 runs all four.
std::vector<VerificationReport> verify_case_claims(int case_id, int workers = 1);

/// Outcomes for one induced P5 placed in V_1 (first_side given in Q_3 labels).
CaseFourOutcome case_four_outcome(const VertexSet& first_side);

/// Structured and brute-force base-case solvers on every 9-subset of Q_4.
VerificationReport verify_structured_agreement(int workers = 1);

/// Random 9-subsets S of Q_4 and supersets T: S's witness must hold in T.
VerificationReport verify_monotonicity(int trials, std::uint64_t seed, int workers = 1);

/// Largest subset of Q_n with no induced claw and no induced C_k.
/// Supports k = 8 with n <= 5 and k = 6 with n = 3.
ExtremalResult extremal_search(int n, int cycle_length);

/// Random (2^{n-1}+1)-subsets through the inductive extractor, 4 <= n <= 12.
VerificationReport random_agreement_test(int n, int trials, std::uint64_t seed, int workers = 1);

}  // namespace clawcycle
