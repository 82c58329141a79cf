#pragma once

// Induced claws and induced cycles inside a vertex subset of Q_n.
//
// Two distinct neighbours of a cube vertex differ in exactly two bits and are
// never adjacent, so a member with three in-set neighbours is always the centre
// of an induced K_{1,3}. Everything claw-related here relies on that.

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "clawcycle/hypercube.hpp"

namespace clawcycle {

struct Claw {
    Vertex center;
    std::array<Vertex, 3> leaves;

    friend bool operator==(const Claw&, const Claw&) = default;
};

struct InducedCycle {
    std::vector<Vertex> cycle;

    friend bool operator==(const InducedCycle&, const InducedCycle&) = default;
};

using Witness = std::variant<Claw, InducedCycle>;

/// All vertices named by a witness, in witness order.
std::vector<Vertex> witness_vertices(const Witness& w);

enum class FiveSetKind {
    HasDegree3Vertex,
    HasIsolatedVertex,
    Disconnected,
    InducedCycle,
    PathP5,
    Other,
};

const char* to_string(FiveSetKind kind);

struct PathClassification {
    FiveSetKind kind = FiveSetKind::Other;
    // Only filled for PathP5: b_1 < b_2 by label, internal vertices in path
    // order starting next to b_1.
    std::array<Vertex, 2> endpoints{};
    std::array<Vertex, 3> internal{};
};

/// Number of in-set neighbours of v. Throws InvalidArgument if v is not a member.
int induced_degree(const VertexSet& set, Vertex v);

/// Least-labelled member with induced degree >= 3, leaves its three
/// least-labelled in-set neighbours.
std::optional<Claw> find_claw(const VertexSet& set);

/// An induced C_k on k members, started at its least label and oriented
/// towards the smaller of that vertex's two cycle neighbours. Requires k even
/// and 4 <= k <= |set|.
std::optional<InducedCycle> find_induced_cycle(const VertexSet& set, int k);

/// find_claw, falling back to an induced 8-cycle.
std::optional<Witness> find_theorem_witness(const VertexSet& set);

/// Structural classification of the subgraph induced by exactly five vertices.
PathClassification classify_five_set(const VertexSet& set);

/// Independent validator: true iff w is a genuine induced claw or induced even
/// cycle on members of `set`.
bool check_witness(const Witness& w, const VertexSet& set);

}  // namespace clawcycle
