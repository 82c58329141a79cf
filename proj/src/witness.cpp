#include "clawcycle/witness.hpp"

#include <algorithm>
#include <string>

#include "clawcycle/errors.hpp"
#include "clawcycle/textio.hpp"

namespace clawcycle {

namespace {

Claw claw_at(const VertexSet& set, std::uint32_t center) {
    std::vector<std::uint32_t> nbrs;
    for (int b = 0; b < set.dim().value(); ++b) {
        const std::uint32_t u = center ^ (std::uint32_t{1} << b);
        if (set.test(u)) {
            nbrs.push_back(u);
        }
    }
    std::sort(nbrs.begin(), nbrs.end());
    return Claw{Vertex{center}, {Vertex{nbrs[0]}, Vertex{nbrs[1]}, Vertex{nbrs[2]}}};
}

int degree_in(const VertexSet& set, std::uint32_t label) {
    int d = 0;
    for (int b = 0; b < set.dim().value(); ++b) {
        d += set.test(label ^ (std::uint32_t{1} << b)) ? 1 : 0;
    }
    return d;
}

Witness lift(const Witness& w, int coord, int bit) {
    auto up = [&](Vertex v) { return embed_vertex(v, coord, bit); };
    if (const auto* claw = std::get_if<Claw>(&w)) {
        return Claw{up(claw->center), {up(claw->leaves[0]), up(claw->leaves[1]), up(claw->leaves[2])}};
    }
    InducedCycle out;
    for (auto v : std::get<InducedCycle>(w).cycle) {
        out.cycle.push_back(up(v));
    }
    return out;
}

void require_q4(const VertexSet& set) {
    if (set.dim().value() != 4) {
        throw InvalidDimension("base case solver needs n = 4, got n = " +
                               std::to_string(set.dim().value()));
    }
}

}  // namespace

std::size_t theorem_bound(int n) { return (std::size_t{1} << (n - 1)) + 1; }

Witness base_case_solve(const VertexSet& set) {
    require_q4(set);
    if (set.size() < theorem_bound(4)) {
        throw InsufficientCardinality(set.size(), theorem_bound(4));
    }
    if (auto w = find_theorem_witness(set)) {
        return *w;
    }
    throw TheoremViolation(format_set_hex(set));
}

InductiveResult find_witness_inductive(const VertexSet& set) {
    const int n0 = set.dim().value();
    if (n0 < 4) {
        throw InvalidDimension("inductive extraction needs n >= 4, got n = " + std::to_string(n0));
    }
    if (set.size() < theorem_bound(n0)) {
        throw InsufficientCardinality(set.size(), theorem_bound(n0));
    }

    ExtractionTrace trace;
    VertexSet current = set;
    while (current.dim().value() > 4) {
        const int n = current.dim().value();
        auto [side0, side1] = split(current, 1);
        const int chosen = side1.size() > side0.size() ? 1 : 0;
        trace.steps.push_back({n, 1, chosen, {side0.size(), side1.size()}});
        current = chosen == 0 ? std::move(side0) : std::move(side1);
        if (current.size() < theorem_bound(n - 1)) {
            // Pigeonhole makes this unreachable.
            throw TheoremViolation(format_set_hex(set));
        }
    }
    trace.base = "brute force";

    Witness w = base_case_solve(current);
    for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
        w = lift(w, it->split_coord, it->chosen_side);
    }
    return {std::move(w), std::move(trace)};
}

StructuredResult base_case_solve_structured(const VertexSet& set) {
    require_q4(set);
    if (set.size() != 9) {
        throw InvalidArgument("structured base case needs exactly 9 vertices, got " +
                              std::to_string(set.size()));
    }
    auto [side0, side1] = split(set, 1);
    // V'_1 is the larger side; `first_bit` is its value of coordinate 1.
    int first_bit = 0;
    if (side1.size() > side0.size()) {
        std::swap(side0, side1);
        first_bit = 1;
    }
    const VertexSet& first = side0;
    const VertexSet& second = side1;
    // (8,1) -> 1, (7,2) -> 2, (6,3) -> 3, (5,4) -> 4.
    const int case_id = 9 - static_cast<int>(first.size());

    auto full = [&](Vertex v, int bit) { return embed_vertex(v, 1, bit).label; };

    if (case_id <= 3) {
        for (auto v : first.members()) {
            const auto label = full(v, first_bit);
            if (degree_in(set, label) >= 3) {
                return {claw_at(set, label), case_id};
            }
        }
        throw TheoremViolation(format_set_hex(set));
    }

    // Case 4: |V'_1| = 5, |V'_2| = 4.
    if (auto c = find_claw(first)) {
        return {lift(*c, 1, first_bit), 4};
    }
    const auto shape = classify_five_set(first);
    if (shape.kind != FiveSetKind::PathP5) {
        throw TheoremViolation(format_set_hex(set));
    }
    for (auto a : shape.internal) {
        const auto label = full(a, first_bit);
        if (degree_in(set, label) >= 3) {
            return {claw_at(set, label), 4};
        }
    }
    for (auto v : second.members()) {
        const auto label = full(v, 1 - first_bit);
        if (degree_in(set, label) >= 3) {
            return {claw_at(set, label), 4};
        }
    }
    for (auto z : set.members()) {
        if (auto cycle = find_induced_cycle(set.without(z), 8)) {
            return {Witness{std::move(*cycle)}, 4};
        }
    }
    throw TheoremViolation(format_set_hex(set));
}

}  // namespace clawcycle
