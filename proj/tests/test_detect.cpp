#include <random>

#include "clawcycle/detect.hpp"
#include "clawcycle/errors.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace clawcycle;

namespace {

std::vector<std::uint32_t> labels(const std::vector<Vertex>& vs) {
    std::vector<std::uint32_t> out;
    for (auto v : vs) out.push_back(v.label);
    return out;
}

std::vector<std::uint32_t> members(const VertexSet& s) { return labels(s.members()); }

const VertexSet kC6 = VertexSet::from_labels(CubeDim(3), {1, 2, 3, 4, 5, 6});

VertexSet even_half(int n) {
    VertexSet s{CubeDim(n)};
    for (std::uint32_t v = 0; v < (1u << n); ++v)
        if (std::popcount(v) % 2 == 0) s.insert(Vertex{v});
    return s;
}

}  // namespace

TEST_CASE("induced degree") {
    CHECK(induced_degree(VertexSet::full(CubeDim(3)), Vertex{0}) == 3);
    CHECK(induced_degree(VertexSet::from_labels(CubeDim(3), {0}), Vertex{0}) == 0);
    CHECK(induced_degree(kC6, Vertex{1}) == 2);
    CHECK_THROWS_AS(induced_degree(kC6, Vertex{0}), InvalidArgument);
}

TEST_CASE("find_claw") {
    const auto claw = find_claw(VertexSet::full(CubeDim(3)));
    REQUIRE(claw);
    CHECK(claw->center.label == 0);
    CHECK(labels({claw->leaves.begin(), claw->leaves.end()}) == std::vector<std::uint32_t>{1, 2, 4});
    CHECK_FALSE(find_claw(kC6));
    CHECK_FALSE(find_claw(VertexSet(CubeDim(4))));

    // Centre with four in-set neighbours still reports its three smallest.
    const auto big = find_claw(VertexSet::full(CubeDim(4)).without(Vertex{0}));
    REQUIRE(big);
    CHECK(big->center.label == 1);
    CHECK(labels({big->leaves.begin(), big->leaves.end()}) == std::vector<std::uint32_t>{3, 5, 9});
}

TEST_CASE("find_induced_cycle") {
    // Q_3 minus an antipodal pair is a 6-cycle: 1-3-2-6-4-5.
    const auto c6 = find_induced_cycle(kC6, 6);
    REQUIRE(c6);
    CHECK(labels(c6->cycle) == std::vector<std::uint32_t>{1, 3, 2, 6, 4, 5});
    CHECK(oracle::is_ordered_induced_cycle(labels(c6->cycle)));

    CHECK_FALSE(find_induced_cycle(even_half(4), 8));

    const auto c8 = find_induced_cycle(VertexSet::full(CubeDim(4)), 8);
    REQUIRE(c8);
    CHECK(c8->cycle.size() == 8);
    CHECK(oracle::is_ordered_induced_cycle(labels(c8->cycle)));

    CHECK_THROWS_AS(find_induced_cycle(kC6, 5), InvalidArgument);
    CHECK_THROWS_AS(find_induced_cycle(kC6, 2), InvalidArgument);
    CHECK_THROWS_AS(find_induced_cycle(kC6, 8), InvalidArgument);
}

TEST_CASE("find_theorem_witness") {
    // V_1 (coordinate 1 = 0, the even labels) plus vertex 1000 (label 1).
    auto case1 = embed(VertexSet::full(CubeDim(3)), 1, 0);
    case1.insert(Vertex{1});
    const auto w = find_theorem_witness(case1);
    REQUIRE(w);
    CHECK(std::holds_alternative<Claw>(*w));
    CHECK(check_witness(*w, case1));

    CHECK_FALSE(find_theorem_witness(even_half(4)));
    CHECK_FALSE(find_theorem_witness(VertexSet(CubeDim(4))));
}

TEST_CASE("classify_five_set examples") {
    const CubeDim q3(3);
    // {000, 001, 011, 010, 110}: vertex 2 sees 0, 3 and 6.
    const auto mixed = VertexSet::from_labels(q3, {0, 1, 3, 2, 6});
    CHECK(classify_five_set(mixed).kind == FiveSetKind::HasDegree3Vertex);
    CHECK(oracle::five_set_shape(members(mixed)) == oracle::Shape::Degree3);

    CHECK(classify_five_set(VertexSet::from_labels(CubeDim(4), {0, 3, 5, 6, 9})).kind == FiveSetKind::HasIsolatedVertex);
    CHECK(classify_five_set(VertexSet::from_labels(q3, {0, 1, 2, 4, 7})).kind == FiveSetKind::HasDegree3Vertex);

    const auto p5 = classify_five_set(VertexSet::from_labels(q3, {1, 3, 2, 6, 4}));
    REQUIRE(p5.kind == FiveSetKind::PathP5);
    CHECK(p5.endpoints[0].label == 1);
    CHECK(p5.endpoints[1].label == 4);
    CHECK(labels({p5.internal.begin(), p5.internal.end()}) == std::vector<std::uint32_t>{3, 2, 6});

    CHECK_THROWS_AS(classify_five_set(kC6), InvalidArgument);
}

TEST_CASE("classify_five_set agrees with brute force on every five-subset of Q_3 and Q_4") {
    for (int n : {3, 4}) {
        const CubeDim dim(n);
        std::vector<std::uint32_t> all(dim.order());
        for (std::uint32_t v = 0; v < dim.order(); ++v) all[v] = v;
        std::size_t count = 0;
        oracle::for_each_k_subset(all, 5, [&](const std::vector<std::uint32_t>& five) {
            ++count;
            const auto set = VertexSet::from_labels(dim, five);
            const auto got = classify_five_set(set);
            const auto want = oracle::five_set_shape(five);
            const FiveSetKind expected[] = {FiveSetKind::HasDegree3Vertex, FiveSetKind::HasIsolatedVertex,
                                            FiveSetKind::Disconnected,     FiveSetKind::InducedCycle,
                                            FiveSetKind::PathP5,           FiveSetKind::Other};
            CHECK(got.kind == expected[static_cast<int>(want)]);
            if (got.kind == FiveSetKind::PathP5) {
                const std::vector<std::uint32_t> path{got.endpoints[0].label, got.internal[0].label,
                                                      got.internal[1].label, got.internal[2].label,
                                                      got.endpoints[1].label};
                CHECK(got.endpoints[0] < got.endpoints[1]);
                for (std::size_t i = 0; i + 1 < 5; ++i) CHECK(oracle::edge(path[i], path[i + 1]));
                for (auto a : got.internal) CHECK(induced_degree(set, a) == 2);
                for (auto b : got.endpoints) CHECK(induced_degree(set, b) == 1);
            }
        });
        CHECK(count == oracle::binomial(1 << n, 5));
    }
}

TEST_CASE("check_witness") {
    const auto q3 = VertexSet::full(CubeDim(3));
    const Claw claw{Vertex{0}, {Vertex{1}, Vertex{2}, Vertex{4}}};
    CHECK(check_witness(claw, q3));
    CHECK_FALSE(check_witness(claw, VertexSet::from_labels(CubeDim(3), {0, 1})));
    CHECK_FALSE(check_witness(Claw{Vertex{0}, {Vertex{1}, Vertex{1}, Vertex{2}}}, q3));
    CHECK_FALSE(check_witness(Claw{Vertex{0}, {Vertex{1}, Vertex{3}, Vertex{4}}}, q3));  // leaf 3 not adjacent to 0
    CHECK_FALSE(check_witness(Claw{Vertex{0}, {Vertex{1}, Vertex{2}, Vertex{9}}}, q3));  // out of range

    const InducedCycle c6{{Vertex{1}, Vertex{3}, Vertex{2}, Vertex{6}, Vertex{4}, Vertex{5}}};
    CHECK(check_witness(c6, kC6));
    CHECK(check_witness(c6, q3));  // inducedness is a property of the six vertices
    CHECK_FALSE(check_witness(InducedCycle{{Vertex{1}, Vertex{2}, Vertex{3}, Vertex{6}, Vertex{4}, Vertex{5}}}, kC6));
    CHECK_FALSE(check_witness(InducedCycle{{Vertex{0}, Vertex{1}, Vertex{3}, Vertex{2}}},
                              VertexSet::from_labels(CubeDim(3), {0, 1, 3})));
    // A 4-cycle face of Q_3 is induced; a chordal cycle is not.
    CHECK(check_witness(InducedCycle{{Vertex{0}, Vertex{1}, Vertex{3}, Vertex{2}}}, q3));
    CHECK_FALSE(check_witness(InducedCycle{{Vertex{0}, Vertex{1}}}, q3));
}

TEST_CASE("property: claw criterion matches naive 4-subset search") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 2 + trial % 4;
        const double keep = 0.2 + 0.1 * (trial % 5);
        const auto picked = oracle::random_labels(rng, 1u << n, keep);
        const auto set = VertexSet::from_labels(CubeDim(n), picked);
        const auto claw = find_claw(set);
        CHECK(claw.has_value() == oracle::has_claw(picked));
        if (claw) CHECK(check_witness(*claw, set));
    }
}

TEST_CASE("property: induced cycle search matches naive enumeration") {
    std::mt19937_64 rng(91);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 3 + trial % 2;
        const auto picked = oracle::random_labels(rng, 1u << n, 0.35 + 0.05 * (trial % 8));
        const auto set = VertexSet::from_labels(CubeDim(n), picked);
        for (int k : {4, 6, 8}) {
            if (static_cast<std::size_t>(k) > picked.size()) continue;
            const auto cycle = find_induced_cycle(set, k);
            CHECK(cycle.has_value() == oracle::has_induced_cycle(picked, k));
            if (!cycle) continue;
            const auto cyc = labels(cycle->cycle);
            CHECK(cyc.size() == static_cast<std::size_t>(k));
            CHECK(oracle::is_ordered_induced_cycle(cyc));
            CHECK(check_witness(*cycle, set));
            CHECK(*std::min_element(cyc.begin(), cyc.end()) == cyc.front());
            CHECK(cyc[1] < cyc.back());
            // Parity alternates around the cycle.
            for (std::size_t i = 0; i < cyc.size(); ++i)
                CHECK(std::popcount(cyc[i]) % 2 != std::popcount(cyc[(i + 1) % cyc.size()]) % 2);
            CHECK(find_induced_cycle(set, k) == cycle);
        }
    }
}

TEST_CASE("property: witnesses survive adding vertices") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 4 + trial % 2;
        const auto base = oracle::random_labels(rng, 1u << n, 0.55);
        const auto small = VertexSet::from_labels(CubeDim(n), base);
        auto large = small;
        for (auto extra : oracle::random_labels(rng, 1u << n, 0.3)) large.insert(Vertex{extra});
        const auto w = find_theorem_witness(small);
        if (!w) continue;
        CHECK(check_witness(*w, small));
        CHECK(check_witness(*w, large));
        CHECK(find_theorem_witness(small) == w);
    }
}
