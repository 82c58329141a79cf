#include <random>

#include "clawcycle/errors.hpp"
#include "clawcycle/report.hpp"
#include "clawcycle/textio.hpp"
#include "clawcycle/verify.hpp"
#include "doctest.h"
#include "enumerate.hpp"
#include "oracle.hpp"

using namespace clawcycle;

namespace {

const VerificationReport& named(const std::vector<VerificationReport>& rs, const std::string& name) {
    for (const auto& r : rs)
        if (r.check_name == name) return r;
    FAIL("no report named " << name);
    return rs.front();
}

// Structure-free test used by the extremal oracle: maximum degree <= 2 and
// no k-subset inducing C_k.
bool structure_free(std::uint64_t mask, int n, int k) {
    const auto members = oracle::mask_members(mask);
    for (auto v : members) {
        int d = 0;
        for (auto u : members) d += oracle::edge(u, v) ? 1 : 0;
        if (d >= 3) return false;
    }
    return !oracle::has_induced_cycle(members, k);
}

}  // namespace

TEST_CASE("enumeration helpers") {
    using namespace clawcycle::detail;
    for (int n = 0; n <= 20; ++n)
        for (int k = 0; k <= n; ++k) CHECK(binomial(n, k) == oracle::binomial(n, k));
    CHECK(binomial(16, 9) == 11440);

    // Unranking and Gosper's successor walk the same increasing mask order.
    for (int k = 1; k <= 6; ++k) {
        std::uint64_t mask = unrank_subset(0, 10, k);
        CHECK(mask == (std::uint64_t{1} << k) - 1);
        std::uint64_t prev = 0;
        for (std::uint64_t r = 0; r < binomial(10, k); ++r) {
            CHECK(unrank_subset(r, 10, k) == mask);
            CHECK(std::popcount(mask) == k);
            CHECK(mask > prev);
            prev = mask;
            mask = next_subset(mask);
        }
        CHECK(prev == ((std::uint64_t{1} << k) - 1) << (10 - k));
    }
    const std::vector<std::uint8_t> a{1, 1, 0}, b{2, 3, 0}, c{1, 0, 1};
    CHECK(pass_fail_digest(a) == pass_fail_digest(b));
    CHECK(pass_fail_digest(a) != pass_fail_digest(c));
}

TEST_CASE("range partitioning covers every index exactly once") {
    for (int workers : {1, 2, 3, 7, 16}) {
        for (std::uint64_t count : {0u, 1u, 5u, 100u}) {
            auto out = detail::run_indexed(count, workers, [](std::uint64_t i) -> std::uint8_t { return static_cast<std::uint8_t>(i % 251 + 1); });
            REQUIRE(out.size() == count);
            for (std::uint64_t i = 0; i < count; ++i) CHECK(out[i] == i % 251 + 1);
        }
    }
}

TEST_CASE("random_subset is seeded and exact") {
    std::mt19937_64 a(42), b(42);
    const auto s1 = random_subset(CubeDim(6), 33, a);
    const auto s2 = random_subset(CubeDim(6), 33, b);
    CHECK(s1 == s2);
    CHECK(s1.size() == 33);
    CHECK_THROWS_AS(random_subset(CubeDim(3), 9, a), InvalidArgument);
}

TEST_CASE("verify_theorem_exhaustive") {
    const auto full = verify_theorem_exhaustive(4, 16);
    CHECK(full.universe_size == 1);
    CHECK(full.passed == 1);

    const auto ten = verify_theorem_exhaustive(4, 10);
    CHECK(ten.universe_size == oracle::binomial(16, 10));
    CHECK(ten.universe_size == 8008);
    CHECK(ten.failed == 0);
    CHECK(ten.counterexamples.empty());

    CHECK_THROWS_AS(verify_theorem_exhaustive(5, 17), InvalidArgument);
    CHECK_THROWS_AS(verify_theorem_exhaustive(4, 8), InvalidArgument);
}

TEST_CASE("symmetry-reduced runs account for every subset") {
    for (int size = 9; size <= 16; ++size) {
        const auto raw = verify_theorem_exhaustive(4, size);
        const auto reduced = verify_theorem_exhaustive(4, size, 2, true);
        CHECK(reduced.failed == 0);
        CHECK(reduced.counters.at("orbit_total") == raw.universe_size);
        CHECK(reduced.universe_size < raw.universe_size + 1);
    }
}

TEST_CASE("verify_proposition_exhaustive") {
    const auto r = verify_proposition_exhaustive();
    CHECK(r.universe_size == oracle::binomial(8, 6));
    CHECK(r.passed == 28);
    CHECK(r.failed == 0);
    // Golden split from `clawcycle verify-proposition --format json`: the
    // cycle-only subsets are the complements of the four antipodal pairs.
    CHECK(r.counters.at("claw_only") == 24);
    CHECK(r.counters.at("cycle_only") == 4);
    CHECK(r.counters.at("both") == 0);

    const auto c6 = VertexSet::from_labels(CubeDim(3), {1, 2, 3, 4, 5, 6});
    CHECK_FALSE(find_claw(c6));
    CHECK(find_induced_cycle(c6, 6));
    // Q_3 minus {000, 100}: vertex 011 (label 6) keeps 010, 001 and 111.
    const auto q = VertexSet::full(CubeDim(3)).without(Vertex{0}).without(Vertex{1});
    const auto claw = find_claw(q);
    REQUIRE(claw);
    CHECK(induced_degree(q, Vertex{6}) == 3);
}

TEST_CASE("case claims") {
    const auto rs = verify_case_claims(0);
    CHECK(rs.size() == 10);

    const auto& c1 = named(rs, "case1/all-first-side-vertices-are-centers");
    CHECK(c1.universe_size == 8);
    CHECK(c1.failed == 0);

    const auto& c2 = named(rs, "case2/cross-edge-degrees");
    CHECK(c2.universe_size == oracle::binomial(8, 7) * oracle::binomial(8, 2));
    CHECK(c2.failed == 0);
    CHECK(named(rs, "case2/subcube-only-degrees").failed == 0);

    const auto& c3 = named(rs, "case3/cross-edge-degrees");
    CHECK(c3.universe_size == 1568);
    CHECK(c3.failed == 0);
    const auto& c3s = named(rs, "case3/subcube-only-degrees");
    CHECK(c3s.informational);
    CHECK(c3s.universe_size == 1568);
    // Four 6-cycle choices of V'_1 times all 56 choices of V'_2.
    CHECK(c3s.failed == 4 * 56);
    CHECK(c3s.counters.at("failing_first_sides") == 4);
    CHECK(c3s.counters.at("failing_first_sides_inducing_c6") == 4);
    CHECK(c3s.counterexamples.size() == kMaxCounterexamples);

    const auto& shapes = named(rs, "case4/low-degree-five-sets-are-paths");
    CHECK(shapes.universe_size == 56);
    CHECK(shapes.failed == 0);
    CHECK(shapes.counters.at("path-p5") == 24);
    CHECK(shapes.counters.at("has-degree-3-vertex") == 32);

    const auto& adm = named(rs, "case4/five-admissible-second-sides");
    CHECK(adm.universe_size == 24);
    CHECK(adm.failed == 0);

    const auto& res = named(rs, "case4/claw-in-second-side-or-cycle-after-deletion");
    CHECK(res.universe_size == 24 * 5);
    CHECK(res.failed == 0);
    CHECK(res.counters.at("claw_in_second_side") == 96);
    CHECK(res.counters.at("cycle_after_deletion") == 24);

    CHECK(named(rs, "case4/internal-vertex-with-cross-neighbour-is-center").failed == 0);
    CHECK(named(rs, "case4/internal-vertex-with-cross-neighbour-is-center").universe_size ==
          24 * (oracle::binomial(8, 4) - 5));

    const auto& split = named(rs, "case4/four-claws-one-cycle-split");
    CHECK(split.informational);
    CHECK(split.counters.at("split_4_claws_1_cycles") == 24);

    CHECK(verify_case_claims(3).size() == 2);
    CHECK_THROWS_AS(verify_case_claims(5), InvalidArgument);
}

TEST_CASE("case four outcomes are sound for every P5 placement") {
    int paths = 0;
    for (std::uint64_t mask = 0; mask < 256; ++mask) {
        if (std::popcount(mask) != 5) continue;
        const auto first = VertexSet::from_mask(CubeDim(3), mask);
        if (classify_five_set(first).kind != FiveSetKind::PathP5) {
            CHECK_THROWS_AS(case_four_outcome(first), InvalidArgument);
            continue;
        }
        ++paths;
        const auto o = case_four_outcome(first);
        CHECK(o.admissible_v2_choices.size() == 5);
        for (const auto& c : o.per_choice) {
            const auto whole = o.first_side.united(c.second_side);
            REQUIRE(whole.size() == 9);
            for (auto a : o.p5.internal)
                for (auto v : c.second_side.members()) CHECK_FALSE(oracle::edge(a.label, v.label));
            if (c.kind == CaseFourKind::ClawInV2) {
                CHECK(c.second_side.contains(c.center));
                CHECK(induced_degree(whole, c.center) >= 3);
            } else {
                REQUIRE(c.kind == CaseFourKind::CycleAfterDeletion);
                REQUIRE(c.cycle);
                CHECK(c.cycle->cycle.size() == 8);
                CHECK(whole.contains(c.z));
                CHECK(std::find(c.cycle->cycle.begin(), c.cycle->cycle.end(), c.z) == c.cycle->cycle.end());
                CHECK(check_witness(*c.cycle, whole.without(c.z)));
                CHECK(check_witness(*c.cycle, whole));
            }
        }
    }
    CHECK(paths == 24);
}

TEST_CASE("extremal search matches exhaustive enumeration for n = 3, 4") {
    for (auto [n, k] : {std::pair{3, 6}, std::pair{4, 8}, std::pair{3, 8}, std::pair{2, 8}}) {
        std::size_t best = 0;
        std::uint64_t best_mask = 0;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (1u << n)); ++mask) {
            const auto size = static_cast<std::size_t>(std::popcount(mask));
            if (size > best && structure_free(mask, n, k)) {
                best = size;
                best_mask = mask;
            }
        }
        const auto res = extremal_search(n, k);
        CHECK(res.max_size == best);
        CHECK(res.certificate.low_word() == best_mask);
        CHECK(res.nodes_explored > 0);
    }
    CHECK(extremal_search(3, 6).max_size == 5);
    CHECK(extremal_search(4, 8).max_size == 8);
    CHECK(classify_five_set(extremal_search(3, 6).certificate).kind == FiveSetKind::PathP5);

    CHECK_THROWS_AS(extremal_search(6, 8), InvalidArgument);
    CHECK_THROWS_AS(extremal_search(4, 6), InvalidArgument);
}

TEST_CASE("random agreement and monotonicity harnesses") {
    const auto r = random_agreement_test(4, 200, 42);
    CHECK(r.universe_size == 200);
    CHECK(r.failed == 0);
    CHECK_THROWS_AS(random_agreement_test(3, 10, 1), InvalidArgument);
    CHECK_THROWS_AS(random_agreement_test(13, 10, 1), InvalidArgument);

    const auto m = verify_monotonicity(1000, 9);
    CHECK(m.universe_size == 1000);
    CHECK(m.failed == 0);
}

TEST_CASE("digests do not depend on the worker count") {
    for (int workers : {2, 4, 8}) {
        CHECK(verify_theorem_exhaustive(4, 11, workers).deterministic_digest ==
              verify_theorem_exhaustive(4, 11, 1).deterministic_digest);
        CHECK(random_agreement_test(6, 50, 3, workers).deterministic_digest ==
              random_agreement_test(6, 50, 3, 1).deterministic_digest);
    }
}

TEST_CASE("counterexample reporting keeps the first failures in order") {
    // First failing configuration in enumeration order: V'_1 = 7E (the first
    // 6-cycle in mask order) with V'_2 = {000, 100, 010}; spread over Q_4 that
    // is labels 2,4,6,8,10,12 and 1,3,5 = 0x157E.
    const auto rs = verify_case_claims(3);
    const auto& sub = named(rs, "case3/subcube-only-degrees");
    REQUIRE_FALSE(sub.counterexamples.empty());
    CHECK(sub.counterexamples.front() == "157E");
    CHECK(sub.passed + sub.failed == sub.universe_size);
}

TEST_CASE("report serialization") {
    const auto r = verify_proposition_exhaustive();
    const auto j = to_json(r);
    CHECK(j["universe_size"] == 28);
    CHECK(j["failed"] == 0);
    CHECK(j["deterministic_digest"].get<std::string>().size() == 16);
    const std::vector<VerificationReport> rs{r};
    const auto doc = report_document(rs);
    CHECK(doc["header"]["generator"] == kGeneratorName);
    CHECK(doc["reports"].size() == 1);
}
