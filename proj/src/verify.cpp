#include "clawcycle/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <numeric>
#include <string>

#include "clawcycle/errors.hpp"
#include "clawcycle/textio.hpp"
#include "clawcycle/witness.hpp"
#include "enumerate.hpp"

namespace clawcycle {

namespace {

using Clock = std::chrono::steady_clock;
using detail::binomial;
using detail::next_subset;
using detail::run_indexed;
using detail::run_ranges;
using detail::unrank_subset;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

int mask_degree(std::uint64_t mask, std::uint32_t label, int n) {
    int d = 0;
    for (int b = 0; b < n; ++b) {
        d += static_cast<int>((mask >> (label ^ (1u << b))) & 1u);
    }
    return d;
}

// Q_4 mask whose coordinate-1 = 0 side is `first` and coordinate-1 = 1 side
// is `second`, both given as Q_3 masks.
std::uint64_t join_sides(std::uint64_t first, std::uint64_t second) {
    std::uint64_t out = 0;
    for (std::uint32_t x = 0; x < 8; ++x) {
        out |= ((first >> x) & 1u) << (2 * x);
        out |= ((second >> x) & 1u) << (2 * x + 1);
    }
    return out;
}

template <typename Describe>
void tally(VerificationReport& r, const std::vector<std::uint8_t>& outcomes, Describe&& describe) {
    r.universe_size = outcomes.size();
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        if (outcomes[i] != 0) {
            ++r.passed;
        } else {
            ++r.failed;
            if (r.counterexamples.size() < kMaxCounterexamples) {
                r.counterexamples.push_back(describe(i));
            }
        }
    }
    r.deterministic_digest = detail::pass_fail_digest(outcomes);
}

VerificationReport start_report(std::string name, int workers) {
    VerificationReport r;
    r.check_name = std::move(name);
    r.worker_count = std::max(1, workers);
    return r;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    // Reject the low (2^64 mod bound) values so every residue is equally likely.
    const std::uint64_t threshold = (~bound + 1) % bound;
    std::uint64_t r = 0;
    do {
        r = rng();
    } while (r < threshold);
    return r % bound;
}

void shuffle_labels(std::vector<std::uint32_t>& labels, std::mt19937_64& rng) {
    for (std::size_t i = labels.size(); i > 1; --i) {
        const auto j = static_cast<std::size_t>(uniform_below(rng, i));
        std::swap(labels[i - 1], labels[j]);
    }
}

std::string q4_hex(std::uint64_t mask) { return format_set_hex(VertexSet::from_mask(CubeDim(4), mask)); }

// Case 2/3 configurations: |V'_1| = s1 inside V_1 and |V'_2| = s2 inside V_2.
std::vector<VerificationReport> check_split_case(int case_id, int s1, int s2, int workers) {
    const std::uint64_t inner = binomial(8, s2);
    const std::uint64_t count = binomial(8, s1) * inner;
    auto config = [&](std::uint64_t idx) {
        return std::pair{unrank_subset(idx / inner, 8, s1), unrank_subset(idx % inner, 8, s2)};
    };
    const std::string prefix = "case" + std::to_string(case_id);

    auto cross = start_report(prefix + "/cross-edge-degrees", workers);
    auto subcube = start_report(prefix + "/subcube-only-degrees", workers);
    subcube.informational = true;

    auto t0 = Clock::now();
    auto cross_out = run_indexed(count, workers, [&](std::uint64_t idx) -> std::uint8_t {
        const auto [first, second] = config(idx);
        const std::uint64_t all = join_sides(first, second);
        for (std::uint32_t x = 0; x < 8; ++x) {
            if (((first >> x) & 1u) && mask_degree(all, 2 * x, 4) >= 3) return 1;
        }
        return 0;
    });
    tally(cross, cross_out, [&](std::size_t i) {
        const auto [f, s] = config(i);
        return q4_hex(join_sides(f, s));
    });
    cross.wall_time = seconds_since(t0);

    t0 = Clock::now();
    auto sub_out = run_indexed(count, workers, [&](std::uint64_t idx) -> std::uint8_t {
        const auto first = config(idx).first;
        for (std::uint32_t x = 0; x < 8; ++x) {
            if (((first >> x) & 1u) && mask_degree(first, x, 3) >= 3) return 1;
        }
        return 0;
    });
    tally(subcube, sub_out, [&](std::size_t i) {
        const auto [f, s] = config(i);
        return q4_hex(join_sides(f, s));
    });
    subcube.wall_time = seconds_since(t0);

    // Which V'_1 choices defeat the subcube-only reading, and are they 6-cycles?
    std::uint64_t failing_first = 0;
    std::uint64_t failing_first_c6 = 0;
    for (std::uint64_t r = 0; r < binomial(8, s1); ++r) {
        if (sub_out[r * inner] != 0) continue;
        ++failing_first;
        const auto first = VertexSet::from_mask(CubeDim(3), unrank_subset(r, 8, s1));
        if (s1 == 6 && find_induced_cycle(first, 6)) {
            ++failing_first_c6;
            subcube.findings.push_back("V'_1 = " + format_set_hex(first) + " induces a 6-cycle");
        }
    }
    subcube.counters["failing_first_sides"] = failing_first;
    subcube.counters["failing_first_sides_inducing_c6"] = failing_first_c6;
    subcube.findings.push_back(subcube.failed == 0
                                   ? "subcube-only degrees suffice"
                                   : "subcube-only degrees do not suffice; cross edges are required");
    return {std::move(cross), std::move(subcube)};
}

std::vector<VerificationReport> check_case_one(int workers) {
    auto r = start_report("case1/all-first-side-vertices-are-centers", workers);
    const auto t0 = Clock::now();
    auto out = run_indexed(8, workers, [](std::uint64_t i) -> std::uint8_t {
        const std::uint64_t all = join_sides(0xFF, std::uint64_t{1} << i);
        for (std::uint32_t x = 0; x < 8; ++x) {
            if (mask_degree(all, 2 * x, 4) < 3) return 0;
        }
        return 1;
    });
    tally(r, out, [](std::size_t i) { return q4_hex(join_sides(0xFF, std::uint64_t{1} << i)); });
    r.wall_time = seconds_since(t0);
    return {std::move(r)};
}

std::vector<VerificationReport> check_case_four(int workers) {
    std::vector<VerificationReport> reports;
    const CubeDim q3(3);

    // (i) five-subsets of the subcube with max degree <= 2 are induced P5s.
    auto shapes = start_report("case4/low-degree-five-sets-are-paths", workers);
    auto t0 = Clock::now();
    const std::uint64_t fives = binomial(8, 5);
    std::vector<PathClassification> kinds(fives);
    auto out = run_indexed(fives, workers, [&](std::uint64_t i) -> std::uint8_t {
        kinds[i] = classify_five_set(VertexSet::from_mask(q3, unrank_subset(i, 8, 5)));
        return kinds[i].kind == FiveSetKind::HasDegree3Vertex || kinds[i].kind == FiveSetKind::PathP5;
    });
    tally(shapes, out, [](std::size_t i) { return format_set_hex(VertexSet::from_mask(CubeDim(3), unrank_subset(i, 8, 5))); });
    std::vector<std::uint64_t> paths;
    for (std::uint64_t i = 0; i < fives; ++i) {
        ++shapes.counters[to_string(kinds[i].kind)];
        if (kinds[i].kind == FiveSetKind::PathP5) paths.push_back(unrank_subset(i, 8, 5));
    }
    shapes.wall_time = seconds_since(t0);
    reports.push_back(std::move(shapes));

    // (ii) exactly five admissible V'_2 per path, and (iii) each resolves.
    t0 = Clock::now();
    std::vector<CaseFourOutcome> outcomes(paths.size());
    run_indexed(paths.size(), workers, [&](std::uint64_t i) -> std::uint8_t {
        outcomes[i] = case_four_outcome(VertexSet::from_mask(q3, paths[i]));
        return 1;
    });

    auto admissible = start_report("case4/five-admissible-second-sides", workers);
    auto admissible_out = std::vector<std::uint8_t>(paths.size());
    for (std::size_t i = 0; i < paths.size(); ++i) {
        admissible_out[i] = outcomes[i].admissible_v2_choices.size() == 5;
    }
    tally(admissible, admissible_out, [&](std::size_t i) { return format_set_hex(outcomes[i].first_side); });
    admissible.counters["paths"] = paths.size();
    admissible.wall_time = seconds_since(t0);

    auto resolved = start_report("case4/claw-in-second-side-or-cycle-after-deletion", workers);
    auto split = start_report("case4/four-claws-one-cycle-split", workers);
    split.informational = true;
    std::vector<std::uint8_t> resolved_out;
    std::vector<std::string> resolved_desc;
    std::vector<std::uint8_t> split_out;
    for (const auto& o : outcomes) {
        int claws = 0;
        int cycles = 0;
        for (const auto& c : o.per_choice) {
            resolved_out.push_back(c.kind != CaseFourKind::Unresolved);
            resolved_desc.push_back(format_set_hex(o.first_side.united(c.second_side)));
            claws += c.kind == CaseFourKind::ClawInV2;
            cycles += c.kind == CaseFourKind::CycleAfterDeletion;
        }
        split_out.push_back(claws == 4 && cycles == 1);
        ++split.counters["split_" + std::to_string(claws) + "_claws_" + std::to_string(cycles) + "_cycles"];
        split.findings.push_back("path " + format_set_hex(o.first_side) + ": " + std::to_string(claws) +
                                 " claw-center choices, " + std::to_string(cycles) + " cycle choices");
    }
    tally(resolved, resolved_out, [&](std::size_t i) { return resolved_desc[i]; });
    for (const auto& o : outcomes) {
        for (const auto& c : o.per_choice) {
            ++resolved.counters[c.kind == CaseFourKind::ClawInV2             ? "claw_in_second_side"
                                : c.kind == CaseFourKind::CycleAfterDeletion ? "cycle_after_deletion"
                                                                             : "unresolved"];
        }
    }
    resolved.wall_time = seconds_since(t0);
    tally(split, split_out, [&](std::size_t i) { return format_set_hex(outcomes[i].first_side); });
    split.wall_time = resolved.wall_time;

    // An internal path vertex with a neighbour across the split is itself a
    // claw-center, which is what lets the admissible choices avoid partners.
    auto assumption = start_report("case4/internal-vertex-with-cross-neighbour-is-center", workers);
    t0 = Clock::now();
    const std::uint64_t fours = binomial(8, 4);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> configs;
    for (std::size_t p = 0; p < paths.size(); ++p) {
        std::uint64_t internal = 0;
        for (auto a : outcomes[p].p5.internal) internal |= std::uint64_t{1} << (a.label >> 1);
        for (std::uint64_t j = 0; j < fours; ++j) {
            const std::uint64_t second = unrank_subset(j, 8, 4);
            if ((second & internal) != 0) configs.emplace_back(paths[p], second);
        }
    }
    auto assumption_out = run_indexed(configs.size(), workers, [&](std::uint64_t i) -> std::uint8_t {
        const auto [first, second] = configs[i];
        const std::uint64_t all = join_sides(first, second);
        const auto shape = classify_five_set(VertexSet::from_mask(CubeDim(3), first));
        for (auto a : shape.internal) {
            if (((second >> a.label) & 1u) && mask_degree(all, 2 * a.label, 4) >= 3) return 1;
        }
        return 0;
    });
    tally(assumption, assumption_out, [&](std::size_t i) { return q4_hex(join_sides(configs[i].first, configs[i].second)); });
    assumption.wall_time = seconds_since(t0);

    reports.push_back(std::move(admissible));
    reports.push_back(std::move(resolved));
    reports.push_back(std::move(assumption));
    reports.push_back(std::move(split));
    return reports;
}

// Branch and bound over labels in descending order, excluding before
// including, so the first maximum reached has the least mask.
class ExtremalSearch {
public:
    ExtremalSearch(int n, int k) : n_(n), k_(k), order_(1u << n) {}

    void run() { descend(static_cast<int>(order_) - 1, 0); }

    std::size_t best() const { return best_; }
    std::uint64_t best_mask() const { return best_mask_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    bool chosen(std::uint32_t v) const { return (chosen_ >> v) & 1u; }

    bool addable(std::uint32_t v) const {
        if (deg_[v] >= 3) return false;
        for (int b = 0; b < n_; ++b) {
            const std::uint32_t u = v ^ (1u << b);
            if (chosen(u) && deg_[u] >= 2) return false;
        }
        return true;
    }

    void toggle(std::uint32_t v, int delta) {
        chosen_ ^= std::uint64_t{1} << v;
        for (int b = 0; b < n_; ++b) deg_[v ^ (1u << b)] += delta;
    }

    // In a set of maximum degree 2, an induced cycle is a whole component.
    bool closes_forbidden_cycle(std::uint32_t v) const {
        if (deg_[v] != 2) return false;
        std::uint32_t prev = v;
        std::uint32_t cur = v;
        for (int b = 0; b < n_; ++b) {
            if (chosen(v ^ (1u << b))) {
                cur = v ^ (1u << b);
                break;
            }
        }
        int length = 1;
        while (cur != v) {
            if (deg_[cur] != 2) return false;
            ++length;
            std::uint32_t next = cur;
            for (int b = 0; b < n_; ++b) {
                const std::uint32_t u = cur ^ (1u << b);
                if (u != prev && chosen(u)) {
                    next = u;
                    break;
                }
            }
            prev = cur;
            cur = next;
        }
        return length == k_;
    }

    void descend(int v, std::size_t count) {
        ++nodes_;
        if (v < 0) {
            if (count > best_) {
                best_ = count;
                best_mask_ = chosen_;
            }
            return;
        }
        std::size_t optimistic = count;
        for (int u = 0; u <= v; ++u) {
            optimistic += addable(static_cast<std::uint32_t>(u)) ? 1 : 0;
        }
        if (optimistic <= best_) return;

        descend(v - 1, count);
        const auto label = static_cast<std::uint32_t>(v);
        if (addable(label)) {
            toggle(label, +1);
            if (!closes_forbidden_cycle(label)) descend(v - 1, count + 1);
            toggle(label, -1);
        }
    }

    int n_;
    int k_;
    std::uint32_t order_;
    std::uint64_t chosen_ = 0;
    std::array<int, 64> deg_{};
    std::size_t best_ = 0;
    std::uint64_t best_mask_ = 0;
    std::uint64_t nodes_ = 0;
};

}  // namespace

VertexSet random_subset(CubeDim dim, std::size_t size, std::mt19937_64& rng) {
    if (size > dim.order()) {
        throw InvalidArgument("subset size exceeds 2^n");
    }
    std::vector<std::uint32_t> labels(dim.order());
    std::iota(labels.begin(), labels.end(), 0u);
    shuffle_labels(labels, rng);
    labels.resize(size);
    return VertexSet::from_labels(dim, labels);
}

VerificationReport verify_theorem_exhaustive(int n, int size, int workers, bool symmetry_reduced) {
    if (n != 4) {
        throw InvalidArgument("exhaustive theorem verification supports n = 4 only, got n = " + std::to_string(n));
    }
    if (size < 9 || size > 16) {
        throw InvalidArgument("subset size must be in [9, 16], got " + std::to_string(size));
    }
    const CubeDim dim(4);
    const std::uint64_t count = binomial(16, size);
    std::string name = "theorem/n=4/size=" + std::to_string(size);
    if (symmetry_reduced) name += "/symmetry-reduced";
    auto r = start_report(std::move(name), workers);
    const auto t0 = Clock::now();

    // 0 fail, 1 claw, 2 cycle, 3 skipped (not an orbit representative).
    std::vector<std::uint64_t> orbits(symmetry_reduced ? count : 0, 0);
    auto codes = run_ranges(count, workers, [&](std::uint64_t begin, std::uint64_t end, std::span<std::uint8_t> out) {
        std::uint64_t mask = unrank_subset(begin, 16, size);
        for (std::uint64_t i = begin; i < end; ++i, mask = next_subset(mask)) {
            const auto set = VertexSet::from_mask(dim, mask);
            if (symmetry_reduced) {
                if (canonical_form(set).low_word() != mask) {
                    out[i - begin] = 3;
                    continue;
                }
                orbits[i] = orbit_size(set);
            }
            const auto w = find_theorem_witness(set);
            out[i - begin] = !w ? 0 : std::holds_alternative<Claw>(*w) ? 1 : 2;
        }
    });

    std::vector<std::uint8_t> stream;
    std::vector<std::uint64_t> stream_index;
    for (std::uint64_t i = 0; i < count; ++i) {
        if (codes[i] == 3) continue;
        stream.push_back(codes[i]);
        stream_index.push_back(i);
        ++r.counters[codes[i] == 1 ? "claw" : codes[i] == 2 ? "cycle_only" : "none"];
    }
    tally(r, stream, [&](std::size_t i) { return q4_hex(unrank_subset(stream_index[i], 16, size)); });
    if (symmetry_reduced) {
        r.counters["raw_universe"] = count;
        r.counters["orbit_total"] = std::accumulate(orbits.begin(), orbits.end(), std::uint64_t{0});
        r.findings.push_back(r.counters["orbit_total"] == count ? "orbit sizes account for every subset"
                                                                 : "orbit accounting mismatch");
    }
    r.wall_time = seconds_since(t0);
    return r;
}

VerificationReport verify_proposition_exhaustive(int workers) {
    const CubeDim dim(3);
    auto r = start_report("proposition/n=3/size=6", workers);
    const auto t0 = Clock::now();
    const std::uint64_t count = binomial(8, 6);
    // bit 0: claw, bit 1: induced 6-cycle
    auto codes = run_indexed(count, workers, [&](std::uint64_t i) -> std::uint8_t {
        const auto set = VertexSet::from_mask(dim, unrank_subset(i, 8, 6));
        return static_cast<std::uint8_t>((find_claw(set) ? 1 : 0) | (find_induced_cycle(set, 6) ? 2 : 0));
    });
    tally(r, codes, [&](std::size_t i) { return format_set_hex(VertexSet::from_mask(dim, unrank_subset(i, 8, 6))); });
    r.counters["claw_only"] = 0;
    r.counters["cycle_only"] = 0;
    r.counters["both"] = 0;
    for (std::uint64_t i = 0; i < count; ++i) {
        if (codes[i] == 1) ++r.counters["claw_only"];
        if (codes[i] == 2) {
            ++r.counters["cycle_only"];
            const std::uint64_t missing = ~unrank_subset(i, 8, 6) & 0xFF;
            const auto gone = VertexSet::from_mask(dim, missing).members();
            r.findings.push_back("cycle only: Q_3 minus {" + format_vertex(gone[0], dim) + ", " +
                                 format_vertex(gone[1], dim) + "}");
        }
        if (codes[i] == 3) ++r.counters["both"];
    }
    r.wall_time = seconds_since(t0);
    return r;
}

CaseFourOutcome case_four_outcome(const VertexSet& first_side) {
    if (first_side.dim().value() != 3) {
        throw InvalidDimension("case four outcome expects a Q_3 subset");
    }
    CaseFourOutcome out;
    out.p5 = classify_five_set(first_side);
    if (out.p5.kind != FiveSetKind::PathP5) {
        throw InvalidArgument("first side " + format_set_hex(first_side) + " is not an induced P5");
    }
    const std::uint64_t first = first_side.low_word();
    out.first_side = VertexSet::from_mask(CubeDim(4), join_sides(first, 0));
    for (auto& v : out.p5.endpoints) v = embed_vertex(v, 1, 0);
    for (auto& v : out.p5.internal) v = embed_vertex(v, 1, 0);

    std::uint64_t partners = 0;
    for (auto a : out.p5.internal) partners |= std::uint64_t{1} << (a.label >> 1);

    const std::uint64_t fours = binomial(8, 4);
    for (std::uint64_t j = 0; j < fours; ++j) {
        const std::uint64_t second = unrank_subset(j, 8, 4);
        if ((second & partners) != 0) continue;
        CaseFourChoice choice;
        choice.second_side = VertexSet::from_mask(CubeDim(4), join_sides(0, second));
        out.admissible_v2_choices.push_back(choice.second_side);

        const std::uint64_t all = join_sides(first, second);
        for (std::uint32_t x = 0; x < 8 && choice.kind == CaseFourKind::Unresolved; ++x) {
            if (((second >> x) & 1u) && mask_degree(all, 2 * x + 1, 4) >= 3) {
                choice.kind = CaseFourKind::ClawInV2;
                choice.center = Vertex{2 * x + 1};
            }
        }
        if (choice.kind == CaseFourKind::Unresolved) {
            const auto whole = VertexSet::from_mask(CubeDim(4), all);
            for (auto z : whole.members()) {
                if (auto cycle = find_induced_cycle(whole.without(z), 8)) {
                    choice.kind = CaseFourKind::CycleAfterDeletion;
                    choice.z = z;
                    choice.cycle = std::move(cycle);
                    break;
                }
            }
        }
        out.per_choice.push_back(std::move(choice));
    }
    return out;
}

std::vector<VerificationReport> verify_case_claims(int case_id, int workers) {
    if (case_id < 0 || case_id > 4) {
        throw InvalidArgument("case must be 1-4 or 0 for all, got " + std::to_string(case_id));
    }
    std::vector<VerificationReport> out;
    auto append = [&](std::vector<VerificationReport> rs) {
        for (auto& r : rs) out.push_back(std::move(r));
    };
    if (case_id == 0 || case_id == 1) append(check_case_one(workers));
    if (case_id == 0 || case_id == 2) append(check_split_case(2, 7, 2, workers));
    if (case_id == 0 || case_id == 3) append(check_split_case(3, 6, 3, workers));
    if (case_id == 0 || case_id == 4) append(check_case_four(workers));
    return out;
}

VerificationReport verify_structured_agreement(int workers) {
    const CubeDim dim(4);
    auto r = start_report("structured-base-case/n=4/size=9", workers);
    const auto t0 = Clock::now();
    const std::uint64_t count = binomial(16, 9);
    // low 3 bits: case id (0 = failure), bit 3: cycle witness
    auto codes = run_ranges(count, workers, [&](std::uint64_t begin, std::uint64_t end, std::span<std::uint8_t> out) {
        std::uint64_t mask = unrank_subset(begin, 16, 9);
        for (std::uint64_t i = begin; i < end; ++i, mask = next_subset(mask)) {
            const auto set = VertexSet::from_mask(dim, mask);
            std::uint8_t code = 0;
            try {
                const auto s = base_case_solve_structured(set);
                const bool brute = find_theorem_witness(set).has_value();
                if (check_witness(s.witness, set) && brute) {
                    code = static_cast<std::uint8_t>(s.case_id | (std::holds_alternative<InducedCycle>(s.witness) ? 8 : 0));
                }
            } catch (const TheoremViolation&) {
                code = 0;
            }
            out[i - begin] = code;
        }
    });
    tally(r, codes, [&](std::size_t i) { return q4_hex(unrank_subset(i, 16, 9)); });
    for (auto c : codes) {
        if (c == 0) continue;
        ++r.counters["case_" + std::to_string(c & 7)];
        if (c & 8) ++r.counters["cycle_witnesses"];
    }
    r.wall_time = seconds_since(t0);
    return r;
}

VerificationReport verify_monotonicity(int trials, std::uint64_t seed, int workers) {
    const CubeDim dim(4);
    auto r = start_report("monotonicity/n=4/size=9", workers);
    r.findings.push_back(std::string("generator: ") + kGeneratorName + ", seed " + std::to_string(seed));
    const auto t0 = Clock::now();
    std::mt19937_64 rng(seed);
    std::vector<std::pair<VertexSet, VertexSet>> pairs;
    pairs.reserve(static_cast<std::size_t>(std::max(trials, 0)));
    for (int t = 0; t < trials; ++t) {
        std::vector<std::uint32_t> labels(16);
        std::iota(labels.begin(), labels.end(), 0u);
        shuffle_labels(labels, rng);
        const auto extra = static_cast<std::size_t>(uniform_below(rng, 8));
        auto small = VertexSet::from_labels(dim, std::span<const std::uint32_t>(labels.data(), 9));
        auto large = VertexSet::from_labels(dim, std::span<const std::uint32_t>(labels.data(), 9 + extra));
        pairs.emplace_back(std::move(small), std::move(large));
    }
    auto out = run_indexed(pairs.size(), workers, [&](std::uint64_t i) -> std::uint8_t {
        const auto w = find_theorem_witness(pairs[i].first);
        return w && check_witness(*w, pairs[i].second) ? 1 : 0;
    });
    tally(r, out, [&](std::size_t i) { return format_set_hex(pairs[i].first); });
    r.wall_time = seconds_since(t0);
    return r;
}

ExtremalResult extremal_search(int n, int cycle_length) {
    const bool c8 = cycle_length == 8 && n >= 1 && n <= 5;
    const bool c6 = cycle_length == 6 && n == 3;
    if (!c8 && !c6) {
        throw InvalidArgument("extremal search supports {claw, C8} for n <= 5 and {claw, C6} for n = 3; got n = " +
                              std::to_string(n) + ", C" + std::to_string(cycle_length));
    }
    const auto t0 = Clock::now();
    ExtremalSearch search(n, cycle_length);
    search.run();
    ExtremalResult out;
    out.dim = n;
    out.cycle_length = cycle_length;
    out.forbidden = {"claw", "C" + std::to_string(cycle_length)};
    out.max_size = search.best();
    out.certificate = VertexSet::from_mask(CubeDim(n), search.best_mask());
    out.nodes_explored = search.nodes();
    out.wall_time = seconds_since(t0);
    return out;
}

VerificationReport random_agreement_test(int n, int trials, std::uint64_t seed, int workers) {
    if (n < 4 || n > 12) {
        throw InvalidArgument("random agreement test needs 4 <= n <= 12, got n = " + std::to_string(n));
    }
    if (trials < 0) {
        throw InvalidArgument("trial count must be non-negative");
    }
    const CubeDim dim(n);
    auto r = start_report("random-agreement/n=" + std::to_string(n) + "/trials=" + std::to_string(trials) +
                              "/seed=" + std::to_string(seed),
                          workers);
    r.findings.push_back(std::string("generator: ") + kGeneratorName);
    const auto t0 = Clock::now();
    std::mt19937_64 rng(seed);
    std::vector<VertexSet> sets;
    sets.reserve(static_cast<std::size_t>(trials));
    for (int t = 0; t < trials; ++t) {
        sets.push_back(random_subset(dim, theorem_bound(n), rng));
    }
    auto out = run_indexed(sets.size(), workers, [&](std::uint64_t i) -> std::uint8_t {
        const auto& set = sets[i];
        try {
            const auto res = find_witness_inductive(set);
            if (!check_witness(res.witness, set)) return 0;
            std::size_t parent = set.size();
            for (const auto& step : res.trace.steps) {
                const auto [c0, c1] = step.side_cardinalities;
                const std::size_t chosen = step.chosen_side == 0 ? c0 : c1;
                if (c0 + c1 != parent || chosen < theorem_bound(step.dim - 1)) return 0;
                parent = chosen;
            }
            if (n <= 5 && !find_theorem_witness(set)) return 0;
            return std::holds_alternative<Claw>(res.witness) ? 1 : 2;
        } catch (const TheoremViolation&) {
            return 0;
        }
    });
    tally(r, out, [&](std::size_t i) { return format_set_hex(sets[i]); });
    for (auto c : out) {
        if (c == 1) ++r.counters["claw"];
        if (c == 2) ++r.counters["cycle"];
    }
    r.wall_time = seconds_since(t0);
    return r;
}

}  // namespace clawcycle
