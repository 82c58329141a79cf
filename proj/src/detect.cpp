#include "clawcycle/detect.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "clawcycle/errors.hpp"

namespace clawcycle {

namespace {

bool is_edge(std::uint32_t a, std::uint32_t b) { return std::has_single_bit(a ^ b); }

int degree_in(const VertexSet& set, std::uint32_t label) {
    int d = 0;
    for (int b = 0; b < set.dim().value(); ++b) {
        d += set.test(label ^ (std::uint32_t{1} << b)) ? 1 : 0;
    }
    return d;
}

std::vector<std::uint32_t> in_set_neighbors(const VertexSet& set, std::uint32_t label) {
    std::vector<std::uint32_t> out;
    for (int b = 0; b < set.dim().value(); ++b) {
        const std::uint32_t u = label ^ (std::uint32_t{1} << b);
        if (set.test(u)) {
            out.push_back(u);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Depth-first extension of a chordless path whose first vertex is the least
// label on the cycle. A candidate adjacent to any earlier path vertex other
// than its predecessor is rejected, except the start when closing the cycle.
class CycleSearch {
public:
    CycleSearch(const VertexSet& set, int k) : set_(set), k_(static_cast<std::size_t>(k)) {
        path_.reserve(k_);
    }

    std::optional<std::vector<std::uint32_t>> from(std::uint32_t start) {
        path_.assign(1, start);
        if (extend()) {
            return path_;
        }
        return std::nullopt;
    }

private:
    bool extend() {
        const std::uint32_t start = path_.front();
        const std::size_t len = path_.size();
        const bool closing = len + 1 == k_;
        for (std::uint32_t u : in_set_neighbors(set_, path_.back())) {
            if (u <= start || std::find(path_.begin(), path_.end(), u) != path_.end()) {
                continue;
            }
            bool chord = false;
            for (std::size_t i = 0; i + 1 < len && !chord; ++i) {
                if (is_edge(u, path_[i]) && !(i == 0 && closing)) {
                    chord = true;
                }
            }
            if (chord) {
                continue;
            }
            if (closing) {
                if (is_edge(u, start)) {
                    path_.push_back(u);
                    return true;
                }
                continue;
            }
            path_.push_back(u);
            if (extend()) {
                return true;
            }
            path_.pop_back();
        }
        return false;
    }

    const VertexSet& set_;
    std::size_t k_;
    std::vector<std::uint32_t> path_;
};

}  // namespace

std::vector<Vertex> witness_vertices(const Witness& w) {
    if (const auto* claw = std::get_if<Claw>(&w)) {
        return {claw->center, claw->leaves[0], claw->leaves[1], claw->leaves[2]};
    }
    return std::get<InducedCycle>(w).cycle;
}

const char* to_string(FiveSetKind kind) {
    switch (kind) {
        case FiveSetKind::HasDegree3Vertex: return "has-degree-3-vertex";
        case FiveSetKind::HasIsolatedVertex: return "has-isolated-vertex";
        case FiveSetKind::Disconnected: return "disconnected";
        case FiveSetKind::InducedCycle: return "induced-cycle";
        case FiveSetKind::PathP5: return "path-p5";
        case FiveSetKind::Other: return "other";
    }
    return "other";
}

int induced_degree(const VertexSet& set, Vertex v) {
    if (!set.contains(v)) {
        throw InvalidArgument("vertex " + std::to_string(v.label) + " is not a member of the set");
    }
    return degree_in(set, v.label);
}

std::optional<Claw> find_claw(const VertexSet& set) {
    for (auto v : set.members()) {
        const auto nbrs = in_set_neighbors(set, v.label);
        if (nbrs.size() >= 3) {
            return Claw{v, {Vertex{nbrs[0]}, Vertex{nbrs[1]}, Vertex{nbrs[2]}}};
        }
    }
    return std::nullopt;
}

std::optional<InducedCycle> find_induced_cycle(const VertexSet& set, int k) {
    if (k < 4 || k % 2 != 0) {
        throw InvalidArgument("cycle length must be even and at least 4, got " + std::to_string(k));
    }
    if (static_cast<std::size_t>(k) > set.size()) {
        throw InvalidArgument("cycle length " + std::to_string(k) + " exceeds set size " +
                              std::to_string(set.size()));
    }
    CycleSearch search(set, k);
    for (auto s : set.members()) {
        if (auto path = search.from(s.label)) {
            auto& p = *path;
            if (p[1] > p.back()) {
                std::reverse(p.begin() + 1, p.end());
            }
            InducedCycle out;
            out.cycle.reserve(p.size());
            for (auto l : p) {
                out.cycle.push_back(Vertex{l});
            }
            return out;
        }
    }
    return std::nullopt;
}

std::optional<Witness> find_theorem_witness(const VertexSet& set) {
    if (auto claw = find_claw(set)) {
        return Witness{*claw};
    }
    if (set.size() >= 8) {
        if (auto cycle = find_induced_cycle(set, 8)) {
            return Witness{std::move(*cycle)};
        }
    }
    return std::nullopt;
}

PathClassification classify_five_set(const VertexSet& set) {
    if (set.size() != 5) {
        throw InvalidArgument("classify_five_set needs exactly 5 vertices, got " +
                              std::to_string(set.size()));
    }
    const auto verts = set.members();
    std::array<int, 5> deg{};
    int edges = 0;
    for (std::size_t i = 0; i < 5; ++i) {
        deg[i] = degree_in(set, verts[i].label);
        edges += deg[i];
    }
    edges /= 2;

    PathClassification out;
    if (std::any_of(deg.begin(), deg.end(), [](int d) { return d >= 3; })) {
        out.kind = FiveSetKind::HasDegree3Vertex;
        return out;
    }
    if (std::any_of(deg.begin(), deg.end(), [](int d) { return d == 0; })) {
        out.kind = FiveSetKind::HasIsolatedVertex;
        return out;
    }

    // Connectivity by flooding from the first vertex.
    std::array<bool, 5> seen{};
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        const auto i = stack.back();
        stack.pop_back();
        for (std::size_t j = 0; j < 5; ++j) {
            if (!seen[j] && is_edge(verts[i].label, verts[j].label)) {
                seen[j] = true;
                stack.push_back(j);
            }
        }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
        out.kind = FiveSetKind::Disconnected;
        return out;
    }
    if (edges == 5) {
        out.kind = FiveSetKind::InducedCycle;
        return out;
    }
    if (edges != 4) {
        out.kind = FiveSetKind::Other;
        return out;
    }

    out.kind = FiveSetKind::PathP5;
    std::vector<std::uint32_t> ends;
    for (std::size_t i = 0; i < 5; ++i) {
        if (deg[i] == 1) {
            ends.push_back(verts[i].label);
        }
    }
    out.endpoints = {Vertex{ends[0]}, Vertex{ends[1]}};
    std::uint32_t prev = ends[0];
    std::uint32_t cur = in_set_neighbors(set, ends[0]).front();
    for (auto& a : out.internal) {
        a = Vertex{cur};
        const auto nbrs = in_set_neighbors(set, cur);
        const std::uint32_t next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
        prev = cur;
        cur = next;
    }
    return out;
}

bool check_witness(const Witness& w, const VertexSet& set) {
    const auto verts = witness_vertices(w);
    const std::uint32_t order = set.dim().order();
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (verts[i].label >= order || !set.test(verts[i].label)) {
            return false;
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (verts[i] == verts[j]) {
                return false;
            }
        }
    }

    if (const auto* claw = std::get_if<Claw>(&w)) {
        for (std::size_t i = 0; i < 3; ++i) {
            if (!is_edge(claw->center.label, claw->leaves[i].label)) {
                return false;
            }
            for (std::size_t j = 0; j < i; ++j) {
                if (is_edge(claw->leaves[i].label, claw->leaves[j].label)) {
                    return false;
                }
            }
        }
        return true;
    }

    const std::size_t k = verts.size();
    if (k < 4 || k % 2 != 0) {
        return false;
    }
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            const bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if (is_edge(verts[i].label, verts[j].label) != consecutive) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace clawcycle
