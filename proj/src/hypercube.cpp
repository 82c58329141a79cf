#include "clawcycle/hypercube.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "clawcycle/errors.hpp"

namespace clawcycle {

namespace {

std::size_t word_count(CubeDim dim) {
    return (static_cast<std::size_t>(dim.order()) + 63) / 64;
}

void check_coord(int coord, CubeDim dim) {
    if (coord < 1 || coord > dim.value()) {
        throw InvalidArgument("coordinate " + std::to_string(coord) + " out of range [1, " +
                              std::to_string(dim.value()) + "]");
    }
}

// Delete bit `pos` from `label`, shifting the higher bits down.
std::uint32_t delete_bit(std::uint32_t label, int pos) {
    const std::uint32_t low = label & ((std::uint32_t{1} << pos) - 1);
    return ((label >> (pos + 1)) << pos) | low;
}

std::uint32_t insert_bit(std::uint32_t label, int pos, int bit) {
    const std::uint32_t low = label & ((std::uint32_t{1} << pos) - 1);
    return ((label >> pos) << (pos + 1)) | (static_cast<std::uint32_t>(bit) << pos) | low;
}

// Calls fn(image_mask) for every automorphism of Q_n, n <= 6.
template <typename Fn>
void for_each_image(const VertexSet& set, Fn&& fn) {
    const int n = set.dim().value();
    const std::uint32_t order = set.dim().order();
    const std::uint64_t mask = set.low_word();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::uint32_t> permuted(order);
    do {
        for (std::uint32_t l = 0; l < order; ++l) {
            std::uint32_t img = 0;
            for (int b = 0; b < n; ++b) {
                img |= ((l >> b) & 1u) << perm[b];
            }
            permuted[l] = img;
        }
        for (std::uint32_t flips = 0; flips < order; ++flips) {
            std::uint64_t image = 0;
            for (std::uint64_t m = mask; m != 0; m &= m - 1) {
                const auto l = static_cast<std::uint32_t>(std::countr_zero(m));
                image |= std::uint64_t{1} << permuted[l ^ flips];
            }
            fn(image);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

void require_canonical_dim(CubeDim dim) {
    if (dim.value() > kMaxCanonicalDim) {
        throw InvalidDimension("exact canonicalization supports n <= " +
                               std::to_string(kMaxCanonicalDim) + ", got n = " +
                               std::to_string(dim.value()));
    }
}

}  // namespace

CubeDim::CubeDim(int n) : n_(n) {
    if (n < 1 || n > kMaxDim) {
        throw InvalidDimension("dimension " + std::to_string(n) + " out of range [1, " +
                               std::to_string(kMaxDim) + "]");
    }
}

void check_vertex(Vertex v, CubeDim dim) {
    if (v.label >= dim.order()) {
        throw InvalidVertex("vertex label " + std::to_string(v.label) + " out of range for n = " +
                            std::to_string(dim.value()));
    }
}

int coordinate(Vertex v, int i, CubeDim dim) {
    check_vertex(v, dim);
    check_coord(i, dim);
    return static_cast<int>((v.label >> (i - 1)) & 1u);
}

Vertex from_coordinates(std::span<const int> alphas) {
    if (alphas.empty() || alphas.size() > static_cast<std::size_t>(kMaxDim)) {
        throw InvalidDimension("coordinate tuple length " + std::to_string(alphas.size()) +
                               " out of range");
    }
    std::uint32_t label = 0;
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        if (alphas[i] != 0 && alphas[i] != 1) {
            throw InvalidVertex("coordinate values must be 0 or 1");
        }
        label |= static_cast<std::uint32_t>(alphas[i]) << i;
    }
    return Vertex{label};
}

bool adjacent(Vertex u, Vertex v, CubeDim dim) {
    check_vertex(u, dim);
    check_vertex(v, dim);
    return std::has_single_bit(u.label ^ v.label);
}

std::vector<Vertex> neighbors(Vertex v, CubeDim dim) {
    check_vertex(v, dim);
    std::vector<Vertex> out;
    out.reserve(dim.value());
    for (int b = 0; b < dim.value(); ++b) {
        out.push_back(Vertex{v.label ^ (std::uint32_t{1} << b)});
    }
    std::sort(out.begin(), out.end());
    return out;
}

VertexSet::VertexSet(CubeDim dim) : dim_(dim), words_(word_count(dim), 0) {}

VertexSet VertexSet::full(CubeDim dim) {
    VertexSet s(dim);
    const std::uint32_t order = dim.order();
    if (order >= 64) {
        std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
    } else {
        s.words_[0] = (std::uint64_t{1} << order) - 1;
    }
    return s;
}

VertexSet VertexSet::from_labels(CubeDim dim, std::span<const std::uint32_t> labels) {
    VertexSet s(dim);
    for (auto l : labels) {
        s.insert(Vertex{l});
    }
    return s;
}

VertexSet VertexSet::from_labels(CubeDim dim, std::initializer_list<std::uint32_t> labels) {
    return from_labels(dim, std::span<const std::uint32_t>(labels.begin(), labels.size()));
}

VertexSet VertexSet::from_words(CubeDim dim, std::vector<std::uint64_t> words) {
    if (words.size() != word_count(dim)) {
        throw InvalidArgument("mask word count does not match dimension");
    }
    const std::uint32_t order = dim.order();
    if (order < 64 && (words[0] >> order) != 0) {
        throw InvalidVertex("mask has bits at or above 2^n");
    }
    VertexSet s(dim);
    s.words_ = std::move(words);
    return s;
}

VertexSet VertexSet::from_mask(CubeDim dim, std::uint64_t mask) {
    if (dim.value() > 6) {
        throw InvalidDimension("from_mask requires n <= 6");
    }
    return from_words(dim, {mask});
}

std::size_t VertexSet::size() const noexcept {
    std::size_t total = 0;
    for (auto w : words_) {
        total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
}

bool VertexSet::contains(Vertex v) const {
    check_vertex(v, dim_);
    return test(v.label);
}

void VertexSet::insert(Vertex v) {
    check_vertex(v, dim_);
    words_[v.label >> 6] |= std::uint64_t{1} << (v.label & 63);
}

void VertexSet::erase(Vertex v) {
    check_vertex(v, dim_);
    words_[v.label >> 6] &= ~(std::uint64_t{1} << (v.label & 63));
}

std::vector<Vertex> VertexSet::members() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for (std::size_t w = 0; w < words_.size(); ++w) {
        for (std::uint64_t m = words_[w]; m != 0; m &= m - 1) {
            out.push_back(Vertex{static_cast<std::uint32_t>(w * 64 + std::countr_zero(m))});
        }
    }
    return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    if (dim_ != other.dim_) {
        return false;
    }
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if ((words_[w] & ~other.words_[w]) != 0) {
            return false;
        }
    }
    return true;
}

VertexSet VertexSet::united(const VertexSet& other) const {
    if (dim_ != other.dim_) {
        throw InvalidDimension("cannot unite sets of different dimension");
    }
    VertexSet out = *this;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        out.words_[w] |= other.words_[w];
    }
    return out;
}

VertexSet VertexSet::without(Vertex v) const {
    VertexSet out = *this;
    out.erase(v);
    return out;
}

std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
    if (auto c = a.dim_ <=> b.dim_; c != 0) {
        return c;
    }
    for (std::size_t w = a.words_.size(); w-- > 0;) {
        if (auto c = a.words_[w] <=> b.words_[w]; c != 0) {
            return c;
        }
    }
    return std::strong_ordering::equal;
}

std::pair<VertexSet, VertexSet> split(const VertexSet& set, int coord) {
    const CubeDim dim = set.dim();
    if (dim.value() < 2) {
        throw InvalidDimension("split requires n >= 2");
    }
    check_coord(coord, dim);
    const CubeDim sub(dim.value() - 1);
    VertexSet side0(sub);
    VertexSet side1(sub);
    const int pos = coord - 1;
    for (auto v : set.members()) {
        const Vertex relabelled{delete_bit(v.label, pos)};
        if ((v.label >> pos) & 1u) {
            side1.insert(relabelled);
        } else {
            side0.insert(relabelled);
        }
    }
    return {std::move(side0), std::move(side1)};
}

Vertex embed_vertex(Vertex v, int coord, int bit) {
    if (bit != 0 && bit != 1) {
        throw InvalidArgument("embedding bit must be 0 or 1");
    }
    return Vertex{insert_bit(v.label, coord - 1, bit)};
}

VertexSet embed(const VertexSet& set, int coord, int bit) {
    const CubeDim up(set.dim().value() + 1);
    check_coord(coord, up);
    VertexSet out(up);
    for (auto v : set.members()) {
        out.insert(embed_vertex(v, coord, bit));
    }
    return out;
}

Automorphism::Automorphism(CubeDim dim, std::vector<int> perm, std::uint32_t flips)
    : dim_(dim), perm_(std::move(perm)), flips_(flips) {
    const int n = dim.value();
    if (static_cast<int>(perm_.size()) != n) {
        throw MalformedAutomorphism("permutation length " + std::to_string(perm_.size()) +
                                    " does not match n = " + std::to_string(n));
    }
    std::vector<bool> seen(n, false);
    for (int p : perm_) {
        if (p < 0 || p >= n || seen[p]) {
            throw MalformedAutomorphism("coordinate map is not a bijection");
        }
        seen[p] = true;
    }
    if ((flips_ >> n) != 0) {
        throw MalformedAutomorphism("flip mask has bits at or above n");
    }
}

Automorphism Automorphism::identity(CubeDim dim) {
    std::vector<int> perm(dim.value());
    std::iota(perm.begin(), perm.end(), 0);
    return Automorphism(dim, std::move(perm), 0);
}

Vertex Automorphism::apply(Vertex v) const {
    check_vertex(v, dim_);
    const std::uint32_t flipped = v.label ^ flips_;
    std::uint32_t out = 0;
    for (int b = 0; b < dim_.value(); ++b) {
        out |= ((flipped >> b) & 1u) << perm_[b];
    }
    return Vertex{out};
}

VertexSet apply_automorphism(const VertexSet& set, const Automorphism& a) {
    if (a.dim() != set.dim()) {
        throw MalformedAutomorphism("automorphism dimension does not match set");
    }
    VertexSet out(set.dim());
    for (auto v : set.members()) {
        out.insert(a.apply(v));
    }
    return out;
}

VertexSet canonical_form(const VertexSet& set) {
    require_canonical_dim(set.dim());
    std::uint64_t best = set.low_word();
    for_each_image(set, [&](std::uint64_t image) { best = std::min(best, image); });
    return VertexSet::from_mask(set.dim(), best);
}

std::uint64_t orbit_size(const VertexSet& set) {
    require_canonical_dim(set.dim());
    const std::uint64_t mask = set.low_word();
    std::uint64_t group_order = 0;
    std::uint64_t stabilizer = 0;
    for_each_image(set, [&](std::uint64_t image) {
        ++group_order;
        stabilizer += image == mask ? 1 : 0;
    });
    return group_order / stabilizer;
}

}  // namespace clawcycle
