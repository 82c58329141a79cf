#pragma once

// The n-dimensional cube Q_n.
//
// Vertex labels are n-bit integers. Coordinate i (1-indexed) is bit i-1 of the
// label, so the first coordinate is the least-significant bit. Splitting on a
// coordinate deletes that bit; embedding inserts it back.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace clawcycle {

inline constexpr int kMaxDim = 24;
inline constexpr int kMaxCanonicalDim = 6;

class CubeDim {
public:
    /// Throws InvalidDimension unless 1 <= n <= kMaxDim.
    explicit CubeDim(int n);

    int value() const noexcept { return n_; }
    /// Number of vertices, 2^n.
    std::uint32_t order() const noexcept { return std::uint32_t{1} << n_; }

    friend auto operator<=>(const CubeDim&, const CubeDim&) = default;

private:
    int n_;
};

struct Vertex {
    std::uint32_t label = 0;

    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

/// Throws InvalidVertex if v.label >= 2^n.
void check_vertex(Vertex v, CubeDim dim);

/// Coordinate alpha_i of v, i in [1, n].
int coordinate(Vertex v, int i, CubeDim dim);

/// Inverse of coordinate(): alphas[0] is alpha_1.
Vertex from_coordinates(std::span<const int> alphas);

bool adjacent(Vertex u, Vertex v, CubeDim dim);

/// The n neighbours of v, ascending by label.
std::vector<Vertex> neighbors(Vertex v, CubeDim dim);

/// A subset of V(Q_n) stored as a 2^n-bit membership mask.
class VertexSet {
public:
    explicit VertexSet(CubeDim dim);

    static VertexSet full(CubeDim dim);
    static VertexSet from_labels(CubeDim dim, std::span<const std::uint32_t> labels);
    static VertexSet from_labels(CubeDim dim, std::initializer_list<std::uint32_t> labels);
    /// Words are little-endian: bit b of word w is vertex 64*w + b.
    static VertexSet from_words(CubeDim dim, std::vector<std::uint64_t> words);
    /// Convenience for n <= 6, where the whole mask fits in one word.
    static VertexSet from_mask(CubeDim dim, std::uint64_t mask);

    CubeDim dim() const noexcept { return dim_; }
    std::size_t size() const noexcept;
    bool empty() const noexcept { return size() == 0; }

    bool contains(Vertex v) const;
    void insert(Vertex v);
    void erase(Vertex v);

    /// Unchecked membership test on a raw label; label must be < 2^n.
    bool test(std::uint32_t label) const noexcept {
        return (words_[label >> 6] >> (label & 63)) & 1;
    }

    std::vector<Vertex> members() const;
    std::span<const std::uint64_t> words() const noexcept { return words_; }
    /// Lowest 64 bits of the mask; the whole mask when n <= 6.
    std::uint64_t low_word() const noexcept { return words_.front(); }

    bool is_subset_of(const VertexSet& other) const;
    VertexSet united(const VertexSet& other) const;
    VertexSet without(Vertex v) const;

    friend bool operator==(const VertexSet& a, const VertexSet& b) = default;
    /// Orders sets of equal dimension by the numeric value of their masks.
    friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b);

private:
    CubeDim dim_;
    std::vector<std::uint64_t> words_;
};

/// Partition by coordinate `coord` (1-indexed) into the side with that
/// coordinate 0 and the side with it 1, each relabelled in Q_{n-1}.
std::pair<VertexSet, VertexSet> split(const VertexSet& set, int coord);

/// Inverse of split for one side: insert `bit` at coordinate `coord`.
VertexSet embed(const VertexSet& set, int coord, int bit);

/// Label-level version of embed.
Vertex embed_vertex(Vertex v, int coord, int bit);

/// Element of the hyperoctahedral group: v -> permute(v xor flips), where
/// bit i of the flipped label moves to bit perm[i] (bit positions 0-based).
class Automorphism {
public:
    /// Throws MalformedAutomorphism if perm is not a bijection on
    /// {0..n-1} or flips has bits at or above n.
    Automorphism(CubeDim dim, std::vector<int> perm, std::uint32_t flips);

    static Automorphism identity(CubeDim dim);

    CubeDim dim() const noexcept { return dim_; }
    const std::vector<int>& perm() const noexcept { return perm_; }
    std::uint32_t flips() const noexcept { return flips_; }

    Vertex apply(Vertex v) const;

private:
    CubeDim dim_;
    std::vector<int> perm_;
    std::uint32_t flips_;
};

VertexSet apply_automorphism(const VertexSet& set, const Automorphism& a);

/// Least mask over the automorphism orbit of `set`. Requires n <= 6.
VertexSet canonical_form(const VertexSet& set);

/// Number of distinct automorphic images of `set`. Requires n <= 6.
std::uint64_t orbit_size(const VertexSet& set);

}  // namespace clawcycle
