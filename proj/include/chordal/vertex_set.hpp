#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace chordal {

/// Largest vertex count supported by the bitmask representation.
inline constexpr int kMaxVertices = 64;

/**
 * A subset of the 1-based vertex set {1..n}, stored as a 64-bit mask.
 *
 * Vertex v occupies bit v-1. Every circuit, clique, facet and monomial
 * support in the library is a VertexSet.
 */
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    VertexSet(std::initializer_list<int> vertices) {
        for (int v : vertices) insert(v);
    }

    static VertexSet from_vertices(std::span<const int> vertices) {
        VertexSet s;
        for (int v : vertices) s.insert(v);
        return s;
    }

    /// {1..n}
    static constexpr VertexSet range(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    static constexpr VertexSet singleton(int v) { return VertexSet(std::uint64_t{1} << (v - 1)); }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }

    constexpr bool contains(int v) const { return (bits_ >> (v - 1)) & 1U; }
    constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

    void insert(int v) {
        if (v < 1 || v > kMaxVertices)
            throw std::out_of_range("vertex " + std::to_string(v) + " outside 1..64");
        bits_ |= std::uint64_t{1} << (v - 1);
    }
    constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << (v - 1)); }

    constexpr VertexSet with(int v) const { return VertexSet(bits_ | (std::uint64_t{1} << (v - 1))); }
    constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << (v - 1))); }

    /// Smallest vertex; undefined on the empty set.
    constexpr int min() const { return std::countr_zero(bits_) + 1; }
    /// Largest vertex; undefined on the empty set.
    constexpr int max() const { return 64 - std::countl_zero(bits_); }

    std::vector<int> vertices() const {
        std::vector<int> out;
        out.reserve(size());
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
        return out;
    }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr VertexSet operator^(VertexSet o) const { return VertexSet(bits_ ^ o.bits_); }
    VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

    constexpr bool operator==(const VertexSet&) const = default;

    /// Compact form such as "125"; vertices above 9 are comma separated.
    std::string to_string() const;

private:
    std::uint64_t bits_ = 0;
};

/**
 * Lexicographic order on the sorted vertex lists, e.g. 12 < 125 < 13 < 2.
 * This is the canonical order for circuits, cliques and facets.
 */
constexpr bool lex_less(VertexSet a, VertexSet b) {
    const std::uint64_t diff = a.bits() ^ b.bits();
    if (diff == 0) return false;
    const std::uint64_t low = diff & (~diff + 1);
    const std::uint64_t above = ~((low << 1) - 1);
    if (a.bits() & low) return (b.bits() & above) != 0;
    return (a.bits() & above) == 0;
}

struct LexLess {
    constexpr bool operator()(VertexSet a, VertexSet b) const { return lex_less(a, b); }
};

struct VertexSetHash {
    std::size_t operator()(VertexSet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};

/// Exact binomial coefficient; zero when k < 0 or k > n.
std::int64_t binomial(int n, int k);

/// Calls fn(subset) for every k-subset of `ground`, in increasing mask order.
template <typename Fn>
void for_each_subset_of_size(VertexSet ground, int k, Fn&& fn) {
    const std::vector<int> elems = ground.vertices();
    const int m = static_cast<int>(elems.size());
    if (k < 0 || k > m) return;
    if (k == 0) {
        fn(VertexSet{});
        return;
    }
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        VertexSet s;
        for (int i : idx) s = s.with(elems[i]);
        fn(s);
        int i = k - 1;
        while (i >= 0 && idx[i] == m - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// Calls fn(subset) for every subset of `ground`, including the empty set.
template <typename Fn>
void for_each_subset(VertexSet ground, Fn&& fn) {
    const std::uint64_t g = ground.bits();
    std::uint64_t s = 0;
    while (true) {
        fn(VertexSet(s));
        if (s == g) break;
        s = (s - g) & g;
    }
}

/// All k-subsets of `ground` in lexicographic order.
std::vector<VertexSet> subsets_of_size(VertexSet ground, int k);

/// Parses "1 2 5" or "{1,2,5}" style vertex lists.
VertexSet parse_vertex_set(const std::string& text);

}  // namespace chordal
