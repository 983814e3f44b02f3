#pragma once

#include <cstdint>
#include <vector>

#include "chordal/vertex_set.hpp"

namespace chordal {

/**
 * A simplicial complex on the ground set {1..n}, stored by its facets.
 *
 * Two degenerate complexes are distinct values: the void complex has no
 * faces at all (no facets), while the irrelevant complex {∅} has the single
 * facet ∅.
 */
class SimplicialComplex {
public:
    SimplicialComplex() = default;
    /// Keeps only the inclusion-maximal sets, deduplicated and sorted lexicographically.
    SimplicialComplex(int n, std::vector<VertexSet> generators);

    static SimplicialComplex void_complex(int n) { return SimplicialComplex(n, {}); }
    static SimplicialComplex irrelevant(int n) { return SimplicialComplex(n, {VertexSet{}}); }
    static SimplicialComplex simplex(int n) { return SimplicialComplex(n, {VertexSet::range(n)}); }
    /// All subsets of {1..n} with at most k+1 elements.
    static SimplicialComplex skeleton(int n, int k);

    int n() const { return n_; }
    const std::vector<VertexSet>& facets() const { return facets_; }

    bool is_void() const { return facets_.empty(); }
    /// Largest facet size minus one; -1 for {∅}, -2 for the void complex.
    int dimension() const;
    bool is_pure() const;
    bool contains(VertexSet face) const;

    /// Every face, sorted by size then lexicographically.
    std::vector<VertexSet> faces() const;
    /// Subcomplex of faces lying inside `subset`.
    SimplicialComplex induced(VertexSet subset) const;

    /// f_{-1}, f_0, ..., f_dim.
    std::vector<std::int64_t> f_vector() const;

    bool operator==(const SimplicialComplex&) const = default;

private:
    int n_ = 0;
    std::vector<VertexSet> facets_;
};

/// f_{-1..dim} for an explicit face list.
std::vector<std::int64_t> f_vector_of(const std::vector<VertexSet>& faces);

/**
 * h-vector of a complex whose facets all have `rank` elements, computed from
 * its f-vector: h_k = sum_i (-1)^(k-i) C(rank-i, k-i) f_{i-1}. Returns rank+1
 * entries; the void complex gives all zeros.
 */
std::vector<std::int64_t> h_vector(const SimplicialComplex& complex, int rank);

/// Facets of the dual complex {σ : [n] \ σ is not a face}.
SimplicialComplex alexander_dual(const SimplicialComplex& complex);

/// Minimal nonfaces, sorted lexicographically.
std::vector<VertexSet> minimal_nonfaces(const SimplicialComplex& complex);

}  // namespace chordal
