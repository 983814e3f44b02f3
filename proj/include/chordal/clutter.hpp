#pragma once

#include <optional>
#include <vector>

#include "chordal/simplicial_complex.hpp"
#include "chordal/vertex_set.hpp"

namespace chordal {

/**
 * A d-uniform set system on the vertices {1..n}. Its members are circuits.
 *
 * Circuits are kept in lexicographic order (the canonical order for output)
 * alongside a mask-sorted copy used for membership queries.
 */
class Clutter {
public:
    Clutter() = default;
    /// Throws std::invalid_argument on out-of-range vertices, wrong circuit size or duplicates.
    Clutter(int n, int d, std::vector<VertexSet> circuits);

    /// K_n^d: every d-subset of {1..n}.
    static Clutter complete(int n, int d);
    static Clutter empty(int n, int d) { return Clutter(n, d, {}); }

    int n() const { return n_; }
    int d() const { return d_; }
    VertexSet ground() const { return VertexSet::range(n_); }
    const std::vector<VertexSet>& circuits() const { return circuits_; }
    std::size_t size() const { return circuits_.size(); }
    bool empty() const { return circuits_.empty(); }

    bool contains(VertexSet e) const;

    /// Same (n, d) with circuit `e` removed / added.
    Clutter without(VertexSet e) const;
    Clutter with(VertexSet e) const;

    bool operator==(const Clutter& o) const { return n_ == o.n_ && d_ == o.d_ && circuits_ == o.circuits_; }

private:
    int n_ = 0;
    int d_ = 1;
    std::vector<VertexSet> circuits_;
    std::vector<std::uint64_t> sorted_bits_;
};

/// Result of classifying a circuit by the maximal cliques that contain it.
struct ExposedStatus {
    /// Unique maximal clique containing the circuit, when there is exactly one.
    std::optional<VertexSet> clique;
    /// |clique| > d.
    bool proper = false;

    bool exposed() const { return clique.has_value(); }
    bool operator==(const ExposedStatus&) const = default;
};

/// The d-subsets of {1..n} that are not circuits of `c`.
Clutter complement(const Clutter& c);

/// True iff |s| < d or every d-subset of s is a circuit. Throws on empty s.
bool is_clique(const Clutter& c, VertexSet s);

/// Vertices v outside s for which s ∪ {v} is still a clique (s itself must be one).
VertexSet clique_extensions(const Clutter& c, VertexSet s);

/**
 * Inclusion-maximal cliques containing the circuit e, in lexicographic order.
 * Backtracking clique enumeration; throws std::invalid_argument if e ∉ c.
 */
std::vector<VertexSet> maximal_cliques_containing(const Clutter& c, VertexSet e);

/// All inclusion-maximal cliques (nonempty or not), lexicographic.
std::vector<VertexSet> maximal_cliques(const Clutter& c);

/**
 * Exposed iff e lies in exactly one maximal clique. Uses the closure test
 * (e plus all of its single-vertex clique extensions must itself be a clique),
 * which agrees with maximal_cliques_containing. Throws if e ∉ c.
 */
ExposedStatus exposed_status(const Clutter& c, VertexSet e);

/// Exposed circuits of c, lexicographic.
std::vector<VertexSet> exposed_circuits(const Clutter& c, bool require_proper = false);

/// Complex with a complete (d-2)-skeleton plus every set whose d-subsets are all circuits.
SimplicialComplex clique_complex(const Clutter& c);

}  // namespace chordal
