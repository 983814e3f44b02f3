#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "chordal/clutter.hpp"
#include "chordal/errors.hpp"
#include "chordal/exact_linalg.hpp"
#include "chordal/polynomial.hpp"

namespace chordal {

// Graph-specific consequences of chordality. A graph is a Clutter with d = 2.

/// adjacency[v] = neighbours of v, for v = 1..n (index 0 unused).
std::vector<VertexSet> adjacency(const Clutter& g);

bool is_connected(const Clutter& g);

/// Closed common-neighbourhood test: uv is exposed iff N(u) ∩ N(v) is a clique.
ExposedStatus exposed_edge_status(const std::vector<VertexSet>& adjacency, VertexSet edge);

/// No induced cycle of length >= 4, by brute force over vertex subsets.
bool is_chordal_classic(const Clutter& g, const SizeGuards& guards = {});

struct EliminationOrdering {
    std::vector<int> order;
    /// degrees[i] = number of neighbours of order[i] among order[i+1..]; 0 for an isolated vertex.
    std::vector<int> degrees;
};

/// Greedy simplicial-vertex elimination (smallest simplicial vertex first); nullopt iff not chordal.
std::optional<EliminationOrdering> perfect_elimination_ordering(const Clutter& g);

/// Π (t - d_i) over a perfect elimination ordering. Throws std::invalid_argument for non-chordal g.
IntPolynomial chromatic_polynomial_product(const Clutter& g);

/// Deletion–contraction with a per-call memo table.
IntPolynomial chromatic_polynomial_dc(const Clutter& g, const SizeGuards& guards = {});

struct WeightedGraph {
    Clutter graph;
    /// weights[i] belongs to graph.circuits()[i].
    std::vector<Rational> weights;

    Rational weight_of(VertexSet edge) const;
};

struct SpanningTree {
    /// Kept edges, lexicographic.
    std::vector<VertexSet> edges;
    Rational weight;
    /// Edges removed, in removal order (erasure route only).
    std::vector<VertexSet> removed;
};

/**
 * Repeatedly deletes the heaviest properly exposed edge (ties: lexicographically
 * first) until n - 1 edges remain. Throws std::invalid_argument unless the
 * graph is connected and chordal.
 */
SpanningTree mst_by_erasures(const WeightedGraph& wg);

/// Kruskal with lexicographic tie-breaking; independent oracle for mst_by_erasures.
SpanningTree kruskal_mst(const WeightedGraph& wg);

struct BoundaryComponent {
    VertexSet vertices;
    std::vector<VertexSet> edges;
    std::vector<VertexSet> bridges;
    bool two_edge_connected = false;
};

struct BoundaryReport {
    /// Properly exposed edges of g.
    std::vector<VertexSet> edges;
    std::vector<BoundaryComponent> components;
    bool chordal = false;
    /// Every component is 2-edge-connected.
    bool all_two_edge_connected = true;
};

/// ∂g, the subgraph formed by the properly exposed edges, split into components with bridge analysis.
BoundaryReport properly_exposed_subgraph(const Clutter& g);

/**
 * Random connected chordal graph: starts at K_n and removes randomly chosen
 * properly exposed edges for a random number of steps.
 */
Clutter random_connected_chordal_graph(int n, std::mt19937_64& rng);

/// Graph with bit k of `code` selecting the k-th edge of K_n in lexicographic order.
Clutter graph_from_code(int n, std::uint64_t code);

}  // namespace chordal
