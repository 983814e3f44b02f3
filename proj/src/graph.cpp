#include "chordal/graph.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace chordal {

namespace {

void require_graph(const Clutter& g) {
    if (g.d() != 2) throw std::invalid_argument("expected a graph (d = 2), got d = " + std::to_string(g.d()));
}

bool is_clique_adj(const std::vector<VertexSet>& adj, VertexSet s) {
    for (int v : s.vertices())
        if (!s.without(v).subset_of(adj[static_cast<std::size_t>(v)])) return false;
    return true;
}

/// Vertices reachable from `start` using only vertices in `allowed`.
VertexSet reach(const std::vector<VertexSet>& adj, int start, VertexSet allowed) {
    VertexSet seen = VertexSet::singleton(start);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        for (int v : frontier.vertices()) next |= adj[static_cast<std::size_t>(v)];
        next = (next & allowed) - seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

Clutter graph_from_adjacency(int n, const std::vector<VertexSet>& adj) {
    std::vector<VertexSet> edges;
    for (int u = 1; u <= n; ++u)
        for (int v : adj[static_cast<std::size_t>(u)].vertices())
            if (v > u) edges.push_back(VertexSet{u, v});
    return Clutter(n, 2, std::move(edges));
}

}  // namespace

std::vector<VertexSet> adjacency(const Clutter& g) {
    require_graph(g);
    std::vector<VertexSet> adj(static_cast<std::size_t>(g.n()) + 1);
    for (VertexSet e : g.circuits()) {
        const int u = e.min(), v = e.max();
        adj[static_cast<std::size_t>(u)] = adj[static_cast<std::size_t>(u)].with(v);
        adj[static_cast<std::size_t>(v)] = adj[static_cast<std::size_t>(v)].with(u);
    }
    return adj;
}

bool is_connected(const Clutter& g) {
    if (g.n() <= 1) return true;
    return reach(adjacency(g), 1, g.ground()) == g.ground();
}

ExposedStatus exposed_edge_status(const std::vector<VertexSet>& adj, VertexSet edge) {
    const int u = edge.min(), v = edge.max();
    if (!adj[static_cast<std::size_t>(u)].contains(v))
        throw std::invalid_argument("edge " + edge.to_string() + " not in graph");
    const VertexSet common = adj[static_cast<std::size_t>(u)] & adj[static_cast<std::size_t>(v)];
    ExposedStatus status;
    if (is_clique_adj(adj, common)) {
        status.clique = common | edge;
        status.proper = !common.empty();
    }
    return status;
}

bool is_chordal_classic(const Clutter& g, const SizeGuards& guards) {
    require_graph(g);
    check_guard("induced_cycle_max_n", guards.induced_cycle_max_n, g.n());
    const auto adj = adjacency(g);
    bool chordal = true;
    for_each_subset(g.ground(), [&](VertexSet s) {
        if (!chordal || s.size() < 4) return;
        for (int v : s.vertices())
            if ((adj[static_cast<std::size_t>(v)] & s).size() != 2) return;
        if (reach(adj, s.min(), s) == s) chordal = false;
    });
    return chordal;
}

std::optional<EliminationOrdering> perfect_elimination_ordering(const Clutter& g) {
    require_graph(g);
    const auto adj = adjacency(g);
    VertexSet remaining = g.ground();
    EliminationOrdering peo;
    while (!remaining.empty()) {
        bool found = false;
        for (int v : remaining.vertices()) {
            const VertexSet later = adj[static_cast<std::size_t>(v)] & remaining;
            if (!is_clique_adj(adj, later)) continue;
            peo.order.push_back(v);
            peo.degrees.push_back(later.size());
            remaining.erase(v);
            found = true;
            break;
        }
        if (!found) return std::nullopt;
    }
    return peo;
}

IntPolynomial chromatic_polynomial_product(const Clutter& g) {
    const auto peo = perfect_elimination_ordering(g);
    if (!peo) throw std::invalid_argument("graph is not chordal");
    IntPolynomial p = IntPolynomial::constant(1);
    for (int d : peo->degrees) p = p * IntPolynomial::linear_root(d);
    return p;
}

IntPolynomial chromatic_polynomial_dc(const Clutter& g, const SizeGuards& guards) {
    require_graph(g);
    check_guard("deletion_contraction_max_n", guards.deletion_contraction_max_n, g.n());
    if (g.n() > 10) throw SizeGuardError("deletion_contraction_max_n", 10, g.n());

    // 0-based adjacency masks; key packs the vertex count and the edge set.
    using Adj = std::vector<std::uint32_t>;
    auto key_of = [](const Adj& a) {
        std::uint64_t key = 0;
        int bit = 0;
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = i + 1; j < a.size(); ++j, ++bit)
                if ((a[i] >> j) & 1U) key |= std::uint64_t{1} << bit;
        return key | (static_cast<std::uint64_t>(a.size()) << 48);
    };
    std::unordered_map<std::uint64_t, IntPolynomial> memo;

    std::function<IntPolynomial(const Adj&)> solve = [&](const Adj& a) -> IntPolynomial {
        const int n = static_cast<int>(a.size());
        int edges = 0;
        for (std::uint32_t m : a) edges += std::popcount(m);
        edges /= 2;
        if (edges == 0) return IntPolynomial::monomial(n);
        if (edges == n * (n - 1) / 2) return IntPolynomial::falling_factorial(n);
        const std::uint64_t key = key_of(a);
        if (auto it = memo.find(key); it != memo.end()) return it->second;

        std::size_t u = 0;
        while (a[u] == 0) ++u;
        const std::size_t v = static_cast<std::size_t>(std::countr_zero(a[u]));

        Adj deleted = a;
        deleted[u] &= ~(1U << v);
        deleted[v] &= ~(1U << u);

        // Merge v into u, then drop index v.
        Adj merged = deleted;
        merged[u] |= merged[v];
        for (std::size_t w = 0; w < a.size(); ++w)
            if ((merged[v] >> w) & 1U) merged[w] |= 1U << u;
        merged[u] &= ~((1U << u) | (1U << v));
        Adj contracted;
        for (std::size_t w = 0; w < a.size(); ++w) {
            if (w == v) continue;
            const std::uint32_t m = merged[w] & ~(1U << v);
            const std::uint32_t low = m & ((1U << v) - 1);
            contracted.push_back(low | ((m >> (v + 1)) << v));
        }

        IntPolynomial p = solve(deleted) - solve(contracted);
        memo.emplace(key, p);
        return p;
    };

    Adj a(static_cast<std::size_t>(g.n()), 0);
    for (VertexSet e : g.circuits()) {
        const int u = e.min() - 1, v = e.max() - 1;
        a[static_cast<std::size_t>(u)] |= 1U << v;
        a[static_cast<std::size_t>(v)] |= 1U << u;
    }
    return solve(a);
}

Rational WeightedGraph::weight_of(VertexSet edge) const {
    const auto& cs = graph.circuits();
    const auto it = std::lower_bound(cs.begin(), cs.end(), edge, LexLess{});
    if (it == cs.end() || *it != edge) throw std::invalid_argument("edge " + edge.to_string() + " not in graph");
    return weights[static_cast<std::size_t>(it - cs.begin())];
}

namespace {

void require_weights(const WeightedGraph& wg) {
    require_graph(wg.graph);
    if (wg.weights.size() != wg.graph.size()) throw std::invalid_argument("one weight per edge is required");
}

Rational total_weight(const WeightedGraph& wg, const std::vector<VertexSet>& edges) {
    Rational sum = 0;
    for (VertexSet e : edges) sum += wg.weight_of(e);
    return sum;
}

}  // namespace

SpanningTree mst_by_erasures(const WeightedGraph& wg) {
    require_weights(wg);
    const Clutter& g = wg.graph;
    if (!is_connected(g)) throw std::invalid_argument("graph is not connected");
    if (!perfect_elimination_ordering(g)) throw std::invalid_argument("graph is not chordal");

    auto adj = adjacency(g);
    std::vector<VertexSet> edges = g.circuits();
    std::vector<Rational> weights = wg.weights;
    SpanningTree tree;
    while (static_cast<int>(edges.size()) > std::max(g.n() - 1, 0)) {
        std::optional<std::size_t> best;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (!exposed_edge_status(adj, edges[i]).proper) continue;
            if (!best || weights[i] > weights[*best]) best = i;
        }
        if (!best) throw std::logic_error("no properly exposed edge in a connected chordal graph with a cycle");
        const VertexSet e = edges[*best];
        adj[static_cast<std::size_t>(e.min())].erase(e.max());
        adj[static_cast<std::size_t>(e.max())].erase(e.min());
        tree.removed.push_back(e);
        edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(*best));
        weights.erase(weights.begin() + static_cast<std::ptrdiff_t>(*best));
    }
    tree.edges = std::move(edges);
    tree.weight = total_weight(wg, tree.edges);
    return tree;
}

SpanningTree kruskal_mst(const WeightedGraph& wg) {
    require_weights(wg);
    std::vector<std::size_t> idx(wg.graph.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    // Circuits are lexicographic already, so a stable sort keeps lex tie-breaking.
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return wg.weights[a] < wg.weights[b]; });

    std::vector<int> parent(static_cast<std::size_t>(wg.graph.n()) + 1);
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] =
            parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    SpanningTree tree;
    for (std::size_t i : idx) {
        const VertexSet e = wg.graph.circuits()[i];
        const int a = find(e.min()), b = find(e.max());
        if (a == b) continue;
        parent[static_cast<std::size_t>(a)] = b;
        tree.edges.push_back(e);
    }
    std::sort(tree.edges.begin(), tree.edges.end(), LexLess{});
    tree.weight = total_weight(wg, tree.edges);
    return tree;
}

BoundaryReport properly_exposed_subgraph(const Clutter& g) {
    require_graph(g);
    const auto adj = adjacency(g);
    BoundaryReport report;
    report.chordal = perfect_elimination_ordering(g).has_value();
    for (VertexSet e : g.circuits())
        if (exposed_edge_status(adj, e).proper) report.edges.push_back(e);

    std::vector<VertexSet> badj(static_cast<std::size_t>(g.n()) + 1);
    VertexSet touched;
    for (VertexSet e : report.edges) {
        badj[static_cast<std::size_t>(e.min())] = badj[static_cast<std::size_t>(e.min())].with(e.max());
        badj[static_cast<std::size_t>(e.max())] = badj[static_cast<std::size_t>(e.max())].with(e.min());
        touched |= e;
    }

    // Bridges by DFS low-link.
    std::vector<int> disc(static_cast<std::size_t>(g.n()) + 1, 0), low(disc.size(), 0);
    int timer = 0;
    std::vector<VertexSet> bridges;
    std::function<void(int, int)> dfs = [&](int v, int from) {
        disc[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = ++timer;
        for (int w : badj[static_cast<std::size_t>(v)].vertices()) {
            if (w == from) continue;
            if (disc[static_cast<std::size_t>(w)] != 0) {
                low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], disc[static_cast<std::size_t>(w)]);
                continue;
            }
            dfs(w, v);
            low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], low[static_cast<std::size_t>(w)]);
            if (low[static_cast<std::size_t>(w)] > disc[static_cast<std::size_t>(v)]) bridges.push_back(VertexSet{v, w});
        }
    };

    VertexSet left = touched;
    while (!left.empty()) {
        BoundaryComponent comp;
        comp.vertices = reach(badj, left.min(), touched);
        left -= comp.vertices;
        bridges.clear();
        dfs(comp.vertices.min(), 0);
        for (VertexSet e : report.edges)
            if (e.subset_of(comp.vertices)) comp.edges.push_back(e);
        std::sort(bridges.begin(), bridges.end(), LexLess{});
        comp.bridges = bridges;
        comp.two_edge_connected = bridges.empty();
        report.all_two_edge_connected = report.all_two_edge_connected && comp.two_edge_connected;
        report.components.push_back(std::move(comp));
    }
    return report;
}

Clutter random_connected_chordal_graph(int n, std::mt19937_64& rng) {
    if (n < 1 || n > kMaxVertices) throw std::invalid_argument("n outside 1..64");
    std::vector<VertexSet> adj(static_cast<std::size_t>(n) + 1);
    for (int v = 1; v <= n; ++v) adj[static_cast<std::size_t>(v)] = VertexSet::range(n).without(v);
    const auto max_edges = binomial(n, 2);
    const auto min_edges = n - 1;
    std::uniform_int_distribution<std::int64_t> target_dist(min_edges, max_edges);
    const auto target = target_dist(rng);

    for (auto edges = max_edges; edges > target; --edges) {
        std::vector<VertexSet> candidates;
        for (int u = 1; u <= n; ++u)
            for (int v : adj[static_cast<std::size_t>(u)].vertices())
                if (v > u && exposed_edge_status(adj, VertexSet{u, v}).proper) candidates.push_back(VertexSet{u, v});
        if (candidates.empty()) break;
        std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
        const VertexSet e = candidates[pick(rng)];
        adj[static_cast<std::size_t>(e.min())].erase(e.max());
        adj[static_cast<std::size_t>(e.max())].erase(e.min());
    }
    return graph_from_adjacency(n, adj);
}

Clutter graph_from_code(int n, std::uint64_t code) {
    std::vector<VertexSet> edges;
    int bit = 0;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v, ++bit)
            if (bit < 64 && ((code >> bit) & 1U)) edges.push_back(VertexSet{u, v});
    return Clutter(n, 2, std::move(edges));
}

}  // namespace chordal
