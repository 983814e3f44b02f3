#include "chordal/clutter.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace chordal {

Clutter::Clutter(int n, int d, std::vector<VertexSet> circuits) : n_(n), d_(d), circuits_(std::move(circuits)) {
    if (n < 1) throw std::invalid_argument("clutter needs at least one vertex");
    if (n > kMaxVertices) throw std::invalid_argument("clutters are limited to 64 vertices, got " + std::to_string(n));
    if (d < 1 || d > n) throw std::invalid_argument("circuit size must satisfy 1 <= d <= n");
    const VertexSet ground = VertexSet::range(n);
    for (VertexSet e : circuits_) {
        if (!e.subset_of(ground)) throw std::invalid_argument("circuit " + e.to_string() + " leaves 1..n");
        if (e.size() != d)
            throw std::invalid_argument("circuit " + e.to_string() + " does not have " + std::to_string(d) +
                                        " vertices");
    }
    std::sort(circuits_.begin(), circuits_.end(), LexLess{});
    if (std::adjacent_find(circuits_.begin(), circuits_.end()) != circuits_.end())
        throw std::invalid_argument("duplicate circuit");
    sorted_bits_.reserve(circuits_.size());
    for (VertexSet e : circuits_) sorted_bits_.push_back(e.bits());
    std::sort(sorted_bits_.begin(), sorted_bits_.end());
}

Clutter Clutter::complete(int n, int d) { return Clutter(n, d, subsets_of_size(VertexSet::range(n), d)); }

bool Clutter::contains(VertexSet e) const {
    return std::binary_search(sorted_bits_.begin(), sorted_bits_.end(), e.bits());
}

Clutter Clutter::without(VertexSet e) const {
    std::vector<VertexSet> rest;
    rest.reserve(circuits_.size());
    for (VertexSet f : circuits_)
        if (f != e) rest.push_back(f);
    return Clutter(n_, d_, std::move(rest));
}

Clutter Clutter::with(VertexSet e) const {
    std::vector<VertexSet> all = circuits_;
    all.push_back(e);
    return Clutter(n_, d_, std::move(all));
}

Clutter complement(const Clutter& c) {
    std::vector<VertexSet> out;
    for_each_subset_of_size(c.ground(), c.d(), [&](VertexSet s) {
        if (!c.contains(s)) out.push_back(s);
    });
    return Clutter(c.n(), c.d(), std::move(out));
}

namespace {

// s is assumed to be a clique; checks whether s ∪ {v} is one.
bool extends_clique(const Clutter& c, VertexSet s, int v) {
    if (s.size() + 1 < c.d()) return true;
    bool ok = true;
    for_each_subset_of_size(s, c.d() - 1, [&](VertexSet t) {
        if (ok && !c.contains(t.with(v))) ok = false;
    });
    return ok;
}

void expand(const Clutter& c, VertexSet clique, VertexSet candidates, VertexSet excluded,
            std::vector<VertexSet>& out) {
    if (candidates.empty() && excluded.empty()) {
        out.push_back(clique);
        return;
    }
    // Graph pivoting is only sound when clique extension is a pairwise relation.
    VertexSet branch = candidates;
    if (c.d() == 2) {
        int best_pivot = 0;
        int best_cover = -1;
        for (int u : (candidates | excluded).vertices()) {
            int cover = 0;
            for (int v : candidates.vertices())
                if (v != u && c.contains(VertexSet{u, v})) ++cover;
            if (cover > best_cover) {
                best_cover = cover;
                best_pivot = u;
            }
        }
        for (int v : candidates.vertices())
            if (v != best_pivot && c.contains(VertexSet{best_pivot, v})) branch.erase(v);
    }
    for (int v : branch.vertices()) {
        const VertexSet grown = clique.with(v);
        VertexSet next_candidates;
        VertexSet next_excluded;
        for (int u : candidates.without(v).vertices())
            if (extends_clique(c, grown, u)) next_candidates.insert(u);
        for (int u : excluded.vertices())
            if (extends_clique(c, grown, u)) next_excluded.insert(u);
        expand(c, grown, next_candidates, next_excluded, out);
        candidates.erase(v);
        excluded.insert(v);
    }
}

}  // namespace

bool is_clique(const Clutter& c, VertexSet s) {
    if (s.empty()) throw std::invalid_argument("clique query on the empty set");
    if (!s.subset_of(c.ground())) throw std::invalid_argument("vertex set " + s.to_string() + " leaves 1..n");
    if (s.size() < c.d()) return true;
    bool ok = true;
    for_each_subset_of_size(s, c.d(), [&](VertexSet t) {
        if (ok && !c.contains(t)) ok = false;
    });
    return ok;
}

VertexSet clique_extensions(const Clutter& c, VertexSet s) {
    VertexSet out;
    for (int v : (c.ground() - s).vertices())
        if (extends_clique(c, s, v)) out.insert(v);
    return out;
}

std::vector<VertexSet> maximal_cliques_containing(const Clutter& c, VertexSet e) {
    if (!c.contains(e)) throw std::invalid_argument(e.to_string() + " is not a circuit");
    std::vector<VertexSet> out;
    expand(c, e, clique_extensions(c, e), VertexSet{}, out);
    std::sort(out.begin(), out.end(), LexLess{});
    return out;
}

std::vector<VertexSet> maximal_cliques(const Clutter& c) {
    std::vector<VertexSet> out;
    expand(c, VertexSet{}, clique_extensions(c, VertexSet{}), VertexSet{}, out);
    std::sort(out.begin(), out.end(), LexLess{});
    return out;
}

ExposedStatus exposed_status(const Clutter& c, VertexSet e) {
    if (!c.contains(e)) throw std::invalid_argument(e.to_string() + " is not a circuit");
    const VertexSet closure = e | clique_extensions(c, e);
    if (!is_clique(c, closure)) return {};
    return {closure, closure.size() > c.d()};
}

std::vector<VertexSet> exposed_circuits(const Clutter& c, bool require_proper) {
    std::vector<VertexSet> out;
    for (VertexSet e : c.circuits()) {
        const ExposedStatus st = exposed_status(c, e);
        if (st.exposed() && (st.proper || !require_proper)) out.push_back(e);
    }
    return out;
}

SimplicialComplex clique_complex(const Clutter& c) { return SimplicialComplex(c.n(), maximal_cliques(c)); }

}  // namespace chordal
