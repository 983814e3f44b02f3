#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "chordal/clutter.hpp"
#include "chordal/vertex_set.hpp"

namespace fixtures {

using chordal::Clutter;
using chordal::VertexSet;

/// Chordal graph on [5]: triangle 345 with pendant path 1-2-5.
inline Clutter g5() { return Clutter(5, 2, {{1, 2}, {2, 5}, {3, 4}, {3, 5}, {4, 5}}); }

/// K_5^3 with 125, 135, 145 removed.
inline Clutter c3() { return Clutter::complete(5, 3).without({1, 2, 5}).without({1, 3, 5}).without({1, 4, 5}); }

/// K_5^3 with 123, 125, 135 removed.
inline Clutter d_clutter() { return Clutter::complete(5, 3).without({1, 2, 3}).without({1, 2, 5}).without({1, 3, 5}); }

inline Clutter c4() { return Clutter(4, 2, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}); }

inline Clutter random_clutter(int n, int d, std::mt19937_64& rng, double density = 0.5) {
    std::bernoulli_distribution keep(density);
    std::vector<VertexSet> circuits;
    for (VertexSet s : chordal::subsets_of_size(VertexSet::range(n), d))
        if (keep(rng)) circuits.push_back(s);
    return Clutter(n, d, circuits);
}

/// Brute force: maximal cliques of c by scanning every subset of [n].
inline std::vector<VertexSet> brute_maximal_cliques(const Clutter& c) {
    std::vector<VertexSet> cliques;
    chordal::for_each_subset(c.ground(), [&](VertexSet s) {
        bool clique = true;
        chordal::for_each_subset_of_size(s, c.d(), [&](VertexSet t) { clique = clique && c.contains(t); });
        if (clique) cliques.push_back(s);
    });
    std::vector<VertexSet> maximal;
    for (VertexSet s : cliques) {
        const bool dominated = std::any_of(cliques.begin(), cliques.end(), [&](VertexSet t) { return t != s && s.subset_of(t); });
        if (!dominated) maximal.push_back(s);
    }
    std::sort(maximal.begin(), maximal.end(), chordal::LexLess{});
    return maximal;
}

}  // namespace fixtures
