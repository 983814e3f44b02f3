#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "chordal/errors.hpp"

namespace chordal {

/// Outcome of one named property over all cases of a suite.
struct CheckTally {
    std::string name;
    std::size_t checked = 0;
    std::size_t failed = 0;
    /// Descriptions of the first failing cases, ordered by case index.
    std::vector<std::string> witnesses;
};

struct SuiteReport {
    std::string name;
    std::size_t cases = 0;
    std::vector<CheckTally> checks;
    /// Counts that are reported but not asserted (e.g. how many inputs were chordal).
    std::vector<std::pair<std::string, std::size_t>> observations;
    double seconds = 0;

    bool passed() const;
    /// Throws std::out_of_range for an unknown check name.
    const CheckTally& check(const std::string& name) const;
    std::size_t observation(const std::string& name) const;
};

struct SuiteOptions {
    int jobs = 1;
    std::uint64_t seed = 1;
    SizeGuards guards;
    std::size_t max_witnesses = 5;
};

/**
 * Every graph on n vertices: induced-cycle chordality, perfect elimination,
 * erasure reachability, linear resolution over GF(2) and Q (tables must agree)
 * and linear quotients of the complement ideal must all give the same verdict.
 * Certificates found on the way are cross-checked as well.
 */
SuiteReport graph_chordality_suite(int n, const SuiteOptions& options = {});

/// Every graph on n = 2..max_n vertices: connected iff pdim < n - 2.
SuiteReport connectivity_suite(int max_n, const SuiteOptions& options = {});

/**
 * Every d-clutter on n vertices: reachable by properly exposed erasures iff
 * the complement ideal has linear quotients and pdim < n - d (the zero ideal
 * counts as having pdim below every bound).
 */
SuiteReport clutter_erasure_suite(int n, int d, const SuiteOptions& options = {});

/// Product formula against deletion–contraction on every chordal graph with n = 2..max_n.
SuiteReport chromatic_suite(int max_n, const SuiteOptions& options = {});

/// Erasure MST against Kruskal on `count` seeded random connected chordal graphs with 2..max_n vertices.
SuiteReport mst_suite(std::size_t count, int max_n, const SuiteOptions& options = {});

/// Every component of the properly exposed subgraph is 2-edge-connected, for every chordal graph with n = 2..max_n.
SuiteReport boundary_suite(int max_n, const SuiteOptions& options = {});

/// The (n-3)-skeleton of the simplex on [n] is extendably shellable, and matches the erasure encoding.
SuiteReport skeleton_suite(int n, const SuiteOptions& options = {});

// Probes for open questions. They count counterexample candidates and never assert.

/// Linear quotients of the complement ideal ⟹ ridge-chordal, over every d-clutter on n vertices.
SuiteReport simon_probe(int n, int d, const SuiteOptions& options = {});

/// Every nonempty clutter reachable from K_n^d by exposed erasures still has an exposed circuit.
SuiteReport exposed_reachability_probe(int n, int d, const SuiteOptions& options = {});

/// Every chordal spanning subgraph H of a chordal graph G on n vertices is reachable from G by exposed erasures.
SuiteReport subgraph_probe(int n, const SuiteOptions& options = {});

/// Induced-cycle chordality ⟺ linear resolution of the complement ideal, every graph on n vertices.
SuiteReport froberg_probe(int n, const SuiteOptions& options = {});

}  // namespace chordal
