#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "chordal/clutter.hpp"
#include "chordal/homology.hpp"
#include "chordal/monomial_ideal.hpp"

namespace chordal {

/// One step of an erasure sequence.
struct Removal {
    VertexSet circuit;
    /// The unique maximal clique containing the circuit just before removal.
    VertexSet clique;
    /// n - |clique|; also the number of variables in the matching colon ideal.
    int k = 0;
    bool proper = false;

    bool operator==(const Removal&) const = default;
};

/**
 * A replayable record of how a clutter is reached from K_n^d by removing
 * exposed circuits one at a time.
 */
struct ErasureCertificate {
    int n = 0;
    int d = 0;
    std::vector<Removal> removed;
    Clutter result;

    std::vector<int> k_sequence() const;
    bool all_proper() const;
    /// Removed circuits in order, as a linear-quotient candidate for the complement ideal.
    SquarefreeIdeal removal_ideal() const;
};

/// Thrown when a certificate does not replay.
class InvalidCertificate : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * Replays `circuits` from K_n^d, checking each is exposed (and properly
 * exposed when required) at its turn. Throws InvalidCertificate otherwise.
 */
ErasureCertificate replay_erasures(int n, int d, const std::vector<VertexSet>& circuits, bool require_proper = false);

/// Re-derives cliques, k and proper flags from scratch and compares with the stored ones.
void validate_certificate(const ErasureCertificate& cert);

struct ErasureSearchOptions {
    bool require_proper = false;
    /// Remove the lexicographically first eligible circuit and never backtrack.
    bool greedy_only = false;
};

struct ErasureSearchResult {
    std::optional<ErasureCertificate> certificate;
    std::size_t nodes = 0;
    std::size_t backtracks = 0;
    /// For greedy-only runs that fail: the circuits removed before getting stuck.
    std::vector<VertexSet> stuck_after;
};

/**
 * Searches for an exposed-circuit erasure sequence from K_n^d down to
 * `target`. Greedy lexicographic choice with full backtracking; failed
 * states (sets of circuits already removed) are memoized.
 */
ErasureSearchResult find_erasure_sequence(const Clutter& target, const ErasureSearchOptions& options = {});

/// Calls visit() on every erasure sequence reaching target; stops early when visit returns false.
/// Returns the number of sequences visited.
std::size_t enumerate_erasure_sequences(const Clutter& target, bool require_proper,
                                        const std::function<bool(const ErasureCertificate&)>& visit);

/// β_i = Σ_j C(k_j, i), i = 0..max k_j. Empty for the empty certificate.
std::vector<std::int64_t> betti_from_erasures(const ErasureCertificate& cert);
std::vector<std::int64_t> betti_from_k_sequence(const std::vector<int>& ks);

/// Indices {0..k} where adding x_e changes β_i, with k = n - |K|.
struct BettiContribution {
    int max_index = 0;
    bool small = false;

    std::vector<int> indices() const;
    bool operator==(const BettiContribution&) const = default;
};

/// Throws std::invalid_argument when e is not exposed in c.
BettiContribution betti_contribution(const Clutter& c, VertexSet e);

/// Reachable from K_n^d by exposed (or, with require_proper, properly exposed) removals.
bool is_erasure_chordal(const Clutter& c, bool require_proper = false);

struct HVectorCheck {
    std::vector<std::int64_t> h;
    /// counts[i] = |{j : k_j = i}|, same length as h.
    std::vector<std::int64_t> k_counts;
    bool equal = false;
};

/// Compares the h-vector of the complex with facets [n] \ e_j (e_j removed) against the k_j counts.
HVectorCheck h_vector_check(const ErasureCertificate& cert);

/**
 * Ridge chordality: some sequence of simplicial (d-1)-sets, each deleting
 * every circuit that contains it, empties the clutter. A ridge R is simplicial
 * when the clutter induced on R plus its circuit-neighbours is complete.
 * Requires d >= 2. Decided by memoized backtracking.
 */
bool is_ridge_chordal(const Clutter& c);

/// Simplicial ridges of c, lexicographic.
std::vector<VertexSet> simplicial_ridges(const Clutter& c);

/**
 * Visits every clutter reachable from K_n^d by exposed-circuit removals
 * (each visited once), in breadth-first order. The number of circuits of
 * K_n^d must not exceed 64.
 */
std::size_t for_each_erasure_reachable(int n, int d, const std::function<void(const Clutter&)>& visit);

}  // namespace chordal
