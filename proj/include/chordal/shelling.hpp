#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "chordal/erasure.hpp"
#include "chordal/errors.hpp"
#include "chordal/simplicial_complex.hpp"

namespace chordal {

/**
 * A facet order F_1..F_s of a pure complex, together with the restricted
 * set of every facet: the codimension-one faces of F_k lying in
 * F_1 ∪ ... ∪ F_{k-1}.
 */
struct ShellingOrder {
    int n = 0;
    std::vector<VertexSet> facets;
    std::vector<std::vector<VertexSet>> restricted_sets;

    std::vector<int> restricted_sizes() const;
};

struct ShellingCheck {
    bool valid = false;
    ShellingOrder order;
    /// 1-based position of the first facet whose intersection with its predecessors is not pure.
    std::optional<std::size_t> failure_step;
};

/**
 * Checks the facet order `facets` (all of one size, pairwise distinct).
 * Throws std::invalid_argument for mixed facet sizes.
 */
ShellingCheck verify_shelling(int n, const std::vector<VertexSet>& facets);

/// F_i = [n] \ e_i.
ShellingOrder erasures_to_shelling(const ErasureCertificate& cert);

/**
 * Inverse of erasures_to_shelling: e_i = [n] \ F_i, replayed as an erasure
 * sequence. Throws std::invalid_argument when the facets do not have n - d
 * elements and InvalidCertificate when the order is not a shelling.
 */
ErasureCertificate shelling_to_erasures(int n, int d, const std::vector<VertexSet>& facets);

struct ExtendabilityReport {
    bool extendable = false;
    /// Facet subsets reachable by partial shellings.
    std::size_t reachable_states = 0;
    /// A partial shelling that cannot be continued, when not extendable.
    std::vector<VertexSet> stuck_shelling;
};

/**
 * Exhaustive extendable-shellability check for a pure complex. A partial
 * shelling's future depends only on its facet set, so the search runs over
 * facet subsets. Throws SizeGuardError beyond guards.extendable_max_facets
 * and std::invalid_argument for a non-pure complex.
 */
ExtendabilityReport is_extendably_shellable(const SimplicialComplex& complex, const SizeGuards& guards = {});

/// One shelling of a pure complex (depth-first search), if it has any.
std::optional<std::vector<VertexSet>> find_shelling(const SimplicialComplex& complex, const SizeGuards& guards = {});

/// Calls visit() on every shelling order of a pure complex; stops when visit returns false.
std::size_t enumerate_shellings(const SimplicialComplex& complex,
                                const std::function<bool(const std::vector<VertexSet>&)>& visit);

struct ContractibleExtendableReport {
    bool hypotheses_hold = false;
    /// Human-readable reasons for every failed hypothesis.
    std::vector<std::string> failed_hypotheses;
    bool extendable = false;
    /// Edges e with [n] \ e not a facet.
    std::vector<VertexSet> dual_graph_edges;
    bool dual_graph_is_tree = false;
};

/**
 * For an (n-3)-dimensional complex on [n]: checks it is shellable, has
 * C(n,2) - n + 1 facets and is contractible (no restricted set of size n-2),
 * then decides extendability and inspects the dual graph. Hypothesis
 * failures are reported rather than thrown.
 */
ContractibleExtendableReport check_contractible_extendable(const SimplicialComplex& complex,
                                                           const SizeGuards& guards = {});

}  // namespace chordal
