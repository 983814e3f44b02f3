#include <doctest.h>

#include <algorithm>
#include <random>

#include "chordal/erasure.hpp"
#include "chordal/graph.hpp"
#include "chordal/shelling.hpp"
#include "fixtures.hpp"

using namespace chordal;
using V = std::vector<VertexSet>;

namespace {

/// Brute force: {[n] \ σ : σ not a face}, reduced to maximal sets.
SimplicialComplex brute_dual(const SimplicialComplex& c) {
    V gens;
    for_each_subset(VertexSet::range(c.n()), [&](VertexSet s) {
        if (!c.contains(s)) gens.push_back(VertexSet::range(c.n()) - s);
    });
    return SimplicialComplex(c.n(), gens);
}

}  // namespace

TEST_CASE("every facet order of a simplex boundary is a shelling") {
    V facets;
    for (VertexSet f : subsets_of_size(VertexSet::range(4), 3)) facets.push_back(f);
    std::sort(facets.begin(), facets.end(), [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });
    do {
        CHECK(verify_shelling(4, facets).valid);
    } while (std::next_permutation(facets.begin(), facets.end(),
                                   [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); }));
}

TEST_CASE("shelling verification") {
    ShellingCheck check = verify_shelling(4, {{1, 2}, {3, 4}});
    CHECK_FALSE(check.valid);
    CHECK(*check.failure_step == 2);

    check = verify_shelling(5, {{2, 4, 5}, {2, 3, 5}, {2, 3, 4}, {1, 4, 5}, {1, 3, 5}});
    CHECK(check.valid);
    CHECK(check.order.restricted_sizes() == std::vector<int>{0, 1, 2, 1, 2});

    CHECK_THROWS_AS(verify_shelling(4, {{1, 2}, {2, 3, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(verify_shelling(4, {{1, 2}, {1, 2}}), std::invalid_argument);
}

TEST_CASE("erasures and shellings correspond") {
    const ErasureCertificate g5 = *find_erasure_sequence(fixtures::g5()).certificate;
    const ShellingOrder order = erasures_to_shelling(g5);
    CHECK(order.facets.size() == 5);
    for (VertexSet f : order.facets) CHECK(f.size() == 3);
    CHECK(shelling_to_erasures(5, 2, order.facets).removed == g5.removed);

    CHECK(erasures_to_shelling(replay_erasures(5, 3, {})).facets.empty());

    const ShellingOrder c3 = erasures_to_shelling(replay_erasures(5, 3, {{1, 2, 5}, {1, 3, 5}, {1, 4, 5}}));
    CHECK(c3.restricted_sizes() == std::vector<int>{0, 1, 2});
    CHECK(c3.restricted_sets[2] == V{{2}, {3}});

    CHECK_THROWS_AS(shelling_to_erasures(5, 2, {{1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(shelling_to_erasures(4, 2, {{1, 2}, {3, 4}}), InvalidCertificate);
}

TEST_CASE("restricted-set sizes equal colon sizes step by step") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const Clutter g = random_connected_chordal_graph(6, rng);
        const ErasureCertificate cert = *find_erasure_sequence(g).certificate;
        const ShellingOrder order = erasures_to_shelling(cert);
        const QuotientOrderReport q = verify_quotient_order(cert.removal_ideal());
        CHECK(order.restricted_sizes() == q.ell_sequence());
        for (std::size_t j = 0; j < cert.removed.size(); ++j)
            CHECK((cert.removed[j].proper == (order.restricted_sizes()[j] < 6 - 2)));
    }
}

TEST_CASE("the number of full restricted sets does not depend on the shelling") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 12; ++trial) {
        const Clutter g = fixtures::random_clutter(5, 2, rng, 0.5);
        const auto cert = find_erasure_sequence(g).certificate;
        if (!cert || cert->removed.empty()) continue;
        const SimplicialComplex complex(5, erasures_to_shelling(*cert).facets);
        std::optional<long> reference;
        enumerate_shellings(complex, [&](const V& order) {
            const auto sizes = verify_shelling(5, order).order.restricted_sizes();
            const long full = std::count(sizes.begin(), sizes.end(), 3);
            if (!reference) reference = full;
            CHECK(full == *reference);
            return true;
        });
    }
}

TEST_CASE("extendable shellability") {
    CHECK(is_extendably_shellable(SimplicialComplex::skeleton(5, 2)).extendable);
    CHECK(is_extendably_shellable(SimplicialComplex::skeleton(6, 3)).extendable);
    CHECK(is_extendably_shellable(SimplicialComplex::skeleton(5, 3)).extendable);

    const ExtendabilityReport r = is_extendably_shellable(SimplicialComplex(4, {{1, 2}, {3, 4}}));
    CHECK_FALSE(r.extendable);
    CHECK(r.stuck_shelling.size() == 1);

    CHECK_THROWS_AS(is_extendably_shellable(SimplicialComplex(4, {{1, 2}, {2, 3, 4}})), std::invalid_argument);
    SizeGuards tight;
    tight.extendable_max_facets = 5;
    CHECK_THROWS_AS(is_extendably_shellable(SimplicialComplex::skeleton(5, 2), tight), SizeGuardError);
}

TEST_CASE("Alexander duality") {
    CHECK(alexander_dual(SimplicialComplex::simplex(5)).is_void());
    CHECK(alexander_dual(SimplicialComplex::skeleton(4, 2)) == SimplicialComplex::irrelevant(4));

    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        V gens;
        for (int i = 0; i < 4; ++i) gens.push_back(VertexSet(std::uniform_int_distribution<std::uint64_t>(0, 63)(rng)));
        const SimplicialComplex c(6, gens);
        const SimplicialComplex dual = alexander_dual(c);
        CHECK(dual == brute_dual(c));
        V complements;
        for (VertexSet f : dual.facets()) complements.push_back(VertexSet::range(6) - f);
        std::sort(complements.begin(), complements.end(), LexLess{});
        CHECK(minimal_nonfaces(c) == complements);
        CHECK(alexander_dual(dual) == c);
    }
}

TEST_CASE("contractible complexes with a tree dual graph") {
    // Facets [5] \ e for e outside the star at 1.
    V star_facets, path_facets;
    const V star{{1, 2}, {1, 3}, {1, 4}, {1, 5}}, path{{1, 2}, {2, 3}, {3, 4}, {4, 5}};
    for (VertexSet e : subsets_of_size(VertexSet::range(5), 2)) {
        if (std::find(star.begin(), star.end(), e) == star.end()) star_facets.push_back(VertexSet::range(5) - e);
        if (std::find(path.begin(), path.end(), e) == path.end()) path_facets.push_back(VertexSet::range(5) - e);
    }
    ContractibleExtendableReport r = check_contractible_extendable(SimplicialComplex(5, star_facets));
    CHECK(r.hypotheses_hold);
    CHECK(r.extendable);
    CHECK(r.dual_graph_edges == star);
    CHECK(r.dual_graph_is_tree);

    r = check_contractible_extendable(SimplicialComplex(5, path_facets));
    CHECK(r.hypotheses_hold);
    CHECK(r.extendable);

    r = check_contractible_extendable(SimplicialComplex::skeleton(5, 2));
    CHECK_FALSE(r.hypotheses_hold);
    CHECK_FALSE(r.failed_hypotheses.empty());
}
