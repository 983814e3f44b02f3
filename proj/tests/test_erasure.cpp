#include <doctest.h>

#include <algorithm>
#include <random>

#include "chordal/erasure.hpp"
#include "chordal/homology.hpp"
#include "fixtures.hpp"

using namespace chordal;
using V = std::vector<VertexSet>;
using I64 = std::vector<std::int64_t>;

namespace {

V removed_circuits(const ErasureCertificate& cert) {
    V out;
    for (const Removal& r : cert.removed) out.push_back(r.circuit);
    return out;
}

}  // namespace

TEST_CASE("erasure search on the five-vertex chordal graph") {
    const auto r = find_erasure_sequence(fixtures::g5(), {.require_proper = true});
    REQUIRE(r.certificate.has_value());
    const ErasureCertificate& cert = *r.certificate;
    CHECK(removed_circuits(cert) == V{{1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}});
    CHECK(cert.k_sequence() == std::vector<int>{0, 1, 2, 1, 2});
    CHECK(cert.removed[0].clique == VertexSet::range(5));
    CHECK(cert.removed[4].clique == VertexSet{2, 4, 5});
    CHECK(cert.all_proper());
    CHECK(cert.result == fixtures::g5());
    CHECK_NOTHROW(validate_certificate(cert));
}

TEST_CASE("erasure search failures and trivial targets") {
    CHECK_FALSE(find_erasure_sequence(fixtures::c4()).certificate.has_value());
    CHECK_FALSE(find_erasure_sequence(fixtures::c4(), {.require_proper = true}).certificate.has_value());
    const auto k = find_erasure_sequence(Clutter::complete(5, 3));
    REQUIRE(k.certificate.has_value());
    CHECK(k.certificate->removed.empty());
    const auto greedy = find_erasure_sequence(fixtures::c4(), {.greedy_only = true});
    CHECK_FALSE(greedy.certificate.has_value());
}

TEST_CASE("replay rejects bad certificates") {
    CHECK_THROWS_AS(replay_erasures(4, 2, {{1, 2}, {1, 2}}), InvalidCertificate);
    // Once 13 is gone, 24 lies in both 124 and 234.
    CHECK_THROWS_AS(replay_erasures(4, 2, {{1, 3}, {2, 4}, {1, 2}, {3, 4}}), InvalidCertificate);
    CHECK_THROWS_AS(replay_erasures(5, 3, {{1, 2, 5}, {1, 3, 5}, {1, 4, 5}}, true), InvalidCertificate);

    ErasureCertificate cert = replay_erasures(5, 3, {{1, 2, 5}, {1, 3, 5}, {1, 4, 5}});
    CHECK(cert.k_sequence() == std::vector<int>{0, 1, 2});
    CHECK(cert.result == fixtures::c3());
    cert.removed[1].k = 0;
    CHECK_THROWS_AS(validate_certificate(cert), InvalidCertificate);
}

TEST_CASE("Betti numbers from k-sequences") {
    CHECK(betti_from_k_sequence({0, 1, 2}) == I64{3, 3, 1});
    CHECK(betti_from_k_sequence({}).empty());
    CHECK(betti_from_k_sequence({0, 1, 1, 2, 2}) == I64{5, 6, 2});
    CHECK(betti_from_k_sequence({0, 1, 2, 1, 2}) == I64{5, 6, 2});
}

TEST_CASE("Betti contributions") {
    const Clutter before = Clutter::complete(5, 2).without({1, 3}).without({1, 4}).without({1, 5}).without({2, 3});
    BettiContribution b = betti_contribution(before, {2, 4});
    CHECK(b.indices() == std::vector<int>{0, 1, 2});
    CHECK(b.small);

    b = betti_contribution(Clutter::complete(5, 3).without({1, 2, 5}).without({1, 3, 5}), {1, 4, 5});
    CHECK(b.indices() == std::vector<int>{0, 1, 2});
    CHECK_FALSE(b.small);

    b = betti_contribution(Clutter::complete(5, 3), {2, 3, 4});
    CHECK(b.indices() == std::vector<int>{0});
    CHECK(b.small);

    CHECK_THROWS_AS(betti_contribution(fixtures::c3(), {2, 3, 4}), std::invalid_argument);
}

TEST_CASE("erasure chordality") {
    CHECK(is_erasure_chordal(fixtures::g5()));
    CHECK_FALSE(is_erasure_chordal(fixtures::c4()));
    CHECK(is_erasure_chordal(fixtures::c3()));
    CHECK_FALSE(is_erasure_chordal(fixtures::c3(), true));
}

TEST_CASE("h-vector of the dual complex counts the k-values") {
    HVectorCheck h = h_vector_check(replay_erasures(5, 3, {{1, 2, 5}, {1, 3, 5}, {1, 4, 5}}));
    CHECK(h.h == I64{1, 1, 1});
    CHECK(h.equal);

    h = h_vector_check(*find_erasure_sequence(fixtures::g5()).certificate);
    CHECK(h.h == I64{1, 2, 2, 0});
    CHECK(h.equal);

    h = h_vector_check(replay_erasures(5, 3, {}));
    CHECK(h.equal);
}

TEST_CASE("the multiset of k-values does not depend on the certificate") {
    std::mt19937_64 rng(21);
    std::vector<Clutter> targets{fixtures::g5(), fixtures::c3()};
    for (int trial = 0; trial < 12; ++trial) {
        const Clutter c = fixtures::random_clutter(5, 2 + trial % 2, rng, 0.7);
        if (is_erasure_chordal(c)) targets.push_back(c);
    }
    for (const Clutter& target : targets) {
        std::vector<int> reference;
        std::size_t seen = 0;
        enumerate_erasure_sequences(target, false, [&](const ErasureCertificate& cert) {
            auto ks = cert.k_sequence();
            std::sort(ks.begin(), ks.end());
            if (seen++ == 0) reference = ks;
            CHECK(ks == reference);
            CHECK(betti_from_erasures(cert) == hochster_betti_table(target, Field::GF2).totals());
            return seen < 500;
        });
        CHECK(seen > 0);
    }
}

TEST_CASE("ridge chordality") {
    CHECK(is_ridge_chordal(fixtures::g5()));
    CHECK_FALSE(is_ridge_chordal(fixtures::c4()));
    CHECK(is_ridge_chordal(Clutter::empty(5, 3)));
    CHECK(is_ridge_chordal(fixtures::c3()));
    CHECK_THROWS_AS(simplicial_ridges(Clutter(3, 1, {{1}})), std::invalid_argument);
}

TEST_CASE("reachable clutters") {
    std::size_t graphs = 0;
    for_each_erasure_reachable(5, 2, [&](const Clutter& c) {
        CHECK(is_erasure_chordal(c));
        ++graphs;
    });
    CHECK(graphs == 822);
    CHECK_THROWS_AS(for_each_erasure_reachable(9, 3, [](const Clutter&) {}), SizeGuardError);
}
