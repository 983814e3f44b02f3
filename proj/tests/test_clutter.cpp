#include <doctest.h>

#include <random>

#include "chordal/clutter.hpp"
#include "fixtures.hpp"

using namespace chordal;
using fixtures::c3;
using fixtures::g5;

TEST_CASE("complement") {
    CHECK(complement(Clutter::complete(5, 2)) == Clutter::empty(5, 2));
    const Clutter removed(5, 2, {{1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}});
    CHECK(complement(removed) == g5());
    CHECK(complement(complement(c3())) == c3());

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const Clutter c = fixtures::random_clutter(6, 3, rng);
        const Clutter cc = complement(c);
        CHECK(cc.n() == c.n());
        CHECK(cc.d() == c.d());
        CHECK(cc.size() + c.size() == 20);
        CHECK(complement(cc) == c);
    }
}

TEST_CASE("construction rejects malformed clutters") {
    CHECK_THROWS_AS(Clutter(65, 2, {}), std::invalid_argument);
    CHECK_THROWS_AS(Clutter(5, 0, {}), std::invalid_argument);
    CHECK_THROWS_AS(Clutter(5, 6, {}), std::invalid_argument);
    CHECK_THROWS_AS(Clutter(5, 2, {{1, 2, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Clutter(5, 2, {{1, 6}}), std::invalid_argument);
    CHECK_THROWS_AS(Clutter(5, 2, {{1, 2}, {1, 2}}), std::invalid_argument);
    const Clutter c(5, 2, {{4, 5}, {1, 2}, {2, 3}});
    CHECK(c.circuits() == std::vector<VertexSet>{{1, 2}, {2, 3}, {4, 5}});
}

TEST_CASE("cliques") {
    CHECK(is_clique(Clutter::complete(5, 3), VertexSet::range(5)));
    CHECK_FALSE(is_clique(c3(), {1, 3, 4, 5}));
    CHECK(is_clique(c3(), {2, 3, 4, 5}));
    CHECK(is_clique(c3(), {1, 2}));  // smaller than d
    CHECK_THROWS_AS(is_clique(c3(), VertexSet{}), std::invalid_argument);
}

TEST_CASE("maximal cliques containing a circuit") {
    using V = std::vector<VertexSet>;
    CHECK(maximal_cliques_containing(Clutter::complete(5, 3), {1, 2, 5}) == V{VertexSet::range(5)});
    CHECK(maximal_cliques_containing(c3(), {2, 3, 4}) == V{{1, 2, 3, 4}, {2, 3, 4, 5}});
    CHECK(maximal_cliques_containing(Clutter(5, 3, {{1, 4, 5}}), {1, 4, 5}) == V{{1, 4, 5}});
    CHECK_THROWS_AS(maximal_cliques_containing(c3(), {1, 2, 5}), std::invalid_argument);
}

TEST_CASE("maximal cliques agree with a brute-force subset scan") {
    for (int d = 1; d <= 3; ++d) {
        const auto all = subsets_of_size(VertexSet::range(5), d);
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << all.size()); code += (d == 2 ? 1 : 3)) {
            std::vector<VertexSet> circuits;
            for (std::size_t i = 0; i < all.size(); ++i)
                if ((code >> i) & 1U) circuits.push_back(all[i]);
            const Clutter c(5, d, circuits);
            const auto brute = fixtures::brute_maximal_cliques(c);
            REQUIRE(maximal_cliques(c) == brute);
            for (VertexSet e : c.circuits()) {
                std::vector<VertexSet> expected;
                for (VertexSet k : brute)
                    if (e.subset_of(k)) expected.push_back(k);
                const auto got = maximal_cliques_containing(c, e);
                REQUIRE(got == expected);
                for (VertexSet a : got)
                    for (VertexSet b : got) CHECK((a == b || !a.subset_of(b)));
            }
        }
    }
}

TEST_CASE("d = 1: cliques are subsets of the circuit support") {
    const Clutter c(4, 1, {{1}, {2}, {4}});
    CHECK(maximal_cliques(c) == std::vector<VertexSet>{{1, 2, 4}});
    const ExposedStatus st = exposed_status(c, {2});
    REQUIRE(st.exposed());
    CHECK(*st.clique == VertexSet{1, 2, 4});
    CHECK(st.proper);
}

TEST_CASE("exposed status") {
    const Clutter k = Clutter::complete(5, 3).without({1, 2, 5}).without({1, 3, 5});
    ExposedStatus st = exposed_status(k, {1, 2, 3});
    REQUIRE(st.exposed());
    CHECK(*st.clique == VertexSet{1, 2, 3, 4});
    CHECK(st.proper);

    CHECK_FALSE(exposed_status(c3(), {2, 3, 4}).exposed());

    st = exposed_status(k, {1, 4, 5});
    REQUIRE(st.exposed());
    CHECK(*st.clique == VertexSet{1, 4, 5});
    CHECK_FALSE(st.proper);

    CHECK_THROWS_AS(exposed_status(c3(), {1, 2, 5}), std::invalid_argument);
    CHECK(exposed_circuits(g5(), true) == std::vector<VertexSet>{{3, 4}, {3, 5}, {4, 5}});
    CHECK(exposed_circuits(g5()).size() == 5);
}

TEST_CASE("clique complex") {
    CHECK(clique_complex(Clutter::complete(4, 3)) == SimplicialComplex::simplex(4));
    CHECK(clique_complex(g5()).facets() == std::vector<VertexSet>{{1, 2}, {2, 5}, {3, 4, 5}});
    // A vertex outside every circuit is still a face: the (d-2)-skeleton is complete.
    CHECK(clique_complex(Clutter(4, 2, {{1, 2}})).facets() == std::vector<VertexSet>{{1, 2}, {3}, {4}});
}
