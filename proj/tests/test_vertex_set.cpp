#include <doctest.h>

#include <algorithm>

#include "chordal/errors.hpp"
#include "chordal/vertex_set.hpp"

using namespace chordal;

TEST_CASE("lex order on sorted vertex lists") {
    CHECK(lex_less(VertexSet{1, 2}, VertexSet{1, 2, 5}));
    CHECK(lex_less(VertexSet{1, 2, 5}, VertexSet{1, 3}));
    CHECK(lex_less(VertexSet{1, 3}, VertexSet{2}));
    CHECK(lex_less(VertexSet{}, VertexSet{1}));
    CHECK_FALSE(lex_less(VertexSet{2}, VertexSet{2}));

    // Oracle: std::lexicographical_compare on the vertex lists, all pairs of subsets of [6].
    std::vector<VertexSet> all;
    for_each_subset(VertexSet::range(6), [&](VertexSet s) { all.push_back(s); });
    for (VertexSet a : all)
        for (VertexSet b : all) {
            const auto va = a.vertices(), vb = b.vertices();
            REQUIRE(lex_less(a, b) == std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end()));
        }
}

TEST_CASE("binomial coefficients saturate instead of overflowing") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(64, 32) == 1832624140942590534LL);
    CHECK(binomial(200, 100) == INT64_MAX);
}

TEST_CASE("subset enumeration") {
    int count = 0;
    for_each_subset_of_size(VertexSet::range(6), 3, [&](VertexSet s) {
        CHECK(s.size() == 3);
        ++count;
    });
    CHECK(count == 20);
    const auto lex = subsets_of_size(VertexSet{1, 2, 3, 4}, 2);
    REQUIRE(lex.size() == 6);
    CHECK(lex.front() == VertexSet{1, 2});
    CHECK(lex.back() == VertexSet{3, 4});
    count = 0;
    for_each_subset(VertexSet{2, 4, 7}, [&](VertexSet) { ++count; });
    CHECK(count == 8);
}

TEST_CASE("parsing and printing vertex sets") {
    CHECK(parse_vertex_set("{1,2,5}") == VertexSet{1, 2, 5});
    CHECK(parse_vertex_set("1 2 5") == VertexSet{1, 2, 5});
    CHECK(parse_vertex_set("[3, 10]") == VertexSet{3, 10});
    CHECK_THROWS_AS(parse_vertex_set("1 1"), ParseError);
    CHECK_THROWS_AS(parse_vertex_set("0"), ParseError);
    CHECK_THROWS_AS(parse_vertex_set("65"), ParseError);
    CHECK_THROWS_AS(parse_vertex_set("x"), ParseError);
    CHECK(VertexSet{1, 2, 5}.to_string() == "125");
    CHECK(VertexSet{1, 10}.to_string() == "{1,10}");
    VertexSet s;
    CHECK_THROWS_AS(s.insert(65), std::out_of_range);
}
