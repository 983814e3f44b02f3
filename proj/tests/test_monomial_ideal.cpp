#include <doctest.h>

#include <array>
#include <random>

#include "chordal/monomial_ideal.hpp"
#include "fixtures.hpp"

using namespace chordal;
using V = std::vector<VertexSet>;

namespace {

const V kG5Order{{1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}};

/// r ∈ (I : m) iff r·m ∈ I, with exponents added in the full polynomial ring.
bool colon_member_oracle(const SquarefreeIdeal& ideal, VertexSet m, const std::array<int, 5>& r) {
    std::array<int, 5> product = r;
    for (int v : m.vertices()) product[static_cast<std::size_t>(v - 1)] += 1;
    for (VertexSet g : ideal.generators()) {
        bool divides = true;
        for (int v : g.vertices()) divides = divides && product[static_cast<std::size_t>(v - 1)] >= 1;
        if (divides) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("ideal of a clutter keeps lexicographic circuit order") {
    CHECK(ideal_of_clutter(complement(fixtures::g5())).generators() == kG5Order);
    CHECK(ideal_of_clutter(Clutter::empty(5, 2)).is_zero());
    CHECK(ideal_of_clutter(complement(fixtures::c3())).generators() == V{{1, 2, 5}, {1, 3, 5}, {1, 4, 5}});
    CHECK(clutter_of_ideal(SquarefreeIdeal(5, kG5Order)) == complement(fixtures::g5()));
}

TEST_CASE("ideal construction validates generators") {
    CHECK_THROWS_AS(SquarefreeIdeal(3, {{1, 2}, {1, 2, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(SquarefreeIdeal(3, {{1, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(SquarefreeIdeal(3, {VertexSet{}}), std::invalid_argument);
    CHECK_THROWS_AS(SquarefreeIdeal(3, {{1, 2}, {1, 2}}), std::invalid_argument);
    CHECK_FALSE(SquarefreeIdeal(3, {{1, 2}, {3}}).degree().has_value());
}

TEST_CASE("colon ideals") {
    const SquarefreeIdeal i4(5, {{1, 3}, {1, 4}, {1, 5}, {2, 3}});
    ColonIdeal colon = colon_by_monomial(i4, SquarefreeMonomial({2, 4}));
    CHECK_FALSE(colon.unit);
    CHECK(colon.generators == V{{1}, {3}});

    colon = colon_by_monomial(SquarefreeIdeal(4, {{1, 2}}), SquarefreeMonomial({1, 2}));
    CHECK(colon.unit);

    colon = colon_by_monomial(SquarefreeIdeal(5, {{1, 2, 5}, {1, 3, 5}, {1, 4, 5}}), SquarefreeMonomial({2, 3, 4}));
    CHECK(colon.generators == V{{1, 5}});
}

TEST_CASE("colon ideals agree with polynomial-ring membership") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const int d = 1 + trial % 3;
        const Clutter c = fixtures::random_clutter(5, d, rng, 0.4);
        if (c.empty()) continue;
        const SquarefreeIdeal ideal = ideal_of_clutter(c);
        for_each_subset(VertexSet::range(5), [&](VertexSet m) {
            if (m.empty() || ideal.contains(m)) return;
            const ColonIdeal colon = colon_by_monomial(ideal, SquarefreeMonomial(m));
            // Every exponent vector with entries 0..2.
            for (int code = 0; code < 243; ++code) {
                std::array<int, 5> r{};
                VertexSet support;
                for (int v = 0, x = code; v < 5; ++v, x /= 3) {
                    r[static_cast<std::size_t>(v)] = x % 3;
                    if (x % 3) support.insert(v + 1);
                }
                const bool in_colon =
                    colon.unit || std::any_of(colon.generators.begin(), colon.generators.end(),
                                              [&](VertexSet g) { return g.subset_of(support); });
                REQUIRE(in_colon == colon_member_oracle(ideal, m, r));
            }
        });
    }
}

TEST_CASE("linear divisors") {
    const SquarefreeIdeal i4(5, {{1, 3}, {1, 4}, {1, 5}, {2, 3}});
    LinearDivisorResult r = is_linear_divisor(i4, SquarefreeMonomial({2, 4}));
    CHECK(r.is_linear);
    CHECK(r.variables == VertexSet{1, 3});
    CHECK(r.ell == 2);

    r = is_linear_divisor(SquarefreeIdeal(5, {{1, 2, 5}, {1, 3, 5}, {1, 4, 5}}), SquarefreeMonomial({2, 3, 4}));
    CHECK_FALSE(r.is_linear);

    r = is_linear_divisor(SquarefreeIdeal::zero(5), SquarefreeMonomial({1, 2}));
    CHECK(r.is_linear);
    CHECK(r.ell == 0);

    CHECK_THROWS_AS(is_linear_divisor(i4, SquarefreeMonomial({1, 3, 4})), std::invalid_argument);
}

TEST_CASE("verifying quotient orders") {
    QuotientOrderReport r = verify_quotient_order(SquarefreeIdeal(5, kG5Order));
    CHECK(r.ok);
    CHECK(r.ell_sequence() == std::vector<int>{0, 1, 2, 1, 2});
    CHECK(r.steps.back().variables == VertexSet{1, 3});

    CHECK(verify_quotient_order(SquarefreeIdeal(3, {{1, 2}})).ok);

    r = verify_quotient_order(SquarefreeIdeal(5, {{1, 2, 5}, {1, 3, 5}, {1, 4, 5}, {2, 3, 4}}));
    CHECK_FALSE(r.ok);
    REQUIRE(r.failure_step.has_value());
    CHECK(*r.failure_step == 4);
}

TEST_CASE("searching for quotient orders") {
    V shuffled = kG5Order;
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        const auto found = find_quotient_order(SquarefreeIdeal(5, shuffled));
        REQUIRE(found.order.has_value());
        CHECK(verify_quotient_order(*found.order).ok);
    }
    CHECK_FALSE(find_quotient_order(SquarefreeIdeal(4, {{1, 2}, {3, 4}})).order.has_value());
    const auto zero = find_quotient_order(SquarefreeIdeal::zero(4));
    REQUIRE(zero.order.has_value());
    CHECK(zero.order->is_zero());
}
