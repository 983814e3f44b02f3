#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "chordal/clutter.hpp"
#include "chordal/vertex_set.hpp"

namespace chordal {

/// x_e = prod_{v in e} x_v for a nonempty support e.
class SquarefreeMonomial {
public:
    explicit SquarefreeMonomial(VertexSet support);
    VertexSet support() const { return support_; }
    int degree() const { return support_.size(); }
    bool divides(SquarefreeMonomial other) const { return support_.subset_of(other.support_); }
    bool operator==(const SquarefreeMonomial&) const = default;

private:
    VertexSet support_;
};

/**
 * A squarefree monomial ideal in K[x_1..x_n] given by an ordered, minimal
 * list of generators. The order is significant: it is the candidate order
 * for linear quotients.
 */
class SquarefreeIdeal {
public:
    SquarefreeIdeal() = default;
    /// Throws std::invalid_argument on empty supports, supports outside [n],
    /// duplicates, or a generator dividing another.
    SquarefreeIdeal(int n, std::vector<VertexSet> generators);

    static SquarefreeIdeal zero(int n) { return SquarefreeIdeal(n, {}); }

    int n() const { return n_; }
    const std::vector<VertexSet>& generators() const { return generators_; }
    std::size_t size() const { return generators_.size(); }
    bool is_zero() const { return generators_.empty(); }
    /// Common generator degree, if all generators share one (none for the zero ideal).
    std::optional<int> degree() const;

    /// m ∈ I, i.e. some generator divides m.
    bool contains(VertexSet m) const;

    /// The ideal on the first `count` generators.
    SquarefreeIdeal prefix(std::size_t count) const;
    SquarefreeIdeal reordered(const std::vector<std::size_t>& permutation) const;

    bool operator==(const SquarefreeIdeal&) const = default;

private:
    int n_ = 0;
    std::vector<VertexSet> generators_;
};

/// (I : m). The unit ideal is its own state, since it has no squarefree generators.
struct ColonIdeal {
    bool unit = false;
    /// Minimal generators in lexicographic order; empty for the zero ideal and for the unit ideal.
    std::vector<VertexSet> generators;
};

struct LinearDivisorResult {
    bool is_linear = false;
    /// Variables generating the colon ideal when it is linear.
    VertexSet variables;
    int ell = 0;
    /// The colon ideal itself, for reporting.
    ColonIdeal colon;
};

struct QuotientOrderReport {
    bool ok = true;
    /// One entry per generator; entry 0 is the colon against the zero ideal.
    std::vector<LinearDivisorResult> steps;
    /// 1-based index of the first generator that is not a linear divisor.
    std::optional<std::size_t> failure_step;

    std::vector<int> ell_sequence() const;
};

/// One generator x_e per circuit, in lexicographic circuit order.
SquarefreeIdeal ideal_of_clutter(const Clutter& c);

/// The d-clutter whose circuits are the generator supports. Throws unless equigenerated.
Clutter clutter_of_ideal(const SquarefreeIdeal& ideal);

/// Minimalized {u / gcd(u, m) : u a generator of I}.
ColonIdeal colon_by_monomial(const SquarefreeIdeal& ideal, SquarefreeMonomial m);

/// Throws std::invalid_argument if m ∈ I.
LinearDivisorResult is_linear_divisor(const SquarefreeIdeal& ideal, SquarefreeMonomial m);

/// Checks that every generator is a linear divisor of the ideal of its predecessors.
QuotientOrderReport verify_quotient_order(const SquarefreeIdeal& ideal);

struct QuotientSearchOptions {
    /// Take the lexicographically first linear divisor and never backtrack.
    bool greedy_only = false;
};

struct QuotientSearchResult {
    /// Generators reordered into a linear-quotient order, if one exists (or greedy found one).
    std::optional<SquarefreeIdeal> order;
    /// Generator states explored, counting revisits of failed states.
    std::size_t nodes = 0;
    /// Times the search had to undo a choice.
    std::size_t backtracks = 0;
};

/**
 * Backtracking search for a linear-quotient order of an equigenerated ideal.
 * The choice at each step is the lexicographically first remaining generator
 * that is a linear divisor; failed generator subsets are memoized when the
 * ideal has at most 64 generators.
 */
QuotientSearchResult find_quotient_order(const SquarefreeIdeal& ideal, const QuotientSearchOptions& options = {});

}  // namespace chordal
