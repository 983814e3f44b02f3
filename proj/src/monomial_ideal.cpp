#include "chordal/monomial_ideal.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace chordal {

SquarefreeMonomial::SquarefreeMonomial(VertexSet support) : support_(support) {
    if (support.empty()) throw std::invalid_argument("squarefree monomial needs a nonempty support");
}

SquarefreeIdeal::SquarefreeIdeal(int n, std::vector<VertexSet> generators) : n_(n), generators_(std::move(generators)) {
    if (n < 1 || n > kMaxVertices) throw std::invalid_argument("variable count must lie in 1..64");
    const VertexSet ground = VertexSet::range(n);
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        const VertexSet g = generators_[i];
        if (g.empty()) throw std::invalid_argument("generator with empty support");
        if (!g.subset_of(ground)) throw std::invalid_argument("generator " + g.to_string() + " uses a variable beyond n");
        for (std::size_t j = 0; j < i; ++j) {
            if (generators_[j].subset_of(g) || g.subset_of(generators_[j]))
                throw std::invalid_argument("generators " + generators_[j].to_string() + " and " + g.to_string() +
                                            " are not minimal");
        }
    }
}

std::optional<int> SquarefreeIdeal::degree() const {
    if (generators_.empty()) return std::nullopt;
    const int d = generators_.front().size();
    for (VertexSet g : generators_)
        if (g.size() != d) return std::nullopt;
    return d;
}

bool SquarefreeIdeal::contains(VertexSet m) const {
    return std::any_of(generators_.begin(), generators_.end(), [m](VertexSet g) { return g.subset_of(m); });
}

SquarefreeIdeal SquarefreeIdeal::prefix(std::size_t count) const {
    count = std::min(count, generators_.size());
    return SquarefreeIdeal(n_, std::vector<VertexSet>(generators_.begin(), generators_.begin() + count));
}

SquarefreeIdeal SquarefreeIdeal::reordered(const std::vector<std::size_t>& permutation) const {
    std::vector<VertexSet> gens;
    gens.reserve(permutation.size());
    for (std::size_t i : permutation) gens.push_back(generators_.at(i));
    return SquarefreeIdeal(n_, std::move(gens));
}

std::vector<int> QuotientOrderReport::ell_sequence() const {
    std::vector<int> out;
    for (const auto& s : steps) out.push_back(s.ell);
    return out;
}

SquarefreeIdeal ideal_of_clutter(const Clutter& c) { return SquarefreeIdeal(c.n(), c.circuits()); }

Clutter clutter_of_ideal(const SquarefreeIdeal& ideal) {
    const auto d = ideal.degree();
    if (!d) {
        if (ideal.is_zero()) throw std::invalid_argument("the zero ideal has no circuit size");
        throw std::invalid_argument("ideal is not generated in a single degree");
    }
    return Clutter(ideal.n(), *d, ideal.generators());
}

namespace {

ColonIdeal colon_of(const VertexSet* first, const VertexSet* last, VertexSet m) {
    ColonIdeal out;
    std::vector<VertexSet> quotients;
    quotients.reserve(static_cast<std::size_t>(last - first));
    for (const VertexSet* u = first; u != last; ++u) {
        const VertexSet q = *u - m;
        if (q.empty()) {
            out.unit = true;
            return out;
        }
        quotients.push_back(q);
    }
    std::sort(quotients.begin(), quotients.end(), [](VertexSet a, VertexSet b) {
        return a.size() != b.size() ? a.size() < b.size() : a.bits() < b.bits();
    });
    for (VertexSet q : quotients) {
        const bool redundant = std::any_of(out.generators.begin(), out.generators.end(),
                                           [q](VertexSet kept) { return kept.subset_of(q); });
        if (!redundant) out.generators.push_back(q);
    }
    std::sort(out.generators.begin(), out.generators.end(), LexLess{});
    return out;
}

LinearDivisorResult classify(ColonIdeal colon) {
    LinearDivisorResult r;
    r.is_linear = !colon.unit && std::all_of(colon.generators.begin(), colon.generators.end(),
                                             [](VertexSet g) { return g.size() == 1; });
    if (r.is_linear) {
        for (VertexSet g : colon.generators) r.variables |= g;
        r.ell = r.variables.size();
    }
    r.colon = std::move(colon);
    return r;
}

}  // namespace

ColonIdeal colon_by_monomial(const SquarefreeIdeal& ideal, SquarefreeMonomial m) {
    const auto& g = ideal.generators();
    return colon_of(g.data(), g.data() + g.size(), m.support());
}

LinearDivisorResult is_linear_divisor(const SquarefreeIdeal& ideal, SquarefreeMonomial m) {
    if (ideal.contains(m.support()))
        throw std::invalid_argument("x_" + m.support().to_string() + " already lies in the ideal");
    return classify(colon_by_monomial(ideal, m));
}

QuotientOrderReport verify_quotient_order(const SquarefreeIdeal& ideal) {
    QuotientOrderReport report;
    const auto& g = ideal.generators();
    for (std::size_t j = 0; j < g.size(); ++j) {
        LinearDivisorResult step = classify(colon_of(g.data(), g.data() + j, g[j]));
        const bool linear = step.is_linear;
        report.steps.push_back(std::move(step));
        if (!linear) {
            report.ok = false;
            report.failure_step = j + 1;
            break;
        }
    }
    return report;
}

namespace {

struct QuotientSearch {
    const std::vector<VertexSet>& gens;  // lexicographic
    bool greedy_only;
    bool memo_enabled;
    std::unordered_set<std::uint64_t> failed;
    std::vector<std::size_t> order;
    std::vector<char> used;
    std::vector<VertexSet> prefix;
    std::uint64_t used_bits = 0;
    std::size_t nodes = 0;
    std::size_t backtracks = 0;

    bool run() {
        ++nodes;
        if (order.size() == gens.size()) return true;
        if (memo_enabled && failed.count(used_bits)) return false;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (used[i]) continue;
            const ColonIdeal colon = colon_of(prefix.data(), prefix.data() + prefix.size(), gens[i]);
            if (!classify(colon).is_linear) continue;
            used[i] = 1;
            order.push_back(i);
            prefix.push_back(gens[i]);
            if (memo_enabled) used_bits |= std::uint64_t{1} << i;
            if (run()) return true;
            ++backtracks;
            used[i] = 0;
            order.pop_back();
            prefix.pop_back();
            if (memo_enabled) used_bits &= ~(std::uint64_t{1} << i);
            if (greedy_only) break;
        }
        if (memo_enabled) failed.insert(used_bits);
        return false;
    }
};

}  // namespace

QuotientSearchResult find_quotient_order(const SquarefreeIdeal& ideal, const QuotientSearchOptions& options) {
    if (!ideal.is_zero() && !ideal.degree()) throw std::invalid_argument("quotient search needs an equigenerated ideal");
    std::vector<std::size_t> by_lex(ideal.size());
    std::iota(by_lex.begin(), by_lex.end(), std::size_t{0});
    std::sort(by_lex.begin(), by_lex.end(), [&](std::size_t a, std::size_t b) {
        return lex_less(ideal.generators()[a], ideal.generators()[b]);
    });
    std::vector<VertexSet> gens;
    for (std::size_t i : by_lex) gens.push_back(ideal.generators()[i]);

    QuotientSearch search{gens, options.greedy_only, gens.size() <= 64, {}, {}, std::vector<char>(gens.size(), 0), {}};
    const bool found = search.run();

    QuotientSearchResult result;
    result.nodes = search.nodes;
    result.backtracks = search.backtracks;
    if (found) {
        std::vector<VertexSet> ordered;
        for (std::size_t i : search.order) ordered.push_back(gens[i]);
        result.order = SquarefreeIdeal(ideal.n(), std::move(ordered));
    }
    return result;
}

}  // namespace chordal
