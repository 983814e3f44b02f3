#include "chordal/shelling.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "chordal/clutter.hpp"

namespace chordal {

std::vector<int> ShellingOrder::restricted_sizes() const {
    std::vector<int> out;
    for (const auto& r : restricted_sets) out.push_back(static_cast<int>(r.size()));
    return out;
}

namespace {

/**
 * Adding `facet` after `earlier`: the intersection with the union of earlier
 * facets is pure of codimension one iff every F_i ∩ facet lies in some
 * F_j ∩ facet of size |facet| - 1. Returns the restricted set, or nullopt.
 */
std::optional<std::vector<VertexSet>> restriction(VertexSet facet, const VertexSet* earlier, std::size_t count) {
    VertexSet missing;  // v with facet \ {v} inside some earlier facet
    for (std::size_t i = 0; i < count; ++i) {
        const VertexSet meet = facet & earlier[i];
        if (meet.size() == facet.size() - 1) missing |= facet - meet;
    }
    for (std::size_t i = 0; i < count; ++i) {
        const VertexSet meet = facet & earlier[i];
        // meet ⊆ facet \ {v} for some v in `missing` iff (facet - meet) hits `missing`.
        if (((facet - meet) & missing).empty()) return std::nullopt;
    }
    std::vector<VertexSet> out;
    for (int v : missing.vertices()) out.push_back(facet.without(v));
    std::sort(out.begin(), out.end(), LexLess{});
    return out;
}

void require_pure(const SimplicialComplex& complex) {
    if (!complex.is_pure()) throw std::invalid_argument("shelling needs a pure complex");
}

}  // namespace

ShellingCheck verify_shelling(int n, const std::vector<VertexSet>& facets) {
    for (VertexSet f : facets)
        if (f.size() != facets.front().size()) throw std::invalid_argument("facets of mixed dimension");
    for (std::size_t i = 0; i < facets.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (facets[i] == facets[j]) throw std::invalid_argument("repeated facet " + facets[i].to_string());

    ShellingCheck check;
    check.order.n = n;
    for (std::size_t k = 0; k < facets.size(); ++k) {
        auto r = restriction(facets[k], facets.data(), k);
        if (k == 0) r = std::vector<VertexSet>{};
        if (!r) {
            check.failure_step = k + 1;
            return check;
        }
        check.order.facets.push_back(facets[k]);
        check.order.restricted_sets.push_back(std::move(*r));
    }
    check.valid = true;
    return check;
}

ShellingOrder erasures_to_shelling(const ErasureCertificate& cert) {
    const VertexSet ground = VertexSet::range(cert.n);
    std::vector<VertexSet> facets;
    for (const Removal& r : cert.removed) facets.push_back(ground - r.circuit);
    if (facets.empty()) return ShellingOrder{cert.n, {}, {}};
    ShellingCheck check = verify_shelling(cert.n, facets);
    if (!check.valid) throw InvalidCertificate("certificate does not dualize to a shelling");
    return std::move(check.order);
}

ErasureCertificate shelling_to_erasures(int n, int d, const std::vector<VertexSet>& facets) {
    const VertexSet ground = VertexSet::range(n);
    std::vector<VertexSet> circuits;
    for (VertexSet f : facets) {
        if (f.size() != n - d)
            throw std::invalid_argument("facet " + f.to_string() + " does not have n - d = " + std::to_string(n - d) +
                                        " elements");
        circuits.push_back(ground - f);
    }
    return replay_erasures(n, d, circuits);
}

ExtendabilityReport is_extendably_shellable(const SimplicialComplex& complex, const SizeGuards& guards) {
    require_pure(complex);
    const std::vector<VertexSet>& facets = complex.facets();
    check_guard("extendable_max_facets", guards.extendable_max_facets, static_cast<long long>(facets.size()));
    const std::size_t m = facets.size();
    const std::uint64_t full = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;

    auto addable = [&](std::uint64_t state, std::size_t f) {
        if (state == 0) return true;
        std::vector<VertexSet> earlier;
        for (std::size_t i = 0; i < m; ++i)
            if ((state >> i) & 1U) earlier.push_back(facets[i]);
        return restriction(facets[f], earlier.data(), earlier.size()).has_value();
    };

    // Forward sweep over reachable facet sets, layer by layer.
    std::unordered_map<std::uint64_t, std::uint64_t> parent{{0, 0}};
    std::vector<std::uint64_t> layer{0};
    std::unordered_set<std::uint64_t> dead_ends;
    while (!layer.empty()) {
        std::vector<std::uint64_t> next;
        for (std::uint64_t state : layer) {
            bool moved = false;
            for (std::size_t f = 0; f < m; ++f) {
                if ((state >> f) & 1U) continue;
                if (!addable(state, f)) continue;
                moved = true;
                const std::uint64_t grown = state | (std::uint64_t{1} << f);
                if (parent.emplace(grown, state).second) next.push_back(grown);
            }
            if (!moved && state != full) dead_ends.insert(state);
        }
        layer = std::move(next);
    }

    ExtendabilityReport report;
    report.reachable_states = parent.size();
    report.extendable = dead_ends.empty() && parent.count(full);
    if (!dead_ends.empty()) {
        // Smallest dead end for a short witness.
        std::uint64_t worst = *std::min_element(dead_ends.begin(), dead_ends.end(), [](std::uint64_t a, std::uint64_t b) {
            return std::popcount(a) != std::popcount(b) ? std::popcount(a) < std::popcount(b) : a < b;
        });
        std::vector<VertexSet> order;
        for (std::uint64_t s = worst; s != 0; s = parent.at(s)) {
            const std::uint64_t added = s & ~parent.at(s);
            order.push_back(facets[static_cast<std::size_t>(std::countr_zero(added))]);
        }
        std::reverse(order.begin(), order.end());
        report.stuck_shelling = std::move(order);
    }
    return report;
}

std::optional<std::vector<VertexSet>> find_shelling(const SimplicialComplex& complex, const SizeGuards& guards) {
    require_pure(complex);
    const std::vector<VertexSet>& facets = complex.facets();
    check_guard("extendable_max_facets", guards.extendable_max_facets, static_cast<long long>(facets.size()));
    const std::size_t m = facets.size();
    std::vector<VertexSet> order;
    std::vector<char> used(m, 0);
    std::unordered_set<std::uint64_t> failed;
    std::uint64_t state = 0;
    std::function<bool()> dfs = [&]() -> bool {
        if (order.size() == m) return true;
        if (failed.count(state)) return false;
        for (std::size_t f = 0; f < m; ++f) {
            if (used[f]) continue;
            if (!order.empty() && !restriction(facets[f], order.data(), order.size())) continue;
            used[f] = 1;
            order.push_back(facets[f]);
            state |= std::uint64_t{1} << f;
            if (dfs()) return true;
            state &= ~(std::uint64_t{1} << f);
            order.pop_back();
            used[f] = 0;
        }
        failed.insert(state);
        return false;
    };
    if (dfs()) return order;
    return std::nullopt;
}

std::size_t enumerate_shellings(const SimplicialComplex& complex,
                                const std::function<bool(const std::vector<VertexSet>&)>& visit) {
    require_pure(complex);
    const std::vector<VertexSet>& facets = complex.facets();
    const std::size_t m = facets.size();
    std::vector<VertexSet> order;
    std::vector<char> used(m, 0);
    std::size_t count = 0;
    bool stop = false;
    std::function<void()> dfs = [&] {
        if (stop) return;
        if (order.size() == m) {
            ++count;
            if (!visit(order)) stop = true;
            return;
        }
        for (std::size_t f = 0; f < m && !stop; ++f) {
            if (used[f]) continue;
            if (!order.empty() && !restriction(facets[f], order.data(), order.size())) continue;
            used[f] = 1;
            order.push_back(facets[f]);
            dfs();
            order.pop_back();
            used[f] = 0;
        }
    };
    dfs();
    return count;
}

ContractibleExtendableReport check_contractible_extendable(const SimplicialComplex& complex,
                                                           const SizeGuards& guards) {
    ContractibleExtendableReport report;
    const int n = complex.n();
    if (n < 3) report.failed_hypotheses.push_back("needs at least 3 vertices");
    if (!complex.is_pure() || complex.is_void() || complex.dimension() != n - 3)
        report.failed_hypotheses.push_back("not a pure (n-3)-dimensional complex");
    const auto expected = binomial(n, 2) - n + 1;
    if (static_cast<std::int64_t>(complex.facets().size()) != expected)
        report.failed_hypotheses.push_back("has " + std::to_string(complex.facets().size()) + " facets, expected " +
                                           std::to_string(expected));
    if (!report.failed_hypotheses.empty()) return report;

    const auto shelling = find_shelling(complex, guards);
    if (!shelling) {
        report.failed_hypotheses.push_back("not shellable");
        return report;
    }
    const ShellingCheck check = verify_shelling(n, *shelling);
    for (int size : check.order.restricted_sizes()) {
        if (size == n - 2) {
            report.failed_hypotheses.push_back("not contractible (a restricted set has n-2 elements)");
            return report;
        }
    }
    report.hypotheses_hold = true;
    report.extendable = is_extendably_shellable(complex, guards).extendable;

    const VertexSet ground = VertexSet::range(n);
    std::vector<VertexSet> edges;
    for (VertexSet e : subsets_of_size(ground, 2))
        if (!complex.contains(ground - e)) edges.push_back(e);
    report.dual_graph_edges = edges;
    // A tree: n-1 edges and connected.
    VertexSet reached = VertexSet::singleton(1);
    for (bool grew = true; grew;) {
        grew = false;
        for (VertexSet e : edges) {
            if (!(e & reached).empty() && !e.subset_of(reached)) {
                reached |= e;
                grew = true;
            }
        }
    }
    report.dual_graph_is_tree = static_cast<int>(edges.size()) == n - 1 && reached == ground;
    return report;
}

}  // namespace chordal
