#include "chordal/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "chordal/clutter.hpp"
#include "chordal/erasure.hpp"
#include "chordal/graph.hpp"
#include "chordal/homology.hpp"
#include "chordal/monomial_ideal.hpp"
#include "chordal/parallel.hpp"
#include "chordal/shelling.hpp"

namespace chordal {

bool SuiteReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckTally& c) { return c.failed == 0; });
}

const CheckTally& SuiteReport::check(const std::string& check_name) const {
    for (const CheckTally& c : checks)
        if (c.name == check_name) return c;
    throw std::out_of_range("suite '" + name + "' has no check '" + check_name + "'");
}

std::size_t SuiteReport::observation(const std::string& obs) const {
    for (const auto& [key, value] : observations)
        if (key == obs) return value;
    return 0;
}

namespace {

std::string describe(const Clutter& c) {
    std::string out = "n=" + std::to_string(c.n()) + " d=" + std::to_string(c.d()) + " {";
    for (std::size_t i = 0; i < c.size(); ++i) out += (i ? " " : "") + c.circuits()[i].to_string();
    return out + "}";
}

/// Thread-safe accumulation of named checks and observations.
class Collector {
public:
    Collector(std::string name, std::size_t max_witnesses)
        : name_(std::move(name)), max_witnesses_(max_witnesses), start_(std::chrono::steady_clock::now()) {}

    void declare(const std::string& check) {
        std::lock_guard lock(mutex_);
        tally(check);
    }

    void record(std::size_t case_index, const std::string& check, bool ok, const std::function<std::string()>& witness) {
        std::lock_guard lock(mutex_);
        Tally& t = tally(check);
        ++t.checked;
        if (ok) return;
        ++t.failed;
        t.witnesses.emplace(case_index, witness());
        if (t.witnesses.size() > max_witnesses_) t.witnesses.erase(std::prev(t.witnesses.end()));
    }

    void observe(const std::string& key, std::size_t amount = 1) {
        std::lock_guard lock(mutex_);
        auto it = std::find_if(observations_.begin(), observations_.end(), [&](const auto& p) { return p.first == key; });
        if (it == observations_.end())
            observations_.emplace_back(key, amount);
        else
            it->second += amount;
    }

    SuiteReport finish(std::size_t cases) {
        SuiteReport report;
        report.name = name_;
        report.cases = cases;
        for (const std::string& key : order_) {
            const Tally& t = tallies_.at(key);
            CheckTally c{key, t.checked, t.failed, {}};
            for (const auto& [index, w] : t.witnesses) c.witnesses.push_back(w);
            report.checks.push_back(std::move(c));
        }
        report.observations = observations_;
        std::sort(report.observations.begin(), report.observations.end());
        report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        return report;
    }

private:
    struct Tally {
        std::size_t checked = 0;
        std::size_t failed = 0;
        std::map<std::size_t, std::string> witnesses;
    };
    Tally& tally(const std::string& check) {
        auto [it, inserted] = tallies_.try_emplace(check);
        if (inserted) order_.push_back(check);
        return it->second;
    }

    std::string name_;
    std::size_t max_witnesses_;
    std::chrono::steady_clock::time_point start_;
    std::mutex mutex_;
    std::vector<std::string> order_;
    std::map<std::string, Tally> tallies_;
    std::vector<std::pair<std::string, std::size_t>> observations_;
};

/// The d-clutter selecting, by the bits of `code`, circuits from the lexicographic list `all`.
Clutter clutter_from_code(int n, int d, const std::vector<VertexSet>& all, std::uint64_t code) {
    std::vector<VertexSet> circuits;
    for (std::size_t i = 0; i < all.size(); ++i)
        if ((code >> i) & 1U) circuits.push_back(all[i]);
    return Clutter(n, d, std::move(circuits));
}

std::uint64_t clutter_count(int n, int d, int limit_bits) {
    const auto m = binomial(n, d);
    check_guard("exhaustive_max_circuits", limit_bits, m);
    return std::uint64_t{1} << m;
}

/// Checks shared by every clutter with a certificate: quotient duality, clique identification,
/// the closed-form Betti numbers and the h-vector identity.
void check_certificate(Collector& out, std::size_t index, const Clutter& c, const ErasureCertificate& cert,
                       const BettiTable& table) {
    const auto w = [&] { return describe(c); };
    const SquarefreeIdeal order = cert.removal_ideal();
    const QuotientOrderReport q = verify_quotient_order(order);
    out.record(index, "certificate is a quotient order", q.ok, w);
    bool cliques = q.ok;
    for (std::size_t j = 0; cliques && j < cert.removed.size(); ++j)
        cliques = q.steps[j].variables == c.ground() - cert.removed[j].clique;
    out.record(index, "colon variables = [n] minus clique", cliques, w);
    out.record(index, "betti formula = hochster", betti_from_erasures(cert) == table.totals(), w);
    out.record(index, "h-vector = k-multiset", h_vector_check(cert).equal, w);
}

/// exposed_status against the facets of the clique complex (and, for graphs, the neighbourhood test).
void check_exposed(Collector& out, std::size_t index, const Clutter& c) {
    const SimplicialComplex delta = clique_complex(c);
    const std::vector<VertexSet> adj = c.d() == 2 ? adjacency(c) : std::vector<VertexSet>{};
    bool unique_facet = true, bk = true, fast = true;
    for (VertexSet e : c.circuits()) {
        const ExposedStatus st = exposed_status(c, e);
        const auto containing = std::count_if(delta.facets().begin(), delta.facets().end(),
                                              [&](VertexSet f) { return e.subset_of(f); });
        unique_facet = unique_facet && (st.exposed() == (containing == 1));
        const auto cliques = maximal_cliques_containing(c, e);
        bk = bk && (st.exposed() == (cliques.size() == 1)) && (!st.exposed() || cliques.front() == *st.clique);
        if (c.d() == 2) fast = fast && exposed_edge_status(adj, e) == st;
    }
    const auto w = [&] { return describe(c); };
    out.record(index, "exposed iff unique facet", unique_facet, w);
    out.record(index, "exposed closure = clique enumeration", bk, w);
    if (c.d() == 2) out.record(index, "exposed closure = common neighbourhood", fast, w);
}

void declare_certificate_checks(Collector& out) {
    for (const char* name : {"certificate is a quotient order", "colon variables = [n] minus clique",
                             "betti formula = hochster", "h-vector = k-multiset"})
        out.declare(name);
}

void declare_exposed_checks(Collector& out, int d) {
    out.declare("exposed iff unique facet");
    out.declare("exposed closure = clique enumeration");
    if (d == 2) out.declare("exposed closure = common neighbourhood");
}

}  // namespace

SuiteReport graph_chordality_suite(int n, const SuiteOptions& options) {
    Collector out("graph-chordality n=" + std::to_string(n), options.max_witnesses);
    for (const char* name : {"chordal iff elimination ordering", "chordal iff erasure-reachable",
                             "chordal iff linear resolution", "GF(2) table = Q table", "chordal iff linear quotients"})
        out.declare(name);
    declare_certificate_checks(out);
    declare_exposed_checks(out, 2);
    const std::uint64_t count = clutter_count(n, 2, 24);
    parallel_for(count, options.jobs, [&](std::size_t code) {
        const Clutter g = graph_from_code(n, code);
        const auto w = [&] { return describe(g); };
        const bool classic = is_chordal_classic(g, options.guards);
        const bool peo = perfect_elimination_ordering(g).has_value();
        const ErasureSearchResult search = find_erasure_sequence(g);
        const BettiTable gf2 = hochster_betti_table(g, Field::GF2, options.guards);
        const BettiTable rational = hochster_betti_table(g, Field::Rational, options.guards);
        const bool lq = find_quotient_order(ideal_of_clutter(complement(g))).order.has_value();

        out.record(code, "chordal iff elimination ordering", classic == peo, w);
        out.record(code, "chordal iff erasure-reachable", classic == search.certificate.has_value(), w);
        out.record(code, "chordal iff linear resolution", classic == is_linear_resolution(gf2, 2), w);
        out.record(code, "GF(2) table = Q table", gf2 == rational, w);
        out.record(code, "chordal iff linear quotients", classic == lq, w);
        if (search.certificate) check_certificate(out, code, g, *search.certificate, gf2);
        check_exposed(out, code, g);
        if (classic) out.observe("chordal");
    });
    return out.finish(count);
}

SuiteReport connectivity_suite(int max_n, const SuiteOptions& options) {
    Collector out("connectivity n<=" + std::to_string(max_n), options.max_witnesses);
    out.declare("connected iff pdim < n-2");
    std::size_t cases = 0;
    for (int n = 2; n <= max_n; ++n) {
        const std::uint64_t count = clutter_count(n, 2, 24);
        parallel_for(count, options.jobs, [&](std::size_t code) {
            const Clutter g = graph_from_code(n, code);
            const bool connected = is_connected(g);
            out.record(cases + code, "connected iff pdim < n-2", connected == is_connected_graph_algebraic(g),
                       [&] { return describe(g); });
            if (connected) out.observe("connected");
        });
        cases += count;
    }
    return out.finish(cases);
}

SuiteReport clutter_erasure_suite(int n, int d, const SuiteOptions& options) {
    Collector out("clutter-erasure n=" + std::to_string(n) + " d=" + std::to_string(d), options.max_witnesses);
    out.declare("proper-reachable iff (linear quotients and pdim < n-d)");
    out.declare("reachable iff linear quotients");
    declare_certificate_checks(out);
    declare_exposed_checks(out, d);
    out.observe("greedy quotient search stuck", 0);
    out.observe("greedy erasure search stuck", 0);
    const std::uint64_t count = clutter_count(n, d, 24);
    const std::vector<VertexSet> all = subsets_of_size(VertexSet::range(n), d);
    parallel_for(count, options.jobs, [&](std::size_t code) {
        const Clutter c = clutter_from_code(n, d, all, code);
        const auto w = [&] { return describe(c); };
        const ErasureSearchResult any = find_erasure_sequence(c);
        const ErasureSearchResult proper = find_erasure_sequence(c, {.require_proper = true});
        const BettiTable table = hochster_betti_table(c, Field::GF2, options.guards);
        const bool lq = find_quotient_order(ideal_of_clutter(complement(c))).order.has_value();
        const auto pdim = table.pdim();
        const bool small_pdim = !pdim || *pdim < n - d;

        out.record(code, "proper-reachable iff (linear quotients and pdim < n-d)",
                   proper.certificate.has_value() == (lq && small_pdim), w);
        out.record(code, "reachable iff linear quotients", any.certificate.has_value() == lq, w);
        if (any.certificate) check_certificate(out, code, c, *any.certificate, table);
        if (proper.certificate) check_certificate(out, code, c, *proper.certificate, table);
        check_exposed(out, code, c);
        if (any.certificate) out.observe("reachable");
        if (proper.certificate) out.observe("proper-reachable");
        if (lq && !find_quotient_order(ideal_of_clutter(complement(c)), {.greedy_only = true}).order)
            out.observe("greedy quotient search stuck");
        if (any.certificate && !find_erasure_sequence(c, {.greedy_only = true}).certificate)
            out.observe("greedy erasure search stuck");
    });
    return out.finish(count);
}

SuiteReport chromatic_suite(int max_n, const SuiteOptions& options) {
    Collector out("chromatic n<=" + std::to_string(max_n), options.max_witnesses);
    out.declare("product formula = deletion-contraction");
    std::size_t cases = 0;
    for (int n = 2; n <= max_n; ++n) {
        const std::uint64_t count = clutter_count(n, 2, 24);
        parallel_for(count, options.jobs, [&](std::size_t code) {
            const Clutter g = graph_from_code(n, code);
            if (!perfect_elimination_ordering(g)) return;
            const IntPolynomial product = chromatic_polynomial_product(g);
            const IntPolynomial dc = chromatic_polynomial_dc(g, options.guards);
            out.record(cases + code, "product formula = deletion-contraction", product == dc, [&] {
                return describe(g) + " product " + product.to_string() + " dc " + dc.to_string();
            });
        });
        cases += count;
    }
    return out.finish(cases);
}

SuiteReport mst_suite(std::size_t count, int max_n, const SuiteOptions& options) {
    if (max_n < 2) throw std::invalid_argument("mst suite needs max_n >= 2");
    Collector out("mst count=" + std::to_string(count) + " n<=" + std::to_string(max_n), options.max_witnesses);
    out.declare("erasure MST weight = Kruskal weight");
    out.declare("distinct weights: same edge set");

    // Instances are drawn sequentially so the seed alone fixes them.
    std::mt19937_64 rng(options.seed);
    std::vector<WeightedGraph> instances;
    for (std::size_t i = 0; i < count; ++i) {
        const int n = std::uniform_int_distribution<int>(2, max_n)(rng);
        Clutter g = random_connected_chordal_graph(n, rng);
        std::vector<Rational> weights(g.size());
        if (i % 2 == 0) {
            // Distinct: a shuffled 1..m scaled by a random denominator.
            std::vector<int> ranks(g.size());
            std::iota(ranks.begin(), ranks.end(), 1);
            std::shuffle(ranks.begin(), ranks.end(), rng);
            const int den = std::uniform_int_distribution<int>(1, 7)(rng);
            for (std::size_t k = 0; k < ranks.size(); ++k) weights[k] = Rational(ranks[k]) / den;
        } else {
            for (auto& wgt : weights) wgt = Rational(std::uniform_int_distribution<int>(1, 3)(rng));
        }
        instances.push_back({std::move(g), std::move(weights)});
    }

    parallel_for(count, options.jobs, [&](std::size_t i) {
        const WeightedGraph& wg = instances[i];
        const SpanningTree erased = mst_by_erasures(wg);
        const SpanningTree kruskal = kruskal_mst(wg);
        const auto w = [&] {
            return describe(wg.graph) + " erasure " + erased.weight.str() + " kruskal " + kruskal.weight.str();
        };
        out.record(i, "erasure MST weight = Kruskal weight", erased.weight == kruskal.weight, w);
        if (i % 2 == 0) out.record(i, "distinct weights: same edge set", erased.edges == kruskal.edges, w);
    });
    return out.finish(count);
}

SuiteReport boundary_suite(int max_n, const SuiteOptions& options) {
    Collector out("boundary n<=" + std::to_string(max_n), options.max_witnesses);
    out.declare("boundary components 2-edge-connected");
    std::size_t cases = 0;
    for (int n = 2; n <= max_n; ++n) {
        const std::uint64_t count = clutter_count(n, 2, 24);
        parallel_for(count, options.jobs, [&](std::size_t code) {
            const Clutter g = graph_from_code(n, code);
            if (!perfect_elimination_ordering(g)) return;
            const BoundaryReport report = properly_exposed_subgraph(g);
            out.record(cases + code, "boundary components 2-edge-connected", report.all_two_edge_connected,
                       [&] { return describe(g); });
            out.observe("chordal");
        });
        cases += count;
    }
    return out.finish(cases);
}

SuiteReport skeleton_suite(int n, const SuiteOptions& options) {
    Collector out("skeleton n=" + std::to_string(n), options.max_witnesses);
    const SimplicialComplex skeleton = SimplicialComplex::skeleton(n, n - 3);
    const ExtendabilityReport ext = is_extendably_shellable(skeleton, options.guards);
    out.record(0, "(n-3)-skeleton extendably shellable", ext.extendable, [&] {
        std::string s = "stuck after";
        for (VertexSet f : ext.stuck_shelling) s += " " + f.to_string();
        return s;
    });
    // The same question through graphs: every reachable nonempty graph has an exposed edge.
    bool every_reachable_has_exposed = true;
    const std::size_t reachable = for_each_erasure_reachable(n, 2, [&](const Clutter& g) {
        if (!g.empty() && exposed_circuits(g).empty()) every_reachable_has_exposed = false;
    });
    out.record(1, "shelling and erasure encodings agree", ext.extendable == every_reachable_has_exposed,
               [] { return std::string("verdicts differ"); });
    out.observe("reachable facet sets", ext.reachable_states);
    out.observe("erasure-reachable graphs", reachable);
    return out.finish(1);
}

SuiteReport simon_probe(int n, int d, const SuiteOptions& options) {
    Collector out("simon n=" + std::to_string(n) + " d=" + std::to_string(d), options.max_witnesses);
    out.declare("linear quotients implies ridge-chordal");
    const std::uint64_t count = clutter_count(n, d, 24);
    const std::vector<VertexSet> all = subsets_of_size(VertexSet::range(n), d);
    parallel_for(count, options.jobs, [&](std::size_t code) {
        const Clutter c = clutter_from_code(n, d, all, code);
        if (!find_quotient_order(ideal_of_clutter(complement(c))).order) return;
        out.observe("linear quotients");
        out.record(code, "linear quotients implies ridge-chordal", is_ridge_chordal(c), [&] { return describe(c); });
    });
    return out.finish(count);
}

SuiteReport exposed_reachability_probe(int n, int d, const SuiteOptions& options) {
    Collector out("exposed-reachability n=" + std::to_string(n) + " d=" + std::to_string(d), options.max_witnesses);
    out.declare("reachable nonempty clutter has an exposed circuit");
    std::size_t index = 0;
    const std::size_t reachable = for_each_erasure_reachable(n, d, [&](const Clutter& c) {
        if (!c.empty())
            out.record(index, "reachable nonempty clutter has an exposed circuit", !exposed_circuits(c).empty(),
                       [&] { return describe(c); });
        ++index;
    });
    return out.finish(reachable);
}

SuiteReport subgraph_probe(int n, const SuiteOptions& options) {
    Collector out("subgraph n=" + std::to_string(n), options.max_witnesses);
    out.declare("chordal subgraph reachable by exposed erasures");
    const int m = static_cast<int>(binomial(n, 2));
    const std::uint64_t count = clutter_count(n, 2, 24);
    std::vector<VertexSet> edges = subsets_of_size(VertexSet::range(n), 2);
    std::vector<char> chordal(count, 0);
    for (std::uint64_t code = 0; code < count; ++code)
        chordal[code] = perfect_elimination_ordering(graph_from_code(n, code)).has_value();

    parallel_for(count, options.jobs, [&](std::size_t top) {
        if (!chordal[top]) return;
        // Everything reachable from `top` by removing exposed edges.
        std::unordered_set<std::uint64_t> seen{top};
        std::vector<std::uint64_t> stack{top};
        while (!stack.empty()) {
            const std::uint64_t state = stack.back();
            stack.pop_back();
            const auto adj = adjacency(graph_from_code(n, state));
            for (int k = 0; k < m; ++k) {
                if (!((state >> k) & 1U)) continue;
                if (!exposed_edge_status(adj, edges[static_cast<std::size_t>(k)]).exposed()) continue;
                const std::uint64_t next = state & ~(std::uint64_t{1} << k);
                if (seen.insert(next).second) stack.push_back(next);
            }
        }
        // Chordal subgraphs of `top` are its sub-masks with chordal[] set.
        for (std::uint64_t sub = top;; sub = (sub - 1) & top) {
            if (chordal[sub])
                out.record(top, "chordal subgraph reachable by exposed erasures", seen.count(sub) > 0, [&] {
                    return describe(graph_from_code(n, top)) + " -> " + describe(graph_from_code(n, sub));
                });
            if (sub == 0) break;
        }
    });
    return out.finish(count);
}

SuiteReport froberg_probe(int n, const SuiteOptions& options) {
    Collector out("froberg n=" + std::to_string(n), options.max_witnesses);
    out.declare("chordal iff linear resolution");
    const std::uint64_t count = clutter_count(n, 2, 24);
    parallel_for(count, options.jobs, [&](std::size_t code) {
        const Clutter g = graph_from_code(n, code);
        const bool classic = is_chordal_classic(g, options.guards);
        out.record(code, "chordal iff linear resolution",
                   classic == is_linear_resolution(hochster_betti_table(g, Field::GF2, options.guards), 2),
                   [&] { return describe(g); });
        if (classic) out.observe("chordal");
    });
    return out.finish(count);
}

}  // namespace chordal
