// Command-line front end. Human-readable summaries go to standard output;
// JSON reports go to --out (or to standard output for commands whose only product is JSON).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "chordal/clutter.hpp"
#include "chordal/erasure.hpp"
#include "chordal/errors.hpp"
#include "chordal/graph.hpp"
#include "chordal/homology.hpp"
#include "chordal/io.hpp"
#include "chordal/monomial_ideal.hpp"
#include "chordal/shelling.hpp"
#include "chordal/suites.hpp"

using namespace chordal;

namespace {

constexpr int kOk = 0;
constexpr int kPropertyFails = 1;
constexpr int kUsage = 2;

struct Config {
    std::string input;
    std::string field = "gf2";
    bool require_proper = false;
    bool greedy_only = false;
    std::uint64_t seed = 1;
    int jobs = 1;
    std::string out;
    bool quotient = false;
    SizeGuards guards;

    std::string monomial;
    bool find = false;
    int n = 0;
    int d = 0;
    int skeleton = -1;
    std::size_t count = 1000;
    std::string only;
};

void emit(const Config& cfg, const Json& report) {
    if (cfg.out.empty()) return;
    if (cfg.out == "-") {
        std::cout << report.dump(2) << '\n';
        return;
    }
    std::ofstream f(cfg.out);
    if (!f) throw ParseError("cannot write " + cfg.out);
    f << report.dump(2) << '\n';
}

Clutter load_clutter(const Config& cfg) { return read_file(cfg.input, [](std::istream& in) { return read_clutter(in); }); }

bool is_json_path(const std::string& path) {
    return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
}

ErasureCertificate load_certificate(const std::string& path) {
    return read_file(path, [](std::istream& in) {
        Json j;
        try {
            j = Json::parse(in);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(std::string("invalid JSON: ") + e.what());
        }
        return certificate_from_json(j);
    });
}

std::string join(const std::vector<int>& xs) {
    std::string s = "(";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
    return s + ")";
}

std::string join(const std::vector<std::int64_t>& xs) {
    std::string s = "(";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
    return s + ")";
}

/// Certificate for a .clut target (searched) or a certificate JSON (replayed).
std::optional<ErasureCertificate> certificate_for(const Config& cfg, ErasureSearchResult* search_out = nullptr) {
    if (is_json_path(cfg.input)) return load_certificate(cfg.input);
    ErasureSearchResult search =
        find_erasure_sequence(load_clutter(cfg), {.require_proper = cfg.require_proper, .greedy_only = cfg.greedy_only});
    if (search_out) *search_out = search;
    return search.certificate;
}

/// Linear table with β_{i,i+d} = totals[i].
BettiTable linear_table(const std::vector<std::int64_t>& totals, int d) {
    if (totals.empty()) return BettiTable::zero_ideal();
    BettiTable t;
    for (std::size_t i = 0; i < totals.size(); ++i)
        if (totals[i] != 0) t.add(static_cast<int>(i), static_cast<int>(i) + d, totals[i]);
    return t;
}

int cmd_complement(const Config& cfg) {
    const Clutter c = complement(load_clutter(cfg));
    if (cfg.out.empty() || cfg.out == "-") {
        write_clutter(std::cout, c);
    } else {
        std::ofstream f(cfg.out);
        write_clutter(f, c);
    }
    return kOk;
}

int cmd_exposed(const Config& cfg) {
    const Clutter c = load_clutter(cfg);
    Json rows = Json::array();
    for (VertexSet e : c.circuits()) {
        const ExposedStatus st = exposed_status(c, e);
        std::cout << e.to_string() << ": "
                  << (st.exposed() ? (st.proper ? "properly exposed" : "exposed") : "not exposed");
        if (st.exposed()) std::cout << " in " << st.clique->to_string();
        std::cout << '\n';
        Json row{{"circuit", to_json(e)}, {"exposed", st.exposed()}, {"proper", st.proper}};
        row["clique"] = st.exposed() ? to_json(*st.clique) : Json(nullptr);
        row["maximal_cliques"] = to_json(maximal_cliques_containing(c, e));
        rows.push_back(row);
    }
    emit(cfg, Json{{"n", c.n()}, {"d", c.d()}, {"circuits", rows}});
    return kOk;
}

int cmd_erasures_find(const Config& cfg) {
    const Clutter target = load_clutter(cfg);
    const ErasureSearchResult r =
        find_erasure_sequence(target, {.require_proper = cfg.require_proper, .greedy_only = cfg.greedy_only});
    Json report{{"found", r.certificate.has_value()}, {"nodes", r.nodes}, {"backtracks", r.backtracks}};
    if (r.certificate) {
        report["certificate"] = certificate_to_json(*r.certificate);
        std::cout << "found: removed";
        for (const Removal& rm : r.certificate->removed) std::cout << ' ' << rm.circuit.to_string();
        std::cout << "\nk = " << join(r.certificate->k_sequence()) << '\n';
    } else {
        report["witness"] = "no sequence";
        report["stuck_after"] = to_json(r.stuck_after);
        std::cout << "no sequence" << (cfg.greedy_only ? " (greedy)" : "") << " reaches the target from K_" << target.n()
                  << "^" << target.d() << '\n';
    }
    emit(cfg, report);
    return r.certificate ? kOk : kPropertyFails;
}

int cmd_erasures_verify(const Config& cfg) {
    Json report;
    try {
        const ErasureCertificate cert = load_certificate(cfg.input);
        if (cfg.require_proper && !cert.all_proper()) throw InvalidCertificate("a removal is not properly exposed");
        report = {{"valid", true}, {"k", cert.k_sequence()}};
        std::cout << "valid certificate, " << cert.removed.size() << " removals\n";
    } catch (const InvalidCertificate& e) {
        report = {{"valid", false}, {"reason", e.what()}};
        std::cout << "invalid certificate: " << e.what() << '\n';
        emit(cfg, report);
        return kPropertyFails;
    }
    emit(cfg, report);
    return kOk;
}

int cmd_erasures_betti(const Config& cfg) {
    const auto cert = certificate_for(cfg);
    if (!cert) {
        std::cout << "no erasure sequence reaches the target\n";
        emit(cfg, Json{{"found", false}, {"witness", "no sequence"}});
        return kPropertyFails;
    }
    const auto betti = betti_from_erasures(*cert);
    std::cout << "k = " << join(cert->k_sequence()) << "\nbetti = " << join(betti) << '\n';
    Json report = betti_to_json(linear_table(betti, cert->d), cfg.quotient);
    report["k"] = cert->k_sequence();
    report["certificate"] = certificate_to_json(*cert);
    emit(cfg, report);
    return kOk;
}

int cmd_ideal_colon(const Config& cfg) {
    const SquarefreeIdeal ideal = read_file(cfg.input, [](std::istream& in) { return read_ideal(in); });
    const VertexSet m = parse_vertex_set(cfg.monomial);
    if (m.empty() || !m.subset_of(VertexSet::range(ideal.n()))) throw ParseError("monomial outside the ring");
    const ColonIdeal colon = colon_by_monomial(ideal, SquarefreeMonomial(m));
    if (colon.unit)
        std::cout << "unit ideal\n";
    else if (colon.generators.empty())
        std::cout << "zero ideal\n";
    else
        for (VertexSet g : colon.generators) std::cout << g.to_string() << '\n';
    const bool linear = !colon.unit && !colon.generators.empty() &&
                        std::all_of(colon.generators.begin(), colon.generators.end(), [](VertexSet g) { return g.size() == 1; });
    emit(cfg, Json{{"unit", colon.unit}, {"generators", to_json(colon.generators)}, {"linear", linear}});
    return kOk;
}

int cmd_ideal_quotients(const Config& cfg) {
    SquarefreeIdeal ideal = read_file(cfg.input, [](std::istream& in) { return read_ideal(in); });
    Json extra;
    if (cfg.find) {
        const QuotientSearchResult r = find_quotient_order(ideal, {.greedy_only = cfg.greedy_only});
        extra = {{"nodes", r.nodes}, {"backtracks", r.backtracks}};
        if (!r.order) {
            std::cout << "no linear-quotient order" << (cfg.greedy_only ? " found greedily" : "") << '\n';
            Json report{{"ok", false}, {"witness", "no order"}};
            report.update(extra);
            emit(cfg, report);
            return kPropertyFails;
        }
        ideal = *r.order;
    }
    const QuotientOrderReport report = verify_quotient_order(ideal);
    Json j = quotient_report_to_json(ideal, report);
    if (!extra.is_null()) j.update(extra);
    if (report.ok)
        std::cout << "linear quotients, ell = " << join(report.ell_sequence()) << '\n';
    else
        std::cout << "generator " << *report.failure_step << " is not a linear divisor\n";
    emit(cfg, j);
    return report.ok ? kOk : kPropertyFails;
}

int cmd_betti_hochster(const Config& cfg) {
    const Clutter c = load_clutter(cfg);
    const BettiTable t = hochster_betti_table(c, parse_field(cfg.field), cfg.guards);
    std::cout << format_betti_diagram(t, cfg.quotient);
    Json report = betti_to_json(t, cfg.quotient);
    report["field"] = cfg.field;
    report["linear"] = is_linear_resolution(t, c.d());
    emit(cfg, report);
    return kOk;
}

int cmd_betti_formula(const Config& cfg) { return cmd_erasures_betti(cfg); }

int cmd_betti_compare(const Config& cfg) {
    const Clutter c = load_clutter(cfg);
    const BettiTable t = hochster_betti_table(c, parse_field(cfg.field), cfg.guards);
    const auto cert = find_erasure_sequence(c).certificate;
    const auto hochster = t.totals();
    std::cout << "hochster: " << join(hochster) << '\n' << format_betti_diagram(t, cfg.quotient);
    Json report{{"hochster", betti_to_json(t, cfg.quotient)}};
    if (!cert) {
        std::cout << "formula: not applicable (no erasure sequence)\n";
        report["formula"] = nullptr;
        report["agree"] = false;
        emit(cfg, report);
        return kPropertyFails;
    }
    const auto formula = betti_from_erasures(*cert);
    const bool agree = formula == hochster && linear_table(formula, c.d()) == t;
    std::cout << "formula:  " << join(formula) << '\n' << (agree ? "agree" : "DISAGREE") << '\n';
    report["formula"] = betti_to_json(linear_table(formula, c.d()), cfg.quotient);
    report["certificate"] = certificate_to_json(*cert);
    report["agree"] = agree;
    emit(cfg, report);
    return agree ? kOk : kPropertyFails;
}

ComplexFile load_complex(const Config& cfg) {
    if (cfg.skeleton >= 0) {
        const SimplicialComplex s = SimplicialComplex::skeleton(cfg.skeleton, cfg.skeleton - 3);
        return ComplexFile{s.n(), s.facets()};
    }
    return read_file(cfg.input, [](std::istream& in) { return read_complex(in); });
}

int cmd_shelling_verify(const Config& cfg) {
    const ComplexFile file = load_complex(cfg);
    const ShellingCheck check = verify_shelling(file.n, file.facets);
    if (check.valid) {
        std::cout << "shelling, restricted sizes " << join(check.order.restricted_sizes()) << '\n';
    } else {
        std::cout << "not a shelling: fails at facet " << *check.failure_step << '\n';
    }
    emit(cfg, shelling_to_json(check));
    return check.valid ? kOk : kPropertyFails;
}

int cmd_shelling_dual(const Config& cfg) {
    const SimplicialComplex dual = alexander_dual(load_complex(cfg).complex());
    write_complex(std::cout, dual);
    Json facets = to_json(dual.facets());
    emit(cfg, Json{{"n", dual.n()}, {"facets", facets}});
    return kOk;
}

int cmd_shelling_extendable(const Config& cfg) {
    const SimplicialComplex complex = load_complex(cfg).complex();
    const ExtendabilityReport r = is_extendably_shellable(complex, cfg.guards);
    std::cout << (r.extendable ? "extendably shellable" : "not extendably shellable") << " (" << r.reachable_states
              << " reachable facet sets)\n";
    Json report{{"extendable", r.extendable}, {"reachable_states", r.reachable_states}};
    if (!r.extendable) {
        report["stuck_shelling"] = to_json(r.stuck_shelling);
        std::cout << "stuck after:";
        for (VertexSet f : r.stuck_shelling) std::cout << ' ' << f.to_string();
        std::cout << '\n';
    }
    emit(cfg, report);
    return r.extendable ? kOk : kPropertyFails;
}

int cmd_shelling_from_erasures(const Config& cfg) {
    const auto cert = certificate_for(cfg);
    if (!cert) {
        std::cout << "no erasure sequence reaches the target\n";
        emit(cfg, Json{{"found", false}, {"witness", "no sequence"}});
        return kPropertyFails;
    }
    const ShellingOrder order = erasures_to_shelling(*cert);
    for (std::size_t i = 0; i < order.facets.size(); ++i)
        std::cout << order.facets[i].to_string() << "  restricted " << order.restricted_sets[i].size() << '\n';
    emit(cfg, shelling_to_json(ShellingCheck{true, order, std::nullopt}));
    return kOk;
}

int cmd_graph_chordal(const Config& cfg) {
    const Clutter g = load_clutter(cfg);
    const bool classic = is_chordal_classic(g, cfg.guards);
    const bool peo = perfect_elimination_ordering(g).has_value();
    const bool erasure = is_erasure_chordal(g);
    std::cout << "induced-cycle test: " << classic << "\nelimination ordering: " << peo
              << "\nerasure-reachable: " << erasure << '\n';
    emit(cfg, Json{{"classic", classic}, {"peo", peo}, {"erasure", erasure}, {"connected", is_connected(g)}});
    return classic && peo && erasure ? kOk : kPropertyFails;
}

int cmd_graph_peo(const Config& cfg) {
    const auto peo = perfect_elimination_ordering(load_clutter(cfg));
    if (!peo) {
        std::cout << "not chordal\n";
        emit(cfg, Json{{"chordal", false}});
        return kPropertyFails;
    }
    std::cout << "order " << join(peo->order) << "\ndegrees " << join(peo->degrees) << '\n';
    emit(cfg, Json{{"chordal", true}, {"order", peo->order}, {"degrees", peo->degrees}});
    return kOk;
}

int cmd_graph_chromatic(const Config& cfg) {
    const Clutter g = load_clutter(cfg);
    const IntPolynomial dc = chromatic_polynomial_dc(g, cfg.guards);
    Json report{{"deletion_contraction", polynomial_to_json(dc)}};
    std::cout << "deletion-contraction: " << dc.to_string() << '\n';
    if (!perfect_elimination_ordering(g)) {
        std::cout << "product formula: not chordal\n";
        report["product"] = nullptr;
        emit(cfg, report);
        return kPropertyFails;
    }
    const IntPolynomial product = chromatic_polynomial_product(g);
    std::cout << "product formula:      " << product.to_string() << '\n';
    report["product"] = polynomial_to_json(product);
    report["agree"] = product == dc;
    emit(cfg, report);
    return product == dc ? kOk : kPropertyFails;
}

int cmd_graph_mst(const Config& cfg) {
    const WeightedGraph wg = read_file(cfg.input, [](std::istream& in) { return read_weighted_graph(in); });
    const SpanningTree erased = mst_by_erasures(wg);
    const SpanningTree kruskal = kruskal_mst(wg);
    std::cout << "erasures: weight " << erased.weight.str() << ", edges";
    for (VertexSet e : erased.edges) std::cout << ' ' << e.to_string();
    std::cout << "\nkruskal:  weight " << kruskal.weight.str() << ", edges";
    for (VertexSet e : kruskal.edges) std::cout << ' ' << e.to_string();
    std::cout << '\n';
    const bool agree = erased.weight == kruskal.weight;
    emit(cfg, Json{{"erasures", spanning_tree_to_json(erased)}, {"kruskal", spanning_tree_to_json(kruskal)}, {"agree", agree}});
    return agree ? kOk : kPropertyFails;
}

int cmd_graph_boundary(const Config& cfg) {
    const BoundaryReport r = properly_exposed_subgraph(load_clutter(cfg));
    std::cout << r.edges.size() << " properly exposed edges in " << r.components.size() << " component(s)\n";
    for (const auto& c : r.components)
        std::cout << "  " << c.vertices.to_string() << ": " << c.edges.size() << " edges, "
                  << (c.two_edge_connected ? "2-edge-connected" : std::to_string(c.bridges.size()) + " bridge(s)") << '\n';
    emit(cfg, boundary_to_json(r));
    return r.all_two_edge_connected ? kOk : kPropertyFails;
}

Json suite_json(const SuiteReport& r) {
    Json checks = Json::array();
    for (const CheckTally& c : r.checks)
        checks.push_back({{"name", c.name}, {"checked", c.checked}, {"failed", c.failed}, {"witnesses", c.witnesses}});
    Json obs = Json::object();
    for (const auto& [k, v] : r.observations) obs[k] = v;
    return Json{{"suite", r.name}, {"cases", r.cases}, {"passed", r.passed()}, {"checks", checks}, {"observations", obs}};
}

void print_suite(const SuiteReport& r) {
    std::cout << r.name << ": " << r.cases << " cases, " << r.seconds << " s\n";
    for (const CheckTally& c : r.checks) {
        std::cout << "  [" << (c.failed == 0 ? "ok" : "FAIL") << "] " << c.name << ": " << c.failed << " of " << c.checked
                  << " failed\n";
        for (const std::string& w : c.witnesses) std::cout << "      " << w << '\n';
    }
    for (const auto& [k, v] : r.observations) std::cout << "  " << k << ": " << v << '\n';
}

SuiteOptions suite_options(const Config& cfg) {
    SuiteOptions o;
    o.jobs = cfg.jobs;
    o.seed = cfg.seed;
    o.guards = cfg.guards;
    return o;
}

int run_probe(const Config& cfg, const std::vector<SuiteReport>& reports) {
    Json arr = Json::array();
    for (const SuiteReport& r : reports) {
        print_suite(r);
        arr.push_back(suite_json(r));
    }
    emit(cfg, Json{{"probe", true}, {"reports", arr}});
    // Probes report counterexample candidates; they never fail the run.
    return kOk;
}

int cmd_probe_simon(const Config& cfg) {
    const int n = cfg.n > 0 ? cfg.n : 5;
    const int d = cfg.d > 0 ? cfg.d : 3;
    return run_probe(cfg, {simon_probe(n, d, suite_options(cfg)), exposed_reachability_probe(n, d, suite_options(cfg))});
}

int cmd_probe_ridge(const Config& cfg) {
    const Clutter c = load_clutter(cfg);
    const bool ridge = is_ridge_chordal(c);
    std::cout << (ridge ? "ridge-chordal" : "not ridge-chordal") << '\n';
    emit(cfg, Json{{"ridge_chordal", ridge}, {"simplicial_ridges", to_json(simplicial_ridges(c))}});
    return kOk;
}

int cmd_probe_froberg(const Config& cfg) { return run_probe(cfg, {froberg_probe(cfg.n > 0 ? cfg.n : 5, suite_options(cfg))}); }

int cmd_probe_subgraph(const Config& cfg) { return run_probe(cfg, {subgraph_probe(cfg.n > 0 ? cfg.n : 5, suite_options(cfg))}); }

int cmd_suite_exhaustive(const Config& cfg) {
    const int n = cfg.n > 0 ? cfg.n : 5;
    const SuiteOptions o = suite_options(cfg);
    std::vector<std::pair<std::string, std::function<SuiteReport()>>> suites{
        {"chordality", [&] { return graph_chordality_suite(n, o); }},
        {"connectivity", [&] { return connectivity_suite(n, o); }},
        {"clutters", [&] { return clutter_erasure_suite(n, cfg.d > 0 ? cfg.d : 3, o); }},
        {"chromatic", [&] { return chromatic_suite(n, o); }},
        {"boundary", [&] { return boundary_suite(n, o); }},
        {"skeleton", [&] { return skeleton_suite(n, o); }},
    };
    Json arr = Json::array();
    bool passed = true;
    bool matched = false;
    for (auto& [name, run] : suites) {
        if (!cfg.only.empty() && cfg.only != name) continue;
        matched = true;
        const SuiteReport r = run();
        print_suite(r);
        arr.push_back(suite_json(r));
        passed = passed && r.passed();
    }
    if (!matched) throw CLI::ValidationError("--only", "unknown suite '" + cfg.only + "'");
    emit(cfg, Json{{"n", n}, {"passed", passed}, {"reports", arr}});
    return passed ? kOk : kPropertyFails;
}

int cmd_suite_random(const Config& cfg) {
    const SuiteReport r = mst_suite(cfg.count, cfg.n > 0 ? cfg.n : 9, suite_options(cfg));
    print_suite(r);
    emit(cfg, Json{{"seed", cfg.seed}, {"passed", r.passed()}, {"reports", Json::array({suite_json(r)})}});
    return r.passed() ? kOk : kPropertyFails;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chordal clutters, exposed-circuit erasures and linear quotients"};
    app.require_subcommand(1);
    app.fallthrough();
    Config cfg;

    app.add_option("--field", cfg.field, "Coefficient field for homology")->check(CLI::IsMember({"gf2", "rational"}));
    app.add_flag("--require-proper", cfg.require_proper, "Only properly exposed removals");
    app.add_flag("--greedy-only", cfg.greedy_only, "Lexicographic greedy choice, no backtracking");
    app.add_option("--seed", cfg.seed, "Seed for randomized suites");
    app.add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--out", cfg.out, "Write the JSON report here ('-' for standard output)");
    app.add_flag("--quotient", cfg.quotient, "Report Betti numbers of R/I instead of I");
    app.add_option("--max-hochster-n", cfg.guards.hochster_max_n, "Size guard");
    app.add_option("--max-homology-n", cfg.guards.homology_max_n, "Size guard");
    app.add_option("--max-extendable-facets", cfg.guards.extendable_max_facets, "Size guard");
    app.add_option("--max-dc-n", cfg.guards.deletion_contraction_max_n, "Size guard");
    app.add_option("--max-cycle-n", cfg.guards.induced_cycle_max_n, "Size guard");

    int code = kOk;
    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, int (*fn)(const Config&),
                    bool needs_input) {
        CLI::App* sub = parent->add_subcommand(name, help);
        if (needs_input) sub->add_option("input", cfg.input, "Input file ('-' for standard input)")->required();
        sub->callback([&code, &cfg, fn] { code = fn(cfg); });
        return sub;
    };

    leaf(&app, "complement", "Complement of a clutter", cmd_complement, true);
    leaf(&app, "exposed", "Classify every circuit as exposed, properly exposed or not", cmd_exposed, true);

    CLI::App* erasures = app.add_subcommand("erasures", "Erasure certificates")->require_subcommand(1);
    leaf(erasures, "find", "Search for an erasure sequence reaching a clutter", cmd_erasures_find, true);
    leaf(erasures, "verify", "Replay a certificate", cmd_erasures_verify, true);
    leaf(erasures, "betti", "Betti numbers from the k-sequence of a certificate", cmd_erasures_betti, true);

    CLI::App* ideal = app.add_subcommand("ideal", "Squarefree monomial ideals")->require_subcommand(1);
    leaf(ideal, "colon", "Colon ideal (I : m)", cmd_ideal_colon, true)
        ->add_option("--monomial,-m", cfg.monomial, "Support of m, e.g. \"1 3\"")
        ->required();
    leaf(ideal, "quotients", "Check (or --find) a linear-quotient order", cmd_ideal_quotients, true)
        ->add_flag("--find", cfg.find, "Search for an order instead of checking the given one");

    CLI::App* betti = app.add_subcommand("betti", "Graded Betti numbers")->require_subcommand(1);
    leaf(betti, "hochster", "Betti table by Hochster's formula", cmd_betti_hochster, true);
    leaf(betti, "formula", "Betti numbers from an erasure sequence", cmd_betti_formula, true);
    leaf(betti, "compare", "Both methods side by side", cmd_betti_compare, true);

    CLI::App* shelling = app.add_subcommand("shelling", "Shellings and Alexander duality")->require_subcommand(1);
    auto complex_input = [&](CLI::App* sub) {
        sub->add_option("input", cfg.input, "Complex file ('-' for standard input)");
        sub->add_option("--skeleton", cfg.skeleton, "Use the (n-3)-skeleton of the simplex on [n] instead of a file");
        return sub;
    };
    complex_input(leaf(shelling, "verify", "Check the facet order of a complex file", cmd_shelling_verify, false));
    complex_input(leaf(shelling, "dual", "Alexander dual", cmd_shelling_dual, false));
    complex_input(leaf(shelling, "extendable", "Exhaustive extendable-shellability check", cmd_shelling_extendable, false));
    leaf(shelling, "from-erasures", "Shelling dual to an erasure sequence", cmd_shelling_from_erasures, true);

    CLI::App* graph = app.add_subcommand("graph", "Chordal graph applications")->require_subcommand(1);
    leaf(graph, "chordal", "Three chordality tests", cmd_graph_chordal, true);
    leaf(graph, "peo", "Perfect elimination ordering", cmd_graph_peo, true);
    leaf(graph, "chromatic", "Chromatic polynomial two ways", cmd_graph_chromatic, true);
    leaf(graph, "mst", "Minimum spanning tree by erasures and by Kruskal", cmd_graph_mst, true);
    leaf(graph, "boundary", "Subgraph of properly exposed edges", cmd_graph_boundary, true);

    CLI::App* probe = app.add_subcommand("probe", "Counterexample searches for open questions")->require_subcommand(1);
    auto sized = [&](CLI::App* sub) {
        sub->add_option("--n", cfg.n, "Number of vertices")->check(CLI::Range(1, 8));
        sub->add_option("--d", cfg.d, "Circuit size")->check(CLI::Range(1, 8));
        return sub;
    };
    sized(leaf(probe, "simon", "Linear quotients vs ridge-chordality, and exposed circuits after erasures", cmd_probe_simon, false));
    leaf(probe, "ridge-chordal", "Decide ridge-chordality of a clutter", cmd_probe_ridge, true);
    sized(leaf(probe, "froberg", "Chordality vs linear resolution, every graph on n vertices", cmd_probe_froberg, false));
    sized(leaf(probe, "subgraph", "Chordal subgraphs reachable by exposed erasures", cmd_probe_subgraph, false));

    CLI::App* suite = app.add_subcommand("suite", "Property suites")->require_subcommand(1);
    sized(leaf(suite, "exhaustive", "Exhaustive suites at size n", cmd_suite_exhaustive, false))
        ->add_option("--only", cfg.only, "chordality|connectivity|clutters|chromatic|boundary|skeleton");
    sized(leaf(suite, "random", "Seeded random MST suite", cmd_suite_random, false))
        ->add_option("--count", cfg.count, "Number of random graphs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const SizeGuardError& e) {
        std::cerr << e.what() << '\n';
        return kUsage;
    } catch (const InvalidCertificate& e) {
        std::cerr << "invalid certificate: " << e.what() << '\n';
        return kPropertyFails;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return code;
}
