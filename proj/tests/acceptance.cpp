// Acceptance run: one PASS/FAIL line per criterion, each with a pinned time limit.
#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "chordal/clutter.hpp"
#include "chordal/erasure.hpp"
#include "chordal/homology.hpp"
#include "chordal/monomial_ideal.hpp"
#include "chordal/suites.hpp"

using namespace chordal;

namespace {

struct Outcome {
    bool ok = false;
    std::string detail;
};

std::string join(const std::vector<std::int64_t>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

std::string join(const std::vector<int>& v) { return join(std::vector<std::int64_t>(v.begin(), v.end())); }

/// All named checks green, with a compact summary.
Outcome checks_green(const SuiteReport& r, const std::vector<std::string>& names) {
    Outcome out{true, ""};
    for (const std::string& name : names) {
        const CheckTally& t = r.check(name);
        out.ok = out.ok && t.failed == 0 && t.checked > 0;
        out.detail += (out.detail.empty() ? "" : "; ") + name + " " + std::to_string(t.checked - t.failed) + "/" +
                      std::to_string(t.checked);
        if (!t.witnesses.empty()) out.detail += " first failure: " + t.witnesses.front();
    }
    return out;
}

class Runner {
public:
    /// limit <= 0 means no pinned limit.
    void run(const std::string& id, const std::string& title, double limit, const std::function<Outcome()>& body) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = body();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = limit <= 0 || secs <= limit;
        const bool pass = o.ok && in_time;
        failures_ += pass ? 0 : 1;
        char timing[96];
        if (limit > 0)
            std::snprintf(timing, sizeof timing, "%.2fs / limit %.0fs", secs, limit);
        else
            std::snprintf(timing, sizeof timing, "%.2fs", secs);
        std::cout << (pass ? "PASS " : "FAIL ") << id << "  " << title << "  [" << timing << "]"
                  << (in_time ? "" : " TIME LIMIT EXCEEDED") << "\n      " << o.detail << std::endl;
    }
    int failures() const { return failures_; }

private:
    int failures_ = 0;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    SuiteOptions options;
    app.add_option("--jobs", options.jobs, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--seed", options.seed, "seed for the random MST instances");
    CLI11_PARSE(app, argc, argv);

    Runner runner;
    std::optional<SuiteReport> graphs6, clutters53;

    runner.run("C1", "quotient order of the G5 complement ideal, final colon <x1,x3>", 1, [] {
        const SquarefreeIdeal ideal(5, {{1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}});
        const QuotientOrderReport r = verify_quotient_order(ideal);
        const VertexSet last = r.steps.back().variables;
        return Outcome{r.ok && last == VertexSet{1, 3},
                       "ell=" + join(r.ell_sequence()) + " final colon variables " + last.to_string()};
    });

    runner.run("C2", "G5 Betti numbers (5,6,2) by Hochster and by the formula", 5, [] {
        const Clutter g5(5, 2, {{1, 2}, {2, 5}, {3, 4}, {3, 5}, {4, 5}});
        const auto hochster = hochster_betti_table(g5, Field::GF2).totals();
        const auto hochster_q = hochster_betti_table(g5, Field::Rational).totals();
        const auto cert = find_erasure_sequence(g5).certificate;
        const auto formula = cert ? betti_from_erasures(*cert) : std::vector<std::int64_t>{};
        const std::vector<std::int64_t> expected{5, 6, 2};
        return Outcome{hochster == expected && hochster_q == expected && formula == expected,
                       "hochster " + join(hochster) + " formula " + join(formula) + " k=" +
                           (cert ? join(cert->k_sequence()) : std::string("none"))};
    });

    runner.run("C3", "C3 certificate: k=(0,1,2), Betti (3,3,1), linear, nonlinear after 234, pdim 2", 5, [] {
        const ErasureCertificate cert = replay_erasures(5, 3, {{1, 2, 5}, {1, 3, 5}, {1, 4, 5}});
        const BettiTable table = hochster_betti_table(cert.result, Field::Rational);
        const BettiTable bigger = hochster_betti_table(cert.result.without({2, 3, 4}), Field::Rational);
        const std::vector<std::int64_t> expected{3, 3, 1};
        const bool ok = cert.k_sequence() == std::vector<int>{0, 1, 2} && betti_from_erasures(cert) == expected &&
                        table.totals() == expected && is_linear_resolution(table, 3) &&
                        !is_linear_resolution(bigger, 3) && table.pdim() == 2;
        return Outcome{ok, "k=" + join(cert.k_sequence()) + " formula " + join(betti_from_erasures(cert)) +
                               " hochster " + join(table.totals()) + " linear " +
                               (is_linear_resolution(table, 3) ? "yes" : "no") + ", with 234 " +
                               (is_linear_resolution(bigger, 3) ? "linear" : "nonlinear") + " pdim " +
                               std::to_string(table.pdim().value_or(-1))};
    });

    runner.run("C4", "clique complex of D has vanishing H1", 1, [] {
        const Clutter d = Clutter::complete(5, 3).without({1, 2, 3}).without({1, 2, 5}).without({1, 3, 5});
        const auto gf2 = reduced_homology_dims(clique_complex(d), Field::GF2);
        const auto q = reduced_homology_dims(clique_complex(d), Field::Rational);
        const auto h1 = [](const std::vector<std::int64_t>& h) { return h.size() > 2 ? h[2] : 0; };
        return Outcome{h1(gf2) == 0 && h1(q) == 0, "reduced homology GF(2) " + join(gf2) + " Q " + join(q)};
    });

    runner.run("C5", "n=6 exhaustive: classic chordality = erasures = linear resolution = linear quotients", 600, [&] {
        graphs6 = graph_chordality_suite(6, options);
        Outcome o = checks_green(*graphs6, {"chordal iff elimination ordering", "chordal iff erasure-reachable",
                                            "chordal iff linear resolution", "GF(2) table = Q table",
                                            "chordal iff linear quotients"});
        o.detail = std::to_string(graphs6->observation("chordal")) + " chordal of " + std::to_string(graphs6->cases) +
                   "; " + o.detail;
        return o;
    });

    runner.run("C6", "connected iff pdim < n-2, n <= 6", 600,
               [&] { return checks_green(connectivity_suite(6, options), {"connected iff pdim < n-2"}); });

    runner.run("C7", "d=3, n=5: proper-reachable iff (linear quotients and pdim < n-d)", 300, [&] {
        clutters53 = clutter_erasure_suite(5, 3, options);
        Outcome o = checks_green(*clutters53, {"proper-reachable iff (linear quotients and pdim < n-d)"});
        o.detail = std::to_string(clutters53->observation("proper-reachable")) + " proper-reachable; " + o.detail;
        return o;
    });

    runner.run("C8", "(n-3)-skeleton extendably shellable, n=5 and n=6", 120, [&] {
        Outcome a = checks_green(skeleton_suite(5, options), {"(n-3)-skeleton extendably shellable"});
        Outcome b = checks_green(skeleton_suite(6, options), {"(n-3)-skeleton extendably shellable"});
        return Outcome{a.ok && b.ok, "n=5: " + a.detail + "; n=6: " + b.detail};
    });

    runner.run("C9", "h-vector = k-multiset on the certificates of C5 and C7", 0, [&] {
        if (!graphs6 || !clutters53) return Outcome{false, "prerequisite suite did not run"};
        Outcome a = checks_green(*graphs6, {"h-vector = k-multiset"});
        Outcome b = checks_green(*clutters53, {"h-vector = k-multiset"});
        return Outcome{a.ok && b.ok, "graphs: " + a.detail + "; clutters: " + b.detail};
    });

    runner.run("C10", "chromatic product formula = deletion-contraction, chordal n <= 7", 600, [&] {
        return checks_green(chromatic_suite(7, options), {"product formula = deletion-contraction"});
    });

    runner.run("C11", "1000 seeded MST instances, n <= 9", 120, [&] {
        return checks_green(mst_suite(1000, 9, options),
                            {"erasure MST weight = Kruskal weight", "distinct weights: same edge set"});
    });

    runner.run("C12", "boundary components 2-edge-connected, chordal n <= 7", 900, [&] {
        return checks_green(boundary_suite(7, options), {"boundary components 2-edge-connected"});
    });

    runner.run("C13", "exposed iff unique facet on the C5 and C7 suites", 0, [&] {
        if (!graphs6 || !clutters53) return Outcome{false, "prerequisite suite did not run"};
        Outcome a = checks_green(*graphs6, {"exposed iff unique facet"});
        Outcome b = checks_green(*clutters53, {"exposed iff unique facet"});
        return Outcome{a.ok && b.ok, "graphs: " + a.detail + "; clutters: " + b.detail};
    });

    std::cout << "\nObservations (open questions, not criteria):\n";
    for (const auto& probe : {std::function<SuiteReport()>([&] { return simon_probe(5, 3, options); }),
                              std::function<SuiteReport()>([&] { return simon_probe(6, 2, options); }),
                              std::function<SuiteReport()>([&] { return exposed_reachability_probe(5, 3, options); }),
                              std::function<SuiteReport()>([&] { return subgraph_probe(5, options); })}) {
        try {
            const SuiteReport r = probe();
            for (const CheckTally& t : r.checks)
                std::cout << "  " << r.name << ": " << t.name << ": " << t.failed << " counterexamples in "
                          << t.checked << " cases\n";
        } catch (const std::exception& e) {
            std::cout << "  probe skipped: " << e.what() << "\n";
        }
    }

    std::cout << "\n" << (13 - runner.failures()) << "/13 criteria passed" << std::endl;
    return runner.failures() == 0 ? 0 : 1;
}
