#include "chordal/erasure.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "chordal/errors.hpp"

namespace chordal {

std::vector<int> ErasureCertificate::k_sequence() const {
    std::vector<int> ks;
    for (const Removal& r : removed) ks.push_back(r.k);
    return ks;
}

bool ErasureCertificate::all_proper() const {
    return std::all_of(removed.begin(), removed.end(), [](const Removal& r) { return r.proper; });
}

SquarefreeIdeal ErasureCertificate::removal_ideal() const {
    std::vector<VertexSet> gens;
    for (const Removal& r : removed) gens.push_back(r.circuit);
    return SquarefreeIdeal(n, std::move(gens));
}

namespace {

constexpr std::size_t kMaxIndexedCircuits = std::size_t{1} << 22;

/// Colex ranking of the d-subsets of {1..n}, so circuit presence can live in a flat array.
class CircuitIndex {
public:
    CircuitIndex(int n, int d) : n_(n), d_(d) {
        for (int a = 0; a <= n; ++a)
            for (int b = 0; b <= d; ++b) table_[a][b] = static_cast<std::size_t>(binomial(a, b));
        total_ = table_[n][d];
    }
    std::size_t total() const { return total_; }
    std::size_t rank(VertexSet s) const {
        std::size_t r = 0;
        int i = 1;
        for (std::uint64_t b = s.bits(); b != 0; b &= b - 1, ++i) r += table_[std::countr_zero(b)][i];
        return r;
    }
    int n() const { return n_; }
    int d() const { return d_; }

private:
    int n_;
    int d_;
    std::size_t total_ = 0;
    std::size_t table_[65][65]{};
};

/// Mutable presence array over K_n^d used by the searches.
class WorkingClutter {
public:
    WorkingClutter(const CircuitIndex& index, bool all_present)
        : index_(&index), present_(index.total(), all_present ? 1 : 0) {}

    bool contains(VertexSet e) const { return present_[index_->rank(e)] != 0; }
    void set(VertexSet e, bool on) { present_[index_->rank(e)] = on ? 1 : 0; }
    const std::vector<char>& bits() const { return present_; }

    bool extends(VertexSet s, int v) const {
        const int d = index_->d();
        if (s.size() + 1 < d) return true;
        bool ok = true;
        for_each_subset_of_size(s, d - 1, [&](VertexSet t) {
            if (ok && !contains(t.with(v))) ok = false;
        });
        return ok;
    }

    ExposedStatus status(VertexSet e) const {
        VertexSet closure = e;
        for (int v : (VertexSet::range(index_->n()) - e).vertices())
            if (extends(e, v)) closure.insert(v);
        bool clique = true;
        for_each_subset_of_size(closure, index_->d(), [&](VertexSet t) {
            if (clique && !contains(t)) clique = false;
        });
        if (!clique) return {};
        return {closure, closure.size() > index_->d()};
    }

private:
    const CircuitIndex* index_;
    std::vector<char> present_;
};

void check_indexable(int n, int d) {
    const auto total = binomial(n, d);
    check_guard("erasure_max_circuits", static_cast<long long>(kMaxIndexedCircuits), total);
}

struct VectorBoolHash {
    std::size_t operator()(const std::vector<bool>& v) const { return std::hash<std::vector<bool>>{}(v); }
};

class ErasureSearch {
public:
    ErasureSearch(const Clutter& target, const ErasureSearchOptions& options)
        : target_(target),
          options_(options),
          index_(target.n(), target.d()),
          current_(index_, true),
          to_remove_(complement(target).circuits()),
          removed_(to_remove_.size(), false) {}

    bool run() {
        ++nodes_;
        if (steps_.size() == to_remove_.size()) return true;
        if (failed_.count(removed_)) return false;
        for (std::size_t i = 0; i < to_remove_.size(); ++i) {
            if (removed_[i]) continue;
            const VertexSet e = to_remove_[i];
            const ExposedStatus st = current_.status(e);
            if (!st.exposed() || (options_.require_proper && !st.proper)) continue;
            apply(i, st);
            if (run()) return true;
            ++backtracks_;
            if (options_.greedy_only) {
                // Keep the greedy trail for the report; nothing else will be tried.
                return false;
            }
            undo(i);
        }
        if (options_.greedy_only) stuck_ = trail();
        failed_.insert(removed_);
        return false;
    }

    ErasureCertificate certificate() const {
        ErasureCertificate cert;
        cert.n = target_.n();
        cert.d = target_.d();
        cert.removed = steps_;
        cert.result = target_;
        return cert;
    }

    std::vector<VertexSet> trail() const {
        std::vector<VertexSet> out;
        for (const Removal& r : steps_) out.push_back(r.circuit);
        return out;
    }

    std::size_t nodes() const { return nodes_; }
    std::size_t backtracks() const { return backtracks_; }
    const std::vector<VertexSet>& stuck() const { return stuck_; }

private:
    void apply(std::size_t i, const ExposedStatus& st) {
        const VertexSet e = to_remove_[i];
        const int k = target_.n() - st.clique->size();
        steps_.push_back({e, *st.clique, k, st.proper});
        removed_[i] = true;
        current_.set(e, false);
    }
    void undo(std::size_t i) {
        steps_.pop_back();
        removed_[i] = false;
        current_.set(to_remove_[i], true);
    }

    const Clutter& target_;
    ErasureSearchOptions options_;
    CircuitIndex index_;
    WorkingClutter current_;
    std::vector<VertexSet> to_remove_;
    std::vector<bool> removed_;
    std::vector<Removal> steps_;
    std::unordered_set<std::vector<bool>, VectorBoolHash> failed_;
    std::vector<VertexSet> stuck_;
    std::size_t nodes_ = 0;
    std::size_t backtracks_ = 0;
};

}  // namespace

ErasureCertificate replay_erasures(int n, int d, const std::vector<VertexSet>& circuits, bool require_proper) {
    Clutter current = Clutter::complete(n, d);
    ErasureCertificate cert;
    cert.n = n;
    cert.d = d;
    for (std::size_t j = 0; j < circuits.size(); ++j) {
        const VertexSet e = circuits[j];
        if (!current.contains(e))
            throw InvalidCertificate("step " + std::to_string(j + 1) + ": " + e.to_string() + " is not a circuit");
        const ExposedStatus st = exposed_status(current, e);
        if (!st.exposed())
            throw InvalidCertificate("step " + std::to_string(j + 1) + ": " + e.to_string() + " is not exposed");
        if (require_proper && !st.proper)
            throw InvalidCertificate("step " + std::to_string(j + 1) + ": " + e.to_string() +
                                     " is exposed but not properly exposed");
        cert.removed.push_back({e, *st.clique, n - st.clique->size(), st.proper});
        current = current.without(e);
    }
    cert.result = current;
    return cert;
}

void validate_certificate(const ErasureCertificate& cert) {
    std::vector<VertexSet> circuits;
    for (const Removal& r : cert.removed) circuits.push_back(r.circuit);
    const ErasureCertificate fresh = replay_erasures(cert.n, cert.d, circuits);
    for (std::size_t j = 0; j < cert.removed.size(); ++j) {
        if (!(fresh.removed[j] == cert.removed[j]))
            throw InvalidCertificate("step " + std::to_string(j + 1) + ": recorded clique/k/proper do not match replay");
    }
    if (!(fresh.result == cert.result)) throw InvalidCertificate("recorded result differs from replayed clutter");
}

ErasureSearchResult find_erasure_sequence(const Clutter& target, const ErasureSearchOptions& options) {
    check_indexable(target.n(), target.d());
    ErasureSearch search(target, options);
    ErasureSearchResult result;
    const bool found = search.run();
    result.nodes = search.nodes();
    result.backtracks = search.backtracks();
    if (found)
        result.certificate = search.certificate();
    else if (options.greedy_only)
        result.stuck_after = search.stuck().empty() ? search.trail() : search.stuck();
    return result;
}

std::size_t enumerate_erasure_sequences(const Clutter& target, bool require_proper,
                                        const std::function<bool(const ErasureCertificate&)>& visit) {
    check_indexable(target.n(), target.d());
    const CircuitIndex index(target.n(), target.d());
    WorkingClutter current(index, true);
    const std::vector<VertexSet> to_remove = complement(target).circuits();
    std::vector<bool> removed(to_remove.size(), false);
    ErasureCertificate cert;
    cert.n = target.n();
    cert.d = target.d();
    cert.result = target;
    std::size_t count = 0;
    bool stop = false;

    std::function<void()> dfs = [&] {
        if (stop) return;
        if (cert.removed.size() == to_remove.size()) {
            ++count;
            if (!visit(cert)) stop = true;
            return;
        }
        for (std::size_t i = 0; i < to_remove.size() && !stop; ++i) {
            if (removed[i]) continue;
            const ExposedStatus st = current.status(to_remove[i]);
            if (!st.exposed() || (require_proper && !st.proper)) continue;
            cert.removed.push_back({to_remove[i], *st.clique, target.n() - st.clique->size(), st.proper});
            removed[i] = true;
            current.set(to_remove[i], false);
            dfs();
            current.set(to_remove[i], true);
            removed[i] = false;
            cert.removed.pop_back();
        }
    };
    dfs();
    return count;
}

std::vector<std::int64_t> betti_from_k_sequence(const std::vector<int>& ks) {
    if (ks.empty()) return {};
    const int top = *std::max_element(ks.begin(), ks.end());
    std::vector<std::int64_t> beta(static_cast<std::size_t>(top) + 1, 0);
    for (int k : ks)
        for (int i = 0; i <= k; ++i) beta[static_cast<std::size_t>(i)] += binomial(k, i);
    return beta;
}

std::vector<std::int64_t> betti_from_erasures(const ErasureCertificate& cert) {
    return betti_from_k_sequence(cert.k_sequence());
}

std::vector<int> BettiContribution::indices() const {
    std::vector<int> out;
    for (int i = 0; i <= max_index; ++i) out.push_back(i);
    return out;
}

BettiContribution betti_contribution(const Clutter& c, VertexSet e) {
    const ExposedStatus st = exposed_status(c, e);
    if (!st.exposed()) throw std::invalid_argument(e.to_string() + " is not exposed");
    const int k = c.n() - st.clique->size();
    return {k, k < c.n() - c.d()};
}

bool is_erasure_chordal(const Clutter& c, bool require_proper) {
    return find_erasure_sequence(c, {require_proper, false}).certificate.has_value();
}

HVectorCheck h_vector_check(const ErasureCertificate& cert) {
    const VertexSet ground = VertexSet::range(cert.n);
    std::vector<VertexSet> facets;
    for (const Removal& r : cert.removed) facets.push_back(ground - r.circuit);
    const int rank = cert.n - cert.d;
    HVectorCheck out;
    out.h = h_vector(SimplicialComplex(cert.n, std::move(facets)), rank);
    out.k_counts.assign(static_cast<std::size_t>(rank) + 1, 0);
    for (const Removal& r : cert.removed) ++out.k_counts.at(static_cast<std::size_t>(r.k));
    out.equal = out.h == out.k_counts;
    return out;
}

std::vector<VertexSet> simplicial_ridges(const Clutter& c) {
    if (c.d() < 2) throw std::invalid_argument("ridges need d >= 2");
    std::set<VertexSet, LexLess> ridges;
    for (VertexSet e : c.circuits())
        for (int v : e.vertices()) ridges.insert(e.without(v));
    std::vector<VertexSet> out;
    for (VertexSet r : ridges) {
        VertexSet closed = r;
        for (int v : (c.ground() - r).vertices())
            if (c.contains(r.with(v))) closed.insert(v);
        bool complete = true;
        for_each_subset_of_size(closed, c.d(), [&](VertexSet t) {
            if (complete && !c.contains(t)) complete = false;
        });
        if (complete) out.push_back(r);
    }
    return out;
}

namespace {

Clutter delete_ridge(const Clutter& c, VertexSet ridge) {
    std::vector<VertexSet> rest;
    for (VertexSet e : c.circuits())
        if (!ridge.subset_of(e)) rest.push_back(e);
    return Clutter(c.n(), c.d(), std::move(rest));
}

bool ridge_search(const Clutter& c, std::set<std::vector<std::uint64_t>>& failed) {
    if (c.empty()) return true;
    std::vector<std::uint64_t> key;
    for (VertexSet e : c.circuits()) key.push_back(e.bits());
    if (failed.count(key)) return false;
    for (VertexSet r : simplicial_ridges(c))
        if (ridge_search(delete_ridge(c, r), failed)) return true;
    failed.insert(std::move(key));
    return false;
}

}  // namespace

bool is_ridge_chordal(const Clutter& c) {
    if (c.d() < 2) throw std::invalid_argument("ridge chordality needs d >= 2");
    std::set<std::vector<std::uint64_t>> failed;
    return ridge_search(c, failed);
}

std::size_t for_each_erasure_reachable(int n, int d, const std::function<void(const Clutter&)>& visit) {
    check_guard("reachable_max_circuits", 64, binomial(n, d));
    const std::vector<VertexSet> all = subsets_of_size(VertexSet::range(n), d);
    const CircuitIndex index(n, d);
    std::vector<std::size_t> slot(all.size());  // lex position -> bit
    for (std::size_t i = 0; i < all.size(); ++i) slot[i] = index.rank(all[i]);

    auto to_clutter = [&](std::uint64_t present) {
        std::vector<VertexSet> circuits;
        for (std::size_t i = 0; i < all.size(); ++i)
            if ((present >> slot[i]) & 1U) circuits.push_back(all[i]);
        return Clutter(n, d, std::move(circuits));
    };

    const std::uint64_t full = all.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << all.size()) - 1;
    std::unordered_set<std::uint64_t> seen{full};
    std::deque<std::uint64_t> queue{full};
    std::size_t visited = 0;
    WorkingClutter work(index, false);
    while (!queue.empty()) {
        const std::uint64_t state = queue.front();
        queue.pop_front();
        visit(to_clutter(state));
        ++visited;
        for (std::size_t i = 0; i < all.size(); ++i) work.set(all[i], (state >> slot[i]) & 1U);
        for (std::size_t i = 0; i < all.size(); ++i) {
            if (!((state >> slot[i]) & 1U)) continue;
            if (!work.status(all[i]).exposed()) continue;
            const std::uint64_t next = state & ~(std::uint64_t{1} << slot[i]);
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    return visited;
}

}  // namespace chordal
