#include "chordal/simplicial_complex.hpp"

#include <algorithm>
#include <unordered_set>

#include "chordal/errors.hpp"

namespace chordal {

namespace {

bool size_then_lex(VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a, b);
}

}  // namespace

SimplicialComplex::SimplicialComplex(int n, std::vector<VertexSet> generators) : n_(n) {
    if (n < 0 || n > kMaxVertices) throw std::invalid_argument("vertex count must lie in 0..64");
    const VertexSet ground = VertexSet::range(n);
    for (VertexSet g : generators)
        if (!g.subset_of(ground)) throw std::invalid_argument("face " + g.to_string() + " not inside [n]");

    // Larger sets first so a single pass discards everything they contain.
    std::sort(generators.begin(), generators.end(), [](VertexSet a, VertexSet b) { return a.size() > b.size(); });
    for (VertexSet g : generators) {
        const bool covered =
            std::any_of(facets_.begin(), facets_.end(), [g](VertexSet f) { return g.subset_of(f); });
        if (!covered) facets_.push_back(g);
    }
    std::sort(facets_.begin(), facets_.end(), LexLess{});
}

SimplicialComplex SimplicialComplex::skeleton(int n, int k) {
    if (k + 1 >= n) return simplex(n);
    if (k < -1) return void_complex(n);
    return SimplicialComplex(n, subsets_of_size(VertexSet::range(n), k + 1));
}

int SimplicialComplex::dimension() const {
    if (facets_.empty()) return -2;
    int best = 0;
    for (VertexSet f : facets_) best = std::max(best, f.size());
    return best - 1;
}

bool SimplicialComplex::is_pure() const {
    return std::all_of(facets_.begin(), facets_.end(),
                       [this](VertexSet f) { return f.size() == facets_.front().size(); });
}

bool SimplicialComplex::contains(VertexSet face) const {
    return std::any_of(facets_.begin(), facets_.end(), [face](VertexSet f) { return face.subset_of(f); });
}

std::vector<VertexSet> SimplicialComplex::faces() const {
    std::unordered_set<VertexSet, VertexSetHash> seen;
    for (VertexSet f : facets_) for_each_subset(f, [&](VertexSet s) { seen.insert(s); });
    std::vector<VertexSet> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), size_then_lex);
    return out;
}

SimplicialComplex SimplicialComplex::induced(VertexSet subset) const {
    if (facets_.empty()) return void_complex(n_);
    std::vector<VertexSet> gens;
    gens.reserve(facets_.size());
    for (VertexSet f : facets_) gens.push_back(f & subset);
    return SimplicialComplex(n_, std::move(gens));
}

std::vector<std::int64_t> f_vector_of(const std::vector<VertexSet>& faces) {
    std::vector<std::int64_t> f;
    for (VertexSet s : faces) {
        const auto idx = static_cast<std::size_t>(s.size());
        if (f.size() <= idx) f.resize(idx + 1, 0);
        ++f[idx];
    }
    return f;
}

std::vector<std::int64_t> SimplicialComplex::f_vector() const { return f_vector_of(faces()); }

std::vector<std::int64_t> h_vector(const SimplicialComplex& complex, int rank) {
    std::vector<std::int64_t> f = complex.f_vector();
    f.resize(static_cast<std::size_t>(rank) + 1, 0);
    std::vector<std::int64_t> h(static_cast<std::size_t>(rank) + 1, 0);
    for (int k = 0; k <= rank; ++k) {
        std::int64_t acc = 0;
        for (int i = 0; i <= k; ++i) {
            const std::int64_t term = binomial(rank - i, k - i) * f[static_cast<std::size_t>(i)];
            acc += ((k - i) % 2 == 0) ? term : -term;
        }
        h[static_cast<std::size_t>(k)] = acc;
    }
    return h;
}

std::vector<VertexSet> minimal_nonfaces(const SimplicialComplex& complex) {
    if (complex.is_void()) return {VertexSet{}};
    const VertexSet ground = VertexSet::range(complex.n());
    const std::vector<VertexSet> faces = complex.faces();
    const std::unordered_set<VertexSet, VertexSetHash> face_set(faces.begin(), faces.end());

    // Every minimal nonface is a face plus one vertex.
    std::unordered_set<VertexSet, VertexSetHash> found;
    for (VertexSet f : faces) {
        for (int v : (ground - f).vertices()) {
            const VertexSet s = f.with(v);
            if (face_set.count(s) || found.count(s)) continue;
            bool minimal = true;
            for (int u : s.vertices()) {
                if (!face_set.count(s.without(u))) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) found.insert(s);
        }
    }
    std::vector<VertexSet> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), LexLess{});
    return out;
}

SimplicialComplex alexander_dual(const SimplicialComplex& complex) {
    const VertexSet ground = VertexSet::range(complex.n());
    std::vector<VertexSet> facets;
    for (VertexSet s : minimal_nonfaces(complex)) facets.push_back(ground - s);
    return SimplicialComplex(complex.n(), std::move(facets));
}

}  // namespace chordal
