#include "chordal/homology.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "chordal/errors.hpp"

namespace chordal {

Field parse_field(const std::string& name) {
    if (name == "gf2" || name == "GF2") return Field::GF2;
    if (name == "rational" || name == "Q" || name == "rationals") return Field::Rational;
    throw std::invalid_argument("unknown field '" + name + "' (expected gf2 or rational)");
}

std::string to_string(Field field) { return field == Field::GF2 ? "gf2" : "rational"; }

Eigen::Index Gf2Matrix::rank() && {
    Eigen::Index rank = 0;
    for (Eigen::Index col = 0; col < cols_ && rank < rows_; ++col) {
        const Eigen::Index w = col / 64;
        const std::uint64_t bit = std::uint64_t{1} << (col % 64);
        Eigen::Index pivot = -1;
        for (Eigen::Index r = rank; r < rows_; ++r) {
            if (word(r, w) & bit) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (Eigen::Index k = 0; k < words_; ++k) std::swap(word(pivot, k), word(rank, k));
        for (Eigen::Index r = rank + 1; r < rows_; ++r)
            if (word(r, w) & bit)
                for (Eigen::Index k = w; k < words_; ++k) word(r, k) ^= word(rank, k);
        ++rank;
    }
    return rank;
}

namespace {

// Position of v among the vertices of `face`, counted from 0.
int position_in(VertexSet face, int v) {
    return std::popcount(face.bits() & ((std::uint64_t{1} << (v - 1)) - 1));
}

std::size_t index_of(const std::vector<VertexSet>& sorted_faces, VertexSet f) {
    const auto it = std::lower_bound(sorted_faces.begin(), sorted_faces.end(), f,
                                     [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });
    return static_cast<std::size_t>(it - sorted_faces.begin());
}

std::vector<std::vector<VertexSet>> group_by_size(const std::vector<VertexSet>& faces) {
    std::vector<std::vector<VertexSet>> by_size;
    for (VertexSet f : faces) {
        const auto s = static_cast<std::size_t>(f.size());
        if (by_size.size() <= s) by_size.resize(s + 1);
        by_size[s].push_back(f);
    }
    for (auto& group : by_size)
        std::sort(group.begin(), group.end(), [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });
    return by_size;
}

Eigen::Index gf2_boundary_rank(const std::vector<VertexSet>& faces, const std::vector<VertexSet>& below) {
    if (faces.empty() || below.empty()) return 0;
    Gf2Matrix m(static_cast<Eigen::Index>(below.size()), static_cast<Eigen::Index>(faces.size()));
    for (std::size_t c = 0; c < faces.size(); ++c)
        for (int v : faces[c].vertices())
            m.flip(static_cast<Eigen::Index>(index_of(below, faces[c].without(v))), static_cast<Eigen::Index>(c));
    return std::move(m).rank();
}

Eigen::Index boundary_rank(const std::vector<VertexSet>& faces, const std::vector<VertexSet>& below, Field field) {
    if (faces.empty() || below.empty()) return 0;
    if (field == Field::GF2) return gf2_boundary_rank(faces, below);
    return exact_rank<Rational>(boundary_matrix<Rational>(faces, below));
}

}  // namespace

template <typename Scalar>
DenseMatrix<Scalar> boundary_matrix(const std::vector<VertexSet>& faces, const std::vector<VertexSet>& faces_below) {
    std::vector<VertexSet> below = faces_below;
    std::sort(below.begin(), below.end(), [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });
    std::vector<std::size_t> row_of(below.size());
    for (std::size_t i = 0; i < faces_below.size(); ++i) row_of[index_of(below, faces_below[i])] = i;

    DenseMatrix<Scalar> m = DenseMatrix<Scalar>::Zero(static_cast<Eigen::Index>(faces_below.size()),
                                                      static_cast<Eigen::Index>(faces.size()));
    for (std::size_t c = 0; c < faces.size(); ++c) {
        for (int v : faces[c].vertices()) {
            const std::size_t r = row_of[index_of(below, faces[c].without(v))];
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                position_in(faces[c], v) % 2 == 0 ? Scalar(1) : Scalar(-1);
        }
    }
    return m;
}

template DenseMatrix<Rational> boundary_matrix<Rational>(const std::vector<VertexSet>&, const std::vector<VertexSet>&);
template DenseMatrix<int> boundary_matrix<int>(const std::vector<VertexSet>&, const std::vector<VertexSet>&);

std::vector<std::int64_t> reduced_homology_of_faces(const std::vector<VertexSet>& faces, Field field) {
    if (faces.empty()) return {0};
    const auto by_size = group_by_size(faces);
    const std::size_t top = by_size.size();  // sizes 0..top-1, i.e. dims -1..top-2
    std::vector<Eigen::Index> ranks(top + 1, 0);  // ranks[s] = rank of ∂ on size-s chains
    for (std::size_t s = 1; s < top; ++s) ranks[s] = boundary_rank(by_size[s], by_size[s - 1], field);
    std::vector<std::int64_t> dims(top, 0);
    for (std::size_t s = 0; s < top; ++s)
        dims[s] = static_cast<std::int64_t>(by_size[s].size()) - ranks[s] - ranks[s + 1];
    return dims;
}

std::vector<std::int64_t> reduced_homology_dims(const SimplicialComplex& complex, Field field,
                                                const SizeGuards& guards) {
    check_guard("homology_max_n", guards.homology_max_n, complex.n());
    return reduced_homology_of_faces(complex.faces(), field);
}

void BettiTable::add(int i, int j, std::int64_t value) {
    if (value == 0) return;
    zero_ideal_ = false;
    entries_[{i, j}] += value;
}

std::int64_t BettiTable::at(int i, int j) const {
    const auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
}

std::vector<std::int64_t> BettiTable::totals() const {
    std::vector<std::int64_t> out;
    for (const auto& [key, value] : entries_) {
        const auto i = static_cast<std::size_t>(key.first);
        if (out.size() <= i) out.resize(i + 1, 0);
        out[i] += value;
    }
    return out;
}

std::optional<int> BettiTable::pdim() const {
    if (zero_ideal_ || entries_.empty()) return std::nullopt;
    int best = 0;
    for (const auto& [key, value] : entries_)
        if (value != 0) best = std::max(best, key.first);
    return best;
}

BettiTable stanley_reisner_betti_table(const SimplicialComplex& complex, Field field, const SizeGuards& guards) {
    check_guard("hochster_max_n", guards.hochster_max_n, complex.n());
    if (complex.is_void()) throw std::invalid_argument("the void complex has the unit ideal as Stanley-Reisner ideal");
    if (complex.contains(VertexSet::range(complex.n()))) return BettiTable::zero_ideal();

    BettiTable table;
    for_each_subset(VertexSet::range(complex.n()), [&](VertexSet s) {
        // A face spans a full simplex, which is acyclic; ∅ only feeds i = -1.
        if (complex.contains(s)) return;
        const auto dims = reduced_homology_of_faces(complex.induced(s).faces(), field);
        const int j = s.size();
        for (std::size_t idx = 0; idx < dims.size(); ++idx) {
            const int k = static_cast<int>(idx) - 1;
            const int i = j - k - 2;
            if (i >= 0 && dims[idx] != 0) table.add(i, j, dims[idx]);
        }
    });
    return table;
}

BettiTable hochster_betti_table(const Clutter& c, Field field, const SizeGuards& guards) {
    check_guard("hochster_max_n", guards.hochster_max_n, c.n());
    if (c.size() == static_cast<std::size_t>(binomial(c.n(), c.d()))) return BettiTable::zero_ideal();
    return stanley_reisner_betti_table(clique_complex(c), field, guards);
}

bool is_linear_resolution(const BettiTable& table, int d) {
    for (const auto& [key, value] : table.entries())
        if (value != 0 && key.second != key.first + d) return false;
    return true;
}

int projective_dimension(const BettiTable& table) {
    const auto p = table.pdim();
    if (!p) throw std::invalid_argument("projective dimension of the zero ideal is undefined");
    return *p;
}

bool is_connected_graph_algebraic(const Clutter& g, Field field) {
    if (g.d() != 2) throw std::invalid_argument("connectivity test expects a graph (d = 2)");
    const BettiTable table = hochster_betti_table(g, field);
    if (table.is_zero_ideal()) return true;
    return projective_dimension(table) < g.n() - 2;
}

}  // namespace chordal
