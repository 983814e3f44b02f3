#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chordal/clutter.hpp"
#include "chordal/errors.hpp"
#include "chordal/exact_linalg.hpp"
#include "chordal/simplicial_complex.hpp"

namespace chordal {

enum class Field { GF2, Rational };

Field parse_field(const std::string& name);
std::string to_string(Field field);

/**
 * Signed boundary map from the faces in `faces` (all of one size s) to the
 * faces in `facets_below` (all of size s-1). Rows index `facets_below`.
 * Size-1 faces map to the empty face with coefficient 1 (reduced chains).
 */
template <typename Scalar>
DenseMatrix<Scalar> boundary_matrix(const std::vector<VertexSet>& faces, const std::vector<VertexSet>& faces_below);

/**
 * dim H̃_k(Δ; field) for k = -1..dim Δ, entry k+1 of the result.
 *
 * The void complex gives {0}; the complex {∅} gives {1}.
 */
std::vector<std::int64_t> reduced_homology_dims(const SimplicialComplex& complex, Field field,
                                                const SizeGuards& guards = {});

/// Same, from an explicit downward-closed face list sorted by size.
std::vector<std::int64_t> reduced_homology_of_faces(const std::vector<VertexSet>& faces, Field field);

/**
 * Graded Betti numbers β_{i,j} of an ideal (not of R/I). Only nonzero
 * entries are stored. A table for the zero ideal is flagged and has no
 * projective dimension.
 */
class BettiTable {
public:
    BettiTable() = default;
    static BettiTable zero_ideal() {
        BettiTable t;
        t.zero_ideal_ = true;
        return t;
    }

    void add(int i, int j, std::int64_t value);

    bool is_zero_ideal() const { return zero_ideal_; }
    std::int64_t at(int i, int j) const;
    const std::map<std::pair<int, int>, std::int64_t>& entries() const { return entries_; }

    /// β_i = Σ_j β_{i,j}, for i = 0..pdim. Empty for the zero ideal.
    std::vector<std::int64_t> totals() const;
    /// Largest i with β_i ≠ 0; nullopt for the zero ideal.
    std::optional<int> pdim() const;

    bool operator==(const BettiTable&) const = default;

private:
    bool zero_ideal_ = false;
    std::map<std::pair<int, int>, std::int64_t> entries_;
};

/**
 * Betti table of I = ideal_of_clutter(complement(c)), the Stanley–Reisner
 * ideal of clique_complex(c), by Hochster's formula:
 * β_{i,j} = Σ_{|S| = j} dim H̃_{j-i-2}(Δ restricted to S).
 */
BettiTable hochster_betti_table(const Clutter& c, Field field, const SizeGuards& guards = {});

/// Betti table of the Stanley–Reisner ideal of an arbitrary complex.
BettiTable stanley_reisner_betti_table(const SimplicialComplex& complex, Field field, const SizeGuards& guards = {});

/// Every nonzero β_{i,j} has j = i + d. The zero-ideal table counts as linear.
bool is_linear_resolution(const BettiTable& table, int d);

/// Throws std::invalid_argument for the zero ideal.
int projective_dimension(const BettiTable& table);

/// For a graph g: connected iff pdim(I of the complement) < n - 2. K_n is connected.
bool is_connected_graph_algebraic(const Clutter& g, Field field = Field::GF2);

}  // namespace chordal
