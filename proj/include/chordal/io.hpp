#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "chordal/clutter.hpp"
#include "chordal/erasure.hpp"
#include "chordal/graph.hpp"
#include "chordal/homology.hpp"
#include "chordal/monomial_ideal.hpp"
#include "chordal/shelling.hpp"
#include "chordal/simplicial_complex.hpp"

namespace chordal {

using Json = nlohmann::ordered_json;

// Text formats. Blank lines are skipped and '#' starts a comment; ParseError carries the line number.

/// ".clut": header `n d`, then one circuit per line. The writer emits circuits lexicographically.
Clutter read_clutter(std::istream& in);
void write_clutter(std::ostream& out, const Clutter& c);

/// Header `n`, then one monomial per line as variable indices. Generator order is kept.
SquarefreeIdeal read_ideal(std::istream& in);
void write_ideal(std::ostream& out, const SquarefreeIdeal& ideal);

/// Header `n`, then one facet per line; the token `{}` denotes the empty facet.
/// Facet order is kept, since it may be a shelling order.
struct ComplexFile {
    int n = 0;
    std::vector<VertexSet> facets;

    SimplicialComplex complex() const { return SimplicialComplex(n, facets); }
};
ComplexFile read_complex(std::istream& in);
void write_complex(std::ostream& out, const SimplicialComplex& complex);

/// ".clut" with d = 2 and a trailing weight on every edge line: an integer, p/q or a decimal.
WeightedGraph read_weighted_graph(std::istream& in);
void write_weighted_graph(std::ostream& out, const WeightedGraph& wg);

Rational parse_rational(const std::string& text);

/// Opens `path` for reading ("-" is standard input) and applies `reader`.
template <typename Reader>
auto read_file(const std::string& path, Reader reader);

// JSON.

Json to_json(VertexSet s);
Json to_json(const std::vector<VertexSet>& sets);
Json to_json(const Clutter& c);

/// {"entries": [[i, j, beta]], "pdim": p, "convention": "ideal"}. `quotient` shifts i by one and adds β_{0,0} = 1.
Json betti_to_json(const BettiTable& table, bool quotient = false);

Json certificate_to_json(const ErasureCertificate& cert);
/// Parses and revalidates by replay; throws ParseError on malformed JSON and InvalidCertificate on a bad replay.
ErasureCertificate certificate_from_json(const Json& j);

Json quotient_report_to_json(const SquarefreeIdeal& ideal, const QuotientOrderReport& report);
Json shelling_to_json(const ShellingCheck& check);
Json polynomial_to_json(const IntPolynomial& p);
Json spanning_tree_to_json(const SpanningTree& tree);
Json boundary_to_json(const BoundaryReport& report);

/// Macaulay2-style diagram: columns are homological degrees i, rows are j - i, zeros print as '.'.
std::string format_betti_diagram(const BettiTable& table, bool quotient = false);

}  // namespace chordal

#include <fstream>
#include <iostream>

namespace chordal {

template <typename Reader>
auto read_file(const std::string& path, Reader reader) {
    if (path == "-") return reader(std::cin);
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return reader(in);
}

}  // namespace chordal
