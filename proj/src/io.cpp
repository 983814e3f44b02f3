#include "chordal/io.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace chordal {

namespace {

struct Line {
    int number = 0;
    std::vector<std::string> tokens;
};

/// Non-empty lines with comments stripped, split on whitespace.
std::vector<Line> tokenize(std::istream& in) {
    std::vector<Line> lines;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ss(raw);
        Line line{number, {}};
        for (std::string tok; ss >> tok;) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

int parse_int(const std::string& tok, int line) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(tok, &used);
    } catch (const std::exception&) {
        throw ParseError("expected an integer, got '" + tok + "'", line);
    }
    if (used != tok.size()) throw ParseError("expected an integer, got '" + tok + "'", line);
    return value;
}

VertexSet parse_set(const std::vector<std::string>& tokens, std::size_t count, int n, int line) {
    VertexSet s;
    for (std::size_t i = 0; i < count; ++i) {
        const int v = parse_int(tokens[i], line);
        if (v < 1 || v > n) throw ParseError("vertex " + tokens[i] + " outside 1.." + std::to_string(n), line);
        if (s.contains(v)) throw ParseError("repeated vertex " + tokens[i], line);
        s.insert(v);
    }
    return s;
}

int parse_n(const Line& header) {
    const int n = parse_int(header.tokens[0], header.number);
    if (n < 0 || n > kMaxVertices)
        throw ParseError("n = " + std::to_string(n) + " outside 0..64", header.number);
    return n;
}

void write_set(std::ostream& out, VertexSet s) {
    bool first = true;
    for (int v : s.vertices()) {
        out << (first ? "" : " ") << v;
        first = false;
    }
}

/// Shared reader for plain and weighted .clut files.
std::pair<Clutter, std::vector<std::string>> read_clut(std::istream& in, bool weighted) {
    const auto lines = tokenize(in);
    if (lines.empty()) throw ParseError("missing header 'n d'", 1);
    const Line& header = lines.front();
    if (header.tokens.size() != 2) throw ParseError("header must be 'n d'", header.number);
    const int n = parse_n(header);
    const int d = parse_int(header.tokens[1], header.number);
    if (d < 1 || d > std::max(n, 1)) throw ParseError("d = " + std::to_string(d) + " outside 1..n", header.number);
    if (weighted && d != 2) throw ParseError("weighted graphs need d = 2", header.number);

    std::vector<VertexSet> circuits;
    std::vector<std::string> weights;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const Line& line = lines[k];
        const std::size_t expected = static_cast<std::size_t>(d) + (weighted ? 1 : 0);
        if (line.tokens.size() != expected)
            throw ParseError("expected " + std::to_string(expected) + " tokens, got " +
                                 std::to_string(line.tokens.size()),
                             line.number);
        const VertexSet e = parse_set(line.tokens, static_cast<std::size_t>(d), n, line.number);
        if (std::find(circuits.begin(), circuits.end(), e) != circuits.end())
            throw ParseError("duplicate circuit " + e.to_string(), line.number);
        circuits.push_back(e);
        if (weighted) weights.push_back(line.tokens.back());
    }
    // Keep weights attached to their edges through the lexicographic sort.
    std::vector<std::size_t> idx(circuits.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return lex_less(circuits[a], circuits[b]); });
    std::vector<std::string> sorted_weights;
    if (weighted)
        for (std::size_t i : idx) sorted_weights.push_back(weights[i]);
    return {Clutter(n, d, std::move(circuits)), std::move(sorted_weights)};
}

}  // namespace

Clutter read_clutter(std::istream& in) { return read_clut(in, false).first; }

void write_clutter(std::ostream& out, const Clutter& c) {
    out << c.n() << ' ' << c.d() << '\n';
    for (VertexSet e : c.circuits()) {
        write_set(out, e);
        out << '\n';
    }
}

SquarefreeIdeal read_ideal(std::istream& in) {
    const auto lines = tokenize(in);
    if (lines.empty()) throw ParseError("missing header 'n'", 1);
    if (lines.front().tokens.size() != 1) throw ParseError("header must be 'n'", lines.front().number);
    const int n = parse_n(lines.front());
    std::vector<VertexSet> gens;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const Line& line = lines[k];
        gens.push_back(parse_set(line.tokens, line.tokens.size(), n, line.number));
    }
    try {
        return SquarefreeIdeal(n, std::move(gens));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

void write_ideal(std::ostream& out, const SquarefreeIdeal& ideal) {
    out << ideal.n() << '\n';
    for (VertexSet g : ideal.generators()) {
        write_set(out, g);
        out << '\n';
    }
}

ComplexFile read_complex(std::istream& in) {
    const auto lines = tokenize(in);
    if (lines.empty()) throw ParseError("missing header 'n'", 1);
    if (lines.front().tokens.size() != 1) throw ParseError("header must be 'n'", lines.front().number);
    ComplexFile file;
    file.n = parse_n(lines.front());
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const Line& line = lines[k];
        if (line.tokens.size() == 1 && line.tokens[0] == "{}") {
            file.facets.push_back(VertexSet{});
            continue;
        }
        file.facets.push_back(parse_set(line.tokens, line.tokens.size(), file.n, line.number));
    }
    return file;
}

void write_complex(std::ostream& out, const SimplicialComplex& complex) {
    out << complex.n() << '\n';
    for (VertexSet f : complex.facets()) {
        if (f.empty())
            out << "{}";
        else
            write_set(out, f);
        out << '\n';
    }
}

Rational parse_rational(const std::string& text) {
    const auto bad = [&] { return ParseError("bad rational '" + text + "'"); };
    if (text.empty()) throw bad();
    std::string body = text;
    bool negative = false;
    if (body[0] == '-' || body[0] == '+') {
        negative = body[0] == '-';
        body.erase(0, 1);
    }
    const auto digits = [](const std::string& s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    Rational value;
    if (const auto slash = body.find('/'); slash != std::string::npos) {
        const std::string num = body.substr(0, slash), den = body.substr(slash + 1);
        if (!digits(num) || !digits(den)) throw bad();
        const Rational q{boost::multiprecision::cpp_int(den)};
        if (q == 0) throw ParseError("zero denominator in '" + text + "'");
        value = Rational(boost::multiprecision::cpp_int(num)) / q;
    } else if (const auto dot = body.find('.'); dot != std::string::npos) {
        const std::string whole = body.substr(0, dot), frac = body.substr(dot + 1);
        if ((!whole.empty() && !digits(whole)) || !digits(frac)) throw bad();
        const boost::multiprecision::cpp_int scale = boost::multiprecision::pow(boost::multiprecision::cpp_int(10),
                                                                                 static_cast<unsigned>(frac.size()));
        value = Rational(boost::multiprecision::cpp_int(whole.empty() ? "0" : whole)) +
                Rational(boost::multiprecision::cpp_int(frac)) / Rational(scale);
    } else {
        if (!digits(body)) throw bad();
        value = Rational(boost::multiprecision::cpp_int(body));
    }
    return negative ? Rational(-value) : value;
}

WeightedGraph read_weighted_graph(std::istream& in) {
    auto [graph, weight_tokens] = read_clut(in, true);
    WeightedGraph wg{std::move(graph), {}};
    for (const std::string& tok : weight_tokens) wg.weights.push_back(parse_rational(tok));
    return wg;
}

void write_weighted_graph(std::ostream& out, const WeightedGraph& wg) {
    out << wg.graph.n() << " 2\n";
    for (std::size_t i = 0; i < wg.graph.size(); ++i) {
        write_set(out, wg.graph.circuits()[i]);
        out << ' ' << wg.weights[i].str() << '\n';
    }
}

Json to_json(VertexSet s) { return Json(s.vertices()); }

Json to_json(const std::vector<VertexSet>& sets) {
    Json arr = Json::array();
    for (VertexSet s : sets) arr.push_back(to_json(s));
    return arr;
}

Json to_json(const Clutter& c) { return Json{{"n", c.n()}, {"d", c.d()}, {"circuits", to_json(c.circuits())}}; }

Json betti_to_json(const BettiTable& table, bool quotient) {
    Json entries = Json::array();
    const int shift = quotient ? 1 : 0;
    if (quotient) entries.push_back({0, 0, 1});
    for (const auto& [key, value] : table.entries())
        if (value != 0) entries.push_back({key.first + shift, key.second, value});
    Json out;
    out["entries"] = entries;
    const auto pdim = table.pdim();
    if (pdim)
        out["pdim"] = *pdim + shift;
    else
        out["pdim"] = quotient ? Json(0) : Json(nullptr);
    out["convention"] = quotient ? "quotient" : "ideal";
    return out;
}

Json certificate_to_json(const ErasureCertificate& cert) {
    Json removed = Json::array();
    for (const Removal& r : cert.removed)
        removed.push_back(
            {{"circuit", to_json(r.circuit)}, {"clique", to_json(r.clique)}, {"k", r.k}, {"proper", r.proper}});
    return Json{{"n", cert.n},
                {"d", cert.d},
                {"removed", removed},
                {"result_circuits", to_json(cert.result.circuits())}};
}

ErasureCertificate certificate_from_json(const Json& j) {
    auto as_set = [](const Json& arr) {
        VertexSet s;
        for (const auto& v : arr) {
            const int x = v.get<int>();
            if (x < 1 || x > kMaxVertices || s.contains(x)) throw ParseError("bad vertex list " + arr.dump());
            s.insert(x);
        }
        return s;
    };
    ErasureCertificate cert;
    try {
        cert.n = j.at("n").get<int>();
        cert.d = j.at("d").get<int>();
        for (const auto& r : j.at("removed"))
            cert.removed.push_back(
                {as_set(r.at("circuit")), as_set(r.at("clique")), r.at("k").get<int>(), r.at("proper").get<bool>()});
        std::vector<VertexSet> result;
        for (const auto& c : j.at("result_circuits")) result.push_back(as_set(c));
        cert.result = Clutter(cert.n, cert.d, std::move(result));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed certificate: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw InvalidCertificate(std::string("result_circuits: ") + e.what());
    }
    validate_certificate(cert);
    return cert;
}

Json quotient_report_to_json(const SquarefreeIdeal& ideal, const QuotientOrderReport& report) {
    Json steps = Json::array();
    for (std::size_t k = 0; k < report.steps.size(); ++k) {
        const auto& s = report.steps[k];
        Json step{{"generator", to_json(ideal.generators()[k])}, {"linear", s.is_linear}};
        if (s.is_linear) {
            step["ell"] = s.ell;
            step["colon_variables"] = to_json(s.variables);
        } else {
            step["colon_unit"] = s.colon.unit;
            step["colon_generators"] = to_json(s.colon.generators);
        }
        steps.push_back(step);
    }
    Json out{{"n", ideal.n()}, {"ok", report.ok}, {"generators", to_json(ideal.generators())}, {"steps", steps}};
    out["ell"] = report.ell_sequence();
    out["failure_step"] = report.failure_step ? Json(*report.failure_step) : Json(nullptr);
    return out;
}

Json shelling_to_json(const ShellingCheck& check) {
    Json out{{"valid", check.valid},
             {"facets", to_json(check.order.facets)},
             {"restricted_sizes", check.order.restricted_sizes()}};
    Json restricted = Json::array();
    for (const auto& r : check.order.restricted_sets) restricted.push_back(to_json(r));
    out["restricted_sets"] = restricted;
    out["failure_step"] = check.failure_step ? Json(*check.failure_step) : Json(nullptr);
    return out;
}

Json polynomial_to_json(const IntPolynomial& p) { return Json(p.coefficients()); }

Json spanning_tree_to_json(const SpanningTree& tree) {
    return Json{{"edges", to_json(tree.edges)}, {"weight", tree.weight.str()}, {"removed", to_json(tree.removed)}};
}

Json boundary_to_json(const BoundaryReport& report) {
    Json comps = Json::array();
    for (const auto& c : report.components)
        comps.push_back({{"vertices", to_json(c.vertices)},
                         {"edges", to_json(c.edges)},
                         {"bridges", to_json(c.bridges)},
                         {"two_edge_connected", c.two_edge_connected}});
    return Json{{"chordal", report.chordal},
                {"edges", to_json(report.edges)},
                {"components", comps},
                {"all_two_edge_connected", report.all_two_edge_connected}};
}

std::string format_betti_diagram(const BettiTable& table, bool quotient) {
    std::map<std::pair<int, int>, std::int64_t> cells;  // (row = j - i, column = i)
    const int shift = quotient ? 1 : 0;
    if (quotient) cells[{0, 0}] = 1;
    for (const auto& [key, value] : table.entries())
        if (value != 0) cells[{key.second - key.first - shift, key.first + shift}] += value;
    if (cells.empty()) return "zero ideal\n";

    int max_col = 0, min_row = cells.begin()->first.first, max_row = min_row;
    for (const auto& [key, value] : cells) {
        max_col = std::max(max_col, key.second);
        min_row = std::min(min_row, key.first);
        max_row = std::max(max_row, key.first);
    }
    std::vector<std::int64_t> totals(static_cast<std::size_t>(max_col) + 1, 0);
    for (const auto& [key, value] : cells) totals[static_cast<std::size_t>(key.second)] += value;

    std::size_t width = 1;
    for (auto t : totals) width = std::max(width, std::to_string(t).size());
    std::size_t label = std::string("total:").size();
    for (int r = min_row; r <= max_row; ++r) label = std::max(label, std::to_string(r).size() + 1);

    std::ostringstream out;
    auto pad = [](const std::string& s, std::size_t w) { return std::string(w - std::min(w, s.size()), ' ') + s; };
    out << std::string(label, ' ');
    for (int c = 0; c <= max_col; ++c) out << ' ' << pad(std::to_string(c), width);
    out << '\n' << pad("total:", label);
    for (auto t : totals) out << ' ' << pad(std::to_string(t), width);
    out << '\n';
    for (int r = min_row; r <= max_row; ++r) {
        out << pad(std::to_string(r) + ":", label);
        for (int c = 0; c <= max_col; ++c) {
            const auto it = cells.find({r, c});
            out << ' ' << pad(it == cells.end() ? "." : std::to_string(it->second), width);
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace chordal
