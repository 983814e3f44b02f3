#include "chordal/vertex_set.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>

#include "chordal/errors.hpp"

namespace chordal {

std::string VertexSet::to_string() const {
    const auto vs = vertices();
    const bool compact = vs.empty() || vs.back() <= 9;
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (!compact && i > 0) out += ',';
        out += std::to_string(vs[i]);
    }
    return compact ? out : "{" + out + "}";
}

std::int64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    // Saturates at INT64_MAX instead of overflowing.
    constexpr auto cap = static_cast<unsigned __int128>(INT64_MAX);
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (r > cap) return INT64_MAX;
    }
    return static_cast<std::int64_t>(r);
}

std::vector<VertexSet> subsets_of_size(VertexSet ground, int k) {
    std::vector<VertexSet> out;
    for_each_subset_of_size(ground, k, [&](VertexSet s) { out.push_back(s); });
    std::sort(out.begin(), out.end(), LexLess{});
    return out;
}

VertexSet parse_vertex_set(const std::string& text) {
    VertexSet s;
    std::string token;
    auto flush = [&] {
        if (token.empty()) return;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw ParseError("bad vertex '" + token + "'");
        }
        if (used != token.size() || v < 1 || v > kMaxVertices) throw ParseError("bad vertex '" + token + "'");
        if (s.contains(v)) throw ParseError("repeated vertex " + token);
        s.insert(v);
        token.clear();
    };
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '{' || c == '}' || c == '[' || c == ']')
            flush();
        else
            token += c;
    }
    flush();
    return s;
}

}  // namespace chordal
