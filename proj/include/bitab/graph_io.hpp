#pragma once

/// \file graph_io.hpp
/// \brief Edge-list text and graph6 readers/writers.
///
/// Edge list: a header line "p q" followed by q lines "u v" with 1 <= u,v <= p.
/// graph6: the short form only (n < 63): one byte n+63, then the upper
/// triangle x(0,1) x(0,2) x(1,2) x(0,3) ... packed six bits per byte
/// (most significant first) and offset by 63.

#include <cctype>
#include <charconv>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "bitab/errors.hpp"
#include "bitab/graph.hpp"

namespace bitab {

enum class GraphFormat { EdgeList, Graph6 };

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

inline bool to_int(std::string_view s, int& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace detail

inline Graph parse_edge_list(std::string_view text) {
    std::vector<std::string_view> lines;
    for (std::size_t start = 0; start <= text.size();) {
        auto nl = text.find('\n', start);
        if (nl == std::string_view::npos) nl = text.size();
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    // Trailing blank lines are tolerated.
    while (!lines.empty() && detail::trim(lines.back()).empty()) lines.pop_back();
    if (lines.empty()) throw ParseError(1, "missing header \"p q\"");

    auto header = detail::split_ws(lines[0]);
    int p = 0, q = 0;
    if (header.size() != 2 || !detail::to_int(header[0], p) || !detail::to_int(header[1], q) || p < 0 ||
        q < 0)
        throw ParseError(1, "expected header \"p q\" with non-negative integers");
    if (q > pair_count(p))
        throw ParseError(1, "q = " + std::to_string(q) + " exceeds the " + std::to_string(pair_count(p)) +
                                " vertex pairs of a simple graph on " + std::to_string(p) + " vertices");
    if (static_cast<int>(lines.size()) - 1 < q)
        throw ParseError(static_cast<int>(lines.size()) + 1,
                         "expected " + std::to_string(q) + " edge lines, found " +
                             std::to_string(lines.size() - 1));
    if (static_cast<int>(lines.size()) - 1 > q)
        throw ParseError(q + 2, "unexpected content after " + std::to_string(q) + " edge lines");

    std::vector<Edge> edges;
    std::set<Edge> seen;
    for (int t = 1; t <= q; ++t) {
        auto fields = detail::split_ws(lines[t]);
        int u = 0, v = 0;
        if (fields.size() != 2 || !detail::to_int(fields[0], u) || !detail::to_int(fields[1], v))
            throw ParseError(t + 1, "expected \"u v\"");
        if (u < 1 || u > p || v < 1 || v > p)
            throw ParseError(t + 1, "vertex out of range 1.." + std::to_string(p));
        if (u == v) throw ParseError(t + 1, "self-loop at vertex " + std::to_string(u));
        Edge e(u, v);
        if (!seen.insert(e).second)
            throw ParseError(t + 1, "duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
        edges.push_back(e);
    }
    return Graph(p, edges);
}

inline std::string format_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

inline Graph parse_graph6(std::string_view line) {
    line = detail::trim(line);
    if (line.empty()) throw ParseError(0, "graph6: empty input");
    for (char c : line)
        if (c < 63 || c > 126)
            throw ParseError(0, std::string("graph6: invalid character '") + c + "'");
    if (line[0] == 126) throw ParseError(0, "graph6: long form (n >= 63) is not supported");

    const int n = line[0] - 63;
    const int bits = pair_count(n);
    const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
    if (line.size() - 1 < body) throw ParseError(0, "graph6: truncated bit string");
    if (line.size() - 1 > body) throw ParseError(0, "graph6: trailing data after bit string");

    std::vector<Edge> edges;
    int t = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++t) {
            const int byte = line[1 + static_cast<std::size_t>(t / 6)] - 63;
            if ((byte >> (5 - t % 6)) & 1) edges.emplace_back(i + 1, j + 1);
        }
    return Graph(n, edges);
}

inline std::string to_graph6(const Graph& g) {
    const int n = g.order();
    if (n >= 63) throw std::invalid_argument("to_graph6: only n < 63 is supported");
    std::string out(1, static_cast<char>(n + 63));
    int acc = 0, filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i + 1, j + 1) ? 1 : 0);
            if (++filled == 6) {
                out += static_cast<char>(acc + 63);
                acc = filled = 0;
            }
        }
    if (filled > 0) out += static_cast<char>((acc << (6 - filled)) + 63);
    return out;
}

/// Graph6 input takes the first non-blank line.
inline Graph parse_graph(std::string_view text, GraphFormat format) {
    if (format == GraphFormat::EdgeList) return parse_edge_list(text);
    std::istringstream in{std::string(text)};
    for (std::string line; std::getline(in, line);)
        if (!detail::trim(line).empty()) return parse_graph6(line);
    throw ParseError(0, "graph6: empty input");
}

}  // namespace bitab
