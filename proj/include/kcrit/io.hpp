#pragma once

/**
 * Text formats.
 *
 * Edge list: the first non-comment line is "n m", followed by m lines "u v"
 * with 0-based endpoints. '#' starts a comment that runs to end of line.
 *
 * graph6: the standard printable encoding of the upper triangle of the
 * adjacency matrix (column by column, six bits per byte, offset 63).
 */

#include "kcrit/graph.hpp"

#include <cctype>
#include <istream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace kcrit {

enum class GraphFormat
{
    edge_list,
    graph6
};

inline auto format_name(GraphFormat f) -> const char *
{
    return f == GraphFormat::graph6 ? "graph6" : "edgelist";
}

namespace detail {

inline auto strip_comment(std::string line) -> std::string
{
    if (auto hash = line.find('#'); hash != std::string::npos)
        line.erase(hash);
    return line;
}

inline auto is_blank(std::string_view s) -> bool
{
    for (char c : s)
        if (! std::isspace(static_cast<unsigned char>(c)))
            return false;
    return true;
}

inline auto trim(std::string_view s) -> std::string_view
{
    while (! s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (! s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

inline auto parse_ints(const std::string & body, int line_no, std::size_t expected) -> std::vector<long long>
{
    std::istringstream ss(body);
    std::vector<long long> out;
    std::string tok;
    while (ss >> tok) {
        std::size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(tok, &used);
        }
        catch (const std::exception &) {
            used = 0;
        }
        if (used != tok.size())
            throw InputError("line " + std::to_string(line_no) + ": '" + tok + "' is not an integer");
        out.push_back(value);
    }
    if (out.size() != expected)
        throw InputError("line " + std::to_string(line_no) + ": expected " + std::to_string(expected)
                + " integers, found " + std::to_string(out.size()));
    return out;
}

}

template <typename G = Graph>
auto parse_edge_list(const std::string & text) -> G
{
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    long long n = -1, m = -1;
    int header_line = 0;
    std::vector<std::pair<long long, long long>> edges;
    std::vector<int> edge_lines;
    while (std::getline(in, raw)) {
        ++line_no;
        auto body = detail::strip_comment(raw);
        if (detail::is_blank(body))
            continue;
        if (n < 0) {
            auto nm = detail::parse_ints(body, line_no, 2);
            n = nm[0];
            m = nm[1];
            header_line = line_no;
            if (n < 0 || m < 0)
                throw InputError("line " + std::to_string(line_no) + ": negative vertex or edge count");
            if (n > G::max_vertices)
                throw LimitError("line " + std::to_string(line_no) + ": " + std::to_string(n)
                        + " vertices exceeds the " + std::to_string(G::max_vertices) + "-vertex budget");
            continue;
        }
        auto uv = detail::parse_ints(body, line_no, 2);
        edges.emplace_back(uv[0], uv[1]);
        edge_lines.push_back(line_no);
    }
    if (n < 0)
        throw InputError("line 1: missing \"n m\" header");
    if (static_cast<long long>(edges.size()) != m)
        throw InputError("line " + std::to_string(header_line) + ": header declares " + std::to_string(m)
                + " edges but " + std::to_string(edges.size()) + " were given");
    G g(static_cast<int>(n));
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        auto where = "line " + std::to_string(edge_lines[i]) + ": ";
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InputError(where + "endpoint out of range 0.." + std::to_string(n - 1));
        if (u == v)
            throw InputError(where + "self-loop at " + std::to_string(u));
        if (g.adjacent(static_cast<int>(u), static_cast<int>(v)))
            throw InputError(where + "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    return g;
}

template <typename G>
auto write_edge_list(const G & g) -> std::string
{
    auto edges = g.edges();
    std::string out = std::to_string(g.size()) + " " + std::to_string(edges.size()) + "\n";
    for (auto [u, v] : edges)
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

template <typename G>
auto write_graph6(const G & g) -> std::string
{
    const long long n = g.size();
    std::string out;
    if (n <= 62)
        out.push_back(static_cast<char>(n + 63));
    else if (n <= 258047) {
        out.push_back(static_cast<char>(126));
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(126));
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    int acc = 0, bits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = bits = 0;
            }
        }
    if (bits > 0)
        out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
    return out;
}

/// Decode one graph6 line. Nonzero padding bits are rejected so that a
/// decoded graph re-encodes to the identical byte string.
template <typename G = Graph>
auto parse_graph6(std::string_view line, int line_no = 1) -> G
{
    auto where = "line " + std::to_string(line_no) + ": ";
    line = detail::trim(line);
    if (line.starts_with(">>graph6<<"))
        line.remove_prefix(10);
    if (line.empty())
        throw InputError(where + "empty graph6 string");
    for (char c : line)
        if (c < 63 || c > 126)
            throw InputError(where + "byte " + std::to_string(static_cast<int>(static_cast<unsigned char>(c)))
                    + " outside the graph6 range 63..126");
    std::size_t pos = 0;
    long long n = 0;
    auto take = [&](int count) {
        long long v = 0;
        for (int i = 0; i < count; ++i) {
            if (pos >= line.size())
                throw InputError(where + "truncated graph6 size field");
            v = (v << 6) | (line[pos++] - 63);
        }
        return v;
    };
    if (line[0] != 126)
        n = take(1);
    else if (line.size() > 1 && line[1] != 126) {
        ++pos;
        n = take(3);
    }
    else {
        pos += 2;
        n = take(6);
    }
    if (n > G::max_vertices)
        throw LimitError(where + std::to_string(n) + " vertices exceeds the " + std::to_string(G::max_vertices)
                + "-vertex budget");
    const long long nbits = n * (n - 1) / 2;
    const long long nbytes = (nbits + 5) / 6;
    if (static_cast<long long>(line.size() - pos) != nbytes)
        throw InputError(where + "graph6 body has " + std::to_string(line.size() - pos) + " bytes, expected "
                + std::to_string(nbytes) + " for n=" + std::to_string(n));
    G g(static_cast<int>(n));
    long long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            int byte = line[pos + static_cast<std::size_t>(bit / 6)] - 63;
            if ((byte >> (5 - bit % 6)) & 1)
                g.add_edge(i, j);
        }
    if (nbits % 6 != 0) {
        int last = line.back() - 63;
        int pad = static_cast<int>(6 - nbits % 6);
        if (last & ((1 << pad) - 1))
            throw InputError(where + "nonzero graph6 padding bits");
    }
    return g;
}

/// Every non-blank line of the text as a graph6 graph.
template <typename G = Graph>
auto parse_graph6_all(const std::string & text) -> std::vector<G>
{
    std::vector<G> out;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (detail::is_blank(raw))
            continue;
        out.push_back(parse_graph6<G>(raw, line_no));
    }
    return out;
}

/// graph6 if the first significant byte is in the graph6 range, otherwise edge list.
inline auto detect_format(const std::string & text) -> GraphFormat
{
    if (detail::trim(text).starts_with(">>graph6<<"))
        return GraphFormat::graph6;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c)))
            continue;
        return (c >= 63 && c <= 126) ? GraphFormat::graph6 : GraphFormat::edge_list;
    }
    return GraphFormat::edge_list;
}

template <typename G = Graph>
auto parse_graph(const std::string & text, std::optional<GraphFormat> format = std::nullopt) -> G
{
    auto f = format.value_or(detect_format(text));
    if (f == GraphFormat::edge_list)
        return parse_edge_list<G>(text);
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (! detail::is_blank(raw))
            return parse_graph6<G>(raw, line_no);
    }
    throw InputError("line 1: empty input");
}

template <typename G>
auto write_graph(const G & g, GraphFormat f) -> std::string
{
    return f == GraphFormat::graph6 ? write_graph6(g) + "\n" : write_edge_list(g);
}

inline auto read_stream(std::istream & in) -> std::string
{
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}
