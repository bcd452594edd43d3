#pragma once

/**
 * Simple undirected graph on vertices 0..n-1, stored as one adjacency
 * bitset per vertex. The word budget is a template parameter; the default
 * Graph alias holds up to 128 vertices.
 *
 * Vertices may carry opaque string labels (provenance tags such as "u1" or
 * "w" from the constructions). Unlabelled vertices report their index.
 */

#include "kcrit/bitset.hpp"
#include "kcrit/error.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#ifndef KCRIT_GRAPH_WORDS
#define KCRIT_GRAPH_WORDS 2
#endif

namespace kcrit {

using Edge = std::pair<int, int>;

template <std::size_t Words>
class BasicGraph
{
public:
    using Set = Bitset<Words>;
    static constexpr int max_vertices = Set::capacity;

    BasicGraph() = default;

    explicit BasicGraph(int n) :
        _n(n)
    {
        if (n < 0 || n > max_vertices)
            throw LimitError("graph with " + std::to_string(n) + " vertices exceeds the "
                    + std::to_string(max_vertices) + "-vertex word budget");
        _rows.resize(static_cast<std::size_t>(n));
    }

    static auto from_edges(int n, const std::vector<Edge> & edges) -> BasicGraph
    {
        BasicGraph g(n);
        for (auto [u, v] : edges)
            g.add_edge(u, v);
        return g;
    }

    static auto complete(int n) -> BasicGraph
    {
        BasicGraph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                g.add_edge(u, v);
        return g;
    }

    static auto cycle(int n) -> BasicGraph
    {
        BasicGraph g(n);
        for (int u = 0; u < n; ++u)
            g.add_edge(u, (u + 1) % n);
        return g;
    }

    static auto path(int n) -> BasicGraph
    {
        BasicGraph g(n);
        for (int u = 0; u + 1 < n; ++u)
            g.add_edge(u, u + 1);
        return g;
    }

    auto size() const -> int { return _n; }

    auto edge_count() const -> int
    {
        int twice = 0;
        for (const auto & r : _rows)
            twice += r.count();
        return twice / 2;
    }

    auto adjacent(int u, int v) const -> bool { return _rows[static_cast<std::size_t>(u)].test(v); }
    auto neighbours(int v) const -> const Set & { return _rows[static_cast<std::size_t>(v)]; }
    auto degree(int v) const -> int { return _rows[static_cast<std::size_t>(v)].count(); }

    auto all_vertices() const -> Set { return Set::first_n(_n); }

    auto add_edge(int u, int v) -> void
    {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw PreconditionError("self-loop at vertex " + std::to_string(u));
        _rows[static_cast<std::size_t>(u)].set(v);
        _rows[static_cast<std::size_t>(v)].set(u);
    }

    auto remove_edge(int u, int v) -> void
    {
        _rows[static_cast<std::size_t>(u)].reset(v);
        _rows[static_cast<std::size_t>(v)].reset(u);
    }

    /// Edges (u, v) with u < v in lexicographic order.
    auto edges() const -> std::vector<Edge>
    {
        std::vector<Edge> out;
        for (int u = 0; u < _n; ++u)
            _rows[static_cast<std::size_t>(u)].for_each([&](int v) {
                if (v > u)
                    out.emplace_back(u, v);
            });
        return out;
    }

    auto degrees() const -> std::vector<int>
    {
        std::vector<int> d(static_cast<std::size_t>(_n));
        for (int v = 0; v < _n; ++v)
            d[static_cast<std::size_t>(v)] = degree(v);
        return d;
    }

    auto min_degree() const -> int
    {
        int best = _n == 0 ? 0 : _n;
        for (int v = 0; v < _n; ++v)
            best = std::min(best, degree(v));
        return best;
    }

    auto max_degree() const -> int
    {
        int best = 0;
        for (int v = 0; v < _n; ++v)
            best = std::max(best, degree(v));
        return best;
    }

    /// Number of edges with both ends in s.
    auto induced_edge_count(const Set & s) const -> int
    {
        int twice = 0;
        s.for_each([&](int v) { twice += _rows[static_cast<std::size_t>(v)].intersect_count(s); });
        return twice / 2;
    }

    auto has_labels() const -> bool { return ! _labels.empty(); }

    auto label(int v) const -> std::string
    {
        if (_labels.empty() || _labels[static_cast<std::size_t>(v)].empty())
            return std::to_string(v);
        return _labels[static_cast<std::size_t>(v)];
    }

    auto set_label(int v, std::string l) -> void
    {
        check_vertex(v);
        if (_labels.empty())
            _labels.resize(static_cast<std::size_t>(_n));
        _labels[static_cast<std::size_t>(v)] = std::move(l);
    }

    auto labels() const -> std::vector<std::string>
    {
        std::vector<std::string> out;
        out.reserve(static_cast<std::size_t>(_n));
        for (int v = 0; v < _n; ++v)
            out.push_back(label(v));
        return out;
    }

    auto find_label(const std::string & l) const -> std::optional<int>
    {
        for (int v = 0; v < _n; ++v)
            if (label(v) == l)
                return v;
        return std::nullopt;
    }

    auto clear_labels() -> void { _labels.clear(); }

    /// Same structure, ignoring labels.
    auto same_edges(const BasicGraph & o) const -> bool { return _n == o._n && _rows == o._rows; }

    auto operator==(const BasicGraph & o) const -> bool { return same_edges(o); }

    /// Checks the simple-graph invariants; returns a description of the first violation.
    auto invariant_violation() const -> std::optional<std::string>
    {
        if (static_cast<int>(_rows.size()) != _n)
            return "row count differs from n";
        if (! _labels.empty() && static_cast<int>(_labels.size()) != _n)
            return "label count differs from n";
        int degree_sum = 0;
        for (int u = 0; u < _n; ++u) {
            const auto & r = _rows[static_cast<std::size_t>(u)];
            if (r.test(u))
                return "self-loop at " + std::to_string(u);
            if (! r.is_subset_of(all_vertices()))
                return "neighbour outside vertex range at " + std::to_string(u);
            std::optional<std::string> bad;
            r.for_each([&](int v) {
                if (! bad && ! _rows[static_cast<std::size_t>(v)].test(u))
                    bad = "asymmetric adjacency " + std::to_string(u) + "-" + std::to_string(v);
            });
            if (bad)
                return bad;
            degree_sum += r.count();
        }
        if (degree_sum % 2 != 0)
            return "odd degree sum";
        return std::nullopt;
    }

private:
    auto check_vertex(int v) const -> void
    {
        if (v < 0 || v >= _n)
            throw PreconditionError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(_n));
    }

    int _n = 0;
    std::vector<Set> _rows;
    std::vector<std::string> _labels;
};

using Graph = BasicGraph<KCRIT_GRAPH_WORDS>;

}
