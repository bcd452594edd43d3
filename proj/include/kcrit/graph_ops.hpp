#pragma once

/**
 * Pure graph mutations: each takes a graph by const reference and returns a
 * new one. Operations that remove vertices compact the index range and can
 * report the old-to-new renaming.
 */

#include "kcrit/graph.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace kcrit {

/// A split of `target` into two new vertices whose neighbourhoods are `first`
/// and `second`. Both sides must be nonempty, disjoint, and cover N(target).
struct VertexSplit
{
    int target = -1;
    std::vector<int> first;
    std::vector<int> second;
};

/// A graph together with the renaming old vertex -> new vertex (-1 if removed).
template <typename G>
struct Renamed
{
    G graph;
    std::vector<int> old_to_new;
};

template <typename G>
auto delete_edge(const G & g, int u, int v) -> G
{
    if (u < 0 || v < 0 || u >= g.size() || v >= g.size() || ! g.adjacent(u, v))
        throw PreconditionError("delete_edge: " + std::to_string(u) + "-" + std::to_string(v) + " is not an edge");
    G out = g;
    out.remove_edge(u, v);
    return out;
}

template <typename G>
auto add_edge(const G & g, int u, int v) -> G
{
    if (u == v || g.adjacent(u, v))
        throw PreconditionError("add_edge: " + std::to_string(u) + "-" + std::to_string(v) + " is a loop or already an edge");
    G out = g;
    out.add_edge(u, v);
    return out;
}

template <typename G>
auto validate_split(const G & g, const VertexSplit & s) -> void
{
    if (s.target < 0 || s.target >= g.size())
        throw PreconditionError("split: target vertex out of range");
    if (s.first.empty() || s.second.empty())
        throw PreconditionError("split: both sides of the partition must be nonempty");
    typename G::Set a, b;
    for (int v : s.first) {
        if (v < 0 || v >= g.size())
            throw PreconditionError("split: vertex " + std::to_string(v) + " out of range");
        a.set(v);
    }
    for (int v : s.second) {
        if (v < 0 || v >= g.size())
            throw PreconditionError("split: vertex " + std::to_string(v) + " out of range");
        b.set(v);
    }
    if (a.intersects(b))
        throw PreconditionError("split: the two sides overlap");
    if ((a | b) != g.neighbours(s.target))
        throw PreconditionError("split: the partition does not cover exactly N(" + std::to_string(s.target) + ")");
}

/// The target keeps its index and takes `first`; the new vertex n takes `second`.
template <typename G>
auto split_vertex(const G & g, const VertexSplit & s) -> G
{
    validate_split(g, s);
    const int n = g.size();
    G out(n + 1);
    for (auto [u, v] : g.edges())
        if (u != s.target && v != s.target)
            out.add_edge(u, v);
    for (int v : s.first)
        out.add_edge(s.target, v);
    for (int v : s.second)
        out.add_edge(n, v);
    if (g.has_labels()) {
        for (int v = 0; v < n; ++v)
            out.set_label(v, g.label(v));
        out.set_label(s.target, g.label(s.target) + "'");
        out.set_label(n, g.label(s.target) + "''");
    }
    return out;
}

/// Glue nonadjacent u and v. The merged vertex sits at min(u, v); max(u, v)
/// is removed and higher indices shift down by one. Parallel edges collapse.
template <typename G>
auto identify_vertices_with_map(const G & g, int u, int v) -> Renamed<G>
{
    if (u == v || u < 0 || v < 0 || u >= g.size() || v >= g.size())
        throw PreconditionError("identify_vertices: need two distinct vertices");
    if (g.adjacent(u, v))
        throw PreconditionError("identify_vertices: " + std::to_string(u) + " and " + std::to_string(v)
                + " are adjacent (gluing would create a loop)");
    const int keep = std::min(u, v), gone = std::max(u, v);
    std::vector<int> map(static_cast<std::size_t>(g.size()));
    for (int w = 0; w < g.size(); ++w)
        map[static_cast<std::size_t>(w)] = w == gone ? keep : (w > gone ? w - 1 : w);
    G out(g.size() - 1);
    for (auto [a, b] : g.edges()) {
        int x = map[static_cast<std::size_t>(a)], y = map[static_cast<std::size_t>(b)];
        out.add_edge(x, y);
    }
    if (g.has_labels()) {
        for (int w = 0; w < g.size(); ++w)
            if (w != gone)
                out.set_label(map[static_cast<std::size_t>(w)], g.label(w));
        out.set_label(keep, g.label(u) + "*" + g.label(v));
    }
    return {std::move(out), std::move(map)};
}

template <typename G>
auto identify_vertices(const G & g, int u, int v) -> G
{
    return identify_vertices_with_map(g, u, v).graph;
}

/// G[keep], vertices renumbered in increasing order of their old index.
template <typename G>
auto induced_subgraph_with_map(const G & g, const typename G::Set & keep) -> Renamed<G>
{
    std::vector<int> map(static_cast<std::size_t>(g.size()), -1);
    int next = 0;
    keep.for_each([&](int v) { map[static_cast<std::size_t>(v)] = next++; });
    G out(next);
    for (auto [a, b] : g.edges()) {
        int x = map[static_cast<std::size_t>(a)], y = map[static_cast<std::size_t>(b)];
        if (x >= 0 && y >= 0)
            out.add_edge(x, y);
    }
    if (g.has_labels())
        keep.for_each([&](int v) { out.set_label(map[static_cast<std::size_t>(v)], g.label(v)); });
    return {std::move(out), std::move(map)};
}

template <typename G>
auto induced_subgraph(const G & g, const typename G::Set & keep) -> G
{
    return induced_subgraph_with_map(g, keep).graph;
}

template <typename G>
auto delete_vertices_with_map(const G & g, const typename G::Set & drop) -> Renamed<G>
{
    return induced_subgraph_with_map(g, g.all_vertices() - drop);
}

/// Connected components of G[within], each as a vertex set, ordered by smallest member.
template <typename G>
auto components(const G & g, const typename G::Set & within) -> std::vector<typename G::Set>
{
    using Set = typename G::Set;
    std::vector<Set> out;
    Set left = within;
    while (left.any()) {
        Set comp, frontier;
        frontier.set(left.first());
        while (frontier.any()) {
            comp |= frontier;
            Set next;
            frontier.for_each([&](int v) { next |= g.neighbours(v); });
            next &= left;
            next.subtract(comp);
            frontier = next;
        }
        left.subtract(comp);
        out.push_back(comp);
    }
    return out;
}

template <typename G>
auto components(const G & g) -> std::vector<typename G::Set>
{
    return components(g, g.all_vertices());
}

template <typename G>
auto is_connected(const G & g, const typename G::Set & within) -> bool
{
    return components(g, within).size() <= 1;
}

template <typename G>
auto is_connected(const G & g) -> bool
{
    return is_connected(g, g.all_vertices());
}

/// True iff g is K_k: exactly k vertices and k(k-1)/2 edges.
template <typename G>
auto is_complete_graph(const G & g, int k) -> bool
{
    return g.size() == k && g.edge_count() == k * (k - 1) / 2;
}

/// Disjoint union with b's vertices placed after a's.
template <typename G>
auto disjoint_union(const G & a, const G & b) -> G
{
    G out(a.size() + b.size());
    for (auto [u, v] : a.edges())
        out.add_edge(u, v);
    for (auto [u, v] : b.edges())
        out.add_edge(u + a.size(), v + a.size());
    if (a.has_labels() || b.has_labels()) {
        for (int v = 0; v < a.size(); ++v)
            out.set_label(v, a.label(v));
        for (int v = 0; v < b.size(); ++v)
            out.set_label(v + a.size(), b.label(v));
    }
    return out;
}

/// Relabel vertices: vertex v of g becomes perm[v].
template <typename G>
auto permute(const G & g, const std::vector<int> & perm) -> G
{
    G out(g.size());
    for (auto [u, v] : g.edges())
        out.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    if (g.has_labels())
        for (int v = 0; v < g.size(); ++v)
            out.set_label(perm[static_cast<std::size_t>(v)], g.label(v));
    return out;
}

/// Copy the structure into a graph type with a different word budget.
template <typename To, typename From>
auto convert_graph(const From & g) -> To
{
    To out(g.size());
    for (auto [u, v] : g.edges())
        out.add_edge(u, v);
    if (g.has_labels())
        for (int v = 0; v < g.size(); ++v)
            out.set_label(v, g.label(v));
    return out;
}

}
