#pragma once

/**
 * Generators for sparse k-critical graphs.
 *
 *   gallai_chain(k, j)  j copies of K_k glued by successive compositions
 *   hkt(k, t)           two K_{k-1}'s u and v, u_i v_j for i, j <= t, and a
 *                       vertex w joined to u_i, v_i for i > t
 *   toft_extend         replace an edge uv by a K_{k-1} joined to u, v, w
 *   gk_family(k, s)     s Toft steps from a 3-connected seed
 *   two_clique(k)       a 2k-vertex k-critical graph with k^2 - 3 edges
 */

#include "kcrit/coloring.hpp"
#include "kcrit/connectivity.hpp"
#include "kcrit/graph.hpp"
#include "kcrit/graph_ops.hpp"
#include "kcrit/io.hpp"
#include "kcrit/ore.hpp"
#include "kcrit/potential.hpp"

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace kcrit {

template <typename G = Graph>
auto gallai_chain(int k, int j) -> G
{
    require_k(k, "gallai_chain");
    if (j < 1)
        throw PreconditionError("gallai_chain: need at least one copy of K_k");
    auto clique = G::complete(k);
    G g = clique;
    std::vector<int> rest;
    for (int v = 1; v < k - 1; ++v)
        rest.push_back(v);
    // Glue at the last vertex of the previous copy so the chain stays path-like.
    for (int i = 1; i < j; ++i) {
        const int x = g.size() - 1;
        const int y = g.neighbours(x).to_vector().back();
        g = compose(g, x, y, clique, VertexSplit{k - 1, {0}, rest});
    }
    return g;
}

template <typename G = Graph>
auto hkt(int k, int t) -> G
{
    require_k(k, "hkt");
    if (t < 1 || 2 * t >= k)
        throw PreconditionError("hkt: t must satisfy 1 <= t < k/2 (got k=" + std::to_string(k) + ", t="
                + std::to_string(t) + ")");
    const int w = 2 * k - 2;
    auto u = [](int i) { return i - 1; };
    auto v = [k](int i) { return k - 2 + i; };
    G g(2 * k - 1);
    for (int i = 1; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            g.add_edge(u(i), u(j));
            g.add_edge(v(i), v(j));
        }
    for (int i = 1; i <= t; ++i)
        for (int j = 1; j <= t; ++j)
            g.add_edge(u(i), v(j));
    for (int i = t + 1; i < k; ++i) {
        g.add_edge(w, u(i));
        g.add_edge(w, v(i));
    }
    for (int i = 1; i < k; ++i) {
        g.set_label(u(i), "u" + std::to_string(i));
        g.set_label(v(i), "v" + std::to_string(i));
    }
    g.set_label(w, "w");
    return g;
}

/// Sizes of S1, S2, S3 in a Toft step; they must be positive and sum to k - 1.
using ToftParts = std::array<int, 3>;

inline auto default_toft_parts(int k) -> ToftParts
{
    return {1, 1, k - 3};
}

/// Checks that every (k-1)-colouring of G - uv gives u, v and w one colour.
/// Returns a colouring of G - uv that breaks it, if any.
template <typename G>
auto toft_violation(const G & g, int k, int u, int v, int w, const Limits & limits = default_limits())
        -> std::optional<std::vector<int>>
{
    auto h = delete_edge(g, u, v);
    auto uv = forcing_detail(h, k - 1, u, v, limits);
    if (uv.relation == ForcingRelation::uncolorable)
        throw PreconditionError("toft_extend: G - e is not " + std::to_string(k - 1) + "-colourable");
    if (uv.distinct_witness)
        return uv.distinct_witness;
    if (g.adjacent(u, w)) {
        auto any = colorable(h, k - 1, limits);
        return any.witness;
    }
    auto uw = forcing_detail(h, k - 1, u, w, limits);
    if (uw.distinct_witness)
        return uw.distinct_witness;
    return std::nullopt;
}

/// One Toft step. The new clique gets vertices n..n+k-2: first S1 (joined
/// to u), then S2 (to v), then S3 (to w). The precondition is re-checked.
template <typename G>
auto toft_extend(const G & g, int k, int u, int v, int w, ToftParts parts, const Limits & limits = default_limits()) -> G
{
    require_k(k, "toft_extend");
    for (int s : parts)
        if (s < 1)
            throw PreconditionError("toft_extend: each of S1, S2, S3 must be nonempty");
    if (parts[0] + parts[1] + parts[2] != k - 1)
        throw PreconditionError("toft_extend: |S1| + |S2| + |S3| must be k - 1 = " + std::to_string(k - 1));
    const int n = g.size();
    if (w < 0 || w >= n || w == u || w == v)
        throw PreconditionError("toft_extend: w must be a vertex other than u and v");
    if (u < 0 || v < 0 || u >= n || v >= n || ! g.adjacent(u, v))
        throw PreconditionError("toft_extend: uv is not an edge");
    if (auto bad = toft_violation(g, k, u, v, w, limits)) {
        std::string col;
        for (std::size_t i = 0; i < bad->size(); ++i)
            col += (i ? " " : "") + std::to_string((*bad)[i]);
        throw PreconditionError("toft_extend: u, v, w do not always share a colour in G - uv; counterexample colouring: " + col);
    }
    G out(n + k - 1);
    for (auto [a, b] : g.edges())
        if (! ((a == u && b == v) || (a == v && b == u)))
            out.add_edge(a, b);
    for (int i = n; i < n + k - 1; ++i)
        for (int j = i + 1; j < n + k - 1; ++j)
            out.add_edge(i, j);
    int next = n;
    for (int anchor : {u, v, w})
        for (int c = 0; c < parts[static_cast<std::size_t>(anchor == u ? 0 : anchor == v ? 1 : 2)]; ++c)
            out.add_edge(anchor, next++);
    if (g.has_labels()) {
        for (int a = 0; a < n; ++a)
            out.set_label(a, g.label(a));
        int round = 1;
        while (out.find_label("x" + std::to_string(round) + "_1"))
            ++round;
        for (int i = 0; i < k - 1; ++i)
            out.set_label(n + i, "x" + std::to_string(round) + "_" + std::to_string(i + 1));
    }
    return out;
}

/// A k-critical graph on 2k vertices with k^2 - 3 edges: a K_{k-1} X with a
/// marked vertex x, two vertices p, q joined to X - x, and a second K_{k-1}
/// split into Y1, Yp, Yq joined to x, p, q respectively.
template <typename G = Graph>
auto two_clique(int k, ToftParts parts) -> G
{
    require_k(k, "two_clique");
    for (int s : parts)
        if (s < 1)
            throw PreconditionError("two_clique: each part must be nonempty");
    if (parts[0] + parts[1] + parts[2] != k - 1)
        throw PreconditionError("two_clique: parts must sum to k - 1");
    const int n = 2 * k;
    G g(n);
    // X = 0..k-2 (x = 0), p = k-1, q = k, Y = k+1..2k-1
    const int p = k - 1, q = k;
    for (int i = 0; i < k - 1; ++i)
        for (int j = i + 1; j < k - 1; ++j) {
            g.add_edge(i, j);
            g.add_edge(k + 1 + i, k + 1 + j);
        }
    for (int i = 1; i < k - 1; ++i) {
        g.add_edge(p, i);
        g.add_edge(q, i);
    }
    int y = k + 1;
    for (auto [anchor, size] : {std::pair{0, parts[0]}, std::pair{p, parts[1]}, std::pair{q, parts[2]}})
        for (int c = 0; c < size; ++c)
            g.add_edge(anchor, y++);
    for (int i = 0; i < k - 1; ++i) {
        g.set_label(i, "x" + std::to_string(i + 1));
        g.set_label(k + 1 + i, "y" + std::to_string(i + 1));
    }
    g.set_label(p, "p");
    g.set_label(q, "q");
    return g;
}

template <typename G = Graph>
auto two_clique(int k) -> G
{
    return two_clique<G>(k, default_toft_parts(k));
}

/// A starting graph G' for the family with a forced pair (u, w): in every
/// (k-1)-colouring of H' = G' - removed, u and w share a colour.
struct FamilySeed
{
    int k = 0;
    std::string edge_list;
    int u = -1, w = -1;
    std::vector<Edge> removed;
    std::vector<std::string> labels;
};

/// Built-in seeds. k >= 6 uses H_{k,2} with H' = H_{k,2} - {u1v1, u1v2};
/// k = 4 and 5 use graphs found by find_figure_graphs (see seeds.hpp).
inline auto family_seed(int k) -> FamilySeed;

template <typename G>
struct FamilyStep
{
    G graph;
    std::optional<Edge> e; // empty for the seed
};

template <typename G>
struct Family
{
    int k = 0;
    int u = -1, w = -1;
    std::vector<FamilyStep<G>> members;
};

namespace detail {

/// The lexicographically first edge at u, not incident to w, outside `avoid`.
template <typename G>
auto family_edge(const G & g, int u, int w, const std::set<Edge> & avoid) -> std::optional<Edge>
{
    for (int v : g.neighbours(u).to_vector()) {
        if (v == w)
            continue;
        Edge e{std::min(u, v), std::max(u, v)};
        if (! avoid.count(e))
            return e;
    }
    return std::nullopt;
}

}

/// The seed followed by `steps` Toft extensions. Each step removes the
/// lexicographically first edge uv outside H' with v != w and attaches the
/// new clique to u, v, w with the given part sizes.
template <typename G = Graph>
auto gk_family(const FamilySeed & seed, int steps, std::optional<ToftParts> parts = std::nullopt,
        const Limits & limits = default_limits()) -> Family<G>
{
    require_k(seed.k, "gk_family");
    if (steps < 0)
        throw PreconditionError("gk_family: steps must be nonnegative");
    const int k = seed.k;
    auto g = parse_edge_list<G>(seed.edge_list);
    if (seed.labels.size() == static_cast<std::size_t>(g.size()))
        for (int v = 0; v < g.size(); ++v)
            g.set_label(v, seed.labels[static_cast<std::size_t>(v)]);
    if (seed.u < 0 || seed.w < 0 || seed.u >= g.size() || seed.w >= g.size() || seed.u == seed.w)
        throw PreconditionError("gk_family: seed has no valid forced pair (u, w)");
    std::set<Edge> avoid;
    std::set<Edge> removed;
    for (auto [a, b] : seed.removed)
        removed.insert({std::min(a, b), std::max(a, b)});
    for (auto e : g.edges())
        if (! removed.count(e))
            avoid.insert(e);
    Family<G> out;
    out.k = k;
    out.u = seed.u;
    out.w = seed.w;
    out.members.push_back({g, std::nullopt});
    for (int s = 0; s < steps; ++s) {
        auto e = detail::family_edge(g, seed.u, seed.w, avoid);
        if (! e)
            throw PreconditionError("gk_family: no edge at u outside H' and away from w");
        const int v = e->first == seed.u ? e->second : e->first;
        g = toft_extend(g, k, seed.u, v, seed.w, parts.value_or(default_toft_parts(k)), limits);
        out.members.push_back({g, e});
    }
    return out;
}

template <typename G = Graph>
auto gk_family(int k, int steps, std::optional<ToftParts> parts = std::nullopt, const Limits & limits = default_limits())
        -> Family<G>
{
    return gk_family<G>(family_seed(k), steps, parts, limits);
}

}

#include "kcrit/seeds.hpp"

namespace kcrit {

inline auto family_seed(int k) -> FamilySeed
{
    require_k(k, "family_seed");
    if (k >= 6) {
        auto g = hkt<Graph>(k, 2);
        return {k, write_edge_list(g), 0, 2 * k - 2, {{0, k - 1}, {0, k}}, g.labels()};
    }
    for (const auto & s : builtin_seeds())
        if (s.k == k)
            return s;
    throw PreconditionError("family_seed: no seed available for k=" + std::to_string(k));
}

}
