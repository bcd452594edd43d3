#pragma once

/**
 * DHGO composition and k-Ore graphs.
 *
 * compose(G1, xy, G2, split of z): delete xy from G1, split z in G2 into z1
 * and z2, then identify x with z1 and y with z2.
 *
 * recognize() decides k-Ore membership by repeatedly cutting at a 2-vertex
 * separating set {x, y}:
 *
 *   0. K_k is k-Ore.
 *   1. n = 1 (mod k-1) and m = ((k+1)(k-2)n - k(k-3)) / (2(k-1)).
 *   2. The connectivity is exactly 2; take the lexicographically first
 *      separating pair {x, y}.
 *   3. G - x - y has exactly two components A, B, xy is not an edge, and
 *      {|A|, |B|} (mod k-1) = {k-2, 0}, with |A| = k-2.
 *   4. Recurse on G[A + x + y] + xy and on G[B + x + y] with x, y glued.
 */

#include "kcrit/canonical.hpp"
#include "kcrit/connectivity.hpp"
#include "kcrit/graph.hpp"
#include "kcrit/graph_ops.hpp"
#include "kcrit/io.hpp"
#include "kcrit/limits.hpp"
#include "kcrit/parallel.hpp"
#include "kcrit/potential.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace kcrit {

/// O(g1, g2). The result lists g1's vertices first (x keeps the neighbours
/// in split.first, y those in split.second), then g2's vertices other than
/// split.target in their original order.
template <typename G>
auto compose(const G & g1, int x, int y, const G & g2, const VertexSplit & split) -> G
{
    if (x == y || x < 0 || y < 0 || x >= g1.size() || y >= g1.size() || ! g1.adjacent(x, y))
        throw PreconditionError("compose: " + std::to_string(x) + "-" + std::to_string(y) + " is not an edge of the first graph");
    validate_split(g2, split);
    const int n1 = g1.size(), z = split.target;
    if (n1 + g2.size() - 1 > G::max_vertices)
        throw LimitError("compose: result would have " + std::to_string(n1 + g2.size() - 1) + " vertices");
    auto place = [&](int v) { return n1 + (v > z ? v - 1 : v); };
    G out(n1 + g2.size() - 1);
    for (auto [u, v] : g1.edges())
        if (! ((u == x && v == y) || (u == y && v == x)))
            out.add_edge(u, v);
    for (auto [u, v] : g2.edges())
        if (u != z && v != z)
            out.add_edge(place(u), place(v));
    for (int v : split.first)
        out.add_edge(x, place(v));
    for (int v : split.second)
        out.add_edge(y, place(v));
    if (g1.has_labels() || g2.has_labels()) {
        for (int v = 0; v < n1; ++v)
            out.set_label(v, g1.label(v));
        for (int v = 0; v < g2.size(); ++v)
            if (v != z)
                out.set_label(place(v), g2.label(v));
    }
    return out;
}

/// ((k+1)(k-2)n - k(k-3)) / (2(k-1)) when it is an integer.
inline auto ore_edge_count(int k, long long n) -> std::optional<long long>
{
    const long long num = static_cast<long long>(k + 1) * (k - 2) * n - static_cast<long long>(k) * (k - 3);
    const long long den = 2LL * (k - 1);
    if (num < 0 || num % den != 0)
        return std::nullopt;
    return num / den;
}

/// One node of a decomposition tree. Vertex indices are local to `graph`;
/// the maps say where each child vertex sits in this node's graph.
template <typename G>
struct OreNode
{
    G graph;
    int x = -1, y = -1;
    std::shared_ptr<const OreNode> first;  // G[A + x + y] + xy
    std::shared_ptr<const OreNode> second; // G[B + x + y] with x, y glued
    std::vector<int> first_map;
    std::vector<int> second_map; // -1 at the glued vertex
    int glued = -1;              // index of x*y in the second child
    std::vector<int> to_x;       // vertices of B - x - y adjacent to x
    std::vector<int> to_y;

    auto leaf() const -> bool { return ! first; }

    auto leaf_count() const -> int { return leaf() ? 1 : first->leaf_count() + second->leaf_count(); }

    auto depth() const -> int { return leaf() ? 0 : 1 + std::max(first->depth(), second->depth()); }
};

template <typename G>
using OreTree = std::shared_ptr<const OreNode<G>>;

struct OreFailure
{
    int step = 0;
    std::string reason;
    int n = 0;     // order of the subgraph that failed
    int depth = 0; // 0 for the input itself
};

template <typename G>
struct OreRecognition
{
    bool is_ore = false;
    OreTree<G> tree;
    std::optional<OreFailure> failure;
};

/// The two children of g at {x, y}, with maps back into g.
template <typename G>
struct OreChildren
{
    G first;
    std::vector<int> first_map;
    G second;
    std::vector<int> second_map;
    int glued = -1;
    typename G::Set a, b; // component vertex sets, A on the k-2 side
};

namespace detail {

template <typename G>
auto fail(int step, std::string reason, int n) -> OreFailure
{
    return {step, std::move(reason), n, 0};
}

/// Steps 3 and 4 for a given separating pair. Returns the failure instead
/// of throwing so recognition can report it.
template <typename G>
auto ore_cut(const G & g, int k, int x, int y, OreChildren<G> & out) -> std::optional<OreFailure>
{
    using Set = typename G::Set;
    Set ends;
    ends.set(x);
    ends.set(y);
    auto parts = components(g, g.all_vertices() - ends);
    if (parts.size() < 2)
        return fail<G>(3, "{" + std::to_string(x) + ", " + std::to_string(y) + "} is not a separating set", g.size());
    if (parts.size() > 2)
        return fail<G>(3, "G - x - y has " + std::to_string(parts.size()) + " components", g.size());
    if (g.adjacent(x, y))
        return fail<G>(3, "the separating vertices are adjacent", g.size());
    const int r0 = parts[0].count() % (k - 1), r1 = parts[1].count() % (k - 1);
    if (r0 == k - 2 && r1 == 0) {
        out.a = parts[0];
        out.b = parts[1];
    }
    else if (r1 == k - 2 && r0 == 0) {
        out.a = parts[1];
        out.b = parts[0];
    }
    else
        return fail<G>(3, "component sizes " + std::to_string(parts[0].count()) + " and " + std::to_string(parts[1].count())
                        + " have residues {" + std::to_string(r0) + ", " + std::to_string(r1) + "} mod "
                        + std::to_string(k - 1) + ", expected {" + std::to_string(k - 2) + ", 0}",
                g.size());

    auto inverse = [](const std::vector<int> & old_to_new, int size) {
        std::vector<int> inv(static_cast<std::size_t>(size), -1);
        for (std::size_t v = 0; v < old_to_new.size(); ++v)
            if (old_to_new[v] >= 0)
                inv[static_cast<std::size_t>(old_to_new[v])] = static_cast<int>(v);
        return inv;
    };

    auto first = induced_subgraph_with_map(g, out.a | ends);
    first.graph.add_edge(first.old_to_new[static_cast<std::size_t>(x)], first.old_to_new[static_cast<std::size_t>(y)]);
    out.first_map = inverse(first.old_to_new, first.graph.size());
    out.first = std::move(first.graph);

    auto side = induced_subgraph_with_map(g, out.b | ends);
    const int sx = side.old_to_new[static_cast<std::size_t>(x)], sy = side.old_to_new[static_cast<std::size_t>(y)];
    auto glued = identify_vertices_with_map(side.graph, sx, sy);
    out.glued = glued.old_to_new[static_cast<std::size_t>(sx)];
    std::vector<int> to_second(static_cast<std::size_t>(g.size()), -1);
    for (int v = 0; v < g.size(); ++v)
        if (int s = side.old_to_new[static_cast<std::size_t>(v)]; s >= 0)
            to_second[static_cast<std::size_t>(v)] = glued.old_to_new[static_cast<std::size_t>(s)];
    out.second_map = inverse(to_second, glued.graph.size());
    out.second_map[static_cast<std::size_t>(out.glued)] = -1;
    out.second = std::move(glued.graph);
    return std::nullopt;
}

template <typename G>
auto ore_steps_0_to_2(const G & g, int k, std::optional<std::pair<int, int>> & cut) -> std::optional<OreFailure>
{
    const int n = g.size();
    if (is_complete_graph(g, k))
        return std::nullopt;
    if (n % (k - 1) != 1 % (k - 1))
        return fail<G>(1, "n = " + std::to_string(n) + " is not 1 mod " + std::to_string(k - 1), n);
    auto m = ore_edge_count(k, n);
    if (! m || *m != g.edge_count())
        return fail<G>(1, "m = " + std::to_string(g.edge_count()) + " but a k-Ore graph on " + std::to_string(n)
                        + " vertices has " + (m ? std::to_string(*m) : std::string("a non-integral number of"))
                        + " edges",
                n);
    auto conn = vertex_connectivity(g);
    if (conn.kappa != 2)
        return fail<G>(2, "connectivity is " + std::to_string(conn.kappa) + ", not 2", n);
    auto cv = conn.cut->to_vector();
    cut = std::make_pair(cv[0], cv[1]);
    return std::nullopt;
}

/// Composition of permutations for memo hits: the stored node was built for
/// a graph H; pi maps vertices of the current graph to H.
template <typename G>
auto rebase(const OreNode<G> & stored, const G & g, const std::vector<int> & from_h) -> OreNode<G>
{
    OreNode<G> out;
    out.graph = g;
    out.graph.clear_labels();
    if (stored.leaf())
        return out;
    auto back = [&](int v) { return v < 0 ? -1 : from_h[static_cast<std::size_t>(v)]; };
    out.x = back(stored.x);
    out.y = back(stored.y);
    out.first = stored.first;
    out.second = stored.second;
    out.glued = stored.glued;
    for (int v : stored.first_map)
        out.first_map.push_back(back(v));
    for (int v : stored.second_map)
        out.second_map.push_back(back(v));
    for (int v : stored.to_x)
        out.to_x.push_back(back(v));
    for (int v : stored.to_y)
        out.to_y.push_back(back(v));
    std::sort(out.to_x.begin(), out.to_x.end());
    std::sort(out.to_y.begin(), out.to_y.end());
    return out;
}

template <typename G>
auto make_internal(const G & g, int x, int y, OreChildren<G> && ch, OreTree<G> first, OreTree<G> second) -> OreNode<G>
{
    OreNode<G> node;
    node.graph = g;
    node.graph.clear_labels();
    node.x = x;
    node.y = y;
    node.first = std::move(first);
    node.second = std::move(second);
    node.first_map = std::move(ch.first_map);
    node.second_map = std::move(ch.second_map);
    node.glued = ch.glued;
    (g.neighbours(x) & ch.b).for_each([&](int v) { node.to_x.push_back(v); });
    (g.neighbours(y) & ch.b).for_each([&](int v) { node.to_y.push_back(v); });
    return node;
}

}

/// The children at {x, y}; throws with the failing step when the pair does
/// not satisfy step 3.
template <typename G>
auto decompose_children(const G & g, int k, int x, int y) -> OreChildren<G>
{
    require_k(k, "decompose_children");
    if (x == y || x < 0 || y < 0 || x >= g.size() || y >= g.size())
        throw PreconditionError("decompose_children: need two distinct vertices");
    OreChildren<G> out;
    if (auto f = detail::ore_cut(g, k, x, y, out))
        throw PreconditionError("decompose_children: step " + std::to_string(f->step) + ": " + f->reason);
    return out;
}

struct RecognizeOptions
{
    bool memoize = true;
};

/// Runs the recognition steps with an explicit work stack. Subgraphs seen
/// before (same canonical form) reuse the earlier subtree.
template <typename G>
auto recognize(const G & g, int k, const Limits & limits = default_limits(), RecognizeOptions options = {})
        -> OreRecognition<G>
{
    require_k(k, "recognize");
    struct Work
    {
        G graph;
        int depth = 0;
        bool expanded = false;
        int x = -1, y = -1;
        OreChildren<G> children;
        std::size_t first = 0, second = 0;
        OreTree<G> done;
        std::string key;
        std::vector<int> position;
    };
    struct Memo
    {
        OreTree<G> node;
        std::vector<int> position;
    };
    std::unordered_map<std::string, Memo> memo;
    std::vector<Work> work;
    auto add = [&](G graph, int depth) {
        Work w;
        w.graph = std::move(graph);
        w.depth = depth;
        work.push_back(std::move(w));
    };
    add(g, 0);
    std::vector<std::size_t> stack{0};
    OreRecognition<G> out;

    while (! stack.empty()) {
        const std::size_t i = stack.back();
        if (work[i].expanded) {
            auto & w = work[i];
            auto node = std::make_shared<const OreNode<G>>(detail::make_internal(w.graph, w.x, w.y,
                    std::move(w.children), work[w.first].done, work[w.second].done));
            if (! w.key.empty())
                memo.emplace(w.key, Memo{node, w.position});
            w.done = node;
            stack.pop_back();
            continue;
        }
        const G & h = work[i].graph;
        if (is_complete_graph(h, k)) {
            auto leaf = std::make_shared<OreNode<G>>();
            leaf->graph = h;
            leaf->graph.clear_labels();
            work[i].done = leaf;
            stack.pop_back();
            continue;
        }
        if (options.memoize && h.size() <= limits.canonical_max_n) {
            auto lab = canonical_labeling(h, {}, limits);
            if (auto it = memo.find(lab.form); it != memo.end()) {
                // current v -> canonical position -> vertex of the stored graph
                std::vector<int> from_stored(static_cast<std::size_t>(h.size()));
                std::vector<int> stored_at(static_cast<std::size_t>(h.size()));
                for (int v = 0; v < h.size(); ++v)
                    stored_at[static_cast<std::size_t>(it->second.position[static_cast<std::size_t>(v)])] = v;
                for (int v = 0; v < h.size(); ++v)
                    from_stored[static_cast<std::size_t>(stored_at[static_cast<std::size_t>(lab.position[static_cast<std::size_t>(v)])])] = v;
                work[i].done = std::make_shared<const OreNode<G>>(detail::rebase(*it->second.node, h, from_stored));
                stack.pop_back();
                continue;
            }
            work[i].key = lab.form;
            work[i].position = lab.position;
        }
        std::optional<std::pair<int, int>> cut;
        auto failure = detail::ore_steps_0_to_2(h, k, cut);
        OreChildren<G> ch;
        if (! failure)
            failure = detail::ore_cut(h, k, cut->first, cut->second, ch);
        if (failure) {
            failure->depth = work[i].depth;
            out.failure = failure;
            return out;
        }
        const int depth = work[i].depth + 1;
        G first = ch.first, second = ch.second;
        work[i].x = cut->first;
        work[i].y = cut->second;
        work[i].children = std::move(ch);
        work[i].expanded = true;
        work[i].first = work.size();
        add(std::move(first), depth);
        work[i].second = work.size();
        add(std::move(second), depth);
        stack.push_back(work[i].second);
        stack.push_back(work[i].first);
    }
    out.is_ore = true;
    out.tree = work[0].done;
    return out;
}

/// Root-level verdicts for every separating pair of g (children are then
/// recognised with the default choice). Empty when g fails before step 3.
template <typename G>
auto recognize_each_cut(const G & g, int k, const Limits & limits = default_limits())
        -> std::vector<std::pair<std::pair<int, int>, bool>>
{
    require_k(k, "recognize_each_cut");
    std::vector<std::pair<std::pair<int, int>, bool>> out;
    std::optional<std::pair<int, int>> cut;
    if (is_complete_graph(g, k) || detail::ore_steps_0_to_2(g, k, cut))
        return out;
    for (auto xy : separating_pairs(g)) {
        OreChildren<G> ch;
        bool yes = ! detail::ore_cut(g, k, xy.first, xy.second, ch) && recognize(ch.first, k, limits).is_ore
                && recognize(ch.second, k, limits).is_ore;
        out.emplace_back(xy, yes);
    }
    return out;
}

/// Labels of every vertex of each child, derived from the parent's labels;
/// the glued vertex is "x*y".
template <typename G>
auto child_labels(const OreNode<G> & node, const std::vector<std::string> & labels)
        -> std::pair<std::vector<std::string>, std::vector<std::string>>
{
    std::vector<std::string> a, b;
    for (int v : node.first_map)
        a.push_back(labels[static_cast<std::size_t>(v)]);
    for (int v : node.second_map)
        b.push_back(v < 0 ? labels[static_cast<std::size_t>(node.x)] + "*" + labels[static_cast<std::size_t>(node.y)]
                          : labels[static_cast<std::size_t>(v)]);
    return {std::move(a), std::move(b)};
}

/// Rebuilds the node's graph from its leaves by composition. The result has
/// the node's own vertex numbering, so it equals node.graph exactly.
template <typename G>
auto replay(const OreNode<G> & node) -> G
{
    if (node.leaf())
        return node.graph;
    const G a = replay(*node.first);
    const G b = replay(*node.second);
    std::vector<int> in_second(static_cast<std::size_t>(node.graph.size()), -1);
    for (std::size_t j = 0; j < node.second_map.size(); ++j)
        if (node.second_map[j] >= 0)
            in_second[static_cast<std::size_t>(node.second_map[j])] = static_cast<int>(j);
    std::vector<int> in_first(static_cast<std::size_t>(node.graph.size()), -1);
    for (std::size_t j = 0; j < node.first_map.size(); ++j)
        in_first[static_cast<std::size_t>(node.first_map[j])] = static_cast<int>(j);
    VertexSplit split{node.glued, {}, {}};
    for (int v : node.to_x)
        split.first.push_back(in_second[static_cast<std::size_t>(v)]);
    for (int v : node.to_y)
        split.second.push_back(in_second[static_cast<std::size_t>(v)]);
    auto composed = compose(a, in_first[static_cast<std::size_t>(node.x)], in_first[static_cast<std::size_t>(node.y)], b, split);
    std::vector<int> perm(static_cast<std::size_t>(composed.size()));
    for (std::size_t i = 0; i < node.first_map.size(); ++i)
        perm[i] = node.first_map[i];
    for (int j = 0; j < b.size(); ++j)
        if (j != node.glued)
            perm[node.first_map.size() + static_cast<std::size_t>(j > node.glued ? j - 1 : j)] = node.second_map[static_cast<std::size_t>(j)];
    return permute(composed, perm);
}

/// Canonical forms of all k-Ore graphs with at most n_max vertices, by
/// closing {K_k} under composition (every edge, every ordered split).
template <typename G>
auto ore_oracle(int k, int n_max, const Limits & limits = default_limits()) -> std::map<int, std::vector<G>>
{
    require_k(k, "ore_oracle");
    if (n_max > limits.oracle_max_n)
        throw LimitError("ore_oracle: n_max=" + std::to_string(n_max) + " exceeds the oracle limit of "
                + std::to_string(limits.oracle_max_n));
    std::map<int, std::vector<G>> levels;
    if (n_max < k)
        return levels;
    levels[k].push_back(G::complete(k));
    for (int n = 2 * k - 1; n <= n_max; n += k - 1) {
        std::set<std::string> seen;
        std::vector<G> found;
        std::mutex lock;
        for (int n1 = k; n1 <= n - k + 1; n1 += k - 1) {
            const int n2 = n + 1 - n1;
            const auto & left = levels[n1];
            const auto & right = levels[n2];
            const std::size_t pairs = left.size() * right.size();
            parallel_for(pairs, [&](std::size_t p) {
                const G & g1 = left[p / right.size()];
                const G & g2 = right[p % right.size()];
                std::vector<std::pair<std::string, G>> local;
                std::set<std::string> local_seen;
                for (auto [x, y] : g1.edges())
                    for (int z = 0; z < g2.size(); ++z) {
                        auto nb = g2.neighbours(z).to_vector();
                        const std::uint64_t masks = std::uint64_t{1} << nb.size();
                        for (std::uint64_t mask = 1; mask + 1 < masks; ++mask) {
                            VertexSplit s{z, {}, {}};
                            for (std::size_t i = 0; i < nb.size(); ++i)
                                ((mask >> i) & 1U ? s.first : s.second).push_back(nb[i]);
                            auto h = compose(g1, x, y, g2, s);
                            auto lab = canonical_labeling(h, {}, limits);
                            if (local_seen.insert(lab.form).second)
                                local.emplace_back(lab.form, permute(h, lab.position));
                        }
                    }
                std::lock_guard guard(lock);
                for (auto & [form, h] : local)
                    if (seen.insert(form).second)
                        found.push_back(std::move(h));
            });
        }
        std::sort(found.begin(), found.end(), [](const G & a, const G & b) {
            return write_graph6(a) < write_graph6(b);
        });
        levels[n] = std::move(found);
    }
    return levels;
}

}
