#pragma once

/**
 * Vertex connectivity by unit-capacity max-flow (Even's algorithm), plus a
 * deterministic witness: when kappa <= 2 the lexicographically first
 * minimum separating set and the components it leaves behind.
 */

#include "kcrit/graph.hpp"
#include "kcrit/graph_ops.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace kcrit {

template <typename G>
struct Connectivity
{
    int kappa = 0;
    /// Lexicographically first minimum separating set, present when kappa <= 2
    /// and the graph is not complete.
    std::optional<typename G::Set> cut;
    /// Components of G minus the cut, ordered by smallest vertex.
    std::vector<typename G::Set> parts;
};

namespace detail {

/// Vertex-disjoint s-t paths, counted up to `cap`, in the split network
/// (v_in = 2v, v_out = 2v + 1).
template <typename G>
class UnitFlow
{
public:
    explicit UnitFlow(const G & g) :
        _g(g)
    {
        const int n = g.size();
        _head.assign(static_cast<std::size_t>(2 * n), -1);
        for (int v = 0; v < n; ++v)
            add_arc(2 * v, 2 * v + 1, 1);
        for (auto [u, v] : g.edges()) {
            add_arc(2 * u + 1, 2 * v, 1);
            add_arc(2 * v + 1, 2 * u, 1);
        }
    }

    auto local_connectivity(int s, int t, int cap) -> int
    {
        for (std::size_t i = 0; i < _cap.size(); ++i)
            _cap[i] = _orig[i];
        const int source = 2 * s + 1, sink = 2 * t;
        int flow = 0;
        std::vector<int> via(_head.size());
        std::vector<int> queue;
        while (flow < cap) {
            std::fill(via.begin(), via.end(), -1);
            queue.clear();
            queue.push_back(source);
            via[static_cast<std::size_t>(source)] = -2;
            bool reached = false;
            for (std::size_t qi = 0; qi < queue.size() && ! reached; ++qi) {
                int x = queue[qi];
                for (int a = _head[static_cast<std::size_t>(x)]; a >= 0; a = _next[static_cast<std::size_t>(a)]) {
                    int y = _to[static_cast<std::size_t>(a)];
                    if (_cap[static_cast<std::size_t>(a)] > 0 && via[static_cast<std::size_t>(y)] == -1) {
                        via[static_cast<std::size_t>(y)] = a;
                        if (y == sink) {
                            reached = true;
                            break;
                        }
                        queue.push_back(y);
                    }
                }
            }
            if (! reached)
                break;
            for (int y = sink; y != source;) {
                int a = via[static_cast<std::size_t>(y)];
                --_cap[static_cast<std::size_t>(a)];
                ++_cap[static_cast<std::size_t>(a ^ 1)];
                y = _to[static_cast<std::size_t>(a ^ 1)];
            }
            ++flow;
        }
        return flow;
    }

private:
    auto add_arc(int from, int to, int c) -> void
    {
        push(from, to, c);
        push(to, from, 0);
    }

    auto push(int from, int to, int c) -> void
    {
        _to.push_back(to);
        _orig.push_back(c);
        _cap.push_back(c);
        _next.push_back(_head[static_cast<std::size_t>(from)]);
        _head[static_cast<std::size_t>(from)] = static_cast<int>(_to.size()) - 1;
    }

    const G & _g;
    std::vector<int> _head, _next, _to, _cap, _orig;
};

}

/// kappa(G) only, no witness.
template <typename G>
auto connectivity_number(const G & g) -> int
{
    const int n = g.size();
    if (n <= 1)
        return 0;
    int kappa = n - 1;
    detail::UnitFlow<G> flow(g);
    for (int i = 0; i < n && i <= kappa; ++i)
        for (int j = i + 1; j < n; ++j)
            if (! g.adjacent(i, j))
                kappa = std::min(kappa, flow.local_connectivity(i, j, kappa));
    return kappa;
}

/// Every separating set of size two {x, y}, x < y, in lexicographic order.
template <typename G>
auto separating_pairs(const G & g) -> std::vector<std::pair<int, int>>
{
    std::vector<std::pair<int, int>> out;
    const auto all = g.all_vertices();
    for (int x = 0; x < g.size(); ++x)
        for (int y = x + 1; y < g.size(); ++y) {
            auto rest = all;
            rest.reset(x);
            rest.reset(y);
            if (rest.any() && ! is_connected(g, rest))
                out.emplace_back(x, y);
        }
    return out;
}

template <typename G>
auto vertex_connectivity(const G & g) -> Connectivity<G>
{
    using Set = typename G::Set;
    Connectivity<G> out;
    out.kappa = connectivity_number(g);
    if (out.kappa > 2 || is_complete_graph(g, g.size()))
        return out;
    const auto all = g.all_vertices();
    auto record = [&](Set cut) {
        out.cut = cut;
        out.parts = components(g, all - cut);
    };
    if (out.kappa == 0) {
        record(Set{});
        return out;
    }
    if (out.kappa == 1) {
        for (int x = 0; x < g.size(); ++x) {
            auto rest = all;
            rest.reset(x);
            if (! is_connected(g, rest)) {
                Set cut;
                cut.set(x);
                record(cut);
                return out;
            }
        }
    }
    for (int x = 0; x < g.size(); ++x)
        for (int y = x + 1; y < g.size(); ++y) {
            auto rest = all;
            rest.reset(x);
            rest.reset(y);
            if (! is_connected(g, rest)) {
                Set cut;
                cut.set(x);
                cut.set(y);
                record(cut);
                return out;
            }
        }
    return out;
}

}
