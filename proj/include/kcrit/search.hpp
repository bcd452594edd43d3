#pragma once

/**
 * Isomorph-free search for k-critical graphs with given n and m.
 *
 * Graphs are grown one vertex at a time by canonical augmentation: the
 * vertex added last always has minimum degree, and a child is kept only
 * when the new vertex lies in the orbit of the canonically chosen deletion
 * vertex. Each branch is pruned by the final degree bound, the reachable
 * edge counts, the excess degree budget, K_k-freeness and a lower bound on
 * the chromatic number of every intermediate graph.
 */

#include "kcrit/canonical.hpp"
#include "kcrit/coloring.hpp"
#include "kcrit/connectivity.hpp"
#include "kcrit/graph.hpp"
#include "kcrit/graph_ops.hpp"
#include "kcrit/parallel.hpp"
#include "kcrit/potential.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace kcrit {

struct FigureQuery
{
    int k = 0;
    int n = 0;
    int m = 0;
    bool three_connected = false;
    std::optional<long long> rho = std::nullopt; // keep only graphs with rho_k(V) equal to this
};

struct SearchStats
{
    std::vector<std::uint64_t> nodes; // accepted graphs per order
    std::uint64_t not_colourable = 0; // complete candidates with chi >= k
    double seconds = 0;
};

template <typename G>
struct SearchResult
{
    std::vector<G> graphs; // sorted by canonical form
    SearchStats stats;
};

namespace detail {

using SmallGraph = BasicGraph<1>;

class FigureSearch
{
public:
    FigureSearch(const FigureQuery & q, const Limits & limits)
        : _q(q)
        , _limits(limits)
        , _dmin(q.k - 1)
        , _budget(2LL * q.m - static_cast<long long>(q.n) * (q.k - 1))
    {
        _stats.nodes.assign(static_cast<std::size_t>(q.n) + 1, 0);
        _feasible.assign(static_cast<std::size_t>(q.n) + 1, std::vector<char>(static_cast<std::size_t>(q.m) + 1, 0));
        _feasible[static_cast<std::size_t>(q.n)][static_cast<std::size_t>(q.m)] = 1;
        for (int j = q.n - 1; j >= 1; --j)
            for (int up = 0; up <= q.m; ++up) {
                if (! _feasible[static_cast<std::size_t>(j + 1)][static_cast<std::size_t>(up)])
                    continue;
                const int lo = std::max(0, _dmin - (q.n - j - 1));
                const int hi = std::min(j, 2 * up / (j + 1));
                for (int d = lo; d <= hi; ++d) {
                    const int down = up - d;
                    if (down >= 0 && down <= j * (j - 1) / 2)
                        _feasible[static_cast<std::size_t>(j)][static_cast<std::size_t>(down)] = 1;
                }
            }
    }

    auto run() -> std::pair<std::vector<SmallGraph>, SearchStats>
    {
        auto start = std::chrono::steady_clock::now();
        if (_q.n >= 1 && _budget >= 0 && _feasible[1][0]) {
            // Expand sequentially to a split level, then fan out over those subtrees.
            std::vector<SmallGraph> frontier{SmallGraph(1)};
            _stats.nodes[1] = 1;
            const int split = std::max(1, std::min(_q.n - 3, 7));
            for (int level = 1; level < split; ++level) {
                std::vector<SmallGraph> next;
                for (const auto & g : frontier)
                    expand(g, [&](SmallGraph h) { next.push_back(std::move(h)); });
                frontier = std::move(next);
            }
            parallel_for(frontier.size(), [&](std::size_t i) { descend(frontier[i]); });
        }
        std::sort(_found.begin(), _found.end(), [](const auto & a, const auto & b) { return a.first < b.first; });
        std::vector<SmallGraph> out;
        for (auto & [form, g] : _found)
            out.push_back(std::move(g));
        _stats.not_colourable = _not_colourable;
        for (std::size_t i = 0; i < _counts.size(); ++i)
            _stats.nodes[i] += _counts[i];
        _stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return {std::move(out), _stats};
    }

private:
    static constexpr int cap = 13;

    auto descend(const SmallGraph & g) -> void
    {
        expand(g, [&](const SmallGraph & h) { descend(h); });
    }

    /// Calls `emit` for every accepted child of g below the target order;
    /// complete graphs go straight to the final filters.
    template <typename Emit>
    auto expand(const SmallGraph & g, Emit && emit) -> void
    {
        const int i = g.size();
        const int n = _q.n;
        const int m = g.edge_count();
        const int floor_child = _dmin - (n - i - 1); // lower bound on every degree in the child
        std::array<int, cap> deg{};
        int dmin_g = i;
        long long excess = 0;
        for (int u = 0; u < i; ++u) {
            deg[static_cast<std::size_t>(u)] = g.degree(u);
            dmin_g = std::min(dmin_g, deg[static_cast<std::size_t>(u)]);
            excess += std::max(0, deg[static_cast<std::size_t>(u)] - _dmin);
        }
        std::uint64_t must = 0; // vertices that would fall below the degree floor otherwise
        for (int u = 0; u < i; ++u)
            if (deg[static_cast<std::size_t>(u)] < floor_child)
                must |= 1ULL << u;
        const int s_lo = std::max(0, floor_child);
        const int s_hi = std::min(i, dmin_g + 1);
        std::vector<std::vector<int>> generators;
        bool have_generators = false;
        const auto edges = g.edges();

        const std::uint64_t all = i == 64 ? ~0ULL : (1ULL << i) - 1;
        for (std::uint64_t mask = 0; mask <= all; ++mask) {
            if ((mask & must) != must)
                continue;
            const int s = std::popcount(mask);
            if (s < s_lo || s > s_hi || m + s > _q.m || ! _feasible[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(m + s)])
                continue;
            bool ok = true;
            long long child_excess = excess + std::max(0, s - _dmin);
            for (int u = 0; u < i && ok; ++u) {
                const int d = deg[static_cast<std::size_t>(u)] + static_cast<int>((mask >> u) & 1U);
                if (d < s)
                    ok = false;
                if (((mask >> u) & 1U) && d > _dmin)
                    ++child_excess;
            }
            if (! ok || child_excess > _budget)
                continue;
            if (_q.n > _q.k && s >= _q.k - 1 && has_clique(g, mask, _q.k - 1))
                continue;
            if (! have_generators) {
                if (i > 1)
                    generators = canonical_labeling(g, {}, _limits).generators;
                have_generators = true;
            }
            if (! orbit_minimal(mask, generators, i))
                continue;
            SmallGraph h(i + 1);
            for (auto [a, b] : edges)
                h.add_edge(a, b);
            for (int u = 0; u < i; ++u)
                if ((mask >> u) & 1U)
                    h.add_edge(u, i);
            if (i + 1 == n) {
                finish(h);
                continue;
            }
            // deleting r vertices lowers the chromatic number by at most r
            const int need = _q.k - (n - i - 1);
            if (need >= 3 && colorable(h, need - 1, _limits).colorable)
                continue;
            if (! canonical_parent(h, s))
                continue;
            ++_counts[static_cast<std::size_t>(i + 1)];
            emit(h);
        }
    }

    static auto has_clique(const SmallGraph & g, std::uint64_t within, int size) -> bool
    {
        if (size <= 0)
            return true;
        while (within) {
            const int v = std::countr_zero(within);
            within &= within - 1;
            if (has_clique(g, within & g.neighbours(v).word(0), size - 1))
                return true;
            if (std::popcount(within) < size)
                return false;
        }
        return false;
    }

    static auto orbit_minimal(std::uint64_t mask, const std::vector<std::vector<int>> & generators, int n) -> bool
    {
        if (generators.empty())
            return true;
        std::vector<std::uint64_t> seen{mask};
        for (std::size_t head = 0; head < seen.size(); ++head)
            for (const auto & p : generators) {
                std::uint64_t image = 0;
                for (int u = 0; u < n; ++u)
                    if ((seen[head] >> u) & 1U)
                        image |= 1ULL << p[static_cast<std::size_t>(u)];
                if (image < mask)
                    return false;
                if (std::find(seen.begin(), seen.end(), image) == seen.end())
                    seen.push_back(image);
            }
        return true;
    }

    /// True when the last vertex is in the orbit of the canonical deletion
    /// vertex: minimum degree, then largest neighbour degree sum, then the
    /// largest canonical position.
    auto canonical_parent(const SmallGraph & h, int s) const -> bool
    {
        const int last = h.size() - 1;
        int best = -1;
        std::uint64_t ties = 0;
        for (int u = 0; u < h.size(); ++u) {
            if (h.degree(u) != s)
                continue;
            int sum = 0;
            h.neighbours(u).for_each([&](int x) { sum += h.degree(x); });
            if (sum > best) {
                best = sum;
                ties = 0;
            }
            if (sum == best)
                ties |= 1ULL << u;
        }
        if (! ((ties >> last) & 1U))
            return false;
        if (ties == 1ULL << last)
            return true;
        auto lab = canonical_labeling(h, {}, _limits);
        int chosen = -1;
        for (int u = 0; u < h.size(); ++u)
            if (((ties >> u) & 1U) && (chosen < 0 || lab.position[static_cast<std::size_t>(u)] > lab.position[static_cast<std::size_t>(chosen)]))
                chosen = u;
        return lab.orbit[static_cast<std::size_t>(chosen)] == lab.orbit[static_cast<std::size_t>(last)];
    }

    auto finish(const SmallGraph & h) -> void
    {
        if (h.edge_count() != _q.m || h.min_degree() < _dmin)
            return;
        if (colorable(h, _q.k - 1, _limits).colorable)
            return;
        ++_not_colourable;
        if (! canonical_parent(h, h.degree(h.size() - 1)))
            return;
        ++_counts[static_cast<std::size_t>(h.size())];
        if (! is_k_critical(h, _q.k, _limits))
            return;
        if (_q.three_connected && connectivity_number(h) < 3)
            return;
        if (_q.rho && rho_full(h, _q.k) != *_q.rho)
            return;
        std::lock_guard lock(_mutex);
        _found.emplace_back(canonical_form(h, _limits), h);
    }

    FigureQuery _q;
    Limits _limits;
    int _dmin;
    long long _budget;
    std::vector<std::vector<char>> _feasible;
    SearchStats _stats;
    std::array<std::atomic<std::uint64_t>, cap> _counts{};
    std::atomic<std::uint64_t> _not_colourable{0};
    std::mutex _mutex;
    std::vector<std::pair<std::string, SmallGraph>> _found;
};

}

/// Every k-critical graph with the given order and size, up to isomorphism.
template <typename G = Graph>
auto find_figure_graphs(const FigureQuery & q, const Limits & limits = default_limits()) -> SearchResult<G>
{
    require_k(q.k, "find_figure_graphs");
    if (q.n > limits.search_max_n)
        throw LimitError("find_figure_graphs: n=" + std::to_string(q.n) + " exceeds the search limit of "
                + std::to_string(limits.search_max_n) + " (raise via KCRIT_LIMITS=search=N)");
    if (q.n < 0 || q.m < 0)
        throw PreconditionError("find_figure_graphs: n and m must be nonnegative");
    SearchResult<G> out;
    if (q.n < q.k || static_cast<long long>(q.m) * 2 < static_cast<long long>(q.n) * (q.k - 1)
            || q.m > q.n * (q.n - 1) / 2) {
        out.stats.nodes.assign(static_cast<std::size_t>(q.n) + 1, 0);
        return out;
    }
    auto [graphs, stats] = detail::FigureSearch(q, limits).run();
    for (const auto & g : graphs)
        out.graphs.push_back(convert_graph<G>(g));
    out.stats = std::move(stats);
    return out;
}

}
