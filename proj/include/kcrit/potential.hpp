#pragma once

/**
 * k-potentials of vertex sets,
 *
 *     rho_k(R) = (k+1)(k-2)|R| - 2(k-1)|E(G[R])|,
 *
 * and their exact minima over all nonempty subsets (P_k) and over proper
 * subsets with at least two vertices (the "tilde" minimum), found by Gray
 * code enumeration of all 2^n subsets with O(words) edge-count updates.
 */

#include "kcrit/graph.hpp"
#include "kcrit/limits.hpp"
#include "kcrit/parallel.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace kcrit {

inline auto require_k(int k, const char * what) -> void
{
    if (k < 4)
        throw PreconditionError(std::string(what) + ": k must be at least 4 (got " + std::to_string(k) + ")");
}

/// Potential of a set with `vertices` vertices spanning `edges` edges.
inline constexpr auto rho_count(int k, long long vertices, long long edges) -> long long
{
    return static_cast<long long>(k + 1) * (k - 2) * vertices - 2LL * (k - 1) * edges;
}

/// rho_k(V(K_s)).
inline constexpr auto rho_complete(int k, long long s) -> long long
{
    return rho_count(k, s, s * (s - 1) / 2);
}

template <typename G>
auto rho(const G & g, int k, const typename G::Set & r) -> long long
{
    require_k(k, "rho");
    return rho_count(k, r.count(), g.induced_edge_count(r));
}

template <typename G>
auto rho_full(const G & g, int k) -> long long
{
    require_k(k, "rho");
    return rho_count(k, g.size(), g.edge_count());
}

/// The identity rho(X n Y) + rho(X u Y) = rho(X) + rho(Y) - 2(k-1)|E[X-Y, Y-X]|, evaluated exactly.
template <typename G>
auto submodular_identity_holds(const G & g, int k, const typename G::Set & x, const typename G::Set & y) -> bool
{
    const auto x_only = x - y, y_only = y - x;
    long long crossing = 0;
    x_only.for_each([&](int v) { crossing += g.neighbours(v).intersect_count(y_only); });
    return rho(g, k, x & y) + rho(g, k, x | y) == rho(g, k, x) + rho(g, k, y) - 2LL * (k - 1) * crossing;
}

enum class PotentialRange
{
    all_nonempty,      // P_k
    proper_nontrivial, // 2 <= |W| <= n - 1
};

struct PotentialReport
{
    int k = 0;
    long long rho_full = 0;
    long long p_k = 0;
    std::optional<long long> p_tilde;
    std::vector<std::vector<int>> p_k_minimizers;
    std::vector<std::vector<int>> p_tilde_minimizers;
};

namespace detail {

struct MinimumTracker
{
    long long best = std::numeric_limits<long long>::max();
    std::vector<std::vector<int>> sets;

    auto offer(long long value, const std::vector<int> & set, std::size_t cap) -> void
    {
        if (value > best)
            return;
        if (value < best) {
            best = value;
            sets.clear();
        }
        sets.push_back(set);
        if (sets.size() > 4 * cap + 8)
            trim(cap);
    }

    static auto before(const std::vector<int> & a, const std::vector<int> & b) -> bool
    {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    }

    auto trim(std::size_t cap) -> void
    {
        std::sort(sets.begin(), sets.end(), before);
        sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
        if (sets.size() > cap)
            sets.resize(cap);
    }

    auto merge(const MinimumTracker & o, std::size_t cap) -> void
    {
        if (o.best > best)
            return;
        if (o.best < best) {
            best = o.best;
            sets.clear();
        }
        sets.insert(sets.end(), o.sets.begin(), o.sets.end());
        trim(cap);
    }
};

}

/// Exact P_k and tilde-P_k. Minimizers are reported smallest first (by size,
/// then lexicographically), at most `limits.minimizer_cap` of each.
template <typename G>
auto min_potential(const G & g, int k, PotentialRange range = PotentialRange::all_nonempty,
        const Limits & limits = default_limits()) -> PotentialReport
{
    require_k(k, "min_potential");
    const int n = g.size();
    if (n > limits.potential_max_n)
        throw LimitError("min_potential: n=" + std::to_string(n) + " exceeds the exhaustive limit of "
                + std::to_string(limits.potential_max_n)
                + "; sampled minimisation is not provided (raise via KCRIT_LIMITS=potential=N at your own risk)");
    if (n == 0)
        throw PreconditionError("min_potential: the graph has no vertices");
    if (range == PotentialRange::proper_nontrivial && n < 3)
        throw PreconditionError("min_potential: no subset W with 2 <= |W| <= n-1 exists for n=" + std::to_string(n));

    const auto cap = static_cast<std::size_t>(std::max(1, limits.minimizer_cap));
    const long long a = static_cast<long long>(k + 1) * (k - 2), b = 2LL * (k - 1);

    // Chunks fix the high bits; the low bits are walked in Gray code order.
    const int high = std::min(n, 6);
    const int low = n - high;
    const std::size_t chunks = std::size_t{1} << high;
    std::vector<detail::MinimumTracker> all(chunks), tilde(chunks);

    parallel_for(chunks, [&](std::size_t chunk) {
        typename G::Set set;
        int size = 0;
        long long edges = 0;
        auto toggle = [&](int v) {
            int inside = g.neighbours(v).intersect_count(set);
            if (set.test(v)) {
                set.reset(v);
                --size;
                edges -= inside;
            }
            else {
                set.set(v);
                ++size;
                edges += inside;
            }
        };
        for (int i = 0; i < high; ++i)
            if ((chunk >> i) & 1U)
                toggle(low + i);
        auto visit = [&] {
            if (size == 0)
                return;
            const long long value = a * size - b * edges;
            auto & t = all[chunk];
            if (value <= t.best)
                t.offer(value, set.to_vector(), cap);
            if (size >= 2 && size <= n - 1) {
                auto & u = tilde[chunk];
                if (value <= u.best)
                    u.offer(value, set.to_vector(), cap);
            }
        };
        visit();
        const std::uint64_t steps = std::uint64_t{1} << low;
        for (std::uint64_t i = 1; i < steps; ++i) {
            toggle(std::countr_zero(i));
            visit();
        }
    });

    detail::MinimumTracker best_all, best_tilde;
    for (std::size_t c = 0; c < chunks; ++c) {
        best_all.merge(all[c], cap);
        best_tilde.merge(tilde[c], cap);
    }

    PotentialReport out;
    out.k = k;
    out.rho_full = rho_full(g, k);
    out.p_k = best_all.best;
    out.p_k_minimizers = std::move(best_all.sets);
    if (! best_tilde.sets.empty()) {
        out.p_tilde = best_tilde.best;
        out.p_tilde_minimizers = std::move(best_tilde.sets);
    }
    return out;
}

}
