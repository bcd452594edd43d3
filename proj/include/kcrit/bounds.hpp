#pragma once

// Edge-count bounds for k-critical graphs, all in exact integer arithmetic.

#include "kcrit/coloring.hpp"
#include "kcrit/error.hpp"
#include "kcrit/graph.hpp"
#include "kcrit/ore.hpp"
#include "kcrit/potential.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kcrit {

/// Ceiling of a / b for b > 0.
constexpr auto ceil_div(long long a, long long b) -> long long
{
    return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

inline auto require_order(int k, long long n, const char * what) -> void
{
    require_k(k, what);
    if (n < k)
        throw PreconditionError(std::string(what) + ": n must be at least k");
    if (n == k + 1)
        throw PreconditionError(std::string(what) + ": there is no k-critical graph on k + 1 vertices");
}

/// The lower bound on edges of an n-vertex k-critical graph, attained by Ore graphs.
inline auto ore_bound(int k, long long n) -> long long
{
    require_order(k, n, "F");
    return ceil_div(static_cast<long long>(k + 1) * (k - 2) * n - static_cast<long long>(k) * (k - 3), 2LL * (k - 1));
}

inline auto y_k(int k) -> long long
{
    require_k(k, "y");
    return std::max(2LL * k - 6, static_cast<long long>(k) * k - 5LL * k + 2);
}

/// Gallai's exact minimum for k + 2 <= n <= 2k - 1.
inline auto gallai_small_n(int k, long long n) -> long long
{
    require_k(k, "gallai_small_n");
    if (n < k + 2 || n > 2LL * k - 1)
        throw PreconditionError("gallai_small_n: need k + 2 <= n <= 2k - 1 (got k=" + std::to_string(k) + ", n="
                + std::to_string(n) + ")");
    return ((k - 1) * n + (n - k) * (2LL * k - n)) / 2 - 1;
}

/// Lower bound on the edges of an n-vertex k-critical graph that is not k-Ore.
inline auto non_ore_bound(int k, long long n) -> long long
{
    require_order(k, n, "non_ore_bound");
    return ceil_div(static_cast<long long>(k + 1) * (k - 2) * n - y_k(k), 2LL * (k - 1));
}

/// The best lower bound for f_k(n): F when Ore graphs exist at this order,
/// the non-Ore bound otherwise.
inline auto edge_lower_bound(int k, long long n) -> long long
{
    if (n == k)
        return static_cast<long long>(k) * (k - 1) / 2;
    return (n - 1) % (k - 1) == 0 ? ore_bound(k, n) : non_ore_bound(k, n);
}

/// Which of the known cases makes edge_lower_bound(k, n) the exact minimum.
inline auto known_exact_case(int k, long long n) -> std::optional<std::string>
{
    require_k(k, "known_exact_case");
    if (n < k || n == k + 1)
        return std::nullopt;
    if (k == 4 || k == 5)
        return "i";
    if (k == 6 && n % 5 == 0)
        return "ii";
    if (k == 6 && n % 5 == 2)
        return "iii";
    if (k == 7 && n % 6 == 2)
        return "iv";
    if ((n - 1) % (k - 1) == 0)
        return "v";
    return std::nullopt;
}

struct BoundReport
{
    int k = 0;
    int n = 0;
    long long m = 0;
    std::optional<long long> f_kn;
    std::optional<long long> gallai_value;
    long long y = 0;
    long long rho = 0;
    bool critical = false;
    bool ore = false;
    std::optional<int> ore_failure_step;
    std::optional<bool> meets_f;       // m >= F(k, n), when F is defined
    bool extremal = false;             // rho = k(k - 3)
    std::optional<bool> non_ore_ok;    // rho <= y_k, for critical non-Ore graphs
    bool tight = false;                // critical, non-Ore and rho = y_k

    /// True when a k-critical graph breaks one of the bounds.
    auto violation() const -> bool
    {
        return critical && ((meets_f && ! *meets_f) || (non_ore_ok && ! *non_ore_ok));
    }
};

template <typename G>
auto verify_graph(const G & g, int k, const Limits & limits = default_limits()) -> BoundReport
{
    require_k(k, "verify_graph");
    BoundReport r;
    r.k = k;
    r.n = g.size();
    r.m = g.edge_count();
    if (r.n >= k && r.n != k + 1)
        r.f_kn = ore_bound(k, r.n);
    if (r.n >= k + 2 && r.n <= 2 * k - 1)
        r.gallai_value = gallai_small_n(k, r.n);
    r.y = y_k(k);
    r.rho = rho_full(g, k);
    r.critical = is_k_critical(g, k, limits);
    auto rec = recognize(g, k, limits);
    r.ore = rec.is_ore;
    if (rec.failure)
        r.ore_failure_step = rec.failure->step;
    r.extremal = r.rho == static_cast<long long>(k) * (k - 3);
    if (r.critical) {
        if (r.f_kn)
            r.meets_f = r.m >= *r.f_kn;
        if (! r.ore) {
            r.non_ore_ok = r.rho <= r.y;
            r.tight = r.rho == r.y;
        }
    }
    return r;
}

struct RecurrenceStep
{
    int n = 0;
    int m = 0;
    int increment = 0; // edges gained over the previous step
    bool critical = false;
};

struct RecurrenceSeries
{
    std::vector<RecurrenceStep> steps;
    bool complete = true;   // false when a size limit stopped the series
    std::string stopped_by;
};

/// Composes the base with K_k `steps` times, on the first edge each time,
/// and records the edge counts and criticality.
template <typename G>
auto check_ore_recurrence(int k, const G & base, int steps, const Limits & limits = default_limits()) -> RecurrenceSeries
{
    require_k(k, "check_ore_recurrence");
    if (steps < 0)
        throw PreconditionError("check_ore_recurrence: steps must be nonnegative");
    RecurrenceSeries out;
    G g = base;
    std::vector<int> rest;
    for (int v = 2; v < k; ++v)
        rest.push_back(v);
    try {
        out.steps.push_back({g.size(), g.edge_count(), 0, is_k_critical(g, k, limits)});
        if (! out.steps.back().critical)
            throw PreconditionError("check_ore_recurrence: the base graph is not " + std::to_string(k) + "-critical");
        for (int s = 0; s < steps; ++s) {
            if (g.size() + k - 1 > G::max_vertices) {
                out.complete = false;
                out.stopped_by = "graph capacity";
                break;
            }
            auto [x, y] = g.edges().front();
            g = compose(g, x, y, G::complete(k), VertexSplit{0, {1}, rest});
            const int prev = out.steps.back().m;
            out.steps.push_back({g.size(), g.edge_count(), g.edge_count() - prev, is_k_critical(g, k, limits)});
        }
    } catch (const LimitError & e) {
        out.complete = false;
        out.stopped_by = e.what();
    }
    return out;
}

struct TableRow
{
    long long n = 0;
    std::optional<long long> f;
    std::optional<long long> lower;
    std::optional<long long> gallai;
    std::optional<std::string> known;
};

inline auto bound_table(int k, long long n_from, long long n_to) -> std::vector<TableRow>
{
    require_k(k, "bounds table");
    if (n_from > n_to)
        throw PreconditionError("bounds table: --n-from must not exceed --n-to");
    std::vector<TableRow> rows;
    for (long long n = std::max<long long>(n_from, k); n <= n_to; ++n) {
        TableRow r;
        r.n = n;
        if (n != k + 1) {
            r.f = ore_bound(k, n);
            r.lower = edge_lower_bound(k, n);
            r.known = known_exact_case(k, n);
        }
        if (n >= k + 2 && n <= 2LL * k - 1)
            r.gallai = gallai_small_n(k, n);
        rows.push_back(r);
    }
    return rows;
}

inline auto bound_table_tsv(int k, long long n_from, long long n_to) -> std::string
{
    auto cell = [](const std::optional<long long> & v) { return v ? std::to_string(*v) : std::string("-"); };
    std::string out = "n\tF\tlower_bound\tgallai\tknown_exact\n";
    for (const auto & r : bound_table(k, n_from, n_to))
        out += std::to_string(r.n) + "\t" + cell(r.f) + "\t" + cell(r.lower) + "\t" + cell(r.gallai) + "\t"
                + (r.known ? "yes (" + *r.known + ")" : std::string("no")) + "\n";
    return out;
}

}
