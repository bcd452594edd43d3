#pragma once

/**
 * Exact colouring by DSATUR-ordered backtracking with colour-class symmetry
 * breaking, and everything built on it: chromatic number, k-criticality
 * certificates, colour forcing between vertex pairs, quasi-edge/quasi-vertex
 * classification of 2-cuts, clusters and standard sets.
 */

#include "kcrit/connectivity.hpp"
#include "kcrit/graph.hpp"
#include "kcrit/graph_ops.hpp"
#include "kcrit/limits.hpp"
#include "kcrit/parallel.hpp"
#include "kcrit/potential.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kcrit {

struct ColoringCertificate
{
    bool colorable = false;
    int budget = 0;
    /// Distinct colours in the witness (0 when uncolourable).
    int colors_used = 0;
    /// witness[v] in 1..budget when colourable, empty otherwise.
    std::vector<int> witness;
    /// Search nodes visited; for an uncolourable verdict this is the size of
    /// the exhausted tree and is deterministic for a given input.
    std::uint64_t nodes = 0;
};

template <typename G>
auto is_proper_coloring(const G & g, const std::vector<int> & colour) -> bool
{
    if (static_cast<int>(colour.size()) != g.size())
        return false;
    for (auto [u, v] : g.edges())
        if (colour[static_cast<std::size_t>(u)] == colour[static_cast<std::size_t>(v)])
            return false;
    return true;
}

inline auto distinct_colours(const std::vector<int> & colour) -> int
{
    auto c = colour;
    std::sort(c.begin(), c.end());
    return static_cast<int>(std::unique(c.begin(), c.end()) - c.begin());
}

namespace detail {

template <typename G>
class DsaturSolver
{
public:
    DsaturSolver(const G & g, int colours) :
        _g(g), _n(g.size()), _c(colours)
    {
        _colour.assign(static_cast<std::size_t>(_n), 0);
        _avail.assign(static_cast<std::size_t>(_n), full_mask());
    }

    auto solve() -> ColoringCertificate
    {
        ColoringCertificate out;
        out.budget = _c;
        bool ok = _n == 0 || (_c >= 1 && search(0, 0));
        out.nodes = _nodes;
        if (ok) {
            out.colorable = true;
            out.witness = _colour;
            out.colors_used = distinct_colours(_colour);
            if (_n == 0)
                out.colors_used = 0;
        }
        return out;
    }

private:
    auto full_mask() const -> std::uint64_t
    {
        return _c >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << _c) - 1);
    }

    auto pick() const -> int
    {
        int best = -1, best_avail = 65, best_deg = -1;
        for (int v = 0; v < _n; ++v) {
            if (_colour[static_cast<std::size_t>(v)])
                continue;
            int a = std::popcount(_avail[static_cast<std::size_t>(v)]);
            if (a > best_avail)
                continue;
            int d = 0;
            _g.neighbours(v).for_each([&](int w) {
                if (! _colour[static_cast<std::size_t>(w)])
                    ++d;
            });
            if (a < best_avail || d > best_deg) {
                best = v;
                best_avail = a;
                best_deg = d;
            }
        }
        return best;
    }

    auto search(int coloured, int used) -> bool
    {
        ++_nodes;
        if (coloured == _n)
            return true;
        const int v = pick();
        std::uint64_t options = _avail[static_cast<std::size_t>(v)];
        // A colour above used+1 is a relabelling of used+1.
        if (used + 1 < 64)
            options &= (std::uint64_t{1} << (used + 1)) - 1;
        std::vector<int> touched;
        while (options) {
            const int bit = std::countr_zero(options);
            options &= options - 1;
            const std::uint64_t m = std::uint64_t{1} << bit;
            touched.clear();
            bool wiped = false;
            _g.neighbours(v).for_each([&](int w) {
                auto & a = _avail[static_cast<std::size_t>(w)];
                if (! _colour[static_cast<std::size_t>(w)] && (a & m)) {
                    a &= ~m;
                    touched.push_back(w);
                    if (! a)
                        wiped = true;
                }
            });
            _colour[static_cast<std::size_t>(v)] = bit + 1;
            if (! wiped && search(coloured + 1, std::max(used, bit + 1)))
                return true;
            _colour[static_cast<std::size_t>(v)] = 0;
            for (int w : touched)
                _avail[static_cast<std::size_t>(w)] |= m;
        }
        return false;
    }

    const G & _g;
    int _n, _c;
    std::vector<int> _colour;
    std::vector<std::uint64_t> _avail;
    std::uint64_t _nodes = 0;
};

inline auto check_colour_budget(int n, int colours, const Limits & limits, const char * what) -> void
{
    if (colours < 1)
        throw PreconditionError(std::string(what) + ": need at least one colour");
    if (n > limits.coloring_max_n(colours))
        throw LimitError(std::string(what) + ": n=" + std::to_string(n) + " exceeds the exact-colouring limit of "
                + std::to_string(limits.coloring_max_n(colours)) + " for " + std::to_string(colours)
                + " colours (raise via KCRIT_LIMITS)");
}

}

/// Exact c-colourability. Colourable verdicts carry a proper witness.
template <typename G>
auto colorable(const G & g, int colours, const Limits & limits = default_limits()) -> ColoringCertificate
{
    detail::check_colour_budget(g.size(), colours, limits, "colorable");
    // n colours always suffice, and the solver's masks hold 64.
    auto cert = detail::DsaturSolver<G>(g, std::min(colours, std::max(1, g.size()))).solve();
    cert.budget = colours;
    // Renumber so colours first appear in vertex order.
    std::vector<int> rename(static_cast<std::size_t>(g.size()) + 2, 0);
    int next = 0;
    for (auto & c : cert.witness) {
        auto & r = rename[static_cast<std::size_t>(c)];
        if (r == 0)
            r = ++next;
        c = r;
    }
    return cert;
}

template <typename G>
auto chromatic_number(const G & g, const Limits & limits = default_limits()) -> int
{
    if (g.size() == 0)
        return 0;
    int c = g.edge_count() > 0 ? 2 : 1;
    while (! colorable(g, c, limits).colorable)
        ++c;
    return c;
}

struct CriticalityReport
{
    int k = 0;
    /// Not (k-1)-colourable.
    bool is_k_chromatic = false;
    bool is_critical = false;
    /// A (k-1)-colouring of G itself when it exists.
    std::vector<int> colouring;
    /// For each edge e, a (k-1)-colouring of G - e (filled when critical).
    std::vector<std::pair<Edge, std::vector<int>>> per_edge;
    /// The first edge whose deletion stays non-(k-1)-colourable, if any.
    std::optional<Edge> failing_edge;
    /// An isolated vertex (which could be deleted without losing the chromatic number), if any.
    std::optional<int> isolated_vertex;
    std::uint64_t refutation_nodes = 0;
};

template <typename G>
auto check_critical(const G & g, int k, const Limits & limits = default_limits()) -> CriticalityReport
{
    if (k < 2)
        throw PreconditionError("check_critical: k must be at least 2");
    CriticalityReport out;
    out.k = k;
    auto whole = colorable(g, k - 1, limits);
    out.refutation_nodes = whole.nodes;
    if (whole.colorable) {
        out.colouring = whole.witness;
        return out;
    }
    out.is_k_chromatic = true;
    if (g.size() > 1)
        for (int v = 0; v < g.size(); ++v)
            if (g.degree(v) == 0) {
                out.isolated_vertex = v;
                return out;
            }
    const auto edges = g.edges();
    std::vector<std::optional<std::vector<int>>> witnesses(edges.size());
    parallel_for(edges.size(), [&](std::size_t i) {
        auto h = g;
        h.remove_edge(edges[i].first, edges[i].second);
        auto cert = colorable(h, k - 1, limits);
        if (cert.colorable)
            witnesses[i] = std::move(cert.witness);
    });
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (! witnesses[i]) {
            out.failing_edge = edges[i];
            out.per_edge.clear();
            return out;
        }
        out.per_edge.emplace_back(edges[i], std::move(*witnesses[i]));
    }
    out.is_critical = true;
    return out;
}

template <typename G>
auto is_k_critical(const G & g, int k, const Limits & limits = default_limits()) -> bool
{
    return check_critical(g, k, limits).is_critical;
}

enum class ForcingRelation
{
    always_equal,
    always_distinct,
    free,
    uncolorable,
};

inline auto forcing_name(ForcingRelation r) -> const char *
{
    switch (r) {
    case ForcingRelation::always_equal: return "always-equal";
    case ForcingRelation::always_distinct: return "always-distinct";
    case ForcingRelation::free: return "free";
    case ForcingRelation::uncolorable: return "uncolorable";
    }
    return "?";
}

struct ForcingResult
{
    ForcingRelation relation = ForcingRelation::uncolorable;
    /// A colouring of the whole graph with a, b equal / distinct, when one exists.
    std::optional<std::vector<int>> equal_witness;
    std::optional<std::vector<int>> distinct_witness;
};

/// Classifies the pair (a, b) over all proper c-colourings: glue a and b to
/// test whether they can share a colour, add the edge ab to test whether
/// they can differ.
template <typename G>
auto forcing_detail(const G & g, int colours, int a, int b, const Limits & limits = default_limits()) -> ForcingResult
{
    if (a == b || a < 0 || b < 0 || a >= g.size() || b >= g.size())
        throw PreconditionError("forcing: need two distinct vertices of the graph");
    ForcingResult out;
    if (! g.adjacent(a, b)) {
        auto glued = identify_vertices_with_map(g, a, b);
        auto cert = colorable(glued.graph, colours, limits);
        if (cert.colorable) {
            std::vector<int> colour(static_cast<std::size_t>(g.size()));
            for (int v = 0; v < g.size(); ++v)
                colour[static_cast<std::size_t>(v)] = cert.witness[static_cast<std::size_t>(glued.old_to_new[static_cast<std::size_t>(v)])];
            out.equal_witness = std::move(colour);
        }
    }
    {
        auto joined = g;
        joined.add_edge(a, b);
        auto cert = colorable(joined, colours, limits);
        if (cert.colorable)
            out.distinct_witness = std::move(cert.witness);
    }
    if (out.equal_witness && out.distinct_witness)
        out.relation = ForcingRelation::free;
    else if (out.equal_witness)
        out.relation = ForcingRelation::always_equal;
    else if (out.distinct_witness)
        out.relation = ForcingRelation::always_distinct;
    else
        out.relation = ForcingRelation::uncolorable;
    return out;
}

template <typename G>
auto forcing(const G & g, int colours, int a, int b, const Limits & limits = default_limits()) -> ForcingRelation
{
    return forcing_detail(g, colours, a, b, limits).relation;
}

/// The two sides of a 2-cut {x, y}, each including x and y.
template <typename G>
struct TwoCutSides
{
    typename G::Set quasi_vertex; // x, y always share a colour
    typename G::Set quasi_edge;   // x, y never share a colour
};

/// Quasi-vertex test of S (containing x, y): G[S] is (k-1)-colourable, x and y
/// always share a colour, and deleting any edge of G[S] lets them differ.
template <typename G>
auto is_quasi_vertex(const G & g, int k, const typename G::Set & s, int x, int y, const Limits & limits = default_limits()) -> bool
{
    auto sub = induced_subgraph_with_map(g, s);
    const int sx = sub.old_to_new[static_cast<std::size_t>(x)], sy = sub.old_to_new[static_cast<std::size_t>(y)];
    if (forcing(sub.graph, k - 1, sx, sy, limits) != ForcingRelation::always_equal)
        return false;
    for (auto [u, v] : sub.graph.edges()) {
        auto h = sub.graph;
        h.remove_edge(u, v);
        auto r = forcing(h, k - 1, sx, sy, limits);
        if (r != ForcingRelation::free && r != ForcingRelation::always_distinct)
            return false;
    }
    return true;
}

/// Quasi-edge test of S: G[S] is (k-1)-colourable, x and y never share a
/// colour, and deleting any edge of G[S] lets them share one.
template <typename G>
auto is_quasi_edge(const G & g, int k, const typename G::Set & s, int x, int y, const Limits & limits = default_limits()) -> bool
{
    auto sub = induced_subgraph_with_map(g, s);
    const int sx = sub.old_to_new[static_cast<std::size_t>(x)], sy = sub.old_to_new[static_cast<std::size_t>(y)];
    if (forcing(sub.graph, k - 1, sx, sy, limits) != ForcingRelation::always_distinct)
        return false;
    for (auto [u, v] : sub.graph.edges()) {
        auto h = sub.graph;
        h.remove_edge(u, v);
        auto r = forcing(h, k - 1, sx, sy, limits);
        if (r != ForcingRelation::free && r != ForcingRelation::always_equal)
            return false;
    }
    return true;
}

/// Labels the two sides of the separating pair {x, y} of a k-critical graph.
/// Only the forcing conditions are evaluated; for k-critical inputs they
/// determine the classification. Non-critical inputs are refused.
template <typename G>
auto classify_two_cut(const G & g, int k, int x, int y, const Limits & limits = default_limits()) -> TwoCutSides<G>
{
    require_k(k, "classify_two_cut");
    if (x == y || x < 0 || y < 0 || x >= g.size() || y >= g.size())
        throw PreconditionError("classify_two_cut: need two distinct vertices");
    auto rest = g.all_vertices();
    rest.reset(x);
    rest.reset(y);
    auto parts = components(g, rest);
    if (parts.size() < 2)
        throw PreconditionError("classify_two_cut: {x, y} does not separate the graph");
    if (parts.size() > 2)
        throw PreconditionError("classify_two_cut: G - {x, y} has more than two components, "
                                "impossible for a separating pair of a k-critical graph");
    if (g.adjacent(x, y))
        throw PreconditionError("classify_two_cut: x and y are adjacent, impossible for a separating pair of a k-critical graph");
    if (! is_k_critical(g, k, limits))
        throw PreconditionError("classify_two_cut: the graph is not " + std::to_string(k) + "-critical");

    typename G::Set ends;
    ends.set(x);
    ends.set(y);
    std::array<ForcingRelation, 2> rel{};
    for (std::size_t i = 0; i < 2; ++i) {
        auto side = induced_subgraph_with_map(g, parts[i] | ends);
        rel[i] = forcing(side.graph, k - 1, side.old_to_new[static_cast<std::size_t>(x)],
                side.old_to_new[static_cast<std::size_t>(y)], limits);
    }
    if (rel[0] == ForcingRelation::always_equal && rel[1] == ForcingRelation::always_distinct)
        return {parts[0] | ends, parts[1] | ends};
    if (rel[1] == ForcingRelation::always_equal && rel[0] == ForcingRelation::always_distinct)
        return {parts[1] | ends, parts[0] | ends};
    throw PreconditionError(std::string("classify_two_cut: sides are ") + forcing_name(rel[0]) + " and "
            + forcing_name(rel[1]) + ", expected one quasi-vertex and one quasi-edge");
}

/// Classes of equal closed neighbourhoods among the degree-(k-1) vertices,
/// ordered by smallest member.
template <typename G>
auto clusters(const G & g, int k) -> std::vector<std::vector<int>>
{
    std::map<typename G::Set, std::vector<int>> by_closed;
    for (int v = 0; v < g.size(); ++v)
        if (g.degree(v) == k - 1) {
            auto closed = g.neighbours(v);
            closed.set(v);
            by_closed[closed].push_back(v);
        }
    std::vector<std::vector<int>> out;
    for (auto & [closed, members] : by_closed)
        out.push_back(std::move(members));
    std::sort(out.begin(), out.end());
    return out;
}

template <typename G>
struct StandardSet
{
    typename G::Set set;
    int x = -1, y = -1;
};

/// Every (S, x, y) where {x, y} separates G, S - {x, y} is a component of
/// G - {x, y}, rho_k(S) = (k+1)(k-2), and S is a k-quasi-xy-vertex.
template <typename G>
auto find_standard_sets(const G & g, int k, const Limits & limits = default_limits()) -> std::vector<StandardSet<G>>
{
    require_k(k, "find_standard_sets");
    if (g.size() > limits.potential_max_n)
        throw LimitError("find_standard_sets: n=" + std::to_string(g.size()) + " exceeds the enumeration limit of "
                + std::to_string(limits.potential_max_n));
    std::vector<StandardSet<G>> out;
    const long long target = rho_complete(k, 1);
    for (auto [x, y] : separating_pairs(g)) {
        typename G::Set ends;
        ends.set(x);
        ends.set(y);
        auto rest = g.all_vertices() - ends;
        for (const auto & part : components(g, rest)) {
            auto s = part | ends;
            if (rho(g, k, s) != target)
                continue;
            if (is_quasi_vertex(g, k, s, x, y, limits))
                out.push_back({s, x, y});
        }
    }
    return out;
}

}
