#pragma once

/**
 * Canonical labelling of small graphs by partition refinement and
 * individualisation, with automorphism pruning.
 *
 * The search tree is the usual one: refine the unit partition to an
 * equitable partition, individualise each vertex of the first smallest
 * non-singleton cell in turn, refine again, recurse. Every discrete
 * partition is a leaf; the leaf whose relabelled adjacency matrix is
 * lexicographically largest defines the canonical form. Leaves whose
 * matrices coincide yield automorphisms, which prune siblings in the same
 * orbit of the pointwise stabiliser of the current path, and let the
 * search jump back to the node where the equivalent paths diverged.
 */

#include "kcrit/graph.hpp"
#include "kcrit/graph_ops.hpp"
#include "kcrit/io.hpp"
#include "kcrit/limits.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace kcrit {

struct CanonicalLabeling
{
    /// position[v] = index of v in the canonical relabelling.
    std::vector<int> position;
    /// Automorphisms found during the search; they generate the full group.
    std::vector<std::vector<int>> generators;
    /// orbit[v] = smallest vertex in v's automorphism orbit.
    std::vector<int> orbit;
    /// graph6 encoding of the canonically relabelled graph.
    std::string form;
};

namespace detail {

template <typename G>
class CanonicalSearch
{
public:
    using Set = typename G::Set;

    explicit CanonicalSearch(const G & g) :
        _g(g), _n(g.size())
    {
    }

    auto run(const std::vector<int> & initial_colours) -> CanonicalLabeling
    {
        Partition p;
        p.lab.resize(static_cast<std::size_t>(_n));
        std::iota(p.lab.begin(), p.lab.end(), 0);
        p.start.assign(static_cast<std::size_t>(_n), 0);
        p.len.assign(static_cast<std::size_t>(_n), 0);
        std::vector<int> queue;
        if (_n > 0) {
            // Cells of the initial colouring in increasing colour order.
            std::stable_sort(p.lab.begin(), p.lab.end(), [&](int a, int b) {
                return colour_of(initial_colours, a) < colour_of(initial_colours, b);
            });
            int s = 0;
            for (int i = 1; i <= _n; ++i)
                if (i == _n || colour_of(initial_colours, p.lab[static_cast<std::size_t>(i)])
                        != colour_of(initial_colours, p.lab[static_cast<std::size_t>(s)])) {
                    for (int j = s; j < i; ++j)
                        p.start[static_cast<std::size_t>(j)] = s;
                    p.len[static_cast<std::size_t>(s)] = i - s;
                    queue.push_back(s);
                    s = i;
                }
            refine(p, queue);
        }
        _path.clear();
        search(p, 0);

        CanonicalLabeling out;
        out.position.assign(static_cast<std::size_t>(_n), 0);
        for (int i = 0; i < _n; ++i)
            out.position[static_cast<std::size_t>(_best_lab[static_cast<std::size_t>(i)])] = i;
        out.generators = _generators;
        out.orbit = orbits_of(_generators);
        G relabelled(_n);
        for (int i = 0; i < _n; ++i)
            _best_cert[static_cast<std::size_t>(i)].for_each([&](int j) {
                if (j > i)
                    relabelled.add_edge(i, j);
            });
        out.form = write_graph6(relabelled);
        return out;
    }

private:
    struct Partition
    {
        std::vector<int> lab;   // position -> vertex
        std::vector<int> start; // position -> start of its cell
        std::vector<int> len;   // cell start -> cell length
    };

    static auto colour_of(const std::vector<int> & colours, int v) -> int
    {
        return colours.empty() ? 0 : colours[static_cast<std::size_t>(v)];
    }

    auto cell_set(const Partition & p, int s) const -> Set
    {
        Set out;
        for (int i = s; i < s + p.len[static_cast<std::size_t>(s)]; ++i)
            out.set(p.lab[static_cast<std::size_t>(i)]);
        return out;
    }

    auto refine(Partition & p, std::vector<int> & queue) const -> void
    {
        std::vector<int> counts(static_cast<std::size_t>(_n));
        std::vector<int> order;
        std::size_t head = 0;
        while (head < queue.size()) {
            const int splitter_start = queue[head++];
            const Set splitter = cell_set(p, splitter_start);
            for (int s = 0; s < _n; s += p.len[static_cast<std::size_t>(s)]) {
                const int len = p.len[static_cast<std::size_t>(s)];
                if (len == 1)
                    continue;
                bool uniform = true;
                for (int i = s; i < s + len; ++i) {
                    int v = p.lab[static_cast<std::size_t>(i)];
                    counts[static_cast<std::size_t>(v)] = _g.neighbours(v).intersect_count(splitter);
                    if (counts[static_cast<std::size_t>(v)] != counts[static_cast<std::size_t>(p.lab[static_cast<std::size_t>(s)])])
                        uniform = false;
                }
                if (uniform)
                    continue;
                auto first = p.lab.begin() + s, last = first + len;
                std::stable_sort(first, last, [&](int a, int b) {
                    return counts[static_cast<std::size_t>(a)] < counts[static_cast<std::size_t>(b)];
                });
                int cs = s;
                for (int i = s + 1; i <= s + len; ++i)
                    if (i == s + len || counts[static_cast<std::size_t>(p.lab[static_cast<std::size_t>(i)])]
                            != counts[static_cast<std::size_t>(p.lab[static_cast<std::size_t>(cs)])]) {
                        for (int j = cs; j < i; ++j)
                            p.start[static_cast<std::size_t>(j)] = cs;
                        p.len[static_cast<std::size_t>(cs)] = i - cs;
                        queue.push_back(cs);
                        cs = i;
                    }
            }
        }
    }

    auto target_cell(const Partition & p) const -> int
    {
        int best = -1, best_len = _n + 1;
        for (int s = 0; s < _n; s += p.len[static_cast<std::size_t>(s)]) {
            int len = p.len[static_cast<std::size_t>(s)];
            if (len > 1 && len < best_len) {
                best = s;
                best_len = len;
            }
        }
        return best;
    }

    auto certificate(const Partition & p) const -> std::vector<Set>
    {
        std::vector<int> inv(static_cast<std::size_t>(_n));
        for (int i = 0; i < _n; ++i)
            inv[static_cast<std::size_t>(p.lab[static_cast<std::size_t>(i)])] = i;
        std::vector<Set> rows(static_cast<std::size_t>(_n));
        for (int i = 0; i < _n; ++i)
            _g.neighbours(p.lab[static_cast<std::size_t>(i)]).for_each([&](int w) {
                rows[static_cast<std::size_t>(i)].set(inv[static_cast<std::size_t>(w)]);
            });
        return rows;
    }

    auto orbits_of(const std::vector<std::vector<int>> & gens) const -> std::vector<int>
    {
        std::vector<int> parent(static_cast<std::size_t>(_n));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int v) {
            while (parent[static_cast<std::size_t>(v)] != v)
                v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            return v;
        };
        for (const auto & gamma : gens)
            for (int v = 0; v < _n; ++v) {
                int a = find(v), b = find(gamma[static_cast<std::size_t>(v)]);
                if (a != b)
                    parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
            }
        std::vector<int> out(static_cast<std::size_t>(_n));
        for (int v = 0; v < _n; ++v)
            out[static_cast<std::size_t>(v)] = find(v);
        return out;
    }

    auto fixes_path(const std::vector<int> & gamma) const -> bool
    {
        for (int v : _path)
            if (gamma[static_cast<std::size_t>(v)] != v)
                return false;
        return true;
    }

    auto record_automorphism(const std::vector<int> & leaf_lab, const std::vector<int> & other_lab) -> void
    {
        std::vector<int> gamma(static_cast<std::size_t>(_n));
        for (int i = 0; i < _n; ++i)
            gamma[static_cast<std::size_t>(other_lab[static_cast<std::size_t>(i)])] = leaf_lab[static_cast<std::size_t>(i)];
        _generators.push_back(std::move(gamma));
    }

    static auto common_prefix(const std::vector<int> & a, const std::vector<int> & b) -> int
    {
        int d = 0;
        while (d < static_cast<int>(a.size()) && d < static_cast<int>(b.size()) && a[static_cast<std::size_t>(d)] == b[static_cast<std::size_t>(d)])
            ++d;
        return d;
    }

    /// Returns the depth the search should unwind to (or -1 to carry on normally).
    auto search(const Partition & p, int depth) -> int
    {
        const int s = target_cell(p);
        if (s < 0) {
            auto cert = certificate(p);
            if (! _have_leaf) {
                _have_leaf = true;
                _first_cert = _best_cert = cert;
                _first_lab = _best_lab = p.lab;
                _first_path = _best_path = _path;
                return -1;
            }
            if (cert == _first_cert) {
                record_automorphism(p.lab, _first_lab);
                return common_prefix(_path, _first_path);
            }
            if (cert == _best_cert) {
                record_automorphism(p.lab, _best_lab);
                return common_prefix(_path, _best_path);
            }
            if (_best_cert < cert) {
                _best_cert = std::move(cert);
                _best_lab = p.lab;
                _best_path = _path;
            }
            return -1;
        }

        const int len = p.len[static_cast<std::size_t>(s)];
        std::vector<int> cell(p.lab.begin() + s, p.lab.begin() + s + len);
        std::sort(cell.begin(), cell.end());
        std::vector<int> explored;
        for (int v : cell) {
            if (! explored.empty()) {
                std::vector<std::vector<int>> stabilising;
                for (const auto & gamma : _generators)
                    if (fixes_path(gamma))
                        stabilising.push_back(gamma);
                auto orb = orbits_of(stabilising);
                bool equivalent = false;
                for (int e : explored)
                    if (orb[static_cast<std::size_t>(e)] == orb[static_cast<std::size_t>(v)])
                        equivalent = true;
                if (equivalent)
                    continue;
            }
            explored.push_back(v);

            Partition child = p;
            auto pos = std::find(child.lab.begin() + s, child.lab.begin() + s + len, v);
            std::iter_swap(child.lab.begin() + s, pos);
            child.len[static_cast<std::size_t>(s)] = 1;
            for (int i = s + 1; i < s + len; ++i)
                child.start[static_cast<std::size_t>(i)] = s + 1;
            child.len[static_cast<std::size_t>(s + 1)] = len - 1;
            std::vector<int> queue{s};
            refine(child, queue);

            _path.push_back(v);
            int jump = search(child, depth + 1);
            _path.pop_back();
            if (jump >= 0 && jump < depth)
                return jump;
        }
        return -1;
    }

    const G & _g;
    int _n;
    std::vector<int> _path;
    bool _have_leaf = false;
    std::vector<Set> _first_cert, _best_cert;
    std::vector<int> _first_lab, _best_lab;
    std::vector<int> _first_path, _best_path;
    std::vector<std::vector<int>> _generators;
};

}

/// Canonical labelling; vertices of different initial colours are never
/// mapped onto each other. Throws LimitError above the configured size.
template <typename G>
auto canonical_labeling(const G & g, const std::vector<int> & initial_colours = {},
        const Limits & limits = default_limits()) -> CanonicalLabeling
{
    if (g.size() > limits.canonical_max_n)
        throw LimitError("canonical_form: n=" + std::to_string(g.size()) + " exceeds the limit of "
                + std::to_string(limits.canonical_max_n) + " (raise via KCRIT_LIMITS=canonical=N)");
    return detail::CanonicalSearch<G>(g).run(initial_colours);
}

/// A byte string that is equal for two graphs iff they are isomorphic.
template <typename G>
auto canonical_form(const G & g, const Limits & limits = default_limits()) -> std::string
{
    return canonical_labeling(g, {}, limits).form;
}

/// The graph relabelled into canonical order (labels travel with their vertices).
template <typename G>
auto canonical_graph(const G & g, const Limits & limits = default_limits()) -> G
{
    return permute(g, canonical_labeling(g, {}, limits).position);
}

template <typename G>
auto sorted_degrees(const G & g) -> std::vector<int>
{
    auto d = g.degrees();
    std::sort(d.begin(), d.end());
    return d;
}

template <typename G>
auto is_isomorphic(const G & a, const G & b, const Limits & limits = default_limits()) -> bool
{
    if (a.size() != b.size() || a.edge_count() != b.edge_count() || sorted_degrees(a) != sorted_degrees(b))
        return false;
    return canonical_form(a, limits) == canonical_form(b, limits);
}

}
