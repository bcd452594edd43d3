#pragma once

// JSON views of the reports, with a fixed key order.

#include "kcrit/bounds.hpp"
#include "kcrit/coloring.hpp"
#include "kcrit/io.hpp"
#include "kcrit/ore.hpp"
#include "kcrit/potential.hpp"
#include "kcrit/search.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace kcrit {

using Json = nlohmann::ordered_json;

namespace detail {

template <typename T>
auto optional_json(const std::optional<T> & v) -> Json
{
    return v ? Json(*v) : Json(nullptr);
}

}

template <typename G>
auto graph_summary_json(const G & g) -> Json
{
    return Json{{"n", g.size()}, {"m", g.edge_count()}, {"graph6", write_graph6(g)}};
}

inline auto to_json(const PotentialReport & r) -> Json
{
    return Json{
            {"k", r.k},
            {"rho_full", r.rho_full},
            {"p_k", r.p_k},
            {"p_tilde", detail::optional_json(r.p_tilde)},
            {"minimizers", Json{{"p_k", r.p_k_minimizers}, {"p_tilde", r.p_tilde_minimizers}}},
    };
}

/// Vertex label to colour.
template <typename G>
auto colouring_json(const G & g, const std::vector<int> & colour) -> Json
{
    Json out = Json::object();
    for (int v = 0; v < g.size() && v < static_cast<int>(colour.size()); ++v)
        out[g.label(v)] = colour[static_cast<std::size_t>(v)];
    return out;
}

template <typename G>
auto to_json(const G & g, const ColoringCertificate & c, bool witness) -> Json
{
    Json out{{"colorable", c.colorable}, {"colours", c.budget}};
    if (c.colorable) {
        out["colors_used"] = c.colors_used;
        if (witness)
            out["witness"] = colouring_json(g, c.witness);
    }
    out["search_nodes"] = c.nodes;
    return out;
}

template <typename G>
auto to_json(const G & g, const CriticalityReport & r, bool witness) -> Json
{
    Json out{{"k", r.k}, {"k_chromatic", r.is_k_chromatic}, {"critical", r.is_critical}};
    if (! r.is_k_chromatic && witness)
        out["colouring"] = colouring_json(g, r.colouring);
    if (r.failing_edge)
        out["failing_edge"] = {g.label(r.failing_edge->first), g.label(r.failing_edge->second)};
    if (r.isolated_vertex)
        out["isolated_vertex"] = g.label(*r.isolated_vertex);
    if (witness && r.is_critical) {
        Json per = Json::array();
        for (const auto & [e, col] : r.per_edge)
            per.push_back(Json{{"edge", {g.label(e.first), g.label(e.second)}}, {"colouring", colouring_json(g, col)}});
        out["edge_colourings"] = per;
    }
    return out;
}

template <typename G>
auto ore_tree_json(const OreNode<G> & node, const std::vector<std::string> & labels) -> Json
{
    Json out{{"n", node.graph.size()}, {"m", node.graph.edge_count()}};
    if (node.leaf()) {
        out["leaf"] = true;
        out["vertices"] = labels;
        return out;
    }
    out["leaf"] = false;
    out["cut"] = {labels[static_cast<std::size_t>(node.x)], labels[static_cast<std::size_t>(node.y)]};
    auto [a, b] = child_labels(node, labels);
    out["first"] = ore_tree_json(*node.first, a);
    out["second"] = ore_tree_json(*node.second, b);
    return out;
}

template <typename G>
auto to_json(const G & g, const OreRecognition<G> & r) -> Json
{
    Json out{{"verdict", r.is_ore ? "yes" : "no"}};
    if (r.is_ore) {
        out["leaves"] = r.tree->leaf_count();
        out["tree"] = ore_tree_json(*r.tree, g.labels());
    }
    if (r.failure)
        out["failure"] = Json{{"step", r.failure->step}, {"reason", r.failure->reason}, {"n", r.failure->n},
                {"depth", r.failure->depth}};
    return out;
}

inline auto to_json(const BoundReport & r) -> Json
{
    return Json{
            {"k", r.k},
            {"n", r.n},
            {"m", r.m},
            {"F", detail::optional_json(r.f_kn)},
            {"gallai", detail::optional_json(r.gallai_value)},
            {"y_k", r.y},
            {"rho_full", r.rho},
            {"critical", r.critical},
            {"ore", r.ore},
            {"verdicts", Json{{"meets_F", detail::optional_json(r.meets_f)}, {"extremal", r.extremal},
                                 {"non_ore_bound_ok", detail::optional_json(r.non_ore_ok)}, {"tight", r.tight}}},
            {"violation", r.violation()},
    };
}

inline auto to_json(const RecurrenceSeries & s) -> Json
{
    Json steps = Json::array();
    for (const auto & st : s.steps)
        steps.push_back(Json{{"n", st.n}, {"m", st.m}, {"increment", st.increment}, {"critical", st.critical}});
    Json out{{"steps", steps}, {"complete", s.complete}};
    if (! s.complete)
        out["stopped_by"] = s.stopped_by;
    return out;
}

template <typename G>
auto to_json(const G & g, const ForcingResult & r, bool witness) -> Json
{
    Json out{{"relation", forcing_name(r.relation)}};
    if (witness) {
        if (r.equal_witness)
            out["equal_witness"] = colouring_json(g, *r.equal_witness);
        if (r.distinct_witness)
            out["distinct_witness"] = colouring_json(g, *r.distinct_witness);
    }
    return out;
}

inline auto to_json(const SearchStats & s) -> Json
{
    return Json{{"nodes_per_order", s.nodes}, {"not_colourable", s.not_colourable}, {"seconds", s.seconds}};
}

}
