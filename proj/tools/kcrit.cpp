// kcrit: command-line front end for the kcrit library.
//
// Exit codes: 0 success, 1 the answer is "no" (not critical, not Ore, a
// bound violated), 2 usage or input error.

#include "kcrit/bounds.hpp"
#include "kcrit/coloring.hpp"
#include "kcrit/constructions.hpp"
#include "kcrit/io.hpp"
#include "kcrit/json.hpp"
#include "kcrit/ore.hpp"
#include "kcrit/parallel.hpp"
#include "kcrit/potential.hpp"
#include "kcrit/search.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace kcrit;

namespace {

struct Options
{
    bool json = false;
    bool witness = false;
    std::string format;
    int threads = 0;
    unsigned long long seed = 0;
};

auto read_input(const std::string & path) -> std::string
{
    if (path.empty() || path == "-")
        return read_stream(std::cin);
    std::ifstream in(path);
    if (! in)
        throw InputError("cannot open " + path);
    return read_stream(in);
}

auto input_format(const Options & o) -> std::optional<GraphFormat>
{
    if (o.format.empty())
        return std::nullopt;
    return o.format == "graph6" ? GraphFormat::graph6 : GraphFormat::edge_list;
}

auto output_format(const Options & o) -> GraphFormat
{
    return o.format == "graph6" ? GraphFormat::graph6 : GraphFormat::edge_list;
}

auto load(const Options & o, const std::string & path) -> Graph
{
    return parse_graph<Graph>(read_input(path), input_format(o));
}

/// A vertex given as an index or, when the graph is labelled, a label.
auto vertex(const Graph & g, const std::string & token) -> int
{
    if (auto v = g.find_label(token))
        return *v;
    try {
        std::size_t used = 0;
        int v = std::stoi(token, &used);
        if (used == token.size() && v >= 0 && v < g.size())
            return v;
    } catch (const std::exception &) {
    }
    throw InputError("unknown vertex '" + token + "'");
}

auto vertices(const Graph & g, const std::vector<std::string> & tokens) -> std::vector<int>
{
    std::vector<int> out;
    for (const auto & t : tokens)
        out.push_back(vertex(g, t));
    return out;
}

auto print(const Options & o, const Json & doc, const std::string & human) -> void
{
    if (o.json)
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << human;
}

auto colouring_text(const Graph & g, const std::vector<int> & c) -> std::string
{
    std::string out;
    for (int v = 0; v < g.size(); ++v)
        out += "  " + g.label(v) + " -> " + std::to_string(c[static_cast<std::size_t>(v)]) + "\n";
    return out;
}

auto emit_graphs(const Options & o, const std::vector<Graph> & gs, Json meta) -> void
{
    if (o.json) {
        Json list = Json::array();
        for (const auto & g : gs) {
            auto s = graph_summary_json(g);
            if (o.format != "graph6")
                s["edges"] = g.edges();
            list.push_back(s);
        }
        meta["graphs"] = list;
        std::cout << meta.dump(2) << "\n";
        return;
    }
    for (std::size_t i = 0; i < gs.size(); ++i) {
        if (output_format(o) == GraphFormat::edge_list && i > 0)
            std::cout << "\n";
        std::cout << write_graph(gs[i], output_format(o));
    }
}

auto tree_text(const OreNode<Graph> & node, const std::vector<std::string> & labels, int depth) -> std::string
{
    std::string pad(static_cast<std::size_t>(2 * depth), ' ');
    if (node.leaf()) {
        std::string out = pad + "K" + std::to_string(node.graph.size()) + " {";
        for (std::size_t i = 0; i < labels.size(); ++i)
            out += (i ? " " : "") + labels[i];
        return out + "}\n";
    }
    auto [a, b] = child_labels(node, labels);
    std::string out = pad + "cut {" + labels[static_cast<std::size_t>(node.x)] + ", " + labels[static_cast<std::size_t>(node.y)]
            + "}, n=" + std::to_string(node.graph.size()) + "\n";
    return out + tree_text(*node.first, a, depth + 1) + tree_text(*node.second, b, depth + 1);
}

}

auto main(int argc, char ** argv) -> int
{
    CLI::App app{"Sparse k-critical graphs: potentials, Ore recognition, constructions and bounds"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.json, "Emit a single JSON document");
    app.add_flag("--witness", o.witness, "Include colouring certificates");
    app.add_option("--format", o.format, "Graph format for input and output")->check(CLI::IsMember({"edgelist", "graph6"}));
    app.add_option("--threads", o.threads, "Worker threads (0 = all cores)")
            ->check(CLI::NonNegativeNumber)
            ->each([](const std::string & v) { set_threads(std::stoi(v)); });
    app.add_option("--seed", o.seed, "Seed for randomised subcommands (none of the current ones use it)");

    int exit_code = 0;
    std::string file;
    int k = 0;

    auto add_k = [&](CLI::App * sub) { sub->add_option("-k", k, "Colour-criticality parameter")->required(); };
    auto add_file = [&](CLI::App * sub) { sub->add_option("file", file, "Graph file (stdin when omitted)"); };

    // potential
    auto * potential = app.add_subcommand("potential", "Minimum k-potential over vertex subsets");
    std::string mode = "all";
    add_k(potential);
    potential->add_option("--mode", mode, "all: nonempty subsets; proper: 2 <= |W| <= n-1")
            ->check(CLI::IsMember({"all", "proper"}));
    add_file(potential);
    potential->callback([&] {
        auto g = load(o, file);
        auto r = min_potential(g, k, mode == "proper" ? PotentialRange::proper_nontrivial : PotentialRange::all_nonempty);
        std::ostringstream s;
        s << "rho_k(V) = " << r.rho_full << "\nP_k = " << r.p_k << "\n";
        if (r.p_tilde)
            s << "P~_k = " << *r.p_tilde << "\n";
        print(o, to_json(r), s.str());
    });

    // chi
    auto * chi = app.add_subcommand("chi", "Chromatic number");
    add_file(chi);
    chi->callback([&] {
        auto g = load(o, file);
        const int c = chromatic_number(g);
        Json doc{{"chromatic_number", c}};
        std::string human = "chi = " + std::to_string(c) + "\n";
        if (o.witness && c > 0) {
            auto cert = colorable(g, c);
            doc["witness"] = colouring_json(g, cert.witness);
            human += colouring_text(g, cert.witness);
        }
        print(o, doc, human);
    });

    // critical
    auto * critical = app.add_subcommand("critical", "Is the graph k-critical?");
    add_k(critical);
    add_file(critical);
    critical->callback([&] {
        auto g = load(o, file);
        auto r = check_critical(g, k);
        std::string human = r.is_critical ? "yes: " + std::to_string(k) + "-critical\n" : "no\n";
        if (! r.is_k_chromatic)
            human = "no: the graph is " + std::to_string(k - 1) + "-colourable\n" + (o.witness ? colouring_text(g, r.colouring) : "");
        else if (r.failing_edge)
            human = "no: deleting " + g.label(r.failing_edge->first) + "-" + g.label(r.failing_edge->second)
                    + " keeps the chromatic number\n";
        else if (r.isolated_vertex)
            human = "no: vertex " + g.label(*r.isolated_vertex) + " is isolated\n";
        print(o, to_json(g, r, o.witness), human);
        exit_code = r.is_critical ? 0 : 1;
    });

    // recognize / decompose
    bool tree = false;
    auto * recog = app.add_subcommand("recognize", "Is the graph k-Ore?");
    add_k(recog);
    add_file(recog);
    recog->callback([&] {
        auto g = load(o, file);
        auto r = recognize(g, k);
        std::string human = r.is_ore ? "yes\n" : "no (step " + std::to_string(r.failure->step) + ": " + r.failure->reason + ")\n";
        print(o, to_json(g, r), human);
        exit_code = r.is_ore ? 0 : 1;
    });
    auto * decomp = app.add_subcommand("decompose", "Ore decomposition tree");
    add_k(decomp);
    decomp->add_flag("--tree", tree, "Pretty-print the whole tree");
    add_file(decomp);
    decomp->callback([&] {
        auto g = load(o, file);
        auto r = recognize(g, k);
        if (! r.is_ore) {
            print(o, to_json(g, r), "not " + std::to_string(k) + "-Ore (step " + std::to_string(r.failure->step) + ": " + r.failure->reason + ")\n");
            exit_code = 1;
            return;
        }
        std::string human;
        if (tree)
            human = tree_text(*r.tree, g.labels(), 0);
        else if (r.tree->leaf())
            human = "K" + std::to_string(k) + "\n";
        else
            human = "cut {" + g.label(r.tree->x) + ", " + g.label(r.tree->y) + "}: " + std::to_string(r.tree->first->graph.size())
                    + " + " + std::to_string(r.tree->second->graph.size()) + " vertices, "
                    + std::to_string(r.tree->leaf_count()) + " leaves\n";
        print(o, to_json(g, r), human);
    });

    // compose
    auto * comp = app.add_subcommand("compose", "Ore composition of two graphs");
    std::string g1_file, g2_file, x_tok, y_tok, z_tok;
    std::vector<std::string> first_tok, second_tok;
    comp->add_option("g1", g1_file, "Graph containing the edge xy")->required();
    comp->add_option("g2", g2_file, "Graph whose vertex z is split")->required();
    comp->add_option("-x", x_tok)->required();
    comp->add_option("-y", y_tok)->required();
    comp->add_option("-z", z_tok)->required();
    comp->add_option("--first", first_tok, "Neighbours of z that go to x")->required()->delimiter(',');
    comp->add_option("--second", second_tok, "Neighbours of z that go to y")->required()->delimiter(',');
    comp->callback([&] {
        auto g1 = load(o, g1_file);
        auto g2 = load(o, g2_file);
        VertexSplit s{vertex(g2, z_tok), vertices(g2, first_tok), vertices(g2, second_tok)};
        emit_graphs(o, {compose(g1, vertex(g1, x_tok), vertex(g1, y_tok), g2, s)}, Json::object());
    });

    // gen
    auto * gen = app.add_subcommand("gen", "Generate graphs");
    gen->require_subcommand(1);
    int j = 1, t = 1, steps = 0, n = 0, m = 0;
    bool three = false, all = false;
    std::optional<long long> rho_filter;
    auto * gallai = gen->add_subcommand("gallai", "Chain of j copies of K_k");
    add_k(gallai);
    gallai->add_option("-j", j)->required();
    gallai->callback([&] { emit_graphs(o, {gallai_chain<Graph>(k, j)}, Json{{"kind", "gallai-chain"}, {"k", k}, {"j", j}}); });
    auto * hk = gen->add_subcommand("hkt", "H_{k,t}");
    add_k(hk);
    hk->add_option("-t", t)->required();
    hk->callback([&] { emit_graphs(o, {hkt<Graph>(k, t)}, Json{{"kind", "hkt"}, {"k", k}, {"t", t}}); });
    auto * gk = gen->add_subcommand("gk", "3-connected family by repeated clique insertion");
    add_k(gk);
    gk->add_option("--steps", steps)->required()->check(CLI::NonNegativeNumber);
    gk->add_flag("--all", all, "Print every member, not just the last");
    gk->callback([&] {
        auto fam = gk_family<Graph>(k, steps);
        std::vector<Graph> gs;
        for (std::size_t i = all ? 0 : fam.members.size() - 1; i < fam.members.size(); ++i)
            gs.push_back(fam.members[i].graph);
        emit_graphs(o, gs, Json{{"kind", "gk-iterate"}, {"k", k}, {"steps", steps}, {"u", fam.u}, {"w", fam.w},
                                   {"seed_provenance", k >= 6 ? "H_{k,2}" : "exhaustive search, data/seed_k" + std::to_string(k) + ".el"}});
    });
    auto * tc = gen->add_subcommand("two-clique", "2k-vertex k-critical graph with k^2 - 3 edges");
    add_k(tc);
    tc->callback([&] { emit_graphs(o, {two_clique<Graph>(k)}, Json{{"kind", "two-clique"}, {"k", k}}); });
    auto * search = gen->add_subcommand("search", "All k-critical graphs with n vertices and m edges");
    search->add_option("-k,--k", k)->required();
    search->add_option("-n,--n", n)->required();
    search->add_option("-m,--m", m)->required();
    search->add_flag("--three-connected", three, "Keep only 3-connected graphs");
    search->add_option("--rho", rho_filter, "Keep only graphs with this rho_k(V)");
    search->callback([&] {
        auto r = find_figure_graphs<Graph>({k, n, m, three, rho_filter});
        if (! o.json)
            std::cerr << r.graphs.size() << " graph(s), " << r.stats.seconds << " s\n";
        emit_graphs(o, r.graphs, Json{{"kind", "search"}, {"k", k}, {"n", n}, {"m", m}, {"stats", to_json(r.stats)}});
    });

    // bounds
    auto * bounds = app.add_subcommand("bounds", "Edge-count bounds");
    bounds->require_subcommand(1);
    long long from = 0, to = 0;
    auto * table = bounds->add_subcommand("table", "TSV of F(k,n) and the best known lower bound");
    add_k(table);
    table->add_option("--n-from", from)->required();
    table->add_option("--n-to", to)->required();
    table->callback([&] {
        if (! o.json) {
            std::cout << bound_table_tsv(k, from, to);
            return;
        }
        Json rows = Json::array();
        for (const auto & r : bound_table(k, from, to))
            rows.push_back(Json{{"n", r.n}, {"F", detail::optional_json(r.f)}, {"lower_bound", detail::optional_json(r.lower)},
                    {"gallai", detail::optional_json(r.gallai)}, {"known_exact", detail::optional_json(r.known)}});
        std::cout << Json{{"k", k}, {"rows", rows}}.dump(2) << "\n";
    });
    auto * verify = bounds->add_subcommand("verify", "Check a graph against the bounds");
    add_k(verify);
    add_file(verify);
    verify->callback([&] {
        auto g = load(o, file);
        auto r = verify_graph(g, k);
        std::ostringstream s;
        s << "n=" << r.n << " m=" << r.m << " rho=" << r.rho << " y_k=" << r.y;
        if (r.f_kn)
            s << " F=" << *r.f_kn;
        s << "\ncritical: " << (r.critical ? "yes" : "no") << ", Ore: " << (r.ore ? "yes" : "no");
        if (r.tight)
            s << ", tight";
        s << "\n" << (r.violation() ? "VIOLATION\n" : "consistent with the bounds\n");
        print(o, to_json(r), s.str());
        exit_code = r.violation() ? 1 : 0;
    });
    auto * rec = bounds->add_subcommand("recurrence", "Compose with K_k repeatedly");
    add_k(rec);
    rec->add_option("--steps", steps)->required()->check(CLI::NonNegativeNumber);
    add_file(rec);
    rec->callback([&] {
        auto series = check_ore_recurrence(k, load(o, file), steps);
        std::ostringstream s;
        bool ok = true;
        for (const auto & st : series.steps) {
            s << "n=" << st.n << " m=" << st.m << " +" << st.increment << (st.critical ? "" : " NOT critical") << "\n";
            ok = ok && st.critical && (st.increment == 0 || st.increment == (k + 1) * (k - 2) / 2);
        }
        if (! series.complete)
            s << "stopped: " << series.stopped_by << "\n";
        print(o, to_json(series), s.str());
        exit_code = ok ? 0 : 1;
    });

    // forcing
    auto * force = app.add_subcommand("forcing", "How c-colourings treat a pair of vertices");
    int colours = 0;
    std::string a_tok, b_tok;
    force->add_option("-c", colours)->required();
    force->add_option("-a", a_tok)->required();
    force->add_option("-b", b_tok)->required();
    add_file(force);
    force->callback([&] {
        auto g = load(o, file);
        auto r = forcing_detail(g, colours, vertex(g, a_tok), vertex(g, b_tok));
        print(o, to_json(g, r, o.witness), std::string(forcing_name(r.relation)) + "\n");
    });

    // clusters / standard sets
    auto * clus = app.add_subcommand("clusters", "Clusters of degree k-1 vertices");
    add_k(clus);
    add_file(clus);
    clus->callback([&] {
        auto g = load(o, file);
        Json list = Json::array();
        std::string human;
        for (const auto & c : clusters(g, k)) {
            Json names = Json::array();
            for (int v : c) {
                names.push_back(g.label(v));
                human += g.label(v) + " ";
            }
            list.push_back(names);
            human.back() = '\n';
        }
        print(o, Json{{"clusters", list}}, human);
    });
    auto * standard = app.add_subcommand("standard-sets", "Standard sets (S, x, y)");
    add_k(standard);
    add_file(standard);
    standard->callback([&] {
        auto g = load(o, file);
        Json list = Json::array();
        std::string human;
        for (const auto & s : find_standard_sets(g, k)) {
            Json names = Json::array();
            for (int v : s.set.to_vector())
                names.push_back(g.label(v));
            list.push_back(Json{{"set", names}, {"x", g.label(s.x)}, {"y", g.label(s.y)}});
            human += "x=" + g.label(s.x) + " y=" + g.label(s.y) + " S=" + names.dump() + "\n";
        }
        print(o, Json{{"standard_sets", list}}, human);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError & e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
