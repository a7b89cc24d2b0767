// ferrers-lab: command-line front end for the ferrers_lab headers.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ferrers_lab/conjectures.hpp"
#include "ferrers_lab/io.hpp"
#include "ferrers_lab/report.hpp"
#include "ferrers_lab/resistance.hpp"
#include "ferrers_lab/search.hpp"
#include "ferrers_lab/spectral.hpp"
#include "ferrers_lab/trees.hpp"

namespace fs = std::filesystem;
using namespace ferrers;

namespace {

enum Exit { kOk = 0, kCounterexample = 1, kUsage = 2, kBudget = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string output = "-";
    std::string format = "json";
    std::string emit_dir;
    unsigned jobs = 1;
    bool timing = false;
    SearchBudget budget;

    std::string graph = "-";
    std::string partition;
    std::size_t cols = 0;
    bool enumerate = false;
    bool sigma = false;
    std::optional<std::size_t> k;
    std::string pair, e_pair, f_pair;
    std::size_t max_n = 7;
    std::size_t max_vertices = 10;
    std::string bound;
    bool all = false;
    std::size_t p = 0, q = 0, e = 0;
    std::string degrees;
};

std::pair<std::size_t, std::size_t> parse_pair(const std::string& text, std::size_t n, const char* what) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw UsageError(std::string(what) + ": expected 'i,j'");
    try {
        std::size_t pa = 0, pb = 0;
        const auto a = std::stoul(text.substr(0, comma), &pa);
        const auto b = std::stoul(text.substr(comma + 1), &pb);
        if (pa != comma || pb != text.size() - comma - 1) throw std::invalid_argument("trailing text");
        if (a < 1 || b < 1 || a > n || b > n)
            throw UsageError(std::string(what) + ": vertices must lie in 1.." + std::to_string(n));
        return {a - 1, b - 1};
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception&) {
        throw UsageError(std::string(what) + ": expected 'i,j', got '" + text + "'");
    }
}

Edge parse_edge(const std::string& text, std::size_t n, const char* what) {
    auto [a, b] = parse_pair(text, n, what);
    if (a == b) throw UsageError(std::string(what) + ": endpoints must differ");
    return Edge(a, b);
}

Partition parse_partition(const std::string& text, const char* what) {
    try {
        return Partition::parse(text);
    } catch (const std::exception& ex) {
        throw UsageError(std::string(what) + ": " + ex.what());
    }
}

void write_output(const Options& o, const std::string& text) {
    if (o.output == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(o.output);
    if (!out) throw UsageError("cannot write " + o.output);
    out << text;
}

void emit(const Options& o, const std::string& command, Json payload) {
    auto doc = document(command, std::move(payload));
    write_output(o, o.format == "csv" ? to_csv(doc) : doc.dump(2) + "\n");
}

void emit_graphs(const Options& o, const SearchReport& r) {
    if (o.emit_dir.empty()) return;
    fs::create_directories(o.emit_dir);
    auto dump = [&](const std::vector<GraphRecord>& recs, const std::string& kind) {
        for (std::size_t k = 0; k < recs.size(); ++k) {
            const auto path = fs::path(o.emit_dir) / (kind + "-" + std::to_string(k + 1) + "-" + recs[k].code + ".graph");
            std::ofstream out(path);
            if (!out) throw UsageError("cannot write " + path.string());
            write_graph(out, recs[k].graph);
        }
    };
    dump(r.extremal, "extremal");
    dump(r.counterexamples, "counterexample");
}

AnyGraph load(const Options& o) {
    try {
        return read_graph_file(o.graph);
    } catch (const ParseError& ex) {
        throw UsageError(o.graph + ": " + ex.what());
    } catch (const std::exception& ex) {
        throw UsageError(ex.what());
    }
}

BipartiteGraph load_bipartite(const Options& o) {
    auto g = load(o);
    try {
        return as_bipartite(g);
    } catch (const std::exception& ex) {
        throw UsageError(o.graph + ": " + ex.what());
    }
}

int cmd_gen(const Options& o) {
    const auto lambda = parse_partition(o.partition, "--partition");
    const std::size_t cols = o.cols ? o.cols : static_cast<std::size_t>(lambda.largest());
    if (cols < static_cast<std::size_t>(lambda.largest()))
        throw UsageError("--cols must be at least the largest part");
    if (cols > BipartiteGraph::kMaxColumns) throw UsageError("--cols: at most 64 columns");
    std::ostringstream s;
    write_graph(s, ferrers_from_partition(lambda, cols));
    write_output(o, s.str());
    return kOk;
}

int cmd_trees(const Options& o) {
    const auto any = load(o);
    const Graph g = as_general(any);
    if (g.vcount() == 0) throw UsageError("graph has no vertices");
    Json j;
    j["vertices"] = g.vcount();
    j["edges"] = g.ecount();
    j["connected"] = g.connected();
    j["tau"] = integer_json(tau(g));
    bool good = true;
    std::optional<BipartiteGraph> bg;
    if (g.bipartite()) bg = as_bipartite(any);
    if (bg) {
        const auto tr = tree_report(*bg);
        j["ferrers_invariant"] = rational_json(tr.ferrers_invariant);
        j["ferrers_good"] = tr.ferrers_good;
        j["is_ferrers"] = is_ferrers(*bg);
        good = tr.ferrers_good;
    }
    if (o.enumerate) {
        Json trees = Json::array();
        for (const auto& t : enumerate_spanning_trees(g, o.budget.max_trees)) {
            Json edges = Json::array();
            for (auto k : t) edges.push_back({g.edges()[k].a + 1, g.edges()[k].b + 1});
            trees.push_back(edges);
        }
        j["spanning_trees"] = trees;
    }
    if (o.sigma) {
        if (!bg) throw UsageError("--sigma needs a bipartite graph");
        j["sigma"] = to_json(sigma_bruteforce(*bg, o.budget.max_trees));
        if (is_ferrers(*bg) && bg->connected()) {
            const auto lambda = Partition::from_unsorted(bg->row_degrees());
            const auto staircase = ferrers_from_partition(lambda);
            j["sigma_formula_matches"] =
                sigma_formula(lambda, conjugate(lambda)) == sigma_bruteforce(staircase, o.budget.max_trees);
        }
    }
    emit(o, "trees", j);
    return good ? kOk : kCounterexample;
}

int cmd_spectral(const Options& o) {
    const auto g = load_bipartite(o);
    Json j = to_json(spectrum_report(g));
    bool ok = true;
    const auto sq = sqrt_edge_bound_check(g);
    j["sqrt_edge_bound"] = {{"lambda_max", real_json(sq.lhs)}, {"sqrt_e", real_json(sq.rhs)}, {"tight", sq.tight}};
    if (g.m() > 0 && g.n() > 0) j["density"] = rational_json(bipartite_density(g));
    if (g.connected() && g.vcount() >= 3) {
        const auto c = normalized_product_check(g);
        j["normalized_product"] = {{"product", real_json(c.product)}, {"holds", c.holds}};
        ok = c.holds;
        std::vector<std::size_t> ks;
        if (o.k) ks.push_back(*o.k);
        else
            for (std::size_t k = 1; k <= (g.vcount() - 1) / 2; ++k) ks.push_back(k);
        Json pairs = Json::array();
        for (auto k : ks) {
            try {
                const auto pc = pair_product_check(g, k);
                pairs.push_back({{"k", k}, {"product", real_json(pc.lhs)}, {"at_most_density", pc.sufficient}});
            } catch (const std::out_of_range& ex) {
                throw UsageError(std::string("--k: ") + ex.what());
            }
        }
        j["pair_products"] = pairs;
        j["dense_with_degree_two_cut_vertex"] = dense_cut_vertex_hypothesis(g);
    }
    emit(o, "spectral", j);
    return ok ? kOk : kCounterexample;
}

int cmd_resistance(const Options& o) {
    const Graph g = as_general(load(o));
    auto [i, j] = parse_pair(o.pair, g.vcount(), "--pair");
    if (i == j) throw UsageError("--pair: vertices must differ");
    if (!g.connected()) throw UsageError("graph is not connected");
    const auto r = resistance(g, i, j);
    const auto lap = detail::rational_laplacian(g);
    const auto bordered = bordered_ginverse(lap, 0);
    Json out{{"pair", {i + 1, j + 1}},
             {"resistance", rational_json(r)},
             {"by_minors", rational_json(resistance_by_minors(g, i, j))},
             {"by_bordered_ginverse", rational_json(detail::resistance_from(bordered.matrix, i, j))},
             {"value", real_json(r.get_d())}};
    emit(o, "resistance", out);
    return kOk;
}

int cmd_thm71(const Options& o) {
    const Graph g = as_general(load(o));
    const auto e = parse_edge(o.e_pair, g.vcount(), "--e");
    const auto f = parse_edge(o.f_pair, g.vcount(), "--f");
    EdgePairAnalyzer a(g);
    if (auto why = a.precondition_failure(e, f)) throw UsageError(*why);
    const auto rep = a.check(e, f);
    Json j{{"e", {e.a + 1, e.b + 1}}, {"f", {f.a + 1, f.b + 1}}};
    const Json body = to_json(rep);
    for (auto& [k, v] : body.items()) j[k] = v;
    emit(o, "thm71", j);
    return rep.all_agree ? kOk : kCounterexample;
}

int cmd_thm71_scan(const Options& o) {
    const auto rep = equivalence_scan(o.max_n, o.jobs, o.budget);
    emit(o, "thm71-scan", to_json(rep, o.timing));
    return rep.verified() ? kOk : kCounterexample;
}

int cmd_check(const Options& o) {
    const auto any = load(o);
    const Graph g = as_general(any);
    std::vector<BoundReport> reps;
    const std::string bound = o.all || o.bound.empty() ? "all" : o.bound;
    auto bip = [&] {
        if (!g.bipartite() || g.vcount() == 0) throw UsageError("bound '" + bound + "' needs a bipartite graph");
        return as_bipartite(any);
    };
    if (bound == "all") {
        if (g.bipartite() && g.vcount() >= 2) reps = all_bipartite_checks(bip());
        else {
            reps.push_back(grone_merris_check(g));
            reps.push_back(degree_spectrum_check(g));
        }
    } else if (bound == "bozkurt") {
        auto b = bip();
        if (b.vcount() < 2) throw UsageError("bozkurt needs at least 2 vertices");
        reps.push_back(bozkurt_check(b));
    } else if (bound == "venkataramana") {
        auto b = bip();
        if (b.m() == 0 || b.n() == 0) throw UsageError("venkataramana needs two nonempty parts");
        reps.push_back(venkataramana_check(b));
    } else if (bound == "grone-merris") {
        reps.push_back(grone_merris_check(g));
    } else if (bound == "degree-spectrum") {
        reps.push_back(degree_spectrum_check(g));
    } else if (bound == "eq3") {
        auto b = bip();
        if (b.m() == 0 || b.n() == 0) throw UsageError("eq3 needs two nonempty parts");
        reps.push_back(ferrers_chain_check(b));
    } else {
        throw UsageError("--bound must be one of bozkurt, venkataramana, grone-merris, degree-spectrum, eq3");
    }
    Json arr = Json::array();
    bool ok = true;
    for (const auto& r : reps) {
        arr.push_back(to_json(r));
        ok = ok && r.holds;
    }
    emit(o, "check", {{"reports", arr}});
    return ok ? kOk : kCounterexample;
}

int finish_search(const Options& o, const std::string& command, const SearchReport& r) {
    emit_graphs(o, r);
    emit(o, command, to_json(r, o.timing));
    return r.verified() ? kOk : kCounterexample;
}

int cmd_verify(const Options& o) {
    if (o.max_vertices < 2) throw UsageError("--max-vertices must be at least 2");
    return finish_search(o, "verify-ferrers-bound", verify_ferrers_bound(o.max_vertices, o.jobs, o.budget));
}

int cmd_spectral_search(const Options& o) {
    try {
        (void)ClassSpec::kpqe(o.p, o.q, o.e);
    } catch (const std::invalid_argument& ex) {
        throw UsageError(ex.what());
    }
    return finish_search(o, "spectral-search", spectral_search(o.p, o.q, o.e, o.jobs, o.budget));
}

int cmd_degree_class(const Options& o) {
    const auto d = parse_partition(o.degrees, "--D");
    try {
        (void)ClassSpec::degree_class(d);
    } catch (const std::invalid_argument& ex) {
        throw UsageError(ex.what());
    }
    return finish_search(o, "degree-class", degree_class_max(d, o.jobs, o.budget));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spanning trees, spectra and resistance of bipartite and Ferrers graphs"};
    app.name("ferrers-lab");
    app.require_subcommand(1);
    Options o;
    app.add_option("-o,--output", o.output, "Output file, '-' for standard output");
    app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--emit-graphs", o.emit_dir, "Directory for extremal and counterexample graphs");
    app.add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
    app.add_flag("--timing", o.timing, "Include elapsed time in search reports");

    auto graph_opt = [&](CLI::App* s) { s->add_option("--graph", o.graph, "Graph file, '-' for standard input"); };

    auto* gen = app.add_subcommand("gen", "Write the Ferrers graph of a partition");
    gen->add_option("--partition", o.partition, "Row lengths, e.g. 3,3,2,1")->required();
    gen->add_option("--cols", o.cols, "Column count (default: largest part)");

    auto* trees = app.add_subcommand("trees", "Spanning-tree count and Ferrers invariant");
    graph_opt(trees);
    trees->add_flag("--enumerate", o.enumerate, "List every spanning tree");
    trees->add_flag("--sigma", o.sigma, "Weighted tree polynomial");

    auto* spectral = app.add_subcommand("spectral", "Adjacency, Laplacian and normalized spectra");
    graph_opt(spectral);
    spectral->add_option("--k", o.k, "Pair-product depth (default: all)")->check(CLI::PositiveNumber);

    auto* resist = app.add_subcommand("resistance", "Exact resistance distance");
    graph_opt(resist);
    resist->add_option("--pair", o.pair, "Vertices i,j (1-based)")->required();

    auto* thm71 = app.add_subcommand("thm71", "Eleven edge-pair conditions for disjoint edges e, f");
    graph_opt(thm71);
    thm71->add_option("--e", o.e_pair, "Edge i,j")->required();
    thm71->add_option("--f", o.f_pair, "Edge k,l")->required();

    auto* scan = app.add_subcommand("thm71-scan", "Edge-pair conditions over all small connected graphs");
    scan->add_option("--max-n", o.max_n, "Largest vertex count")->check(CLI::Range(1, 8));

    auto* check = app.add_subcommand("check", "Bound checks on one graph");
    graph_opt(check);
    check->add_flag("--all", o.all, "Every applicable bound (default)");
    check->add_option("--bound", o.bound, "bozkurt, venkataramana, grone-merris, degree-spectrum or eq3");

    auto* verify = app.add_subcommand("verify-ferrers-bound", "tau <= F over all connected bipartite graphs");
    verify->add_option("--max-vertices", o.max_vertices, "Largest vertex count")->required();

    auto* ss = app.add_subcommand("spectral-search", "Spectral-radius maximizers over K(p,q,e)");
    ss->add_option("--p", o.p, "Rows")->required();
    ss->add_option("--q", o.q, "Columns")->required();
    ss->add_option("--e", o.e, "Edges")->required();

    auto* dc = app.add_subcommand("degree-class", "Spectral-radius maximizers with fixed row degrees");
    dc->add_option("--D", o.degrees, "Row degrees, e.g. 3,3,2,1")->required();

    for (auto* s : app.get_subcommands({})) s->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& ex) {
        return app.exit(ex);
    } catch (const CLI::CallForAllHelp& ex) {
        return app.exit(ex);
    } catch (const CLI::ParseError& ex) {
        app.exit(ex);
        return kUsage;
    }

    try {
        if (const char* env = std::getenv("FERRERS_LAB_BUDGET")) o.budget = parse_budget(env, o.budget);
    } catch (const std::invalid_argument& ex) {
        std::cerr << "ferrers-lab: FERRERS_LAB_BUDGET: " << ex.what() << "\n";
        return kUsage;
    }

    try {
        if (*gen) return cmd_gen(o);
        if (*trees) return cmd_trees(o);
        if (*spectral) return cmd_spectral(o);
        if (*resist) return cmd_resistance(o);
        if (*thm71) return cmd_thm71(o);
        if (*scan) return cmd_thm71_scan(o);
        if (*check) return cmd_check(o);
        if (*verify) return cmd_verify(o);
        if (*ss) return cmd_spectral_search(o);
        if (*dc) return cmd_degree_class(o);
    } catch (const BudgetExceeded& ex) {
        std::cerr << "ferrers-lab: budget exceeded: " << ex.what() << " (completed " << ex.progress() << ")\n";
        return kBudget;
    } catch (const UsageError& ex) {
        std::cerr << "ferrers-lab: " << ex.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "ferrers-lab: " << ex.what() << "\n";
        return kUsage;
    } catch (const std::domain_error& ex) {
        std::cerr << "ferrers-lab: " << ex.what() << "\n";
        return kUsage;
    } catch (const std::exception& ex) {
        std::cerr << "ferrers-lab: error: " << ex.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
