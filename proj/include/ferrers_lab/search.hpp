#pragma once

// Exhaustive searches over bipartite graph classes: the Ferrers bound scan,
// spectral-radius maximization over fixed (p, q, e) and over fixed row
// degrees, and the edge-pair equivalence scan over small connected graphs.

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "ferrers_lab/canonical.hpp"
#include "ferrers_lab/graphs.hpp"
#include "ferrers_lab/partitions.hpp"
#include "ferrers_lab/resistance.hpp"
#include "ferrers_lab/spectral.hpp"
#include "ferrers_lab/trees.hpp"

namespace ferrers {

/// Limits that keep a run at desk scale; see parse_budget for overrides.
struct SearchBudget {
    std::size_t max_vertices = 10;
    std::size_t max_pq = 24;
    std::size_t max_general_vertices = 7;
    std::uint64_t max_classes = 5'000'000;
    std::uint64_t max_trees = kDefaultTreeBudget;
};

namespace detail {
inline std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string_view::npos) return {};
    return s.substr(first, s.find_last_not_of(" \t") - first + 1);
}
}  // namespace detail

/// Applies "key=value,key=value" overrides. Keys: max_vertices, max_pq,
/// max_general_vertices, max_classes, max_trees. Values must be positive.
inline SearchBudget parse_budget(std::string_view text, SearchBudget b = {}) {
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto end = text.find(',', pos);
        if (end == std::string_view::npos) end = text.size();
        const auto item = detail::trim(text.substr(pos, end - pos));
        pos = end + 1;
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) throw std::invalid_argument("budget: expected key=value, got '" + std::string(item) + "'");
        const std::string key(detail::trim(item.substr(0, eq))), val(detail::trim(item.substr(eq + 1)));
        std::uint64_t v = 0;
        const auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), v);
        if (ec != std::errc{} || ptr != val.data() + val.size() || v == 0)
            throw std::invalid_argument("budget: '" + key + "' needs a positive integer, got '" + val + "'");
        if (key == "max_vertices") b.max_vertices = v;
        else if (key == "max_pq") b.max_pq = v;
        else if (key == "max_general_vertices") b.max_general_vertices = v;
        else if (key == "max_classes") b.max_classes = v;
        else if (key == "max_trees") b.max_trees = v;
        else throw std::invalid_argument("budget: unknown key '" + key + "'");
    }
    return b;
}

enum class ClassKind { kpqe, degree_class, all_connected_bipartite };

struct ClassSpec {
    ClassKind kind = ClassKind::all_connected_bipartite;
    std::size_t p = 0, q = 0, e = 0;
    std::optional<Partition> degrees;
    std::size_t max_vertices = 0;
    bool no_isolated = true;
    bool exclude_complete = false;

    /// Subgraphs of K_{p,q} with e edges, no isolated vertices, not complete.
    static ClassSpec kpqe(std::size_t p, std::size_t q, std::size_t e) {
        if (p < 2 || p > q) throw std::invalid_argument("kpqe: need 2 <= p <= q");
        if (e <= 1 || e >= p * q) throw std::invalid_argument("kpqe: need 1 < e < pq");
        if (p > kMaxCanonicalRows || q > 63) throw std::invalid_argument("kpqe: at most 12 rows and 63 columns");
        ClassSpec s;
        s.kind = ClassKind::kpqe;
        s.p = p;
        s.q = q;
        s.e = e;
        s.exclude_complete = true;
        return s;
    }

    /// Row part with the given degrees, no isolated vertices, any number of columns.
    static ClassSpec degree_class(const Partition& d) {
        if (d.empty()) throw std::invalid_argument("degree_class: empty degree sequence");
        if (d.length() > kMaxCanonicalRows) throw std::invalid_argument("degree_class: at most 12 rows");
        if (d.sum() > 63) throw std::invalid_argument("degree_class: degree sum above 63");
        ClassSpec s;
        s.kind = ClassKind::degree_class;
        s.degrees = d;
        return s;
    }

    /// Connected bipartite graphs on 2..max_vertices vertices.
    static ClassSpec all_connected(std::size_t max_vertices) {
        if (max_vertices < 2) throw std::invalid_argument("all_connected_bipartite: need at least 2 vertices");
        if (max_vertices > 2 * kMaxCanonicalRows) throw std::invalid_argument("all_connected_bipartite: too many vertices");
        ClassSpec s;
        s.kind = ClassKind::all_connected_bipartite;
        s.max_vertices = max_vertices;
        return s;
    }

    std::string describe() const {
        switch (kind) {
            case ClassKind::kpqe:
                return "kpqe(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(e) + ")";
            case ClassKind::degree_class: return "degree_class(" + degrees->to_string() + ")";
            case ClassKind::all_connected_bipartite:
                return "all_connected_bipartite(" + std::to_string(max_vertices) + ")";
        }
        return {};
    }

    /// The (rows, columns, parts swappable, generation constraints) blocks
    /// that make up the class, in code order.
    std::vector<GenerationSpec> blocks() const {
        std::vector<GenerationSpec> out;
        switch (kind) {
            case ClassKind::kpqe: {
                GenerationSpec g;
                g.m = p;
                g.n = q;
                g.allow_swap = p == q;
                g.edges = e;
                g.no_isolated = no_isolated;
                out.push_back(g);
                break;
            }
            case ClassKind::degree_class: {
                const auto total = static_cast<std::size_t>(degrees->sum());
                for (auto n = static_cast<std::size_t>(degrees->largest()); n <= total; ++n) {
                    GenerationSpec g;
                    g.m = degrees->length();
                    g.n = n;
                    g.row_degrees = degrees->parts();
                    g.no_isolated = no_isolated;
                    out.push_back(g);
                }
                break;
            }
            case ClassKind::all_connected_bipartite:
                for (std::size_t m = 1; 2 * m <= max_vertices; ++m)
                    for (std::size_t n = m; m + n <= max_vertices; ++n) {
                        GenerationSpec g;
                        g.m = m;
                        g.n = n;
                        g.allow_swap = m == n;
                        g.no_isolated = true;
                        out.push_back(g);
                    }
                break;
        }
        return out;
    }

    bool admits(const BipartiteGraph& g) const {
        if (kind == ClassKind::all_connected_bipartite && !g.connected()) return false;
        if (exclude_complete && g.complete()) return false;
        return true;
    }
};

/// Runs `fn` on every member of the class, sharded by first row over `jobs`
/// threads. Results come back in canonical-code order regardless of `jobs`.
/// `fn` must be safe to call concurrently.
template <typename Result, typename Fn>
std::vector<Result> map_class(const ClassSpec& spec, Fn fn, unsigned jobs = 1,
                              std::uint64_t max_classes = SearchBudget{}.max_classes) {
    if (jobs == 0) throw std::invalid_argument("map_class: jobs must be positive");
    std::vector<Result> out;
    std::atomic<std::uint64_t> members{0};
    std::atomic<bool> over{false};
    for (const auto& block : spec.blocks()) {
        const auto shards = first_row_shards(block.n);
        std::vector<std::vector<Result>> parts(shards.size());
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mu;
        auto worker = [&] {
            try {
                for (std::size_t s; !over && (s = next++) < shards.size();) {
                    generate_classes(
                        block,
                        [&](const BipartiteGraph& g) {
                            if (!spec.admits(g)) return true;
                            if (++members > max_classes) {
                                over = true;
                                return false;
                            }
                            parts[s].push_back(fn(g));
                            return true;
                        },
                        {shards[s]});
                }
            } catch (...) {
                std::lock_guard lock(failure_mu);
                if (!failure) failure = std::current_exception();
                over = true;
            }
        };
        if (jobs == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
            for (auto& t : pool) t.join();
        }
        if (failure) std::rethrow_exception(failure);
        if (over)
            throw BudgetExceeded(spec.describe() + ": more than " + std::to_string(max_classes) + " classes",
                                 std::min<std::uint64_t>(members, max_classes));
        for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(out));
    }
    return out;
}

/// One representative per isomorphism class, in increasing code order.
inline std::vector<BipartiteGraph> enumerate_class(const ClassSpec& spec, unsigned jobs = 1,
                                                   std::uint64_t max_classes = SearchBudget{}.max_classes) {
    return map_class<BipartiteGraph>(spec, [](const BipartiteGraph& g) { return g; }, jobs, max_classes);
}

/// Whether the parts may be exchanged when comparing members of the class.
inline bool class_swaps_parts(const ClassSpec& spec, const BipartiteGraph& g) {
    return spec.kind != ClassKind::degree_class && g.m() == g.n();
}

struct GraphRecord {
    BipartiteGraph graph;
    std::string code;  // hex canonical code
    std::optional<double> value;
    std::optional<BigInt> tau;
    std::optional<BigRational> ferrers_invariant;
    bool ferrers = false;
    /// Removing some single vertex leaves a complete bipartite graph.
    std::optional<bool> complete_plus_vertex;
    std::string reason;
};

struct SearchReport {
    std::string class_name;
    std::string checked_property;
    std::uint64_t examined = 0;
    std::optional<double> optimum;
    std::vector<GraphRecord> extremal;
    std::vector<GraphRecord> counterexamples;
    std::vector<GraphRecord> ranking;
    std::vector<std::string> notes;
    double elapsed_seconds = 0.0;

    bool verified() const noexcept { return counterexamples.empty(); }
};

/// Some vertex whose removal leaves a complete bipartite graph with both
/// parts nonempty.
inline bool is_complete_plus_vertex(const BipartiteGraph& g) {
    auto complete_without = [&](std::optional<std::size_t> row, std::optional<std::size_t> col) {
        const std::size_t m = g.m() - (row ? 1 : 0), n = g.n() - (col ? 1 : 0);
        if (m == 0 || n == 0) return false;
        std::uint64_t cols = low_mask(g.n());
        if (col) cols &= ~(std::uint64_t{1} << *col);
        for (std::size_t i = 0; i < g.m(); ++i)
            if (i != row && (g.row(i) & cols) != cols) return false;
        return true;
    };
    for (std::size_t i = 0; i < g.m(); ++i)
        if (complete_without(i, std::nullopt)) return true;
    for (std::size_t j = 0; j < g.n(); ++j)
        if (complete_without(std::nullopt, j)) return true;
    return false;
}

namespace detail {

using Clock = std::chrono::steady_clock;

inline double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

inline GraphRecord make_record(const ClassSpec& spec, const BipartiteGraph& g) {
    GraphRecord r;
    r.graph = g;
    r.code = to_hex(canonical_code(g, class_swaps_parts(spec, g)));
    r.ferrers = is_ferrers(g);
    return r;
}

}  // namespace detail

/// τ(G) ≤ F(G) over every connected bipartite graph on at most
/// `max_vertices` vertices. Extremal records are the graphs with τ = F.
inline SearchReport verify_ferrers_bound(std::size_t max_vertices, unsigned jobs = 1,
                                         const SearchBudget& budget = {}) {
    if (max_vertices > budget.max_vertices)
        throw BudgetExceeded("verify_ferrers_bound: " + std::to_string(max_vertices) +
                                 " vertices exceeds the budget of " + std::to_string(budget.max_vertices),
                             0);
    const auto t0 = detail::Clock::now();
    const auto spec = ClassSpec::all_connected(max_vertices);
    struct Row {
        GraphRecord rec;
        bool good;
        bool equal;
    };
    auto rows = map_class<Row>(
        spec,
        [&](const BipartiteGraph& g) {
            auto rec = detail::make_record(spec, g);
            const auto tr = tree_report(g);
            rec.tau = tr.tau;
            rec.ferrers_invariant = tr.ferrers_invariant;
            return Row{std::move(rec), tr.ferrers_good, BigRational(tr.tau) == tr.ferrers_invariant};
        },
        jobs, budget.max_classes);

    SearchReport rep;
    rep.class_name = spec.describe();
    rep.checked_property = "tau <= ferrers_invariant";
    rep.examined = rows.size();
    std::size_t ferrers_count = 0, equal_non_ferrers = 0;
    for (auto& row : rows) {
        if (row.rec.ferrers) ++ferrers_count;
        if (!row.good) {
            row.rec.reason = "tau exceeds the Ferrers invariant";
            rep.counterexamples.push_back(row.rec);
        } else if (row.rec.ferrers && !row.equal) {
            row.rec.reason = "Ferrers graph with tau != ferrers_invariant";
            rep.counterexamples.push_back(row.rec);
        }
        if (row.equal) {
            if (!row.rec.ferrers) {
                ++equal_non_ferrers;
                row.rec.reason = "equality attained by a non-Ferrers graph";
            }
            rep.extremal.push_back(std::move(row.rec));
        }
    }
    rep.notes.push_back(std::to_string(ferrers_count) + " Ferrers graphs, all with tau = ferrers_invariant" +
                        (rep.counterexamples.empty() ? "" : " except those listed"));
    rep.notes.push_back(std::to_string(equal_non_ferrers) + " non-Ferrers graphs attain equality");
    rep.elapsed_seconds = detail::seconds_since(t0);
    return rep;
}

inline constexpr std::size_t kRankingSize = 10;

namespace detail {

struct Scored {
    BipartiteGraph graph;
    double value;
};

/// Maximizers (within the spectral tolerance) and the top of the ranking.
inline void fill_maximizers(SearchReport& rep, const ClassSpec& spec, std::vector<Scored> scored) {
    rep.examined = scored.size();
    if (scored.empty()) return;
    double best = scored.front().value;
    for (const auto& s : scored) best = std::max(best, s.value);
    rep.optimum = best;
    std::stable_sort(scored.begin(), scored.end(),
                     [](const Scored& a, const Scored& b) { return a.value > b.value; });
    for (std::size_t k = 0; k < scored.size(); ++k) {
        const bool is_max = scored[k].value >= best - kSpectralTolerance;
        if (!is_max && k >= kRankingSize) break;
        auto rec = make_record(spec, scored[k].graph);
        rec.value = scored[k].value;
        rec.complete_plus_vertex = is_complete_plus_vertex(scored[k].graph);
        if (k < kRankingSize) rep.ranking.push_back(rec);
        if (is_max) rep.extremal.push_back(std::move(rec));
    }
}

inline std::vector<Scored> score_class(const ClassSpec& spec, unsigned jobs, std::uint64_t max_classes) {
    return map_class<Scored>(
        spec, [](const BipartiteGraph& g) { return Scored{g, spectral_radius(g)}; }, jobs, max_classes);
}

}  // namespace detail

/// Maximizes the adjacency spectral radius over subgraphs of K_{p,q} with e
/// edges. Every maximizer must be a Ferrers graph; any that is not is a
/// counterexample.
inline SearchReport spectral_search(std::size_t p, std::size_t q, std::size_t e, unsigned jobs = 1,
                                    const SearchBudget& budget = {}) {
    const auto spec = ClassSpec::kpqe(p, q, e);
    if (p * q > budget.max_pq)
        throw BudgetExceeded("spectral_search: pq = " + std::to_string(p * q) + " exceeds the budget of " +
                                 std::to_string(budget.max_pq),
                             0);
    const auto t0 = detail::Clock::now();
    SearchReport rep;
    rep.class_name = spec.describe();
    rep.checked_property = "every spectral-radius maximizer is a Ferrers graph";
    detail::fill_maximizers(rep, spec, detail::score_class(spec, jobs, budget.max_classes));
    std::size_t shaped = 0;
    for (const auto& rec : rep.extremal) {
        if (!rec.ferrers) {
            auto bad = rec;
            bad.reason = "maximizer is not a Ferrers graph";
            rep.counterexamples.push_back(std::move(bad));
        }
        if (rec.value && *rec.value >= std::sqrt(static_cast<double>(e)) - kSpectralTolerance)
            rep.notes.push_back("maximizer " + rec.code + " meets sqrt(e), which only complete graphs may");
        if (*rec.complete_plus_vertex) ++shaped;
    }
    rep.notes.push_back(std::to_string(rep.extremal.size()) + " maximizer(s), " + std::to_string(shaped) +
                        " of them a complete bipartite graph plus one vertex");
    rep.elapsed_seconds = detail::seconds_since(t0);
    return rep;
}

/// Maximizes the spectral radius over graphs whose row part has degrees `d`.
/// The Ferrers graph with these row lengths must be among the maximizers.
inline SearchReport degree_class_max(const Partition& d, unsigned jobs = 1, const SearchBudget& budget = {}) {
    const auto spec = ClassSpec::degree_class(d);
    const auto t0 = detail::Clock::now();
    SearchReport rep;
    rep.class_name = spec.describe();
    rep.checked_property = "the Ferrers graph with these row degrees attains the maximum";
    detail::fill_maximizers(rep, spec, detail::score_class(spec, jobs, budget.max_classes));
    const auto ferrers_graph = ferrers_from_partition(d);
    const auto target = to_hex(canonical_code(ferrers_graph, false));
    const double target_value = spectral_radius(ferrers_graph);
    const bool attains = std::any_of(rep.extremal.begin(), rep.extremal.end(),
                                     [&](const GraphRecord& r) { return r.code == target; });
    if (!attains) {
        auto rec = detail::make_record(spec, ferrers_graph);
        rec.value = target_value;
        rec.reason = "Ferrers graph does not attain the maximum";
        rep.counterexamples.push_back(std::move(rec));
    }
    rep.notes.push_back("Ferrers graph " + target + " has spectral radius within tolerance of the maximum: " +
                        (attains ? "yes" : "no"));
    rep.elapsed_seconds = detail::seconds_since(t0);
    return rep;
}

// ---------------------------------------------------------------------------
// Small connected graphs (not necessarily bipartite)

inline constexpr std::size_t kMaxGeneralVertices = 8;

namespace detail {

/// Upper-triangle bit string of g relabelled by `order` (order[k] is the
/// vertex placed at position k).
inline std::uint64_t relabelled_code(const std::vector<std::uint8_t>& adj, const std::vector<std::size_t>& order) {
    std::uint64_t code = 0;
    const std::size_t n = order.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) code = (code << 1) | ((adj[order[a]] >> order[b]) & 1u);
    return code;
}

/// Canonical code of a small graph: the least upper-triangle code over all
/// labellings listing vertices by nonincreasing degree.
inline std::uint64_t small_graph_code(const std::vector<std::uint8_t>& adj) {
    const std::size_t n = adj.size();
    std::vector<std::size_t> order(n);
    for (std::size_t v = 0; v < n; ++v) order[v] = v;
    auto deg = [&](std::size_t v) { return std::popcount(static_cast<unsigned>(adj[v])); };
    std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return deg(x) > deg(y); });
    std::vector<std::pair<std::size_t, std::size_t>> groups;
    for (std::size_t s = 0; s < n;) {
        std::size_t t = s;
        while (t < n && deg(order[t]) == deg(order[s])) ++t;
        groups.emplace_back(s, t);
        s = t;
    }
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    auto rec = [&](auto&& self, std::size_t gi) -> void {
        if (gi == groups.size()) {
            best = std::min(best, relabelled_code(adj, order));
            return;
        }
        auto [s, t] = groups[gi];
        std::sort(order.begin() + static_cast<std::ptrdiff_t>(s), order.begin() + static_cast<std::ptrdiff_t>(t));
        do self(self, gi + 1);
        while (std::next_permutation(order.begin() + static_cast<std::ptrdiff_t>(s),
                                     order.begin() + static_cast<std::ptrdiff_t>(t)));
    };
    rec(rec, 0);
    return best;
}

inline std::vector<std::uint8_t> decode_small_graph(std::uint64_t code, std::size_t n) {
    std::vector<std::uint8_t> adj(n, 0);
    std::size_t bit = n * (n - 1) / 2;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if ((code >> --bit) & 1u) {
                adj[a] |= static_cast<std::uint8_t>(1u << b);
                adj[b] |= static_cast<std::uint8_t>(1u << a);
            }
    return adj;
}

}  // namespace detail

/// Every connected graph on 1..max_n vertices up to isomorphism, ordered by
/// vertex count and then canonical code.
inline std::vector<Graph> connected_graphs(std::size_t max_n) {
    if (max_n > kMaxGeneralVertices)
        throw std::invalid_argument("connected_graphs: at most " + std::to_string(kMaxGeneralVertices) + " vertices");
    std::vector<Graph> out;
    if (max_n == 0) return out;
    std::set<std::uint64_t> level{0};
    for (std::size_t n = 1;; ++n) {
        for (auto code : level) {
            const auto adj = detail::decode_small_graph(code, n);
            Graph g(n);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = a + 1; b < n; ++b)
                    if ((adj[a] >> b) & 1u) g.add_edge(a, b);
            out.push_back(std::move(g));
        }
        if (n == max_n) break;
        // Every connected graph has a vertex whose removal keeps it connected,
        // so adding a vertex to each smaller connected graph reaches them all.
        std::set<std::uint64_t> next;
        for (auto code : level) {
            auto adj = detail::decode_small_graph(code, n);
            adj.push_back(0);
            for (unsigned s = 1; s < (1u << n); ++s) {
                auto ext = adj;
                ext[n] = static_cast<std::uint8_t>(s);
                for (std::size_t v = 0; v < n; ++v)
                    if ((s >> v) & 1u) ext[v] |= static_cast<std::uint8_t>(1u << n);
                next.insert(detail::small_graph_code(ext));
            }
        }
        level = std::move(next);
    }
    return out;
}

struct EquivalenceScanReport {
    std::size_t max_n = 0;
    std::uint64_t graphs = 0;
    std::uint64_t instances = 0;
    std::uint64_t all_true = 0;
    std::uint64_t all_false = 0;
    std::uint64_t monotonicity_checks = 0;
    struct Disagreement {
        Graph graph;
        Edge e, f;
        EquivalenceReport report;
    };
    std::vector<Disagreement> disagreements;
    /// Resistance decreased after deleting a non-cut edge.
    std::vector<std::string> monotonicity_failures;
    double elapsed_seconds = 0.0;

    bool verified() const noexcept { return disagreements.empty() && monotonicity_failures.empty(); }
};

/// The eleven edge-pair conditions on every connected graph with at most
/// `max_n` vertices and every admissible disjoint edge pair, plus resistance
/// monotonicity under deletion of every non-cut edge.
inline EquivalenceScanReport equivalence_scan(std::size_t max_n, unsigned jobs = 1,
                                              const SearchBudget& budget = {}) {
    if (max_n > budget.max_general_vertices)
        throw BudgetExceeded("equivalence_scan: " + std::to_string(max_n) + " vertices exceeds the budget of " +
                                 std::to_string(budget.max_general_vertices),
                             0);
    if (jobs == 0) throw std::invalid_argument("equivalence_scan: jobs must be positive");
    const auto t0 = detail::Clock::now();
    const auto graphs = connected_graphs(max_n);
    std::vector<EquivalenceScanReport> partial(graphs.size());
    std::atomic<std::size_t> next{0};
    auto work = [&](std::size_t idx) {
        auto& rep = partial[idx];
        const Graph& g = graphs[idx];
        rep.graphs = 1;
        if (g.vcount() < 2) return;
        const auto& edges = g.edges();
        std::vector<bool> bridge(edges.size());
        for (std::size_t k = 0; k < edges.size(); ++k) bridge[k] = g.is_cut_edge(edges[k]);

        const auto lap = detail::rational_laplacian(g);
        const auto mp = moore_penrose_laplacian(lap).matrix;
        for (std::size_t k = 0; k < edges.size(); ++k) {
            if (bridge[k]) continue;
            const auto mp_f = moore_penrose_laplacian(detail::rational_laplacian(g.without_edge(edges[k]))).matrix;
            for (std::size_t a = 0; a < g.vcount(); ++a)
                for (std::size_t b = a + 1; b < g.vcount(); ++b) {
                    ++rep.monotonicity_checks;
                    if (detail::resistance_from(mp_f, a, b) < detail::resistance_from(mp, a, b))
                        rep.monotonicity_failures.push_back("n=" + std::to_string(g.vcount()) + " edges " +
                                                            std::to_string(edges.size()) + ": pair " +
                                                            std::to_string(a + 1) + "," + std::to_string(b + 1));
                }
        }

        if (g.vcount() < 4) return;
        EdgePairAnalyzer analyzer(g);
        for (std::size_t x = 0; x < edges.size(); ++x)
            for (std::size_t y = x + 1; y < edges.size(); ++y) {
                if (bridge[x] || bridge[y] || edges[x].shares_vertex(edges[y])) continue;
                auto r = analyzer.check(edges[x], edges[y]);
                ++rep.instances;
                if (!r.all_agree) rep.disagreements.push_back({g, edges[x], edges[y], std::move(r)});
                else if (r.conditions[0]) ++rep.all_true;
                else ++rep.all_false;
            }
    };
    std::exception_ptr failure;
    std::mutex mu;
    auto worker = [&] {
        try {
            for (std::size_t i; (i = next++) < graphs.size();) work(i);
        } catch (...) {
            std::lock_guard lock(mu);
            if (!failure) failure = std::current_exception();
            next = graphs.size();
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    EquivalenceScanReport out;
    out.max_n = max_n;
    for (auto& p : partial) {
        out.graphs += p.graphs;
        out.instances += p.instances;
        out.all_true += p.all_true;
        out.all_false += p.all_false;
        out.monotonicity_checks += p.monotonicity_checks;
        std::move(p.disagreements.begin(), p.disagreements.end(), std::back_inserter(out.disagreements));
        std::move(p.monotonicity_failures.begin(), p.monotonicity_failures.end(),
                  std::back_inserter(out.monotonicity_failures));
    }
    out.elapsed_seconds = detail::seconds_since(t0);
    return out;
}

}  // namespace ferrers
