#pragma once

// Plain-text graph files.
//
//   # comment
//   bipartite 4 3
//   e 1 1          u_1 ~ v_1 (the leading "e" is optional)
//   ...
//
//   general 5
//   1 2
//   ...
//
// Indices are 1-based. Blank lines and text after '#' are ignored.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ferrers_lab/graphs.hpp"

namespace ferrers {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

using AnyGraph = std::variant<BipartiteGraph, Graph>;

namespace detail {

inline std::vector<std::string> tokens(const std::string& line) {
    std::istringstream in(line.substr(0, line.find('#')));
    std::vector<std::string> out;
    for (std::string t; in >> t;) out.push_back(t);
    return out;
}

inline std::size_t parse_index(const std::string& tok, std::size_t line, std::size_t limit, const char* what) {
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError(line, std::string("expected ") + what + ", got '" + tok + "'");
    }
    if (pos != tok.size()) throw ParseError(line, std::string("expected ") + what + ", got '" + tok + "'");
    if (v < 1 || static_cast<unsigned long long>(v) > limit)
        throw ParseError(line, std::string(what) + " " + tok + " out of range 1.." + std::to_string(limit));
    return static_cast<std::size_t>(v - 1);
}

}  // namespace detail

inline AnyGraph read_graph(std::istream& in) {
    std::string text;
    std::size_t lineno = 0;
    std::optional<AnyGraph> g;
    while (std::getline(in, text)) {
        ++lineno;
        const auto tok = detail::tokens(text);
        if (tok.empty()) continue;
        if (!g) {
            if (tok[0] == "bipartite") {
                if (tok.size() != 3) throw ParseError(lineno, "header must read 'bipartite m n'");
                const auto m = detail::parse_index(tok[1], lineno, 4096, "row count") + 1;
                const auto n = detail::parse_index(tok[2], lineno, BipartiteGraph::kMaxColumns, "column count") + 1;
                g = BipartiteGraph(m, n);
            } else if (tok[0] == "general") {
                if (tok.size() != 2) throw ParseError(lineno, "header must read 'general n'");
                g = Graph(detail::parse_index(tok[1], lineno, 1u << 16, "vertex count") + 1);
            } else {
                throw ParseError(lineno, "expected 'bipartite m n' or 'general n', got '" + tok[0] + "'");
            }
            continue;
        }
        std::size_t first = 0;
        if (tok[0] == "e") first = 1;
        if (tok.size() != first + 2) throw ParseError(lineno, "expected an edge 'i j'");
        if (auto* b = std::get_if<BipartiteGraph>(&*g)) {
            const auto i = detail::parse_index(tok[first], lineno, b->m(), "row vertex");
            const auto j = detail::parse_index(tok[first + 1], lineno, b->n(), "column vertex");
            if (b->has_edge(i, j)) throw ParseError(lineno, "duplicate edge");
            b->add_edge(i, j);
        } else {
            auto& h = std::get<Graph>(*g);
            const auto i = detail::parse_index(tok[first], lineno, h.vcount(), "vertex");
            const auto j = detail::parse_index(tok[first + 1], lineno, h.vcount(), "vertex");
            if (i == j) throw ParseError(lineno, "loops are not allowed");
            if (h.has_edge(i, j)) throw ParseError(lineno, "duplicate edge");
            h.add_edge(i, j);
        }
    }
    if (!g) throw ParseError(lineno == 0 ? 1 : lineno, "missing header");
    return *g;
}

inline AnyGraph read_graph_file(const std::string& path) {
    if (path == "-") return read_graph(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_graph(in);
}

inline void write_graph(std::ostream& out, const BipartiteGraph& g) {
    out << "bipartite " << g.m() << ' ' << g.n() << '\n';
    for (std::size_t i = 0; i < g.m(); ++i)
        for (std::size_t j = 0; j < g.n(); ++j)
            if (g.has_edge(i, j)) out << "e " << i + 1 << ' ' << j + 1 << '\n';
}

inline void write_graph(std::ostream& out, const Graph& g) {
    out << "general " << g.vcount() << '\n';
    for (const auto& e : g.edges()) out << e.a + 1 << ' ' << e.b + 1 << '\n';
}

inline void write_graph(std::ostream& out, const AnyGraph& g) {
    std::visit([&](const auto& x) { write_graph(out, x); }, g);
}

inline std::string graph_text(const AnyGraph& g) {
    std::ostringstream s;
    write_graph(s, g);
    return s.str();
}

/// The general graph underneath either kind (bipartite: rows first).
inline Graph as_general(const AnyGraph& g) {
    if (auto* b = std::get_if<BipartiteGraph>(&g)) return b->to_graph();
    return std::get<Graph>(g);
}

/// A bipartite view: bipartite files as given; general files through a
/// two-colouring of a connected graph, rows being the side of vertex 1.
inline BipartiteGraph as_bipartite(const AnyGraph& g) {
    if (auto* b = std::get_if<BipartiteGraph>(&g)) return *b;
    const auto& h = std::get<Graph>(g);
    const auto colour = h.two_colouring();
    if (h.vcount() == 0 || colour.empty()) throw std::invalid_argument("graph is not bipartite");
    std::vector<std::size_t> index(h.vcount());
    std::size_t m = 0, n = 0;
    for (std::size_t v = 0; v < h.vcount(); ++v) index[v] = colour[v] == 0 ? m++ : n++;
    if (n > BipartiteGraph::kMaxColumns) throw std::invalid_argument("graph has too many column vertices");
    BipartiteGraph b(m, n);
    for (const auto& e : h.edges()) {
        const auto u = colour[e.a] == 0 ? e.a : e.b, v = colour[e.a] == 0 ? e.b : e.a;
        b.add_edge(index[u], index[v]);
    }
    return b;
}

}  // namespace ferrers
