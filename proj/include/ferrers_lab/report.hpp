#pragma once

// JSON and CSV renderings of the library's result types. Rationals are
// written as "p/q" strings, big integers as decimal strings and floats with
// at most 12 significant digits, so identical runs give identical bytes.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "json.hpp"

#include "ferrers_lab/conjectures.hpp"
#include "ferrers_lab/resistance.hpp"
#include "ferrers_lab/search.hpp"
#include "ferrers_lab/spectral.hpp"
#include "ferrers_lab/trees.hpp"

namespace ferrers {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Rounded to 12 significant digits; non-finite values become null.
inline Json real_json(double x) {
    if (!std::isfinite(x)) return nullptr;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    double r = std::strtod(buf, nullptr);
    return r == 0.0 ? 0.0 : r;  // drop the sign of -0
}

inline Json real_json(const std::vector<double>& xs) {
    Json a = Json::array();
    for (double x : xs) a.push_back(real_json(x));
    return a;
}

inline Json rational_json(const BigRational& q) { return to_string(q); }
inline Json integer_json(const BigInt& z) { return to_string(z); }

inline Json to_json(const BipartiteGraph& g) {
    Json edges = Json::array();
    for (std::size_t i = 0; i < g.m(); ++i)
        for (std::size_t j = 0; j < g.n(); ++j)
            if (g.has_edge(i, j)) edges.push_back({i + 1, j + 1});
    return {{"kind", "bipartite"}, {"m", g.m()}, {"n", g.n()}, {"edges", edges}};
}

inline Json to_json(const Graph& g) {
    Json edges = Json::array();
    for (const auto& e : g.edges()) edges.push_back({e.a + 1, e.b + 1});
    return {{"kind", "general"}, {"n", g.vcount()}, {"edges", edges}};
}

inline Json to_json(const MultiPoly& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({{"exponents", e}, {"coefficient", integer_json(c)}});
    return {{"arity", p.arity()}, {"terms", terms}};
}

inline Json to_json(const TreeReport& r) {
    return {{"tau", integer_json(r.tau)},
            {"ferrers_invariant", rational_json(r.ferrers_invariant)},
            {"ferrers_good", r.ferrers_good}};
}

inline Json to_json(const SpectrumReport& r) {
    Json j{{"lambda_max", real_json(r.lambda_max)},
           {"adjacency_spectrum", real_json(r.adjacency_spectrum)},
           {"laplacian_spectrum", real_json(r.laplacian_spectrum)}};
    j["normalized_spectrum"] = r.normalized_spectrum.empty() ? Json(nullptr) : real_json(r.normalized_spectrum);
    j["residual_below_1e-9"] = r.residual <= 1e-9;
    return j;
}

inline Json to_json(const Quantity& q) {
    Json j;
    if (q.exact) j["exact"] = rational_json(*q.exact);
    j["value"] = real_json(q.value);
    if (!q.expression.empty()) j["expression"] = q.expression;
    return j;
}

inline Json to_json(const BoundReport& r) {
    Json j{{"name", r.name},
           {"mode", r.mode == ArithmeticMode::exact ? "exact" : "toleranced"},
           {"tolerance", real_json(r.tolerance)},
           {"lhs", to_json(r.lhs)},
           {"rhs", to_json(r.rhs)}};
    j["hypotheses_met"] = r.hypotheses_met;
    j["holds"] = r.hypotheses_met ? Json(r.holds) : Json(nullptr);
    j["equality"] = r.hypotheses_met ? Json(r.equality) : Json(nullptr);
    Json notes = Json::object();
    for (const auto& [k, v] : r.notes) notes[k] = v;
    j["notes"] = notes;
    return j;
}

inline Json to_json(const EquivalenceReport& r) {
    Json conds = Json::object();
    for (std::size_t k = 0; k < r.conditions.size(); ++k) conds[EquivalenceReport::kNames[k]] = r.conditions[k];
    Json wit = Json::array();
    for (const auto& w : r.witnesses) {
        Json x{{"condition", w.condition}, {"detail", w.detail}};
        if (w.coordinates) x["coordinates"] = {w.coordinates->first + 1, w.coordinates->second + 1};
        x["lhs"] = rational_json(w.lhs);
        x["rhs"] = rational_json(w.rhs);
        wit.push_back(x);
    }
    return {{"conditions", conds}, {"all_agree", r.all_agree}, {"witnesses", wit}};
}

inline Json to_json(const GraphRecord& r) {
    Json j{{"code", r.code}, {"graph", to_json(r.graph)}};
    if (r.value) j["value"] = real_json(*r.value);
    if (r.tau) j["tau"] = integer_json(*r.tau);
    if (r.ferrers_invariant) j["ferrers_invariant"] = rational_json(*r.ferrers_invariant);
    j["is_ferrers"] = r.ferrers;
    if (r.complete_plus_vertex) j["complete_plus_one_vertex"] = *r.complete_plus_vertex;
    if (!r.reason.empty()) j["reason"] = r.reason;
    return j;
}

inline Json records_json(const std::vector<GraphRecord>& rs) {
    Json a = Json::array();
    for (const auto& r : rs) a.push_back(to_json(r));
    return a;
}

inline Json to_json(const SearchReport& r, bool timing = false) {
    Json j{{"class", r.class_name},
           {"checked_property", r.checked_property},
           {"examined", r.examined}};
    if (r.optimum) j["optimum"] = real_json(*r.optimum);
    j["extremal"] = records_json(r.extremal);
    j["counterexamples"] = records_json(r.counterexamples);
    if (!r.ranking.empty()) j["ranking"] = records_json(r.ranking);
    j["notes"] = r.notes;
    j["verified"] = r.verified();
    if (timing) j["elapsed_seconds"] = real_json(r.elapsed_seconds);
    return j;
}

inline Json to_json(const EquivalenceScanReport& r, bool timing = false) {
    Json d = Json::array();
    for (const auto& x : r.disagreements)
        d.push_back({{"graph", to_json(x.graph)},
                     {"e", {x.e.a + 1, x.e.b + 1}},
                     {"f", {x.f.a + 1, x.f.b + 1}},
                     {"report", to_json(x.report)}});
    Json j{{"max_n", r.max_n},
           {"graphs", r.graphs},
           {"instances", r.instances},
           {"all_true", r.all_true},
           {"all_false", r.all_false},
           {"disagreements", d},
           {"monotonicity_checks", r.monotonicity_checks},
           {"monotonicity_failures", r.monotonicity_failures},
           {"verified", r.verified()}};
    if (timing) j["elapsed_seconds"] = real_json(r.elapsed_seconds);
    return j;
}

/// Wraps a payload with the schema version and the command that made it.
inline Json document(const std::string& command, Json payload) {
    Json j{{"schema_version", kSchemaVersion}, {"command", command}};
    for (auto& [k, v] : payload.items()) j[k] = v;
    return j;
}

namespace detail {

inline void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
    if (j.is_object()) {
        for (auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    } else if (j.is_array()) {
        for (std::size_t k = 0; k < j.size(); ++k) flatten(j[k], prefix + "." + std::to_string(k), out);
        if (j.empty()) out.emplace_back(prefix, "");
    } else if (j.is_string()) {
        out.emplace_back(prefix, j.get<std::string>());
    } else {
        out.emplace_back(prefix, j.dump());
    }
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

}  // namespace detail

/// Two-column "key,value" rendering of a JSON document; nested keys are
/// joined with dots and array positions are 0-based.
inline std::string to_csv(const Json& j) {
    std::vector<std::pair<std::string, std::string>> rows;
    detail::flatten(j, "", rows);
    std::string out = "key,value\n";
    for (const auto& [k, v] : rows) out += detail::csv_field(k) + "," + detail::csv_field(v) + "\n";
    return out;
}

}  // namespace ferrers
