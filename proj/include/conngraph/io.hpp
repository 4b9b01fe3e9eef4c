#pragma once

#include "conngraph/catalog.hpp"
#include "conngraph/complex.hpp"
#include "conngraph/error.hpp"
#include "conngraph/graph.hpp"
#include "conngraph/homotopy.hpp"

#include "json.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace conngraph::io {

using json = nlohmann::json;

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::InvalidInput, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline bool looks_like_json(std::string_view text) {
    text = trim(text);
    return !text.empty() && text.front() == '{';
}

inline Complex make_complex(std::vector<Simplex> sets, bool facets) {
    return facets ? Complex::from_facets(sets) : Complex::validate(std::move(sets));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// .scx: one comma-separated set per line, '#' starts a comment line.

inline Complex parse_scx(std::string_view text, bool facets = false) {
    std::vector<Simplex> sets;
    std::size_t lineno = 0;
    std::istringstream in{std::string(text)};
    for (std::string line; std::getline(in, line);) {
        ++lineno;
        auto t = detail::trim(line);
        if (t.empty() || t.front() == '#') continue;
        Simplex s;
        std::string item;
        std::istringstream row{std::string(t)};
        while (std::getline(row, item, ',')) {
            auto v = detail::trim(item);
            long long x = 0;
            auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
            if (v.empty() || ec != std::errc{} || p != v.data() + v.size() || x < 0 || x > 0xffffffffLL)
                throw Error(Errc::Parse, "line " + std::to_string(lineno) + ": bad vertex '" + std::string(v) + "'");
            s.push_back(static_cast<Label>(x));
        }
        sets.push_back(std::move(s));
    }
    return detail::make_complex(std::move(sets), facets);
}

inline std::string to_scx(const Complex& g) {
    std::string out;
    for (const auto& s : g) {
        for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
        out += '\n';
    }
    return out;
}

inline json complex_to_json(const Complex& g) { return json{{"sets", g.sets()}}; }

/// {"sets": [...]} or {"facets": [...]}.
inline Complex complex_from_json(const json& j, bool facets = false) {
    try {
        if (j.contains("facets")) return Complex::from_facets(j.at("facets").get<std::vector<Simplex>>());
        return detail::make_complex(j.at("sets").get<std::vector<Simplex>>(), facets);
    } catch (const json::exception& e) {
        throw Error(Errc::Parse, std::string("complex JSON: ") + e.what());
    }
}

inline Complex parse_complex(std::string_view text, bool facets = false) {
    if (!detail::looks_like_json(text)) return parse_scx(text, facets);
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(Errc::Parse, e.what());
    }
    return complex_from_json(j, facets);
}

// ---------------------------------------------------------------------------
// Graphs: .edg ("n <count>" then "a b" lines) and {n, edges, labels?}.

inline Graph parse_edg(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::optional<Graph> g;
    std::size_t lineno = 0;
    for (std::string line; std::getline(in, line);) {
        ++lineno;
        auto t = detail::trim(line);
        if (t.empty() || t.front() == '#') continue;
        std::istringstream row{std::string(t)};
        if (!g) {
            std::string tag;
            long long n = -1;
            if (!(row >> tag >> n) || tag != "n" || n < 0)
                throw Error(Errc::Parse, "line " + std::to_string(lineno) + ": expected header 'n <count>'");
            g.emplace(static_cast<std::size_t>(n));
            continue;
        }
        long long a = -1, b = -1;
        std::string extra;
        if (!(row >> a >> b) || (row >> extra) || a < 0 || b < 0)
            throw Error(Errc::Parse, "line " + std::to_string(lineno) + ": expected 'a b'");
        g->add_edge(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
    }
    if (!g) throw Error(Errc::Parse, "missing header 'n <count>'");
    return *g;
}

inline std::string to_edg(const Graph& g) {
    std::string out = "n " + std::to_string(g.order()) + "\n";
    for (auto [a, b] : g.edges()) out += std::to_string(a) + " " + std::to_string(b) + "\n";
    return out;
}

inline json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (auto [a, b] : g.edges()) edges.push_back({a, b});
    json j{{"n", g.order()}, {"edges", std::move(edges)}};
    if (g.has_labels()) j["labels"] = g.labels();
    return j;
}

inline Graph graph_from_json(const json& j) {
    try {
        Graph g(j.at("n").get<std::size_t>());
        for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
        if (j.contains("labels")) g.set_labels(j.at("labels").get<std::vector<Simplex>>());
        return g;
    } catch (const json::exception& e) {
        throw Error(Errc::Parse, std::string("graph JSON: ") + e.what());
    }
}

inline Graph parse_graph(std::string_view text) {
    if (!detail::looks_like_json(text)) return parse_edg(text);
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(Errc::Parse, e.what());
    }
    return graph_from_json(j);
}

inline std::string to_dot(const Graph& g, std::string_view name = "G") {
    std::string out = "graph " + std::string(name) + " {\n";
    for (std::size_t v = 0; v < g.order(); ++v) {
        out += "  " + std::to_string(v);
        if (g.has_labels()) out += " [label=\"" + to_string(g.label(v)) + "\"]";
        out += ";\n";
    }
    for (auto [a, b] : g.edges()) out += "  " + std::to_string(a) + " -- " + std::to_string(b) + ";\n";
    return out + "}\n";
}

// ---------------------------------------------------------------------------
// Moves and traces

inline json move_to_json(const Move& m) {
    return json{{"kind", move_kind_name(m.kind)}, {"args", m.args}, {"certificate", m.certificate}};
}

/// Accepts {kind, args, certificate?} and the shorthands {kind, v}, {kind, a, b},
/// {kind, vertices}.
inline Move move_from_json(const json& j) {
    try {
        Move m;
        const auto kind = parse_move_kind(j.at("kind").get<std::string>());
        if (!kind) throw Error(Errc::Parse, "unknown move kind " + j.at("kind").dump());
        m.kind = *kind;
        if (j.contains("args")) {
            m.args = j.at("args").get<std::vector<std::size_t>>();
        } else if (j.contains("v")) {
            m.args = {j.at("v").get<std::size_t>()};
        } else if (j.contains("a") && j.contains("b")) {
            m.args = {j.at("a").get<std::size_t>(), j.at("b").get<std::size_t>()};
        } else if (j.contains("vertices")) {
            m.args = j.at("vertices").get<std::vector<std::size_t>>();
        } else {
            throw Error(Errc::Parse, "move has no arguments");
        }
        if (m.kind == MoveKind::Expand) std::sort(m.args.begin(), m.args.end());
        if (j.contains("certificate")) m.certificate = j.at("certificate").get<std::vector<std::size_t>>();
        return m;
    } catch (const json::exception& e) {
        throw Error(Errc::Parse, std::string("move JSON: ") + e.what());
    }
}

inline json trace_to_json(const HomotopyTrace& t) {
    json moves = json::array();
    for (const auto& m : t.moves) moves.push_back(move_to_json(m));
    return json{{"start", graph_to_json(t.start)}, {"moves", std::move(moves)}, {"end", graph_to_json(t.end)}};
}

inline HomotopyTrace trace_from_json(const json& j) {
    HomotopyTrace t;
    t.start = graph_from_json(j.at("start"));
    for (const auto& m : j.at("moves")) t.moves.push_back(move_from_json(m));
    t.end = graph_from_json(j.at("end"));
    return t;
}

// ---------------------------------------------------------------------------
// Inputs: a path, or @name for the builtin catalog.

inline Complex load_complex(const std::string& spec, bool facets = false) {
    if (!spec.empty() && spec.front() == '@') {
        if (auto c = catalog::complex(spec.substr(1))) return *c;
        throw Error(Errc::InvalidInput, "unknown catalog complex " + spec);
    }
    return parse_complex(read_file(spec), facets);
}

inline Graph load_graph(const std::string& spec) {
    if (!spec.empty() && spec.front() == '@') {
        if (auto g = catalog::graph(spec.substr(1))) return *g;
        throw Error(Errc::InvalidInput, "unknown catalog graph " + spec);
    }
    return parse_graph(read_file(spec));
}

}  // namespace conngraph::io
