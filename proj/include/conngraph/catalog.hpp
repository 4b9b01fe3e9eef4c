#pragma once

#include "conngraph/cliques.hpp"
#include "conngraph/complex.hpp"
#include "conngraph/functors.hpp"
#include "conngraph/graph.hpp"

#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace conngraph::catalog {

inline Graph cycle(std::size_t n) {
    if (n < 3) throw Error(Errc::InvalidInput, "C_n needs n >= 3");
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

inline Graph complete(std::size_t n) {
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

/// Path with n vertices.
inline Graph path(std::size_t n) {
    Graph g(n);
    for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

/// K_{1,n}: centre 0 and n leaves.
inline Graph star(std::size_t n) {
    Graph g(n + 1);
    for (std::size_t i = 1; i <= n; ++i) g.add_edge(0, i);
    return g;
}

/// Hub 0 joined to the rim cycle 1..n.
inline Graph wheel(std::size_t n) {
    if (n < 3) throw Error(Errc::InvalidInput, "wheel_n needs n >= 3");
    Graph g(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        g.add_edge(0, i + 1);
        g.add_edge(i + 1, (i + 1) % n + 1);
    }
    return g;
}

/// Join of d+1 copies of the 0-sphere; vertices 2i and 2i+1 are antipodal.
inline Graph cross_polytope(std::size_t d) {
    const std::size_t n = 2 * (d + 1);
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (i / 2 != j / 2) g.add_edge(i, j);
    return g;
}

inline Graph octahedron() {
    Graph g(6);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i + 1; j < 6; ++j)
            if (j != i + 3) g.add_edge(i, j);
    return g;
}

/// Apex 0, upper ring 1..5, lower ring 6..10, apex 11.
inline Graph icosahedron() {
    Graph g(12);
    for (std::size_t i = 1; i <= 5; ++i) {
        const std::size_t next = i % 5 + 1;
        g.add_edge(0, i);
        g.add_edge(i, next);
        g.add_edge(i + 5, next + 5);
        g.add_edge(11, i + 5);
        g.add_edge(i, i + 5);
        g.add_edge(i, next + 5);
    }
    return g;
}

inline Complex point() { return Complex::from_facets({{1}}); }
inline Complex edge() { return Complex::from_facets({{1, 2}}); }
/// The path complex {(1,2),(2,3),(1),(2),(3)}.
inline Complex interval() { return Complex::from_facets({{1, 2}, {2, 3}}); }
inline Complex c3_boundary() { return Complex::from_facets({{1, 2}, {2, 3}, {1, 3}}); }
inline Complex k3_simplex() { return Complex::from_facets({{1, 2, 3}}); }

inline Complex simplex(std::size_t n) {
    Simplex s;
    for (std::size_t i = 1; i <= n; ++i) s.push_back(static_cast<Label>(i));
    return Complex::from_facets({s});
}

/// Square 1234 with the whisker 45.
inline Complex fig1() { return Complex::from_facets({{1, 2}, {2, 3}, {3, 4}, {1, 4}, {4, 5}}); }

inline Complex figure8() {
    return Complex::from_facets({{1, 2}, {2, 3}, {3, 4}, {1, 4}, {4, 5}, {5, 6}, {6, 7}, {4, 7}});
}

/// k squares glued at the vertex 1: f = (1+3k, 4k).
inline Complex bouquet(std::size_t k) {
    std::vector<Simplex> facets;
    if (k == 0) facets.push_back({1});
    for (std::size_t i = 0; i < k; ++i) {
        const auto a = static_cast<Label>(3 * i + 2), b = a + 1, c = a + 2;
        facets.push_back({1, a});
        facets.push_back({a, b});
        facets.push_back({b, c});
        facets.push_back({1, c});
    }
    return Complex::from_facets(facets);
}

/// 8-vertex triangulation of the dunce hat; edges 12, 23, 13 lie in three triangles.
inline Complex dunce_hat_complex() {
    return Complex::from_facets({{1, 2, 4}, {1, 2, 7}, {1, 2, 8}, {1, 3, 5}, {1, 3, 6}, {1, 3, 7},
                                 {1, 4, 8}, {1, 5, 6}, {2, 3, 4}, {2, 3, 5}, {2, 3, 8}, {2, 5, 7},
                                 {3, 4, 6}, {3, 7, 8}, {4, 6, 8}, {5, 6, 7}, {6, 7, 8}});
}

/// Graph whose Whitney complex has label v+1 for vertex v.
inline Graph skeleton_graph(const Complex& c) {
    const auto verts = c.vertices();
    Graph g(verts.size());
    for (const auto& s : c)
        if (s.size() == 2) {
            auto a = std::lower_bound(verts.begin(), verts.end(), s[0]) - verts.begin();
            auto b = std::lower_bound(verts.begin(), verts.end(), s[1]) - verts.begin();
            g.add_edge(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
        }
    return g;
}

namespace detail {

inline std::optional<std::size_t> suffix_number(std::string_view name, std::string_view prefix) {
    if (name.substr(0, prefix.size()) != prefix) return std::nullopt;
    auto rest = name.substr(prefix.size());
    std::size_t n = 0;
    auto [p, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
    if (ec != std::errc{} || p != rest.data() + rest.size() || rest.empty()) return std::nullopt;
    return n;
}

}  // namespace detail

/// Builtin graphs: C_n, K_n, P_n, star_n, wheel_n, octahedron, icosahedron,
/// cross_polytope_d, dunce_hat_8, figure8, bouquet_k.
inline std::optional<Graph> graph(std::string_view name) {
    using detail::suffix_number;
    if (name == "octahedron") return octahedron();
    if (name == "icosahedron") return icosahedron();
    if (name == "figure8") return skeleton_graph(figure8());
    // φ of the 8-vertex triangulation; the triangulation itself is not a flag complex
    if (name == "dunce_hat_8") return phi(dunce_hat_complex()).unlabeled();
    if (auto n = suffix_number(name, "C_")) return cycle(*n);
    if (auto n = suffix_number(name, "K_")) return complete(*n);
    if (auto n = suffix_number(name, "P_")) return path(*n);
    if (auto n = suffix_number(name, "star_")) return star(*n);
    if (auto n = suffix_number(name, "wheel_")) return wheel(*n);
    if (auto n = suffix_number(name, "cross_polytope_")) return cross_polytope(*n);
    if (auto n = suffix_number(name, "bouquet_")) return skeleton_graph(bouquet(*n));
    return std::nullopt;
}

/// Builtin complexes. Besides the named ones, any catalog graph name yields its
/// Whitney complex.
inline std::optional<Complex> complex(std::string_view name) {
    using detail::suffix_number;
    if (name == "point") return point();
    if (name == "edge") return edge();
    if (name == "interval") return interval();
    if (name == "c3_boundary") return c3_boundary();
    if (name == "k3_simplex") return k3_simplex();
    if (name == "fig1") return fig1();
    if (name == "figure8") return figure8();
    if (name == "dunce_hat_8") return dunce_hat_complex();
    if (auto n = suffix_number(name, "simplex_")) return simplex(*n);
    if (auto n = suffix_number(name, "bouquet_")) return bouquet(*n);
    if (auto g = graph(name)) return whitney_complex(*g);
    return std::nullopt;
}

inline std::vector<std::string> graph_names() {
    return {"C_4",         "C_5",          "C_6",         "C_7",           "C_8",
            "K_1",         "K_2",          "K_3",         "K_4",           "P_2",
            "P_3",         "P_5",          "star_3",      "wheel_6",       "octahedron",
            "icosahedron", "cross_polytope_0", "cross_polytope_1", "cross_polytope_2",
            "cross_polytope_3", "cross_polytope_4", "dunce_hat_8", "figure8", "bouquet_2",
            "bouquet_3",   "bouquet_4"};
}

inline std::vector<std::string> complex_names() {
    return {"point",       "edge",        "interval",    "c3_boundary", "k3_simplex",
            "simplex_4",   "fig1",        "figure8",     "bouquet_2",   "bouquet_3",
            "bouquet_4",   "dunce_hat_8", "C_4",         "C_5",         "C_6",
            "C_7",         "C_8",         "P_5",         "star_3",      "star_5",
            "wheel_6",     "octahedron",  "icosahedron", "cross_polytope_1",
            "cross_polytope_2", "cross_polytope_3"};
}

/// The named complexes used as the standard test catalog.
inline std::vector<std::pair<std::string, Complex>> standard_complexes() {
    std::vector<std::pair<std::string, Complex>> out;
    for (const auto& n : complex_names()) out.emplace_back(n, *complex(n));
    return out;
}

}  // namespace conngraph::catalog
