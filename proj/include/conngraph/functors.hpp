#pragma once

#include "conngraph/complex.hpp"
#include "conngraph/graph.hpp"

#include <cstddef>
#include <vector>

namespace conngraph {

/// Barycentric refinement graph φ(G): one vertex per set, joined when nested.
inline Graph phi(const Complex& g) {
    Graph a(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (is_subset(g[i], g[j])) a.add_edge(i, j);  // canonical order: |g[i]| <= |g[j]|
    a.set_labels(g.sets());
    return a;
}

/// Connection graph ψ(G): one vertex per set, joined when the sets intersect.
inline Graph psi(const Complex& g) {
    Graph a(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (intersects(g[i], g[j])) a.add_edge(i, j);
    a.set_labels(g.sets());
    return a;
}

/// Strong product; vertex (a, b) has id a·|B| + b.
inline Graph strong_product(const Graph& a, const Graph& b) {
    const std::size_t m = b.order();
    Graph p(a.order() * m);
    for (std::size_t a1 = 0; a1 < a.order(); ++a1)
        for (std::size_t b1 = 0; b1 < m; ++b1)
            for (std::size_t a2 = a1; a2 < a.order(); ++a2) {
                if (a2 != a1 && !a.adjacent(a1, a2)) continue;
                for (std::size_t b2 = 0; b2 < m; ++b2) {
                    if (a2 == a1 && b2 <= b1) continue;
                    if (b2 != b1 && !b.adjacent(b1, b2)) continue;
                    p.add_edge(a1 * m + b1, a2 * m + b2);
                }
            }
    return p;
}

/// ψ on the cell product G × H: (a,b) ~ (c,d) iff a∩c ≠ ∅ and b∩d ≠ ∅.
inline Graph psi_product(const Complex& g, const Complex& h) {
    const std::size_t m = h.size();
    Graph p(g.size() * m);
    for (std::size_t i = 0; i < p.order(); ++i)
        for (std::size_t j = i + 1; j < p.order(); ++j)
            if (intersects(g[i / m], g[j / m]) && intersects(h[i % m], h[j % m])) p.add_edge(i, j);
    return p;
}

/// φ on the cell product: (a,b) ~ (c,d) iff the pairs are nested coordinatewise.
inline Graph phi_product(const Complex& g, const Complex& h) {
    const std::size_t m = h.size();
    Graph p(g.size() * m);
    for (std::size_t i = 0; i < p.order(); ++i)
        for (std::size_t j = i + 1; j < p.order(); ++j) {
            const auto &a = g[i / m], &c = g[j / m];
            const auto &b = h[i % m], &d = h[j % m];
            if ((is_subset(a, c) && is_subset(b, d)) || (is_subset(c, a) && is_subset(d, b))) p.add_edge(i, j);
        }
    return p;
}

/// A ⊕ B: vertices of B follow those of A.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
    const std::size_t n = a.order();
    Graph u(n + b.order());
    for (auto [x, y] : a.edges()) u.add_edge(x, y);
    for (auto [x, y] : b.edges()) u.add_edge(n + x, n + y);
    return u;
}

inline Graph complement(const Graph& a) {
    Graph c(a.order());
    for (std::size_t x = 0; x < a.order(); ++x)
        for (std::size_t y = x + 1; y < a.order(); ++y)
            if (!a.adjacent(x, y)) c.add_edge(x, y);
    return c;
}

/// Zykov join A + B: disjoint union plus every edge between A and B.
inline Graph zykov_join(const Graph& a, const Graph& b) {
    Graph j = disjoint_union(a, b);
    for (std::size_t x = 0; x < a.order(); ++x)
        for (std::size_t y = 0; y < b.order(); ++y) j.add_edge(x, a.order() + y);
    return j;
}

}  // namespace conngraph
