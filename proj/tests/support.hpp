#pragma once

// Seeded generators and brute-force oracles shared by the test programs.
// The oracles deliberately avoid the library's own algorithms.

#include "conngraph/conngraph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace testing {

using namespace conngraph;

/// Downward closure of up to `facets` random sets on labels 1..n, each of size 1..dim+1.
inline Complex random_complex(std::mt19937& rng, std::size_t n, std::size_t dim, std::size_t facets) {
    std::uniform_int_distribution<std::size_t> size_dist(1, dim + 1), label(1, n);
    std::vector<Simplex> fs;
    for (std::size_t i = 0; i < facets; ++i) {
        std::set<Label> s;
        const auto k = std::min(size_dist(rng), n);
        while (s.size() < k) s.insert(static_cast<Label>(label(rng)));
        fs.emplace_back(s.begin(), s.end());
    }
    return Complex::from_facets(fs);
}

inline Graph random_graph(std::mt19937& rng, std::size_t n, double p) {
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (coin(rng)) g.add_edge(a, b);
    return g;
}

/// Every clique listed by brute force over vertex subsets (n <= 20).
inline std::vector<std::size_t> brute_clique_counts(const Graph& g) {
    const auto n = g.order();
    std::vector<std::size_t> counts;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        bool clique = true;
        for (std::size_t a = 0; a < n && clique; ++a)
            for (std::size_t b = a + 1; b < n && clique; ++b)
                if ((mask >> a & 1) && (mask >> b & 1) && !g.adjacent(a, b)) clique = false;
        if (!clique) continue;
        const auto k = static_cast<std::size_t>(__builtin_popcount(mask));
        if (counts.size() < k) counts.resize(k);
        ++counts[k - 1];
    }
    return counts;
}

inline long long brute_euler(const Graph& g) {
    long long chi = 0, sign = 1;
    for (auto c : brute_clique_counts(g)) {
        chi += sign * static_cast<long long>(c);
        sign = -sign;
    }
    return chi;
}

/// Largest independent set by subset enumeration (n <= 24).
inline std::size_t brute_independence(const Graph& g) {
    const auto n = g.order();
    std::size_t best = 0;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        const auto k = static_cast<std::size_t>(__builtin_popcount(mask));
        if (k <= best) continue;
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a)
            for (std::size_t b = a + 1; b < n && ok; ++b)
                if ((mask >> a & 1) && (mask >> b & 1) && g.adjacent(a, b)) ok = false;
        if (ok) best = k;
    }
    return best;
}

/// |Aut| by trying every permutation (n <= 9).
inline std::size_t brute_automorphisms(const Graph& g) {
    std::vector<std::size_t> p(g.order());
    std::iota(p.begin(), p.end(), std::size_t{0});
    std::size_t count = 0;
    do {
        bool ok = true;
        for (auto [a, b] : g.edges())
            if (!g.adjacent(p[a], p[b])) { ok = false; break; }
        count += ok;
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
}

/// Isomorphism by trying every bijection (n <= 9).
inline bool brute_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    std::vector<std::size_t> p(a.order());
    std::iota(p.begin(), p.end(), std::size_t{0});
    do {
        bool ok = true;
        for (auto [x, y] : a.edges())
            if (!b.adjacent(p[x], p[y])) { ok = false; break; }
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

/// Reference ψ: sets adjacent when they intersect.
inline Graph naive_psi(const Complex& c) {
    Graph g(c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j)
            if (intersects(c[i], c[j])) g.add_edge(i, j);
    return g;
}

/// Reference φ: sets adjacent when one strictly contains the other.
inline Graph naive_phi(const Complex& c) {
    Graph g(c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j)
            if (is_subset(c[i], c[j]) || is_subset(c[j], c[i])) g.add_edge(i, j);
    return g;
}

inline bool same_edges(const Graph& a, const Graph& b) { return a.order() == b.order() && a.edges() == b.edges(); }

}  // namespace testing
