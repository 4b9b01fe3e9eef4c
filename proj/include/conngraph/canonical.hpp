#pragma once

#include "conngraph/complex.hpp"
#include "conngraph/error.hpp"
#include "conngraph/graph.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace conngraph {

/// Hard cap on the order of graphs given to canonical_code.
inline constexpr std::size_t kCanonicalCap = 64;
/// Default cap for automorphism_group.
inline constexpr std::size_t kAutomorphismCap = 40;

using Permutation = std::vector<std::size_t>;

namespace detail {

using Coloring = std::vector<std::size_t>;

inline std::size_t color_count(const Coloring& c) {
    return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

inline std::vector<std::vector<std::size_t>> signatures(const Graph& g, const Coloring& c) {
    std::vector<std::vector<std::size_t>> sig(g.order());
    for (std::size_t v = 0; v < g.order(); ++v) {
        auto& s = sig[v];
        s.reserve(g.degree(v) + 1);
        for_each_member(g.neighbors(v), [&](std::size_t u) { s.push_back(c[u]); });
        std::sort(s.begin(), s.end());
        s.insert(s.begin(), c[v]);
    }
    return sig;
}

/// Equitable refinement. Colors are ranks of (old color, neighbour colors), so
/// the result depends only on the isomorphism class of (graph, coloring).
inline Coloring refine(const Graph& g, Coloring c) {
    std::size_t k = color_count(c);
    for (;;) {
        auto sig = signatures(g, c);
        auto uniq = sig;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        for (std::size_t v = 0; v < c.size(); ++v)
            c[v] = static_cast<std::size_t>(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
        if (uniq.size() == k) return c;
        k = uniq.size();
    }
}

/// Refines two colorings of g in lock step with a shared color naming.
/// Returns false as soon as their color histograms differ.
inline bool refine_pair(const Graph& g, Coloring& a, Coloring& b) {
    std::size_t k = color_count(a);
    for (;;) {
        auto sa = signatures(g, a);
        auto sb = signatures(g, b);
        std::vector<std::vector<std::size_t>> uniq(sa);
        uniq.insert(uniq.end(), sb.begin(), sb.end());
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        std::vector<std::size_t> ha(uniq.size(), 0), hb(uniq.size(), 0);
        for (std::size_t v = 0; v < a.size(); ++v) {
            a[v] = static_cast<std::size_t>(std::lower_bound(uniq.begin(), uniq.end(), sa[v]) - uniq.begin());
            b[v] = static_cast<std::size_t>(std::lower_bound(uniq.begin(), uniq.end(), sb[v]) - uniq.begin());
            ++ha[a[v]];
            ++hb[b[v]];
        }
        if (ha != hb) return false;
        if (uniq.size() == k) return true;
        k = uniq.size();
    }
}

inline void individualize(Coloring& c, std::size_t v) { c[v] = color_count(c); }

inline bool is_discrete(const Coloring& c) { return color_count(c) == c.size(); }

/// First (lowest-index) color class with more than one vertex.
inline std::vector<std::size_t> target_cell(const Coloring& c) {
    std::vector<std::size_t> size(color_count(c), 0);
    for (auto x : c) ++size[x];
    for (std::size_t col = 0; col < size.size(); ++col) {
        if (size[col] < 2) continue;
        std::vector<std::size_t> cell;
        for (std::size_t v = 0; v < c.size(); ++v)
            if (c[v] == col) cell.push_back(v);
        return cell;
    }
    return {};
}

inline bool is_automorphism(const Graph& g, const Permutation& p) {
    for (auto [a, b] : g.edges())
        if (!g.adjacent(p[a], p[b])) return false;
    return true;
}

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

inline bool fixes_all(const Permutation& p, const std::vector<std::size_t>& pts) {
    return std::all_of(pts.begin(), pts.end(), [&](std::size_t v) { return p[v] == v; });
}

/// Individualization-refinement search for the lexicographically smallest
/// adjacency code, with automorphism pruning.
class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : g_(g) {}

    std::string run() {
        std::vector<std::size_t> seq;
        search(refine(g_, Coloring(g_.order(), 0)), seq, true);
        return best_;
    }

    const std::vector<Permutation>& automorphisms() const { return auts_; }

private:
    std::string code_of(const Coloring& c) const {
        const std::size_t n = g_.order();
        std::vector<std::size_t> at(n);
        for (std::size_t v = 0; v < n; ++v) at[c[v]] = v;
        std::string code;
        code.reserve(4 + n * n / 16 + 1);
        for (int shift = 24; shift >= 0; shift -= 8) code.push_back(static_cast<char>((n >> shift) & 0xFF));
        std::uint8_t byte = 0;
        int bit = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                byte = static_cast<std::uint8_t>((byte << 1) | (g_.adjacent(at[i], at[j]) ? 1 : 0));
                if (++bit == 8) {
                    code.push_back(static_cast<char>(byte));
                    byte = 0;
                    bit = 0;
                }
            }
        if (bit) code.push_back(static_cast<char>(byte << (8 - bit)));
        return code;
    }

    Permutation leaf_map(const Coloring& from, const Coloring& to) const {
        const std::size_t n = g_.order();
        std::vector<std::size_t> at(n);
        for (std::size_t v = 0; v < n; ++v) at[to[v]] = v;
        Permutation p(n);
        for (std::size_t v = 0; v < n; ++v) p[v] = at[from[v]];
        return p;
    }

    // Returns true when a leaf equivalent to the first leaf was found off the
    // first path; the caller then abandons siblings up to the first path.
    bool search(const Coloring& c, std::vector<std::size_t>& seq, bool first_path) {
        if (is_discrete(c)) {
            auto code = code_of(c);
            if (!have_first_) {
                have_first_ = true;
                first_ = c;
                first_code_ = code;
                best_ = code;
                best_leaf_ = c;
                return false;
            }
            if (code == first_code_) {
                auts_.push_back(leaf_map(first_, c));
                return true;
            }
            if (code == best_) auts_.push_back(leaf_map(best_leaf_, c));
            else if (code < best_) {
                best_ = code;
                best_leaf_ = c;
            }
            return false;
        }
        const auto cell = target_cell(c);
        std::vector<std::size_t> explored;
        for (std::size_t idx = 0; idx < cell.size(); ++idx) {
            const auto v = cell[idx];
            if (!explored.empty()) {
                UnionFind uf(g_.order());
                for (const auto& p : auts_)
                    if (fixes_all(p, seq))
                        for (std::size_t x = 0; x < p.size(); ++x) uf.unite(x, p[x]);
                const auto r = uf.find(v);
                if (std::any_of(explored.begin(), explored.end(), [&](std::size_t u) { return uf.find(u) == r; }))
                    continue;
            }
            Coloring child = c;
            individualize(child, v);
            child = refine(g_, std::move(child));
            seq.push_back(v);
            const bool jump = search(child, seq, first_path && idx == 0);
            seq.pop_back();
            explored.push_back(v);
            if (jump && !first_path) return true;
        }
        return false;
    }

    const Graph& g_;
    bool have_first_ = false;
    Coloring first_, best_leaf_;
    std::string first_code_, best_;
    std::vector<Permutation> auts_;
};

inline std::optional<Permutation> extend_automorphism(const Graph& g, Coloring a, Coloring b) {
    if (!refine_pair(g, a, b)) return std::nullopt;
    if (is_discrete(a)) {
        std::vector<std::size_t> at(g.order());
        for (std::size_t v = 0; v < g.order(); ++v) at[b[v]] = v;
        Permutation p(g.order());
        for (std::size_t v = 0; v < g.order(); ++v) p[v] = at[a[v]];
        if (is_automorphism(g, p)) return p;
        return std::nullopt;
    }
    const auto cell = target_cell(a);
    const auto u = cell.front();
    for (std::size_t w = 0; w < g.order(); ++w) {
        if (b[w] != a[u]) continue;
        Coloring a2 = a, b2 = b;
        individualize(a2, u);
        individualize(b2, w);
        if (auto p = extend_automorphism(g, std::move(a2), std::move(b2))) return p;
    }
    return std::nullopt;
}

}  // namespace detail

/// Byte string that is equal for two graphs iff they are isomorphic.
inline std::string canonical_code(const Graph& a, std::size_t cap = kCanonicalCap) {
    if (a.order() > cap)
        throw Error(Errc::SizeLimit, "canonical labeling capped at " + std::to_string(cap) + " vertices");
    if (a.empty()) return std::string(4, '\0');
    return detail::CanonicalSearch(a).run();
}

inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    return canonical_code(a) == canonical_code(b);
}

/// An automorphism of g mapping src[i] to dst[i] for all i, if one exists.
inline std::optional<Permutation> find_automorphism(const Graph& g, const std::vector<std::size_t>& src,
                                                    const std::vector<std::size_t>& dst) {
    detail::Coloring a(g.order(), 0), b(g.order(), 0);
    for (std::size_t i = 0; i < src.size(); ++i) {
        detail::individualize(a, src[i]);
        detail::individualize(b, dst[i]);
    }
    return detail::extend_automorphism(g, std::move(a), std::move(b));
}

struct PermutationGroup {
    std::size_t degree = 0;
    std::vector<Permutation> generators;
    boost::multiprecision::cpp_int order = 1;

    /// All elements, sorted lexicographically. Throws SizeLimit above `limit`.
    std::vector<Permutation> elements(std::size_t limit = 100000) const {
        if (order > limit) throw Error(Errc::SizeLimit, "group order exceeds element listing limit");
        Permutation id(degree);
        std::iota(id.begin(), id.end(), std::size_t{0});
        std::set<Permutation> seen{id};
        std::vector<Permutation> frontier{id};
        while (!frontier.empty()) {
            std::vector<Permutation> next;
            for (const auto& p : frontier)
                for (const auto& s : generators) {
                    Permutation q(degree);
                    for (std::size_t i = 0; i < degree; ++i) q[i] = s[p[i]];
                    if (seen.insert(q).second) next.push_back(std::move(q));
                }
            frontier = std::move(next);
        }
        return {seen.begin(), seen.end()};
    }
};

/// Exact automorphism group through a point-stabilizer chain: the order is the
/// product of the base-point orbit sizes; the generators are the coset
/// representatives found along the way.
inline PermutationGroup automorphism_group(const Graph& a, std::size_t cap = kAutomorphismCap) {
    if (a.order() > cap)
        throw Error(Errc::SizeLimit, "automorphism search capped at " + std::to_string(cap) + " vertices");
    const std::size_t n = a.order();
    PermutationGroup grp;
    grp.degree = n;
    std::vector<std::size_t> prefix;
    for (std::size_t base = 0; base < n; ++base) {
        detail::UnionFind uf(n);
        for (const auto& p : grp.generators)
            if (detail::fixes_all(p, prefix))
                for (std::size_t x = 0; x < n; ++x) uf.unite(x, p[x]);
        detail::Coloring plain(n, 0);
        for (auto v : prefix) detail::individualize(plain, v);
        plain = detail::refine(a, std::move(plain));

        std::size_t orbit = 1;
        for (std::size_t w = 0; w < n; ++w) {
            if (w == base || plain[w] != plain[base]) continue;
            if (uf.find(w) == uf.find(base)) {
                ++orbit;
                continue;
            }
            auto src = prefix, dst = prefix;
            src.push_back(base);
            dst.push_back(w);
            if (auto p = find_automorphism(a, src, dst)) {
                grp.generators.push_back(*p);
                for (std::size_t x = 0; x < n; ++x) uf.unite(x, (*p)[x]);
                ++orbit;
            }
        }
        grp.order *= orbit;
        prefix.push_back(base);
    }
    std::sort(grp.generators.begin(), grp.generators.end());
    return grp;
}

/// Automorphisms of a complex: label permutations mapping the family onto
/// itself (equivalently, bijections T with x ⊆ y ⇔ T(x) ⊆ T(y)). Elements are
/// reported as permutations of the set indices, sorted lexicographically.
inline PermutationGroup complex_automorphisms(const Complex& g, std::size_t limit = 1'000'000) {
    const auto verts = g.vertices();
    const std::size_t k = verts.size();
    std::map<Label, std::size_t> pos;
    for (std::size_t i = 0; i < k; ++i) pos[verts[i]] = i;
    // sets grouped by the position of their largest label, for early checks
    std::vector<std::vector<std::size_t>> closing(k);
    for (std::size_t s = 0; s < g.size(); ++s) closing[pos.at(g[s].back())].push_back(s);

    PermutationGroup grp;
    grp.degree = g.size();
    grp.order = 0;
    std::vector<Label> image(k);
    std::vector<bool> used(k, false);
    std::size_t found = 0;
    auto extend = [&](auto&& self, std::size_t i) -> void {
        if (i == k) {
            Permutation p(g.size());
            for (std::size_t s = 0; s < g.size(); ++s) {
                Simplex t;
                for (auto v : g[s]) t.push_back(image[pos.at(v)]);
                std::sort(t.begin(), t.end());
                p[s] = *g.index_of(t);
            }
            grp.generators.push_back(std::move(p));
            if (++found > limit) throw Error(Errc::SizeLimit, "complex automorphism count exceeds limit");
            return;
        }
        for (std::size_t c = 0; c < k; ++c) {
            if (used[c]) continue;
            image[i] = verts[c];
            bool ok = true;
            for (auto s : closing[i]) {
                Simplex t;
                for (auto v : g[s]) t.push_back(image[pos.at(v)]);
                std::sort(t.begin(), t.end());
                if (!g.contains(t)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            used[c] = true;
            self(self, i + 1);
            used[c] = false;
        }
    };
    extend(extend, 0);
    grp.order = found;
    std::sort(grp.generators.begin(), grp.generators.end());
    return grp;
}

}  // namespace conngraph
