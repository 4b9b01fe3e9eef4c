#pragma once

#include "conngraph/canonical.hpp"
#include "conngraph/cliques.hpp"
#include "conngraph/complex.hpp"
#include "conngraph/error.hpp"
#include "conngraph/graph.hpp"
#include "conngraph/homotopy.hpp"

#include <boost/multiprecision/gmp.hpp>
#include <boost/rational.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace conngraph {

using Rational = boost::rational<long long>;

/// Column-sparse integer matrix.
struct SparseMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<std::vector<std::pair<std::size_t, int>>> columns;  // sorted by row
};

/// ∂_k for k = 1..dim, with the orientation of each simplex given by its
/// sorted vertex list: ∂[v0..vk] = Σ (-1)^i [v0..v̂i..vk].
struct BoundaryOperators {
    std::vector<SparseMatrix> d;  // d[k] maps k-simplices to (k-1)-simplices; d[0] is empty

    static BoundaryOperators build(const Complex& g) {
        const auto f = g.f_vector();
        const int dim = g.dimension();
        // index of each set within its dimension
        std::vector<std::size_t> offset(f.size() + 1, 0);
        for (std::size_t k = 0; k < f.size(); ++k) offset[k + 1] = offset[k] + f[k];
        BoundaryOperators b;
        b.d.resize(dim < 0 ? 0 : static_cast<std::size_t>(dim) + 1);
        for (int k = 1; k <= dim; ++k) {
            auto& m = b.d[k];
            m.rows = f[k - 1];
            m.cols = f[k];
            m.columns.resize(m.cols);
            for (std::size_t c = 0; c < m.cols; ++c) {
                const Simplex& s = g[offset[k] + c];
                for (std::size_t i = 0; i < s.size(); ++i) {
                    Simplex face = s;
                    face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
                    const auto idx = g.index_of(face);
                    if (!idx) throw MissingFaceError(s, face, "boundary face missing");
                    m.columns[c].emplace_back(*idx - offset[k - 1], i % 2 == 0 ? 1 : -1);
                }
                std::sort(m.columns[c].begin(), m.columns[c].end());
            }
        }
        for (std::size_t k = 2; k < b.d.size(); ++k)
            if (!composes_to_zero(b.d[k - 1], b.d[k]))
                throw Error(Errc::InvalidInput, "boundary of boundary is non-zero in degree " + std::to_string(k));
        return b;
    }

    static bool composes_to_zero(const SparseMatrix& lo, const SparseMatrix& hi) {
        for (const auto& col : hi.columns) {
            std::map<std::size_t, long long> acc;
            for (auto [mid, a] : col)
                for (auto [row, b] : lo.columns[mid]) acc[row] += static_cast<long long>(a) * b;
            for (const auto& [row, v] : acc)
                if (v != 0) return false;
        }
        return true;
    }
};

/// Rank over Q by sparse column reduction with exact rationals.
inline std::size_t rank(const SparseMatrix& m) {
    using Q = boost::multiprecision::mpq_rational;
    using Column = std::vector<std::pair<std::size_t, Q>>;
    std::vector<Column> reduced;
    std::vector<std::ptrdiff_t> owner(m.rows, -1);  // pivot row → reduced column
    std::size_t r = 0;
    for (const auto& src : m.columns) {
        Column col;
        col.reserve(src.size());
        for (auto [row, v] : src) col.emplace_back(row, Q(v));
        while (!col.empty()) {
            const auto pivot = col.back().first;
            const auto o = owner[pivot];
            if (o < 0) break;
            const Column& other = reduced[static_cast<std::size_t>(o)];
            const Q factor = col.back().second / other.back().second;
            Column merged;
            merged.reserve(col.size() + other.size());
            std::size_t i = 0, j = 0;
            while (i < col.size() || j < other.size()) {
                if (j == other.size() || (i < col.size() && col[i].first < other[j].first)) {
                    merged.push_back(std::move(col[i++]));
                } else if (i == col.size() || other[j].first < col[i].first) {
                    merged.emplace_back(other[j].first, -factor * other[j].second);
                    ++j;
                } else {
                    Q v = col[i].second - factor * other[j].second;
                    if (v != 0) merged.emplace_back(col[i].first, std::move(v));
                    ++i;
                    ++j;
                }
            }
            col = std::move(merged);
        }
        if (col.empty()) continue;
        owner[col.back().first] = static_cast<std::ptrdiff_t>(reduced.size());
        reduced.push_back(std::move(col));
        ++r;
    }
    return r;
}

inline constexpr std::size_t kBettiCap = 20'000;

/// Betti numbers b_0..b_dim over Q. Checks Σ(-1)^k b_k = χ.
inline std::vector<long long> betti(const Complex& g, std::size_t cap = kBettiCap) {
    if (g.size() > cap)
        throw Error(Errc::SizeLimit, "complex with " + std::to_string(g.size()) + " sets exceeds the homology cap");
    const auto ops = BoundaryOperators::build(g);
    const auto f = g.f_vector();
    const std::size_t top = f.size();
    std::vector<std::size_t> rk(top + 1, 0);  // rk[k] = rank ∂_k
    for (std::size_t k = 1; k < top; ++k) rk[k] = rank(ops.d[k]);
    std::vector<long long> b(top);
    long long alt = 0;
    for (std::size_t k = 0; k < top; ++k) {
        b[k] = static_cast<long long>(f[k]) - static_cast<long long>(rk[k]) - static_cast<long long>(rk[k + 1]);
        alt += (k % 2 == 0 ? 1 : -1) * b[k];
    }
    if (alt != g.euler_characteristic()) throw Error(Errc::InvalidInput, "Euler-Poincare check failed");
    return b;
}

/// Removes vertices with contractible unit spheres until none is left. The
/// clique complex keeps its homotopy type.
inline Graph homotopy_core(const Graph& a) {
    HomotopyOracle oracle(a);
    VertexSet alive = full_set(a.order());
    bool changed = true;
    while (changed && alive.count() > 1) {
        changed = false;
        for (auto v = alive.find_first(); v != VertexSet::npos && alive.count() > 1; v = alive.find_next(v)) {
            if (oracle.contractible(a.neighbors(v) & alive)) {
                alive.reset(v);
                changed = true;
            }
        }
    }
    return a.induced(alive);
}

/// Betti numbers of the clique complex of A, computed on its homotopy core,
/// with trailing zeros dropped (b_0 is always present for non-empty A).
inline std::vector<long long> betti(const Graph& a, std::size_t cap = kBettiCap) {
    if (a.empty()) return {};
    auto b = betti(whitney_complex(homotopy_core(a)), cap);
    while (b.size() > 1 && b.back() == 0) b.pop_back();
    return b;
}

// ---------------------------------------------------------------------------

/// K(x) = Σ_k (-1)^k f_k(x)/(k+1), f_k(x) the number of k-cliques containing x.
inline std::vector<Rational> curvature(const Graph& a, std::size_t budget = kDefaultCliqueBudget) {
    std::vector<Rational> k(a.order(), Rational(0));
    std::size_t total = 0;
    const bool done = for_each_clique(a, full_set(a.order()), [&](const std::vector<std::size_t>& c) {
        const auto s = static_cast<long long>(c.size());
        const Rational w((s % 2 == 1) ? 1 : -1, s);
        for (auto v : c) k[v] += w;
        return ++total <= budget;
    });
    if (!done) throw Error(Errc::SizeLimit, "clique enumeration exceeded budget");
    return k;
}

inline bool gauss_bonnet_check(const Graph& a) {
    Rational sum(0);
    for (const auto& k : curvature(a)) sum += k;
    return sum == Rational(graph_euler(a));
}

struct PoincareHopf {
    std::vector<long long> index;  // i_f(x) = 1 - χ(S_f(x))
    long long sum = 0;
    long long chi = 0;
    bool holds() const { return sum == chi; }
};

/// Indices of f, S_f(x) = {y ∈ S(x) : f(y) < f(x)}. Throws NonInjective.
inline PoincareHopf poincare_hopf(const Graph& a, const std::vector<double>& f) {
    if (f.size() != a.order()) throw Error(Errc::InvalidInput, "function size does not match vertex count");
    auto sorted = f;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error(Errc::NonInjective, "function values repeat");
    PoincareHopf r;
    r.index.resize(a.order());
    for (std::size_t x = 0; x < a.order(); ++x) {
        VertexSet below(a.order());
        for_each_member(a.neighbors(x), [&](std::size_t y) {
            if (f[y] < f[x]) below.set(y);
        });
        r.index[x] = 1 - graph_euler(a, below);
        r.sum += r.index[x];
    }
    r.chi = graph_euler(a);
    return r;
}

/// j(A) = 1 - χ(A).
inline long long genus(const Graph& a) { return 1 - graph_euler(a); }

struct PlatonicResult {
    bool platonic = false;
    int dimension = -2;              // sphere dimension when A is a sphere
    std::vector<std::string> chain;  // canonical codes of the unit sphere, its unit sphere, ...
};

/// A d-sphere all of whose unit spheres are isomorphic to one Platonic
/// (d-1)-sphere. The empty graph counts as the Platonic (-1)-sphere.
inline PlatonicResult is_platonic_sphere(const Graph& a) {
    PlatonicResult r;
    const auto d = is_sphere(a);
    if (!d) return r;
    r.dimension = *d;
    if (a.empty()) {
        r.platonic = true;
        return r;
    }
    const Graph s0 = a.unit_sphere(0);
    const std::string code = canonical_code(s0);
    for (std::size_t v = 1; v < a.order(); ++v)
        if (canonical_code(a.unit_sphere(v)) != code) return r;
    auto inner = is_platonic_sphere(s0);
    if (!inner.platonic) return r;
    r.platonic = true;
    r.chain.push_back(code);
    r.chain.insert(r.chain.end(), inner.chain.begin(), inner.chain.end());
    return r;
}

}  // namespace conngraph
