#pragma once

#include "conngraph/error.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace conngraph {

using Label = std::uint32_t;

/// A non-empty finite set of vertex labels, kept sorted ascending.
using Simplex = std::vector<Label>;

/// Largest allowed cardinality of a set in a Complex.
inline constexpr std::size_t kMaxSetSize = 16;

/// Canonical order of sets: by cardinality, then lexicographically.
struct CanonicalLess {
    bool operator()(const Simplex& a, const Simplex& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

inline std::string to_string(const Simplex& s) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << '}';
    return os.str();
}

inline bool is_subset(const Simplex& a, const Simplex& b) {
    return a.size() <= b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline bool intersects(const Simplex& a, const Simplex& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j) return true;
        if (*i < *j) ++i; else ++j;
    }
    return false;
}

inline std::size_t intersection_size(const Simplex& a, const Simplex& b) {
    std::size_t n = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j) { ++n; ++i; ++j; }
        else if (*i < *j) ++i;
        else ++j;
    }
    return n;
}

/// Calls f on every non-empty subset of s (as a sorted Simplex), proper or not.
template <class F>
void for_each_nonempty_subset(const Simplex& s, F&& f) {
    const std::size_t k = s.size();
    Simplex sub;
    sub.reserve(k);
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
        sub.clear();
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (std::uint32_t{1} << i)) sub.push_back(s[i]);
        f(sub);
    }
}

/// Counts of sets by dimension; counts[k] is the number of sets with k+1 elements.
struct FVector {
    std::vector<std::size_t> counts;

    std::size_t operator[](std::size_t k) const { return k < counts.size() ? counts[k] : 0; }
    std::size_t size() const { return counts.size(); }
    bool operator==(const FVector&) const = default;
};

/// A finite abstract simplicial complex: a downward-closed family of non-empty
/// sets, stored in canonical order so that equality is syntactic.
class Complex {
public:
    Complex() = default;

    /// Downward closure of the given facets.
    static Complex from_facets(const std::vector<Simplex>& facets) {
        std::set<Simplex, CanonicalLess> all;
        for (auto f : facets) {
            normalize(f);
            if (f.empty()) throw Error(Errc::InvalidInput, "empty facet");
            if (f.size() > kMaxSetSize)
                throw Error(Errc::SizeLimit, "facet " + to_string(f) + " exceeds cardinality cap");
            if (all.count(f)) continue;
            for_each_nonempty_subset(f, [&](const Simplex& s) { all.insert(s); });
        }
        return Complex(std::vector<Simplex>(all.begin(), all.end()));
    }

    /// Accepts the family iff it is downward closed, duplicate free and has no
    /// empty set. Reports the first offending set in canonical order.
    static Complex validate(std::vector<Simplex> sets) {
        for (auto& s : sets) {
            if (s.empty()) throw Error(Errc::EmptySet, "the empty set is not allowed");
            std::sort(s.begin(), s.end());
            if (std::adjacent_find(s.begin(), s.end()) != s.end())
                throw Error(Errc::InvalidInput, "repeated label in " + to_string(s));
            if (s.size() > kMaxSetSize)
                throw Error(Errc::SizeLimit, "set " + to_string(s) + " exceeds cardinality cap");
        }
        std::sort(sets.begin(), sets.end(), CanonicalLess{});
        auto dup = std::adjacent_find(sets.begin(), sets.end());
        if (dup != sets.end()) throw Error(Errc::Duplicate, "duplicate set " + to_string(*dup));

        Complex c(std::move(sets));
        for (const auto& x : c.sets_) {
            if (x.size() < 2) continue;
            bool closed = true;
            Simplex face;
            for (std::size_t drop = 0; drop < x.size() && closed; ++drop) {
                face.assign(x.begin(), x.end());
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
                closed = c.contains(face);
            }
            if (closed) continue;
            std::optional<Simplex> smallest;
            for_each_nonempty_subset(x, [&](const Simplex& s) {
                if (s.size() == x.size() || c.contains(s)) return;
                if (!smallest || CanonicalLess{}(s, *smallest)) smallest = s;
            });
            throw MissingFaceError(x, *smallest,
                                   "set " + to_string(x) + " is missing face " + to_string(*smallest));
        }
        return c;
    }

    const std::vector<Simplex>& sets() const noexcept { return sets_; }
    std::size_t size() const noexcept { return sets_.size(); }
    bool empty() const noexcept { return sets_.empty(); }
    const Simplex& operator[](std::size_t i) const { return sets_[i]; }
    auto begin() const { return sets_.begin(); }
    auto end() const { return sets_.end(); }

    std::optional<std::size_t> index_of(const Simplex& s) const {
        auto it = std::lower_bound(sets_.begin(), sets_.end(), s, CanonicalLess{});
        if (it == sets_.end() || *it != s) return std::nullopt;
        return static_cast<std::size_t>(it - sets_.begin());
    }
    bool contains(const Simplex& s) const { return index_of(s).has_value(); }

    /// -1 for the empty complex.
    int dimension() const { return sets_.empty() ? -1 : static_cast<int>(sets_.back().size()) - 1; }

    /// The labels of the 0-dimensional sets, ascending.
    std::vector<Label> vertices() const {
        std::vector<Label> v;
        for (const auto& s : sets_) {
            if (s.size() != 1) break;
            v.push_back(s[0]);
        }
        return v;
    }

    FVector f_vector() const {
        FVector f;
        for (const auto& s : sets_) {
            if (f.counts.size() < s.size()) f.counts.resize(s.size(), 0);
            ++f.counts[s.size() - 1];
        }
        return f;
    }

    long long euler_characteristic() const {
        long long chi = 0;
        for (const auto& s : sets_) chi += (s.size() % 2 == 1) ? 1 : -1;
        return chi;
    }

    /// Maximal sets, in canonical order.
    std::vector<Simplex> facets() const {
        std::vector<Simplex> out;
        for (std::size_t i = 0; i < sets_.size(); ++i) {
            bool maximal = true;
            for (std::size_t j = i + 1; j < sets_.size() && maximal; ++j)
                if (sets_[j].size() > sets_[i].size() && is_subset(sets_[i], sets_[j])) maximal = false;
            if (maximal) out.push_back(sets_[i]);
        }
        return out;
    }

    /// Applies a label map; the map must be injective on the labels in use.
    template <class F>
    Complex relabeled(F&& map) const {
        std::vector<Simplex> out;
        out.reserve(sets_.size());
        for (const auto& s : sets_) {
            Simplex t;
            t.reserve(s.size());
            for (auto v : s) t.push_back(static_cast<Label>(map(v)));
            out.push_back(std::move(t));
        }
        return validate(std::move(out));
    }

    bool operator==(const Complex&) const = default;

private:
    explicit Complex(std::vector<Simplex> canonical) : sets_(std::move(canonical)) {}

    static void normalize(Simplex& s) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
    }

    std::vector<Simplex> sets_;
};

inline FVector f_vector(const Complex& g) { return g.f_vector(); }
inline long long euler_characteristic(const Complex& g) { return g.euler_characteristic(); }

/// Indices j < i of the proper subsets of every set i, via subset lookup.
inline std::vector<std::vector<std::size_t>> proper_subsets(const Complex& g) {
    std::vector<std::vector<std::size_t>> below(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto& x = g[i];
        for_each_nonempty_subset(x, [&](const Simplex& s) {
            if (s.size() == x.size()) return;
            below[i].push_back(*g.index_of(s));
        });
        std::sort(below[i].begin(), below[i].end());
    }
    return below;
}

/// Barycentric refinement: the complex of non-empty chains x1 ⊂ x2 ⊂ ... of
/// sets of g. The set with canonical index i becomes the label i+1.
inline Complex barycentric_refine(const Complex& g) {
    const auto below = proper_subsets(g);
    std::vector<Simplex> chains;
    Simplex chain;
    // Chains are grown downward from their largest element.
    auto grow = [&](auto&& self, std::size_t top) -> void {
        for (auto j : below[top]) {
            chain.push_back(static_cast<Label>(j + 1));
            Simplex sorted(chain);
            std::sort(sorted.begin(), sorted.end());
            chains.push_back(std::move(sorted));
            self(self, j);
            chain.pop_back();
        }
    };
    for (std::size_t i = 0; i < g.size(); ++i) {
        chain.assign(1, static_cast<Label>(i + 1));
        chains.push_back(chain);
        grow(grow, i);
    }
    return Complex::validate(std::move(chains));
}

/// The cells x × y of g × h in row-major order (index i·|h| + j).
inline std::vector<std::pair<std::size_t, std::size_t>> product_cells(const Complex& g, const Complex& h) {
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    cells.reserve(g.size() * h.size());
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < h.size(); ++j) cells.emplace_back(i, j);
    return cells;
}

}  // namespace conngraph
