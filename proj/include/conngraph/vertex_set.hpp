#pragma once

#include <boost/dynamic_bitset.hpp>
#include <boost/functional/hash.hpp>

#include <cstddef>
#include <cstdint>
#include <vector>

namespace conngraph {

/// Subset of the vertices 0..n-1 of one ambient graph.
using VertexSet = boost::dynamic_bitset<std::uint64_t>;

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const {
        std::vector<std::uint64_t> blocks;
        blocks.reserve(s.num_blocks());
        boost::to_block_range(s, std::back_inserter(blocks));
        std::size_t seed = s.size();
        boost::hash_range(seed, blocks.begin(), blocks.end());
        return seed;
    }
};

inline VertexSet make_set(std::size_t n, const std::vector<std::size_t>& members) {
    VertexSet s(n);
    for (auto v : members) s.set(v);
    return s;
}

inline VertexSet full_set(std::size_t n) {
    VertexSet s(n);
    s.set();
    return s;
}

inline std::vector<std::size_t> members(const VertexSet& s) {
    std::vector<std::size_t> out;
    out.reserve(s.count());
    for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) out.push_back(v);
    return out;
}

template <class F>
void for_each_member(const VertexSet& s, F&& f) {
    for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) f(v);
}

}  // namespace conngraph
