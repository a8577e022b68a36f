#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "strongcolor/conflict.hpp"
#include "strongcolor/graph.hpp"

namespace strongcolor {

/// SplitMix64. Each call to next() adds 0x9E3779B97F4A7C15 to the state and
/// returns the state mixed by xor-shift 30, multiply 0xBF58476D1CE4E5B9,
/// xor-shift 27, multiply 0x94D049BB133111EB, xor-shift 31.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    /// Uniform in [0, n) by rejection of draws below (2^64 - n) mod n. n > 0.
    std::uint64_t uniform_below(std::uint64_t n);

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[uniform_below(i)]);
    }

private:
    std::uint64_t state_;
};

/// Configuration model on 3n half-edges; the whole pairing is redrawn while it
/// contains a loop. Throws BadSize unless n is even and n >= 4.
Multigraph random_cubic(std::size_t n, std::uint64_t seed);

/// A-vertices are 0..nA-1, B-vertices nA..nA+nB-1. min(2nA, 3nB) shuffled
/// half-edges from each side are paired; the draw is repeated while it has a
/// parallel edge. Throws Infeasible when no simple draw turns up.
BipartiteGraph random_23_bipartite(std::size_t na, std::size_t nb, std::uint64_t seed);

/// Each list a uniform k-subset of {0..palette-1}. Throws BadSize if k > palette.
ListAssignment random_lists(std::size_t edge_count, std::size_t k, std::size_t palette, std::uint64_t seed);

using AnyGraph = std::variant<Multigraph, BipartiteGraph>;

/// Fixture catalog. Throws UnknownName.
AnyGraph named(std::string_view name);
std::vector<std::string> fixture_names();

/// The underlying multigraph of either alternative.
const Multigraph& underlying(const AnyGraph& g);

} // namespace strongcolor
