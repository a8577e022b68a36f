#pragma once

#include <optional>
#include <vector>

#include "strongcolor/conflict.hpp"

namespace strongcolor {

/// left vertex -> matched right vertex (or nullopt).
using Matching = std::vector<std::optional<std::size_t>>;

/// Maximum-cardinality bipartite matching by augmenting paths (Kuhn).
/// Left vertices are processed in order and adjacency in the given order,
/// so sorted adjacency gives a deterministic result.
Matching max_matching(std::size_t left_count, std::size_t right_count,
                      const std::vector<std::vector<std::size_t>>& adjacency);

std::size_t matching_size(const Matching& m);

/// Items to receive pairwise-distinct colors, one from each list.
struct SdrProblem {
    std::vector<EdgeId> items;
    std::vector<ColorList> lists;  // aligned with items
};

/// A system of distinct representatives (aligned with items), or nullopt.
std::optional<std::vector<Color>> rainbow_sdr(const SdrProblem& p);

/// A subset S of item positions with |S| > |union of lists|, or nullopt when
/// Hall's condition holds. Exponential; throws TooLarge above 20 items.
std::optional<std::vector<std::size_t>> hall_witness(const SdrProblem& p);

} // namespace strongcolor
