#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "strongcolor/conflict.hpp"

namespace strongcolor {

/// A handful of uncolored edges with their own entry lists. The entry lists
/// already exclude colors of colored edges outside the set; conflicts inside
/// the set come from the global conflict graph. Positions 0..size()-1 are the
/// roles a procedure gives the edges.
class LocalColoring {
public:
    LocalColoring(std::vector<EdgeId> edges, std::vector<ColorList> lists, const ConflictGraph& cg);

    std::size_t size() const { return edges_.size(); }
    EdgeId edge(std::size_t i) const { return edges_[i]; }
    bool conflicts(std::size_t i, std::size_t j) const;
    const ColorList& list(std::size_t i) const { return lists_[i]; }
    std::optional<Color> color(std::size_t i) const { return colors_[i]; }
    bool complete() const;

    ColorList available(std::size_t i) const;
    /// Throws InternalInvariant when c is not available.
    void assign(std::size_t i, Color c);
    /// Smallest available color satisfying pred; throws InternalInvariant if none.
    Color assign_first(std::size_t i, const std::function<bool(Color)>& pred, const char* step);
    /// Greedy step: smallest available color.
    Color assign_smallest(std::size_t i, const char* step);
    /// Replace list i by its available colors cut to the `size` smallest.
    /// Throws InternalInvariant when fewer than `size` are available.
    void truncate(std::size_t i, std::size_t size, const char* step);

    /// Colors the given positions with pairwise distinct colors when a system of
    /// distinct representatives exists; returns false (and leaves them
    /// uncolored) otherwise.
    bool assign_sdr(const std::vector<std::size_t>& positions);
    /// Exhaustive search over the uncolored positions (most constrained first,
    /// smallest color first). Returns false if no extension exists.
    bool complete_exhaustively();

    /// Writes colored positions into pc; with require_complete, all must be colored.
    void commit(PartialColoring& pc, bool require_complete = true) const;

private:
    std::vector<EdgeId> edges_;
    std::vector<ColorList> lists_;
    std::vector<std::vector<std::size_t>> local_conflicts_;
    std::vector<std::optional<Color>> colors_;
};

/// Smallest color in both lists.
std::optional<Color> first_common(const ColorList& a, const ColorList& b);
bool contains(const ColorList& l, Color c);
ColorList set_union(const ColorList& a, const ColorList& b);

} // namespace strongcolor
