#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "strongcolor/graph.hpp"

namespace strongcolor {

using Color = std::int32_t;
/// Sorted, duplicate-free.
using ColorList = std::vector<Color>;

/// L(e) for every edge id. Lists are normalized (sorted, unique) on construction.
class ListAssignment {
public:
    ListAssignment() = default;
    explicit ListAssignment(std::vector<ColorList> lists);
    /// Every edge gets {first, ..., first + k - 1}.
    static ListAssignment uniform(std::size_t edge_count, std::size_t k, Color first = 1);

    const ColorList& operator[](EdgeId e) const { return lists_[e]; }
    std::size_t size() const { return lists_.size(); }
    std::size_t min_size() const;
    const std::vector<ColorList>& lists() const { return lists_; }

    friend bool operator==(const ListAssignment&, const ListAssignment&) = default;

private:
    std::vector<ColorList> lists_;
};

/// Edge id -> optional color.
using PartialColoring = std::vector<std::optional<Color>>;

/// Strong-conflict sets, sorted by edge id.
class ConflictGraph {
public:
    ConflictGraph() = default;
    explicit ConflictGraph(std::vector<std::vector<EdgeId>> sets) : sets_(std::move(sets)) {}

    const std::vector<EdgeId>& operator[](EdgeId e) const { return sets_[e]; }
    std::size_t size() const { return sets_.size(); }
    bool conflict(EdgeId e, EdgeId f) const;
    std::size_t max_degree() const;

    friend bool operator==(const ConflictGraph&, const ConflictGraph&) = default;

private:
    std::vector<std::vector<EdgeId>> sets_;
};

/// Edges f != e sharing an endpoint with e or joined to e by a third edge.
/// Works for any multigraph; throws BadEdgeId.
std::vector<EdgeId> conflict_edges(const Multigraph& g, EdgeId e);
inline std::vector<EdgeId> conflict_edges(const BipartiteGraph& b, EdgeId e) { return conflict_edges(b.graph(), e); }

/// Conflict sets of all edges, built in parallel; symmetry is verified.
ConflictGraph build_conflict_graph(const BipartiteGraph& b);
ConflictGraph build_conflict_graph_serial(const BipartiteGraph& b);

/// Adjacency of two distinct incidences: same vertex, same edge, or one of
/// the two edges joins the two vertices.
bool incidence_adjacent(const Multigraph& g, Incidence i1, Incidence i2);

/// L(e) minus the colors of colored edges conflicting with e.
ColorList available(EdgeId e, const ListAssignment& lists, const PartialColoring& pc, const ConflictGraph& cg);

struct Violation {
    enum class Kind { Conflict, ListBreach, Uncolored, Unknown } kind;
    EdgeId first = 0;   // edge id, or incidence index in incidence mode
    EdgeId second = 0;  // other edge of a Conflict
    Color color = 0;

    friend bool operator==(const Violation&, const Violation&) = default;
};

/// Empty iff pc is a valid strong list edge-coloring (total if requested).
/// Pass an empty ListAssignment to skip list checks.
std::vector<Violation> verify_strong(const BipartiteGraph& b, const ListAssignment& lists,
                                     const PartialColoring& pc, bool require_total);

/// Incidence colorings are indexed by incidence_index.
using IncidenceColoring = std::vector<std::optional<Color>>;

/// Empty iff every incidence is colored and adjacent incidences differ.
std::vector<Violation> verify_incidence(const Multigraph& g, const IncidenceColoring& coloring);

/// Human-readable line; `incidence` selects "v:e" naming.
std::string describe(const Violation& v, const Multigraph* incidence_graph = nullptr);

} // namespace strongcolor
