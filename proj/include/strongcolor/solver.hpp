#pragma once

#include <array>
#include <optional>
#include <set>
#include <vector>

#include "strongcolor/conflict.hpp"
#include "strongcolor/graph.hpp"

namespace strongcolor {

struct SolveStats {
    std::size_t peeled_edges = 0;
    std::size_t c4_extensions = 0;
    std::size_t c6_extensions = 0;
    std::size_t long_cycle_extensions = 0;
    std::size_t k23_base_cases = 0;
    std::size_t fallback_uses = 0;
    std::size_t sdr_calls = 0;

    SolveStats& operator+=(const SolveStats& o);
    friend bool operator==(const SolveStats&, const SolveStats&) = default;
};

/// Mutable state of one solve. Everything but `coloring` and `stats` is borrowed.
struct SolveContext {
    const BipartiteGraph& graph;
    const ListAssignment& lists;
    const ConflictGraph& conflicts;
    PartialColoring coloring;
    SolveStats stats;

    SolveContext(const BipartiteGraph& b, const ListAssignment& l, const ConflictGraph& cg)
        : graph(b), lists(l), conflicts(cg), coloring(b.edge_count()) {}

    ColorList available(EdgeId e) const { return strongcolor::available(e, lists, coloring, conflicts); }
};

struct StrongSolution {
    PartialColoring coloring;
    SolveStats stats;
};

/// Strong list edge-coloring of a (2,3)-bipartite graph from lists of size >= 6.
/// Throws ListTooSmall, NotTwoThree, InternalInvariant.
StrongSolution color_strong_23(const BipartiteGraph& b, const ListAssignment& lists);

/// Lists per incidence, indexed by incidence_index.
using IncidenceLists = std::vector<ColorList>;

struct IncidenceSolution {
    std::vector<Color> coloring;  // indexed by incidence_index
    SolveStats stats;
};

/// Incidence coloring of a multigraph with max degree <= 3, through subdivision.
/// Throws DegreeTooHigh, ListTooSmall.
IncidenceSolution color_incidence(const Multigraph& g, const IncidenceLists& lists);

// ---------------------------------------------------------------------------
// Reduction: peeling low-degree vertices and removing cycles.

/// Live subgraph of one solve. Low vertices are A-vertices of live degree 1
/// and B-vertices of live degree 1 or 2.
class ReductionState {
public:
    explicit ReductionState(const BipartiteGraph& b);

    /// Restricts peeling candidates to `vertices` (one component).
    void focus(std::span<const VertexId> vertices);
    bool alive(EdgeId e) const { return alive_[e] != 0; }
    std::size_t live_degree(VertexId v) const { return degree_[v]; }
    std::size_t live_edges() const { return live_edges_; }
    EdgeMask mask() const { return {alive_}; }
    void remove_edge(EdgeId e);
    /// Removes every live edge at v.
    void remove_vertex(VertexId v);
    /// Lowest low vertex, if any.
    std::optional<VertexId> next_low() const;
    std::optional<EdgeId> lowest_live_edge(VertexId v) const;

private:
    void refresh(VertexId v);

    const BipartiteGraph* graph_;
    std::vector<std::uint8_t> alive_;
    std::vector<std::size_t> degree_;
    std::vector<std::uint8_t> in_focus_;
    std::vector<VertexId> focused_;
    std::set<VertexId> low_;
    std::size_t live_edges_ = 0;
};

/// Removes the lowest live edge of the lowest low vertex and pushes it on
/// `deferred`; nullopt when the live graph is empty or (2,3)-regular.
std::optional<EdgeId> peel_step(ReductionState& state, std::vector<EdgeId>& deferred);

/// Colors deferred edges in LIFO order, each with its smallest available color.
void greedy_unwind(SolveContext& ctx, std::vector<EdgeId>& deferred);

// ---------------------------------------------------------------------------
// Extensions over a removed shortest cycle. All off-configuration edges that
// remained after the cycle was removed must be colored.

/// 4-cycle u v w x with u, w in A: 4 cycle edges plus the pendants vv', xx'.
void extend_c4(SolveContext& ctx, const CycleDescriptor& cycle);
/// 6-cycle u v w x y z with u, w, y in B: 6 cycle edges plus uu', ww', yy'.
void extend_c6(SolveContext& ctx, const CycleDescriptor& cycle);
/// Cycle of even length >= 8: precolor_lemma1, color_lemma2 on the path, then the two
/// remaining edges.
void extend_long_cycle(SolveContext& ctx, const CycleDescriptor& cycle);

/// Path u v w x y with pendants vz, xt (u, w, y, z, t in A).
struct Lemma1Config {
    VertexId u, v, w, x, y, z, t;
    EdgeId uv, vw, wx, xy, vz, xt;
};

/// Residual colors of vw and wx after precolor_lemma1 (measured against the
/// truncated entry lists).
struct Lemma1Residual {
    ColorList vw;
    ColorList wx;
};

/// Reads the edges of the configuration from the graph; throws InternalInvariant
/// if the vertices do not form it.
Lemma1Config make_lemma1_config(const BipartiteGraph& b, std::array<VertexId, 5> path, VertexId z, VertexId t);

/// Colors uv, vz, xy, xt from lists truncated to (5, 3, 5, 3) so that vw keeps
/// >= 3 and wx >= 2 of their 5 colors. vw and wx stay uncolored.
Lemma1Residual precolor_lemma1(SolveContext& ctx, const Lemma1Config& cfg);

/// Path v_1..v_n (n odd >= 5) with pendant v'_i at every even i.
struct Lemma2Config {
    std::vector<VertexId> path;
    std::vector<VertexId> pendants;       // v'_2, v'_4, ..., v'_{n-1}
    std::vector<EdgeId> path_edges;       // v_i v_{i+1}
    std::vector<EdgeId> pendant_edges;    // v_{2k} v'_{2k}

    std::size_t n() const { return path.size(); }
};

Lemma2Config make_lemma2_config(const BipartiteGraph& b, std::vector<VertexId> path, std::vector<VertexId> pendants);

/// Entry list sizes required by color_lemma2 for path edge i (1-based) and for the
/// pendant at even position j.
std::size_t lemma2_path_size(std::size_t n, std::size_t i);
std::size_t lemma2_pendant_size(std::size_t n, std::size_t j);

/// Colors every edge of the configuration.
void color_lemma2(SolveContext& ctx, const Lemma2Config& cfg);

} // namespace strongcolor
