#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace strongcolor {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using Endpoints = std::pair<VertexId, VertexId>;

struct Adjacent {
    EdgeId edge;
    VertexId neighbor;

    friend bool operator==(const Adjacent&, const Adjacent&) = default;
};

/// Loopless undirected multigraph with dense vertex ids 0..n-1 and edge ids 0..m-1.
/// Adjacency lists are sorted by edge id.
class Multigraph {
public:
    Multigraph() = default;
    /// Throws LoopEdge / BadVertexId.
    Multigraph(std::size_t vertex_count, std::vector<Endpoints> edges);

    std::size_t vertex_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const Endpoints& endpoints(EdgeId e) const { return edges_[e]; }
    std::span<const Endpoints> edges() const { return edges_; }
    std::span<const Adjacent> neighbors(VertexId v) const { return adjacency_[v]; }
    std::size_t degree(VertexId v) const { return adjacency_[v].size(); }
    std::size_t max_degree() const;
    VertexId other_end(EdgeId e, VertexId v) const;
    bool has_vertex(VertexId v) const { return v < vertex_count(); }
    bool has_edge(EdgeId e) const { return e < edge_count(); }
    /// True if some edge joins a and b.
    bool adjacent(VertexId a, VertexId b) const;

    friend bool operator==(const Multigraph&, const Multigraph&) = default;

private:
    std::vector<Endpoints> edges_;
    std::vector<std::vector<Adjacent>> adjacency_;
};

Multigraph build_multigraph(std::size_t vertex_count, std::vector<Endpoints> endpoint_pairs);

enum class Part : std::uint8_t { A, B };

/// Simple bipartite graph with a fixed part labeling. Construction checks that
/// every edge crosses the parts and that there are no parallel edges.
class BipartiteGraph {
public:
    BipartiteGraph() = default;
    /// Throws NotBipartite (edge inside a part) or NotTwoThree (parallel edges, bad label count).
    BipartiteGraph(Multigraph graph, std::vector<Part> part_of);

    const Multigraph& graph() const { return graph_; }
    Part part(VertexId v) const { return part_of_[v]; }
    std::span<const Part> parts() const { return part_of_; }
    std::size_t vertex_count() const { return graph_.vertex_count(); }
    std::size_t edge_count() const { return graph_.edge_count(); }
    /// The A-side and B-side endpoint of an edge.
    VertexId a_end(EdgeId e) const;
    VertexId b_end(EdgeId e) const;

    std::size_t max_degree(Part p) const;
    bool is_two_three() const { return max_degree(Part::A) <= 2 && max_degree(Part::B) <= 3; }
    /// Throws NotTwoThree unless deg(a) <= 2 on A and deg(b) <= 3 on B.
    void require_two_three() const;

    friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

private:
    Multigraph graph_;
    std::vector<Part> part_of_;
};

/// (v, e) with v an endpoint of e.
struct Incidence {
    VertexId vertex;
    EdgeId edge;

    friend auto operator<=>(const Incidence&, const Incidence&) = default;
};

/// Incidences are numbered 2e (first endpoint of e) and 2e+1 (second endpoint).
std::size_t incidence_index(const Multigraph& g, Incidence i);
Incidence incidence_at(const Multigraph& g, std::size_t index);
std::vector<Incidence> incidences(const Multigraph& g);

/// Result of subdividing every edge once. Original vertices keep their ids and
/// go to part B; the midpoint of edge e is vertex n + e in part A. The two
/// halves of edge e are edges 2e (first endpoint) and 2e+1 (second endpoint),
/// so incidence index and subdivided edge id coincide.
struct SubdivisionMap {
    BipartiteGraph bipartite;
    std::vector<VertexId> edge_to_mid;

    EdgeId incidence_to_edge(const Multigraph& g, Incidence i) const {
        return static_cast<EdgeId>(incidence_index(g, i));
    }
};

SubdivisionMap subdivide(const Multigraph& g);

/// Labels parts so that every degree-3 vertex is in B and each component fits
/// (2,3). The lowest-id vertex of a component is put in B when both labelings
/// work. Throws NotBipartite or NotTwoThree.
BipartiteGraph infer_parts(const Multigraph& g);

/// Connected components, each sorted, ordered by their smallest vertex.
std::vector<std::vector<VertexId>> components(const Multigraph& g);

struct Pendant {
    VertexId vertex;  // cycle vertex of degree 3
    VertexId neighbor;
    EdgeId edge;
};

/// A cycle v_1..v_n given as vertices and the edges v_i v_{i+1} (cyclically),
/// plus the off-cycle edge of every degree-3 cycle vertex.
struct CycleDescriptor {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;
    std::vector<Pendant> pendants;

    std::size_t length() const { return vertices.size(); }
    const Pendant* pendant_of(VertexId v) const;
};

/// Shortest cycle of a (2,3)-bipartite graph, or nullopt for a forest.
/// The winner is the cycle found by BFS from the lowest-id start vertex among
/// those lying on a shortest cycle. Runs the per-source searches in parallel.
std::optional<CycleDescriptor> shortest_cycle(const BipartiteGraph& b);
/// Serial reference; same result as shortest_cycle.
std::optional<CycleDescriptor> shortest_cycle_serial(const BipartiteGraph& b);

/// Live-edge view used by the solver while it dismantles a graph.
struct EdgeMask {
    std::span<const std::uint8_t> alive;  // one flag per edge id
};

/// Shortest cycle among live edges, searching from `starts` (ascending).
/// Pendants are the live off-cycle edges. Serial.
std::optional<CycleDescriptor> shortest_cycle_in(const BipartiteGraph& b, EdgeMask mask,
                                                 std::span<const VertexId> starts);

} // namespace strongcolor
