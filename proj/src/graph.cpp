#include "strongcolor/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "strongcolor/error.hpp"

namespace strongcolor {

Multigraph::Multigraph(std::size_t vertex_count, std::vector<Endpoints> edges)
    : edges_(std::move(edges)), adjacency_(vertex_count) {
    for (EdgeId e = 0; e < edges_.size(); ++e) {
        auto [a, b] = edges_[e];
        if (a >= vertex_count || b >= vertex_count)
            fail(ErrorKind::BadVertexId, "edge " + std::to_string(e) + " has endpoint outside 0.." +
                                             std::to_string(vertex_count));
        if (a == b) fail(ErrorKind::LoopEdge, "edge " + std::to_string(e) + " is a loop at " + std::to_string(a));
        adjacency_[a].push_back({e, b});
        adjacency_[b].push_back({e, a});
    }
}

std::size_t Multigraph::max_degree() const {
    std::size_t d = 0;
    for (const auto& adj : adjacency_) d = std::max(d, adj.size());
    return d;
}

VertexId Multigraph::other_end(EdgeId e, VertexId v) const {
    const auto& [a, b] = edges_[e];
    return v == a ? b : a;
}

bool Multigraph::adjacent(VertexId a, VertexId b) const {
    return std::any_of(adjacency_[a].begin(), adjacency_[a].end(),
                       [b](const Adjacent& x) { return x.neighbor == b; });
}

Multigraph build_multigraph(std::size_t vertex_count, std::vector<Endpoints> endpoint_pairs) {
    return Multigraph(vertex_count, std::move(endpoint_pairs));
}

BipartiteGraph::BipartiteGraph(Multigraph graph, std::vector<Part> part_of)
    : graph_(std::move(graph)), part_of_(std::move(part_of)) {
    if (part_of_.size() != graph_.vertex_count())
        fail(ErrorKind::NotTwoThree, "part labeling covers " + std::to_string(part_of_.size()) + " of " +
                                         std::to_string(graph_.vertex_count()) + " vertices");
    for (EdgeId e = 0; e < graph_.edge_count(); ++e) {
        auto [a, b] = graph_.endpoints(e);
        if (part_of_[a] == part_of_[b])
            fail(ErrorKind::NotBipartite, "edge " + std::to_string(e) + " lies inside one part");
    }
    for (VertexId v = 0; v < graph_.vertex_count(); ++v) {
        auto adj = graph_.neighbors(v);
        for (std::size_t i = 0; i < adj.size(); ++i)
            for (std::size_t j = i + 1; j < adj.size(); ++j)
                if (adj[i].neighbor == adj[j].neighbor)
                    fail(ErrorKind::NotTwoThree, "parallel edges " + std::to_string(adj[i].edge) + " and " +
                                                     std::to_string(adj[j].edge));
    }
}

VertexId BipartiteGraph::a_end(EdgeId e) const {
    auto [a, b] = graph_.endpoints(e);
    return part_of_[a] == Part::A ? a : b;
}

VertexId BipartiteGraph::b_end(EdgeId e) const {
    auto [a, b] = graph_.endpoints(e);
    return part_of_[a] == Part::B ? a : b;
}

std::size_t BipartiteGraph::max_degree(Part p) const {
    std::size_t d = 0;
    for (VertexId v = 0; v < vertex_count(); ++v)
        if (part_of_[v] == p) d = std::max(d, graph_.degree(v));
    return d;
}

void BipartiteGraph::require_two_three() const {
    for (VertexId v = 0; v < vertex_count(); ++v) {
        const std::size_t cap = part_of_[v] == Part::A ? 2 : 3;
        if (graph_.degree(v) > cap)
            fail(ErrorKind::NotTwoThree, "vertex " + std::to_string(v) + " has degree " +
                                             std::to_string(graph_.degree(v)) + " > " + std::to_string(cap));
    }
}

std::size_t incidence_index(const Multigraph& g, Incidence i) {
    if (!g.has_edge(i.edge)) fail(ErrorKind::BadEdgeId, "incidence edge " + std::to_string(i.edge));
    const auto& [a, b] = g.endpoints(i.edge);
    if (i.vertex == a) return 2 * std::size_t{i.edge};
    if (i.vertex == b) return 2 * std::size_t{i.edge} + 1;
    fail(ErrorKind::BadVertexId,
         "vertex " + std::to_string(i.vertex) + " is not an endpoint of edge " + std::to_string(i.edge));
}

Incidence incidence_at(const Multigraph& g, std::size_t index) {
    const auto e = static_cast<EdgeId>(index / 2);
    const auto& [a, b] = g.endpoints(e);
    return {index % 2 == 0 ? a : b, e};
}

std::vector<Incidence> incidences(const Multigraph& g) {
    std::vector<Incidence> out;
    out.reserve(2 * g.edge_count());
    for (std::size_t i = 0; i < 2 * g.edge_count(); ++i) out.push_back(incidence_at(g, i));
    return out;
}

SubdivisionMap subdivide(const Multigraph& g) {
    const std::size_t n = g.vertex_count();
    const std::size_t m = g.edge_count();
    std::vector<Endpoints> halves;
    halves.reserve(2 * m);
    std::vector<VertexId> mid(m);
    for (EdgeId e = 0; e < m; ++e) {
        mid[e] = static_cast<VertexId>(n + e);
        const auto& [a, b] = g.endpoints(e);
        halves.emplace_back(a, mid[e]);
        halves.emplace_back(b, mid[e]);
    }
    std::vector<Part> parts(n + m, Part::B);
    std::fill(parts.begin() + static_cast<std::ptrdiff_t>(n), parts.end(), Part::A);
    return {BipartiteGraph(Multigraph(n + m, std::move(halves)), std::move(parts)), std::move(mid)};
}

std::vector<std::vector<VertexId>> components(const Multigraph& g) {
    std::vector<std::vector<VertexId>> out;
    std::vector<std::uint8_t> seen(g.vertex_count(), 0);
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        if (seen[s]) continue;
        std::vector<VertexId> comp{s};
        seen[s] = 1;
        for (std::size_t head = 0; head < comp.size(); ++head)
            for (const auto& [e, w] : g.neighbors(comp[head]))
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

BipartiteGraph infer_parts(const Multigraph& g) {
    std::vector<Part> parts(g.vertex_count(), Part::B);
    std::vector<std::uint8_t> side(g.vertex_count(), 0);
    std::vector<std::uint8_t> seen(g.vertex_count(), 0);
    for (const auto& comp : components(g)) {
        // side 0 = same part as the anchor comp.front()
        std::vector<VertexId> queue{comp.front()};
        seen[comp.front()] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const VertexId v = queue[head];
            for (const auto& [e, w] : g.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    side[w] = side[v] ^ 1;
                    queue.push_back(w);
                } else if (side[w] == side[v]) {
                    fail(ErrorKind::NotBipartite, "odd cycle through edge " + std::to_string(e));
                }
            }
        }
        auto fits = [&](Part anchor_part) {
            return std::all_of(comp.begin(), comp.end(), [&](VertexId v) {
                const Part p = side[v] == 0 ? anchor_part : (anchor_part == Part::A ? Part::B : Part::A);
                return g.degree(v) <= (p == Part::A ? 2u : 3u);
            });
        };
        Part anchor;
        if (fits(Part::B))
            anchor = Part::B;
        else if (fits(Part::A))
            anchor = Part::A;
        else
            fail(ErrorKind::NotTwoThree, "component of vertex " + std::to_string(comp.front()) +
                                             " has no (2,3) labeling");
        for (VertexId v : comp) parts[v] = side[v] == 0 ? anchor : (anchor == Part::A ? Part::B : Part::A);
    }
    return BipartiteGraph(g, std::move(parts));
}

const Pendant* CycleDescriptor::pendant_of(VertexId v) const {
    auto it = std::find_if(pendants.begin(), pendants.end(), [v](const Pendant& p) { return p.vertex == v; });
    return it == pendants.end() ? nullptr : &*it;
}

} // namespace strongcolor
