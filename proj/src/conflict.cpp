#include "strongcolor/conflict.hpp"

#include <algorithm>
#include <string>

#include "strongcolor/error.hpp"

namespace strongcolor {

ListAssignment::ListAssignment(std::vector<ColorList> lists) : lists_(std::move(lists)) {
    for (auto& l : lists_) {
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
    }
}

ListAssignment ListAssignment::uniform(std::size_t edge_count, std::size_t k, Color first) {
    ColorList base(k);
    for (std::size_t i = 0; i < k; ++i) base[i] = first + static_cast<Color>(i);
    return ListAssignment(std::vector<ColorList>(edge_count, base));
}

std::size_t ListAssignment::min_size() const {
    std::size_t m = lists_.empty() ? 0 : lists_.front().size();
    for (const auto& l : lists_) m = std::min(m, l.size());
    return m;
}

bool ConflictGraph::conflict(EdgeId e, EdgeId f) const {
    return std::binary_search(sets_[e].begin(), sets_[e].end(), f);
}

std::size_t ConflictGraph::max_degree() const {
    std::size_t d = 0;
    for (const auto& s : sets_) d = std::max(d, s.size());
    return d;
}

std::vector<EdgeId> conflict_edges(const Multigraph& g, EdgeId e) {
    if (!g.has_edge(e)) fail(ErrorKind::BadEdgeId, "edge " + std::to_string(e));
    std::vector<EdgeId> out;
    const auto [a, b] = g.endpoints(e);
    for (VertexId end : {a, b}) {
        for (const auto& [f, w] : g.neighbors(end)) {
            if (f != e) out.push_back(f);
            // edges at w are joined to e by f
            for (const auto& [h, unused] : g.neighbors(w)) {
                (void)unused;
                if (h != e) out.push_back(h);
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

void check_symmetric(const std::vector<std::vector<EdgeId>>& sets) {
    for (EdgeId e = 0; e < sets.size(); ++e)
        for (EdgeId f : sets[e])
            ensure(std::binary_search(sets[f].begin(), sets[f].end(), e),
                   "conflict relation not symmetric at " + std::to_string(e) + "," + std::to_string(f));
}

} // namespace

ConflictGraph build_conflict_graph(const BipartiteGraph& b) {
    const auto m = static_cast<std::ptrdiff_t>(b.edge_count());
    std::vector<std::vector<EdgeId>> sets(b.edge_count());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t e = 0; e < m; ++e) sets[static_cast<std::size_t>(e)] = conflict_edges(b.graph(), static_cast<EdgeId>(e));
    check_symmetric(sets);
    return ConflictGraph(std::move(sets));
}

ConflictGraph build_conflict_graph_serial(const BipartiteGraph& b) {
    std::vector<std::vector<EdgeId>> sets(b.edge_count());
    for (EdgeId e = 0; e < b.edge_count(); ++e) sets[e] = conflict_edges(b.graph(), e);
    check_symmetric(sets);
    return ConflictGraph(std::move(sets));
}

bool incidence_adjacent(const Multigraph& g, Incidence i1, Incidence i2) {
    if (i1 == i2) return false;
    if (i1.vertex == i2.vertex || i1.edge == i2.edge) return true;
    auto joins = [&](EdgeId e) {
        const auto& [a, b] = g.endpoints(e);
        return (a == i1.vertex && b == i2.vertex) || (a == i2.vertex && b == i1.vertex);
    };
    return joins(i1.edge) || joins(i2.edge);
}

ColorList available(EdgeId e, const ListAssignment& lists, const PartialColoring& pc, const ConflictGraph& cg) {
    ColorList out = lists[e];
    for (EdgeId f : cg[e]) {
        if (!pc[f]) continue;
        auto it = std::lower_bound(out.begin(), out.end(), *pc[f]);
        if (it != out.end() && *it == *pc[f]) out.erase(it);
    }
    return out;
}

std::vector<Violation> verify_strong(const BipartiteGraph& b, const ListAssignment& lists,
                                     const PartialColoring& pc, bool require_total) {
    std::vector<Violation> out;
    const Multigraph& g = b.graph();
    const bool check_lists = lists.size() > 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto c = e < pc.size() ? pc[e] : std::nullopt;
        if (!c) {
            if (require_total) out.push_back({Violation::Kind::Uncolored, e, e, 0});
            continue;
        }
        if (check_lists && (e >= lists.size() || !std::binary_search(lists[e].begin(), lists[e].end(), *c)))
            out.push_back({Violation::Kind::ListBreach, e, e, *c});
        for (EdgeId f : conflict_edges(g, e))
            if (f > e && f < pc.size() && pc[f] == c) out.push_back({Violation::Kind::Conflict, e, f, *c});
    }
    for (std::size_t e = g.edge_count(); e < pc.size(); ++e)
        if (pc[e]) out.push_back({Violation::Kind::Unknown, static_cast<EdgeId>(e), static_cast<EdgeId>(e), *pc[e]});
    return out;
}

std::vector<Violation> verify_incidence(const Multigraph& g, const IncidenceColoring& coloring) {
    std::vector<Violation> out;
    const std::size_t count = 2 * g.edge_count();
    for (std::size_t i = 0; i < count; ++i) {
        const auto c = i < coloring.size() ? coloring[i] : std::nullopt;
        if (!c) {
            out.push_back({Violation::Kind::Uncolored, static_cast<EdgeId>(i), static_cast<EdgeId>(i), 0});
            continue;
        }
        const Incidence inc = incidence_at(g, i);
        // candidates: incidences of edges at inc.vertex or at the other end of inc.edge
        std::vector<std::size_t> candidates;
        for (VertexId end : {inc.vertex, g.other_end(inc.edge, inc.vertex)})
            for (const auto& adj : g.neighbors(end)) {
                candidates.push_back(2 * std::size_t{adj.edge});
                candidates.push_back(2 * std::size_t{adj.edge} + 1);
            }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (std::size_t j : candidates) {
            if (j <= i || j >= coloring.size() || coloring[j] != c) continue;
            if (incidence_adjacent(g, inc, incidence_at(g, j)))
                out.push_back({Violation::Kind::Conflict, static_cast<EdgeId>(i), static_cast<EdgeId>(j), *c});
        }
    }
    for (std::size_t i = count; i < coloring.size(); ++i)
        if (coloring[i]) out.push_back({Violation::Kind::Unknown, static_cast<EdgeId>(i), static_cast<EdgeId>(i), *coloring[i]});
    return out;
}

std::string describe(const Violation& v, const Multigraph* incidence_graph) {
    auto name = [&](EdgeId x) {
        if (!incidence_graph) return "edge " + std::to_string(x);
        const Incidence inc = incidence_at(*incidence_graph, x);
        return "incidence " + std::to_string(inc.vertex) + ":" + std::to_string(inc.edge);
    };
    switch (v.kind) {
    case Violation::Kind::Conflict:
        return "conflict: " + name(v.first) + " and " + name(v.second) + " share color " + std::to_string(v.color);
    case Violation::Kind::ListBreach:
        return "list: " + name(v.first) + " has color " + std::to_string(v.color) + " outside its list";
    case Violation::Kind::Uncolored:
        return "uncolored: " + name(v.first);
    case Violation::Kind::Unknown:
        return "unknown: " + name(v.first) + " is not part of the graph";
    }
    return {};
}

} // namespace strongcolor
