#include "strongcolor/solver.hpp"

#include <string>
#include <variant>

#include "strongcolor/error.hpp"

namespace strongcolor {

SolveStats& SolveStats::operator+=(const SolveStats& o) {
    peeled_edges += o.peeled_edges;
    c4_extensions += o.c4_extensions;
    c6_extensions += o.c6_extensions;
    long_cycle_extensions += o.long_cycle_extensions;
    k23_base_cases += o.k23_base_cases;
    fallback_uses += o.fallback_uses;
    sdr_calls += o.sdr_calls;
    return *this;
}

ReductionState::ReductionState(const BipartiteGraph& b)
    : graph_(&b), alive_(b.edge_count(), 1), degree_(b.vertex_count()), in_focus_(b.vertex_count(), 0),
      live_edges_(0) {
    for (VertexId v = 0; v < b.vertex_count(); ++v) degree_[v] = b.graph().degree(v);
}

void ReductionState::focus(std::span<const VertexId> vertices) {
    for (VertexId v : focused_) in_focus_[v] = 0;
    focused_.assign(vertices.begin(), vertices.end());
    low_.clear();
    live_edges_ = 0;
    for (VertexId v : vertices) in_focus_[v] = 1;
    for (VertexId v : vertices) {
        for (const auto& [e, w] : graph_->graph().neighbors(v))
            if (alive_[e] && v < w) ++live_edges_;
        refresh(v);
    }
}

void ReductionState::refresh(VertexId v) {
    const std::size_t d = degree_[v];
    const bool low = in_focus_[v] && d >= 1 && (graph_->part(v) == Part::A ? d <= 1 : d <= 2);
    if (low)
        low_.insert(v);
    else
        low_.erase(v);
}

void ReductionState::remove_edge(EdgeId e) {
    ensure(alive_[e] != 0, "removing dead edge " + std::to_string(e));
    alive_[e] = 0;
    const auto [a, b] = graph_->graph().endpoints(e);
    if (in_focus_[a]) --live_edges_;
    --degree_[a];
    --degree_[b];
    refresh(a);
    refresh(b);
}

void ReductionState::remove_vertex(VertexId v) {
    for (const auto& [e, w] : graph_->graph().neighbors(v))
        if (alive_[e]) remove_edge(e);
}

std::optional<VertexId> ReductionState::next_low() const {
    if (low_.empty()) return std::nullopt;
    return *low_.begin();
}

std::optional<EdgeId> ReductionState::lowest_live_edge(VertexId v) const {
    for (const auto& [e, w] : graph_->graph().neighbors(v))
        if (alive_[e]) return e;  // adjacency is sorted by edge id
    return std::nullopt;
}

std::optional<EdgeId> peel_step(ReductionState& state, std::vector<EdgeId>& deferred) {
    const auto v = state.next_low();
    if (!v) return std::nullopt;
    const auto e = state.lowest_live_edge(*v);
    ensure(e.has_value(), "low vertex without live edge");
    state.remove_edge(*e);
    deferred.push_back(*e);
    return e;
}

namespace {

// A peeled edge ab had deg(a) <= 1 or deg(b) <= 2 in the live graph, so at most
// 3(deg(a)-1) + 2(deg(b)-1) <= 5 of its conflicts were colored before it.
void color_deferred(SolveContext& ctx, EdgeId e) {
    std::size_t colored = 0;
    for (EdgeId f : ctx.conflicts[e]) colored += ctx.coloring[f].has_value() ? 1 : 0;
    ensure(colored <= 5, "peeled edge " + std::to_string(e) + " has " + std::to_string(colored) + " colored conflicts");
    const ColorList avail = ctx.available(e);
    ensure(!avail.empty(), "peeled edge " + std::to_string(e) + " has no available color");
    ctx.coloring[e] = avail.front();
}

using Step = std::variant<EdgeId, CycleDescriptor>;

void check_core(const BipartiteGraph& b, const ReductionState& st, std::span<const VertexId> vertices) {
    for (VertexId v : vertices) {
        const std::size_t d = st.live_degree(v);
        ensure(d == 0 || d == (b.part(v) == Part::A ? 2u : 3u),
               "vertex " + std::to_string(v) + " left with live degree " + std::to_string(d) + " after peeling");
    }
}

void unwind(SolveContext& ctx, std::vector<Step>& steps) {
    while (!steps.empty()) {
        const Step step = std::move(steps.back());
        steps.pop_back();
        if (const auto* e = std::get_if<EdgeId>(&step)) {
            color_deferred(ctx, *e);
            continue;
        }
        const auto& cycle = std::get<CycleDescriptor>(step);
        if (cycle.length() == 4)
            extend_c4(ctx, cycle);
        else if (cycle.length() == 6)
            extend_c6(ctx, cycle);
        else
            extend_long_cycle(ctx, cycle);
    }
}

} // namespace

void greedy_unwind(SolveContext& ctx, std::vector<EdgeId>& deferred) {
    while (!deferred.empty()) {
        const EdgeId e = deferred.back();
        deferred.pop_back();
        color_deferred(ctx, e);
    }
}

StrongSolution color_strong_23(const BipartiteGraph& b, const ListAssignment& lists) {
    b.require_two_three();
    if (lists.size() != b.edge_count())
        fail(ErrorKind::ListTooSmall, "lists given for " + std::to_string(lists.size()) + " of " +
                                          std::to_string(b.edge_count()) + " edges");
    for (EdgeId e = 0; e < b.edge_count(); ++e)
        if (lists[e].size() < 6)
            fail(ErrorKind::ListTooSmall, "edge " + std::to_string(e) + " has a list of size " +
                                              std::to_string(lists[e].size()));

    const ConflictGraph cg = build_conflict_graph(b);
    SolveContext ctx(b, lists, cg);
    ReductionState state(b);
    std::vector<EdgeId> peeled;
    std::vector<Step> steps;
    for (const auto& comp : components(b.graph())) {
        state.focus(comp);
        while (state.live_edges() > 0) {
            while (peel_step(state, peeled)) {
            }
            ctx.stats.peeled_edges += peeled.size();
            for (EdgeId e : peeled) steps.emplace_back(e);
            peeled.clear();
            if (state.live_edges() == 0) break;

            check_core(b, state, comp);
            std::vector<VertexId> starts;
            for (VertexId v : comp)
                if (state.live_degree(v) > 0) starts.push_back(v);
            auto cycle = shortest_cycle_in(b, state.mask(), starts);
            ensure(cycle.has_value(), "non-empty (2,3)-regular core without a cycle");
            for (VertexId v : cycle->vertices) state.remove_vertex(v);
            steps.emplace_back(std::move(*cycle));
        }
        unwind(ctx, steps);
    }
    return {std::move(ctx.coloring), ctx.stats};
}

IncidenceSolution color_incidence(const Multigraph& g, const IncidenceLists& lists) {
    if (g.max_degree() > 3)
        fail(ErrorKind::DegreeTooHigh, "maximum degree " + std::to_string(g.max_degree()) + " > 3");
    if (lists.size() != 2 * g.edge_count())
        fail(ErrorKind::ListTooSmall, "lists given for " + std::to_string(lists.size()) + " of " +
                                          std::to_string(2 * g.edge_count()) + " incidences");
    const SubdivisionMap sub = subdivide(g);
    // incidence index i is subdivided edge i
    StrongSolution s = color_strong_23(sub.bipartite, ListAssignment(lists));
    IncidenceSolution out{std::vector<Color>(lists.size()), s.stats};
    for (std::size_t i = 0; i < lists.size(); ++i) out.coloring[i] = *s.coloring[i];
    return out;
}

} // namespace strongcolor
