// Extensions of a coloring over a removed shortest cycle and its pendant edges.

#include <algorithm>
#include <iostream>
#include <string>

#include "strongcolor/error.hpp"
#include "strongcolor/local_coloring.hpp"
#include "strongcolor/solver.hpp"

namespace strongcolor {
namespace {

// Cycle vertices rotated so that index 0 is the lowest-id vertex of part p;
// edges[i] joins vertices[i] and vertices[i+1].
struct Rotated {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;
};

Rotated rotate_to(const BipartiteGraph& b, const CycleDescriptor& c, Part p) {
    std::size_t start = c.length();
    for (std::size_t i = 0; i < c.length(); ++i)
        if (b.part(c.vertices[i]) == p && (start == c.length() || c.vertices[i] < c.vertices[start])) start = i;
    ensure(start < c.length(), "cycle has no vertex in the requested part");
    Rotated r;
    for (std::size_t k = 0; k < c.length(); ++k) {
        r.vertices.push_back(c.vertices[(start + k) % c.length()]);
        r.edges.push_back(c.edges[(start + k) % c.length()]);
    }
    return r;
}

const Pendant& pendant(const CycleDescriptor& c, VertexId v) {
    const Pendant* p = c.pendant_of(v);
    ensure(p != nullptr, "cycle vertex " + std::to_string(v) + " has no pendant edge");
    return *p;
}

LocalColoring local_from(const SolveContext& ctx, std::vector<EdgeId> edges) {
    std::vector<ColorList> lists;
    lists.reserve(edges.size());
    for (EdgeId e : edges) lists.push_back(ctx.available(e));
    return LocalColoring(std::move(edges), std::move(lists), ctx.conflicts);
}

// Runs the case chain; if it throws InternalInvariant, restarts from `entry`
// with an exhaustive search. Only used for configurations of at most 9 edges.
template <typename Chain>
void run_with_fallback(SolveContext& ctx, LocalColoring& lc, const char* name, Chain&& chain) {
    const LocalColoring entry = lc;
    try {
        chain(lc);
        ensure(lc.complete(), std::string(name) + " chain left an edge uncolored");
    } catch (const Error& err) {
        if (err.kind() != ErrorKind::InternalInvariant) throw;
        lc = entry;
        ensure(lc.complete_exhaustively(), std::string(name) + ": configuration admits no extension");
        ++ctx.stats.fallback_uses;
        std::clog << "strongcolor: warning: " << name << " case chain failed (" << err.what()
                  << "); used exhaustive fallback\n";
    }
}

void greedy(LocalColoring& lc, std::initializer_list<std::size_t> order, const char* step) {
    for (std::size_t i : order) lc.assign_smallest(i, step);
}

} // namespace

void extend_c4(SolveContext& ctx, const CycleDescriptor& cycle) {
    ensure(cycle.length() == 4, "extend_c4 on a cycle of length " + std::to_string(cycle.length()));
    const Rotated r = rotate_to(ctx.graph, cycle, Part::A);
    const Pendant& pv = pendant(cycle, r.vertices[1]);
    const Pendant& px = pendant(cycle, r.vertices[3]);
    enum : std::size_t { UV, VW, WX, XU, VV, XX };
    LocalColoring lc = local_from(ctx, {r.edges[0], r.edges[1], r.edges[2], r.edges[3], pv.edge, px.edge});

    if (pv.neighbor == px.neighbor) {
        // v' = x': the component is K_{2,3} and nothing around it is colored
        for (std::size_t i = 0; i < lc.size(); ++i) lc.truncate(i, 6, "K_{2,3} entry");
        ++ctx.stats.sdr_calls;
        ensure(lc.assign_sdr({UV, VW, WX, XU, VV, XX}), "K_{2,3}: six 6-lists without distinct representatives");
        ++ctx.stats.k23_base_cases;
        lc.commit(ctx.coloring);
        return;
    }

    for (std::size_t i : {UV, VW, WX, XU}) lc.truncate(i, 5, "C4 entry");
    for (std::size_t i : {VV, XX}) lc.truncate(i, 3, "C4 entry");
    run_with_fallback(ctx, lc, "C4", [&](LocalColoring& l) {
        if (set_union(l.available(VV), l.available(XX)).size() >= 6) {
            ++ctx.stats.sdr_calls;
            ensure(l.assign_sdr({VV, XX, UV, VW, WX, XU}), "C4: Hall failed");
        } else {
            // 3 + 3 > 5 forces a common color
            const auto alpha = first_common(l.available(VV), l.available(XX));
            ensure(alpha.has_value(), "C4: pendant lists neither large nor intersecting");
            l.assign(VV, *alpha);
            l.assign(XX, *alpha);
            greedy(l, {UV, VW, WX, XU}, "C4 greedy");
        }
    });
    ++ctx.stats.c4_extensions;
    lc.commit(ctx.coloring);
}

namespace {

// Positions in the C6 configuration u v w x y z (u, w, y in B).
enum C6 : std::size_t { UV, VW, WX, XY, YZ, ZU, UU, WW, YY };

// Rotation of the labels by r * 120 degrees (u -> w -> y).
std::size_t rot(std::size_t r, std::size_t i) { return i < 6 ? (i + 2 * r) % 6 : 6 + (i - 6 + r) % 3; }

struct SubCase {
    std::size_t p, q;                 // non-conflicting pair sharing a color
    std::array<std::size_t, 5> order; // greedy order of the other five
};

// With uv, xy sharing a color: pairs tried in order, each followed by a
// greedy order whose counts hold given that earlier pairs were disjoint.
constexpr std::array<SubCase, 9> kSharedOppositeCases{{
    {UU, YY, {WW, VW, WX, YZ, ZU}},
    {WW, YY, {UU, ZU, VW, YZ, WX}},
    {WW, UU, {YY, YZ, WX, ZU, VW}},
    {UU, WX, {YY, YZ, ZU, VW, WW}},
    {YY, VW, {UU, ZU, YZ, WX, WW}},
    {WW, ZU, {UU, YY, YZ, WX, VW}},
    {WW, YZ, {YY, UU, ZU, VW, WX}},
    {VW, YZ, {UU, WW, YY, WX, ZU}},
    {WX, ZU, {YY, UU, WW, VW, YZ}},
}};

bool c6_shared_opposite(SolveContext& ctx, LocalColoring& lc, std::size_t r) {
    auto at = [r](std::size_t i) { return rot(r, i); };
    const auto alpha = first_common(lc.available(at(UV)), lc.available(at(XY)));
    if (!alpha) return false;
    lc.assign(at(UV), *alpha);
    lc.assign(at(XY), *alpha);
    for (const SubCase& sc : kSharedOppositeCases) {
        const auto beta = first_common(lc.available(at(sc.p)), lc.available(at(sc.q)));
        if (!beta) continue;
        lc.assign(at(sc.p), *beta);
        lc.assign(at(sc.q), *beta);
        for (std::size_t i : sc.order) lc.assign_smallest(at(i), "C6 shared-opposite greedy");
        return true;
    }
    // every non-conflicting pair is disjoint, so any extension is rainbow
    ++ctx.stats.sdr_calls;
    ensure(lc.assign_sdr({at(UU), at(WW), at(YY), at(VW), at(WX), at(YZ), at(ZU)}),
           "C6: Hall fails on the seven edges left after the shared opposite pair");
    return true;
}

} // namespace

void extend_c6(SolveContext& ctx, const CycleDescriptor& cycle) {
    ensure(cycle.length() == 6, "extend_c6 on a cycle of length " + std::to_string(cycle.length()));
    const Rotated r = rotate_to(ctx.graph, cycle, Part::B);
    const Pendant& pu = pendant(cycle, r.vertices[0]);
    const Pendant& pw = pendant(cycle, r.vertices[2]);
    const Pendant& py = pendant(cycle, r.vertices[4]);
    LocalColoring lc = local_from(
        ctx, {r.edges[0], r.edges[1], r.edges[2], r.edges[3], r.edges[4], r.edges[5], pu.edge, pw.edge, py.edge});
    for (std::size_t i = UV; i <= ZU; ++i) lc.truncate(i, 5, "C6 entry");
    for (std::size_t i : {UU, WW, YY}) lc.truncate(i, 3, "C6 entry");

    run_with_fallback(ctx, lc, "C6", [&](LocalColoring& l) {
        for (std::size_t rr = 0; rr < 3; ++rr)
            if (c6_shared_opposite(ctx, l, rr)) return;
        // all opposite pairs are disjoint: |L(uv) u L(xy)| = 10 and so on
        if (l.available(UU) == l.available(WW) && l.available(UU) == l.available(YY)) {
            const Color gamma = l.available(UU).front();
            for (std::size_t i : {UU, WW, YY}) l.assign(i, gamma);
            // gamma lies in at most one list of each opposite pair
            std::size_t last = 0;
            while (last < 6 && l.available(last).size() < 5) ++last;
            ensure(last < 6, "C6: no cycle edge kept five colors");
            for (std::size_t k = 1; k <= 6; ++k) l.assign_smallest((last + k) % 6, "C6 equal-pendant greedy");
            return;
        }
        ++ctx.stats.sdr_calls;
        ensure(l.assign_sdr({UU, WW, YY, UV, VW, WX, XY, YZ, ZU}), "C6: Hall fails on nine edges");
    });
    ++ctx.stats.c6_extensions;
    lc.commit(ctx.coloring);
}

void extend_long_cycle(SolveContext& ctx, const CycleDescriptor& cycle) {
    const std::size_t n = cycle.length();
    ensure(n >= 8 && n % 2 == 0, "extend_long_cycle on a cycle of length " + std::to_string(n));
    const Rotated r = rotate_to(ctx.graph, cycle, Part::A);
    // v[i] = v_{i+1}; even-numbered v_i (odd index) are in B
    const auto& v = r.vertices;
    auto third = [&](std::size_t i) { return pendant(cycle, v[i - 1]).neighbor; };  // v'_i
    for (std::size_t i = 0; i < n; ++i) {
        ensure(ctx.available(r.edges[i]).size() >= 5, "long cycle entry: cycle edge with fewer than 5 colors");
        if (i % 2 == 1)
            ensure(ctx.available(pendant(cycle, v[i]).edge).size() >= 3,
                   "long cycle entry: pendant edge with fewer than 3 colors");
    }

    // Step 1: v_1..v_5 with v'_2, v'_4
    const Lemma1Config c1 = make_lemma1_config(ctx.graph, {v[0], v[1], v[2], v[3], v[4]}, third(2), third(4));
    precolor_lemma1(ctx, c1);

    // Step 2: path v_5, v_6, ..., v_n, v_1 with pendants v'_6, ..., v'_n
    std::vector<VertexId> path(v.begin() + 4, v.end());
    path.push_back(v[0]);
    std::vector<VertexId> pendants;
    for (std::size_t i = 6; i <= n; i += 2) pendants.push_back(third(i));
    color_lemma2(ctx, make_lemma2_config(ctx.graph, std::move(path), std::move(pendants)));

    // Step 3: |L(v_2 v_3)| >= 2 and |L(v_3 v_4)| >= 1; color v_3 v_4 first
    ensure(ctx.available(c1.vw).size() >= 2 && !ctx.available(c1.wx).empty(),
           "long cycle step 3: residual lists below (2, 1)");
    for (EdgeId edge : {c1.wx, c1.vw}) {
        const ColorList avail = ctx.available(edge);
        ensure(!avail.empty(), "long cycle step 3: edge " + std::to_string(edge) + " has no color left");
        ctx.coloring[edge] = avail.front();
    }
    ++ctx.stats.long_cycle_extensions;
}

} // namespace strongcolor
