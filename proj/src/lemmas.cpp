// Path configurations used by the long-cycle extension.

#include <algorithm>
#include <string>

#include "strongcolor/error.hpp"
#include "strongcolor/local_coloring.hpp"
#include "strongcolor/solver.hpp"

namespace strongcolor {
namespace {

EdgeId edge_between(const Multigraph& g, VertexId a, VertexId b) {
    for (const auto& [e, w] : g.neighbors(a))
        if (w == b) return e;
    fail(ErrorKind::InternalInvariant, "vertices " + std::to_string(a) + " and " + std::to_string(b) + " not adjacent");
}

void require_distinct(std::vector<VertexId> vs, const char* what) {
    std::sort(vs.begin(), vs.end());
    ensure(std::adjacent_find(vs.begin(), vs.end()) == vs.end(), std::string(what) + ": repeated vertex");
}

LocalColoring local_from(const SolveContext& ctx, std::vector<EdgeId> edges) {
    std::vector<ColorList> lists;
    lists.reserve(edges.size());
    for (EdgeId e : edges) lists.push_back(ctx.available(e));
    return LocalColoring(std::move(edges), std::move(lists), ctx.conflicts);
}

} // namespace

Lemma1Config make_lemma1_config(const BipartiteGraph& b, std::array<VertexId, 5> path, VertexId z, VertexId t) {
    const auto& g = b.graph();
    const auto [u, v, w, x, y] = path;
    require_distinct({u, v, w, x, y, z, t}, "precolor_lemma1 configuration");
    ensure(b.part(v) == Part::B && b.part(x) == Part::B, "precolor_lemma1: v and x must be in B");
    return {u, v, w, x, y, z, t,
            edge_between(g, u, v), edge_between(g, v, w), edge_between(g, w, x),
            edge_between(g, x, y), edge_between(g, v, z), edge_between(g, x, t)};
}

Lemma1Residual precolor_lemma1(SolveContext& ctx, const Lemma1Config& cfg) {
    enum : std::size_t { UV, VW, WX, XY, VZ, XT };
    LocalColoring lc = local_from(ctx, {cfg.uv, cfg.vw, cfg.wx, cfg.xy, cfg.vz, cfg.xt});
    constexpr std::array<std::size_t, 6> sizes{5, 5, 5, 5, 3, 3};
    for (std::size_t i = 0; i < sizes.size(); ++i) lc.truncate(i, sizes[i], "precolor_lemma1 entry");

    auto av = [&](std::size_t i) { return lc.available(i); };
    // Smallest color in av(p) or av(q) outside `avoid`; returns (position, color).
    auto pick_outside = [&](std::size_t p, std::size_t q, const ColorList& avoid) {
        const ColorList both = set_union(av(p), av(q));
        auto it = std::find_if(both.begin(), both.end(), [&](Color c) { return !contains(avoid, c); });
        ensure(it != both.end(), "precolor_lemma1: pigeonhole choice failed");
        return std::pair{contains(av(p), *it) ? p : q, *it};
    };

    if (const auto alpha = first_common(av(VZ), av(XT))) {
        lc.assign(VZ, *alpha);
        lc.assign(XT, *alpha);
        if (const auto beta = first_common(av(UV), av(XY))) {
            lc.assign(UV, *beta);
            lc.assign(XY, *beta);
        } else {
            // one of uv, xy takes a color vw does not have
            const auto [first, c] = pick_outside(UV, XY, av(VW));
            lc.assign(first, c);
            lc.assign_smallest(first == UV ? XY : UV, "precolor_lemma1 case 1");
        }
    } else {
        // |L(vz) u L(xt)| = 6 > |L(vw)|
        const auto [e1, c] = pick_outside(VZ, XT, av(VW));
        const std::size_t e2 = e1 == VZ ? XT : VZ;
        lc.assign(e1, c);
        if (const auto beta = first_common(av(UV), av(XY))) {
            lc.assign(UV, *beta);
            lc.assign(XY, *beta);
        } else {
            // |L(uv) u L(xy)| >= 9 > |L(vw)|
            const auto [e3, alpha] = pick_outside(UV, XY, av(VW));
            const std::size_t e4 = e3 == UV ? XY : UV;
            lc.assign(e3, alpha);
            const ColorList wx = av(WX);
            lc.assign_first(e4, [&](Color beta) { return wx.size() - (contains(wx, beta) ? 1 : 0) >= 3; },
                            "precolor_lemma1 keeping |L(wx)| >= 3");
        }
        lc.assign_smallest(e2, "precolor_lemma1 last pendant");
    }

    Lemma1Residual res{av(VW), av(WX)};
    ensure(res.vw.size() >= 3 && res.wx.size() >= 2,
           "precolor_lemma1 postcondition: |L(vw)| = " + std::to_string(res.vw.size()) +
               ", |L(wx)| = " + std::to_string(res.wx.size()));
    lc.commit(ctx.coloring, false);
    return res;
}

Lemma2Config make_lemma2_config(const BipartiteGraph& b, std::vector<VertexId> path, std::vector<VertexId> pendants) {
    const auto& g = b.graph();
    const std::size_t n = path.size();
    ensure(n >= 5 && n % 2 == 1, "color_lemma2 path needs odd n >= 5, got " + std::to_string(n));
    ensure(pendants.size() == (n - 1) / 2, "color_lemma2: one pendant per even path position");
    std::vector<VertexId> all = path;
    all.insert(all.end(), pendants.begin(), pendants.end());
    require_distinct(all, "color_lemma2 configuration");
    Lemma2Config cfg{std::move(path), std::move(pendants), {}, {}};
    for (std::size_t i = 0; i + 1 < n; ++i) cfg.path_edges.push_back(edge_between(g, cfg.path[i], cfg.path[i + 1]));
    for (std::size_t k = 0; k < cfg.pendants.size(); ++k)
        cfg.pendant_edges.push_back(edge_between(g, cfg.path[2 * k + 1], cfg.pendants[k]));
    return cfg;
}

std::size_t lemma2_path_size(std::size_t n, std::size_t i) {
    if (i == 1 || i == n - 1) return 3;
    if (i == 2 || i == n - 2) return 4;
    return 5;
}

std::size_t lemma2_pendant_size(std::size_t n, std::size_t j) {
    return (j == 2 || j == n - 1) ? 2 : 3;
}

void color_lemma2(SolveContext& ctx, const Lemma2Config& cfg) {
    std::vector<EdgeId> edges = cfg.path_edges;
    edges.insert(edges.end(), cfg.pendant_edges.begin(), cfg.pendant_edges.end());
    LocalColoring lc = local_from(ctx, edges);

    // Local positions of the current path edges e_1..e_{n-1} and pendants f_2, f_4, ...
    std::vector<std::size_t> path(cfg.path_edges.size());
    std::vector<std::size_t> pend(cfg.pendant_edges.size());
    for (std::size_t i = 0; i < path.size(); ++i) path[i] = i;
    for (std::size_t k = 0; k < pend.size(); ++k) pend[k] = path.size() + k;
    auto av = [&](std::size_t i) { return lc.available(i); };

    for (std::size_t n = cfg.n();; n -= 2) {
        for (std::size_t i = 1; i < n; ++i) lc.truncate(path[i - 1], lemma2_path_size(n, i), "color_lemma2 entry");
        for (std::size_t j = 2; j < n; j += 2) lc.truncate(pend[j / 2 - 1], lemma2_pendant_size(n, j), "color_lemma2 entry");

        if (n == 5) {
            const std::size_t e1 = path[0], e2 = path[1], e3 = path[2], e4 = path[3];
            const std::size_t f2 = pend[0], f4 = pend[1];
            // p and q never conflict; afterwards e2, e3 see at most two new colors
            auto finish = [&](std::size_t p, std::size_t q) {
                if (const auto beta = first_common(av(p), av(q))) {
                    lc.assign(p, *beta);
                    lc.assign(q, *beta);
                    lc.assign_smallest(e2, "color_lemma2 base greedy");
                    lc.assign_smallest(e3, "color_lemma2 base greedy");
                } else {
                    ++ctx.stats.sdr_calls;
                    ensure(lc.assign_sdr({p, q, e2, e3}), "color_lemma2 base: Hall failed on four edges");
                }
            };
            // (shared pair, pair finished afterwards), in the order of the case analysis
            const std::array<std::array<std::size_t, 4>, 4> cases{{
                {f2, f4, e1, e4},
                {e1, f4, f2, e4},
                {f2, e4, e1, f4},
                {e1, e4, f2, f4},
            }};
            bool done = false;
            for (const auto& [a, b, p, q] : cases) {
                if (const auto alpha = first_common(av(a), av(b))) {
                    lc.assign(a, *alpha);
                    lc.assign(b, *alpha);
                    finish(p, q);
                    done = true;
                    break;
                }
            }
            if (!done) {
                ++ctx.stats.sdr_calls;
                ensure(lc.assign_sdr({e1, f2, e2, e3, f4, e4}), "color_lemma2 base: Hall failed on six edges");
            }
            break;
        }

        // n >= 7: color e_2, f_2, e_1 and recurse on the path starting at v'_4
        const std::size_t e1 = path[0], e2 = path[1], e3 = path[2], f2 = pend[0], f4 = pend[1];
        const ColorList f4_list = av(f4);
        lc.assign_first(e2, [&](Color c) { return !contains(f4_list, c); }, "color_lemma2 step keeping |L(f4)| >= 3");
        lc.assign_smallest(f2, "color_lemma2 step");
        lc.assign_smallest(e1, "color_lemma2 step");
        // v'_4 becomes the path start and v_3 the pendant at the new v_2
        std::vector<std::size_t> next_path{f4};
        next_path.insert(next_path.end(), path.begin() + 3, path.end());
        std::vector<std::size_t> next_pend{e3};
        next_pend.insert(next_pend.end(), pend.begin() + 2, pend.end());
        path = std::move(next_path);
        pend = std::move(next_pend);
    }
    ensure(lc.complete(), "color_lemma2 left an edge uncolored");
    lc.commit(ctx.coloring);
}

} // namespace strongcolor
