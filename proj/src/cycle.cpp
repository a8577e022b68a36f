#include <algorithm>
#include <atomic>
#include <limits>
#include <string>

#include "strongcolor/error.hpp"
#include "strongcolor/graph.hpp"

namespace strongcolor {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

// Per-thread BFS scratch; only touched entries are reset between sources.
struct BfsScratch {
    std::vector<std::size_t> dist;
    std::vector<EdgeId> parent_edge;
    std::vector<VertexId> parent;
    std::vector<VertexId> queue;

    explicit BfsScratch(std::size_t n) : dist(n, kNone), parent_edge(n, kNoEdge), parent(n, 0) {}

    void reset() {
        for (VertexId v : queue) {
            dist[v] = kNone;
            parent_edge[v] = kNoEdge;
        }
        queue.clear();
    }
};

struct Found {
    std::size_t length = kNone;
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;
};

// Shortest cycle through the BFS root s, if its length is <= bound. Among
// equal candidates the first one met in BFS order wins. On a shortest cycle
// of the graph the two tree paths are disjoint, so the walk is a simple cycle.
Found bfs_cycle(const Multigraph& g, const std::uint8_t* alive, VertexId s, std::size_t bound, BfsScratch& sc) {
    sc.reset();
    sc.dist[s] = 0;
    sc.queue.push_back(s);
    std::size_t best = kNone;
    VertexId bx = 0, by = 0;
    EdgeId bedge = kNoEdge;
    for (std::size_t head = 0; head < sc.queue.size(); ++head) {
        const VertexId x = sc.queue[head];
        const std::size_t dx = sc.dist[x];
        // any cycle closed from x has length >= 2*dx
        if (2 * dx >= best || 2 * dx > bound) break;
        for (const auto& [e, y] : g.neighbors(x)) {
            if (alive && !alive[e]) continue;
            if (e == sc.parent_edge[x]) continue;
            if (sc.dist[y] == kNone) {
                sc.dist[y] = dx + 1;
                sc.parent[y] = x;
                sc.parent_edge[y] = e;
                sc.queue.push_back(y);
            } else {
                const std::size_t len = dx + sc.dist[y] + 1;
                if (len < best && len <= bound) {
                    best = len;
                    bx = x;
                    by = y;
                    bedge = e;
                }
            }
        }
    }
    Found f;
    if (best == kNone) return f;
    f.length = best;
    // s .. bx, then by .. back towards s
    std::vector<VertexId> left, right;
    std::vector<EdgeId> left_e, right_e;
    for (VertexId v = bx; v != s; v = sc.parent[v]) {
        left.push_back(v);
        left_e.push_back(sc.parent_edge[v]);
    }
    for (VertexId v = by; v != s; v = sc.parent[v]) {
        right.push_back(v);
        right_e.push_back(sc.parent_edge[v]);
    }
    f.vertices.push_back(s);
    f.vertices.insert(f.vertices.end(), left.rbegin(), left.rend());
    f.vertices.insert(f.vertices.end(), right.begin(), right.end());
    // edges[i] joins vertices[i] and vertices[i+1]
    f.edges.insert(f.edges.end(), left_e.rbegin(), left_e.rend());
    f.edges.push_back(bedge);
    f.edges.insert(f.edges.end(), right_e.begin(), right_e.end());
    return f;
}

CycleDescriptor describe(const BipartiteGraph& b, const std::uint8_t* alive, Found found) {
    const Multigraph& g = b.graph();
    CycleDescriptor c;
    c.vertices = std::move(found.vertices);
    c.edges = std::move(found.edges);
    const std::size_t n = c.length();
    ensure(n == c.edges.size() && n % 2 == 0 && n >= 4, "cycle of length " + std::to_string(n));
    std::vector<VertexId> sorted = c.vertices;
    std::sort(sorted.begin(), sorted.end());
    ensure(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), "cycle repeats a vertex");
    auto on_cycle = [&](VertexId v) { return std::binary_search(sorted.begin(), sorted.end(), v); };
    for (std::size_t i = 0; i < n; ++i) {
        const VertexId v = c.vertices[i];
        ensure(b.part(v) != b.part(c.vertices[(i + 1) % n]), "cycle does not alternate parts");
        const EdgeId prev = c.edges[(i + n - 1) % n];
        const EdgeId next = c.edges[i];
        for (const auto& [e, w] : g.neighbors(v)) {
            if ((alive && !alive[e]) || e == prev || e == next) continue;
            ensure(!on_cycle(w), "pendant of vertex " + std::to_string(v) + " lies on the cycle");
            c.pendants.push_back({v, w, e});
        }
    }
    if (n >= 6) {
        std::vector<VertexId> ends;
        for (const auto& p : c.pendants) ends.push_back(p.neighbor);
        std::sort(ends.begin(), ends.end());
        ensure(std::adjacent_find(ends.begin(), ends.end()) == ends.end(),
               "pendant neighbors of a shortest cycle coincide");
    }
    return c;
}

std::optional<CycleDescriptor> search_serial(const BipartiteGraph& b, const std::uint8_t* alive,
                                             std::span<const VertexId> starts) {
    BfsScratch sc(b.vertex_count());
    Found best;
    for (VertexId s : starts) {
        // strict: a later start only wins with a shorter cycle
        const std::size_t bound = best.length == kNone ? kNone : best.length - 1;
        if (bound < 4) break;
        Found f = bfs_cycle(b.graph(), alive, s, bound, sc);
        if (f.length < best.length) best = std::move(f);
    }
    if (best.length == kNone) return std::nullopt;
    return describe(b, alive, std::move(best));
}

std::optional<CycleDescriptor> search_parallel(const BipartiteGraph& b, const std::uint8_t* alive,
                                               std::span<const VertexId> starts) {
    const auto count = static_cast<std::ptrdiff_t>(starts.size());
    std::atomic<std::size_t> global_best{kNone};
    // (length, index into starts) of the winner; reduced deterministically below
    std::vector<std::size_t> lengths(starts.size(), kNone);
#pragma omp parallel
    {
        BfsScratch sc(b.vertex_count());
#pragma omp for schedule(dynamic, 64)
        for (std::ptrdiff_t i = 0; i < count; ++i) {
            const std::size_t bound = global_best.load(std::memory_order_relaxed);
            Found f = bfs_cycle(b.graph(), alive, starts[static_cast<std::size_t>(i)], bound, sc);
            if (f.length == kNone) continue;
            lengths[static_cast<std::size_t>(i)] = f.length;
            std::size_t cur = global_best.load(std::memory_order_relaxed);
            while (f.length < cur && !global_best.compare_exchange_weak(cur, f.length)) {
            }
        }
    }
    const std::size_t girth = global_best.load();
    if (girth == kNone) return std::nullopt;
    // lengths are exact wherever they are <= girth; pick the first start attaining it
    std::size_t winner = 0;
    for (; winner < starts.size(); ++winner)
        if (lengths[winner] == girth) break;
    BfsScratch sc(b.vertex_count());
    return describe(b, alive, bfs_cycle(b.graph(), alive, starts[winner], girth, sc));
}

std::vector<VertexId> all_vertices(const BipartiteGraph& b) {
    std::vector<VertexId> v(b.vertex_count());
    for (VertexId i = 0; i < v.size(); ++i) v[i] = i;
    return v;
}

} // namespace

std::optional<CycleDescriptor> shortest_cycle(const BipartiteGraph& b) {
    const auto starts = all_vertices(b);
    return search_parallel(b, nullptr, starts);
}

std::optional<CycleDescriptor> shortest_cycle_serial(const BipartiteGraph& b) {
    const auto starts = all_vertices(b);
    return search_serial(b, nullptr, starts);
}

std::optional<CycleDescriptor> shortest_cycle_in(const BipartiteGraph& b, EdgeMask mask,
                                                 std::span<const VertexId> starts) {
    return search_serial(b, mask.alive.data(), starts);
}

} // namespace strongcolor
