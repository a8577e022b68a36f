#pragma once

#include <algorithm>
#include <deque>
#include <limits>
#include <optional>
#include <vector>

#include "strongcolor/conflict.hpp"
#include "strongcolor/generate.hpp"
#include "strongcolor/graph.hpp"

namespace testing_support {

using namespace strongcolor;

/// Uniform k-subset of {0..palette-1}, sorted.
inline ColorList random_subset(SplitMix64& rng, std::size_t k, std::size_t palette) {
    std::vector<Color> pool(palette);
    for (std::size_t i = 0; i < palette; ++i) pool[i] = static_cast<Color>(i);
    rng.shuffle(pool);
    ColorList out(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(out.begin(), out.end());
    return out;
}

/// Lists of the given sizes; the palette is drawn per call from [max size, max size + spread].
inline ListAssignment sized_lists(SplitMix64& rng, const std::vector<std::size_t>& sizes, std::size_t spread) {
    const std::size_t top = *std::max_element(sizes.begin(), sizes.end());
    const std::size_t palette = top + rng.uniform_below(spread + 1);
    std::vector<ColorList> lists;
    for (std::size_t s : sizes) lists.push_back(random_subset(rng, s, palette));
    return ListAssignment(std::move(lists));
}

/// Even cycle 0..n-1 (even positions in B) with a pendant A-vertex on every B vertex.
/// Edge ids: cycle edge i joins i and i+1; pendants follow.
inline BipartiteGraph sun(std::size_t n) {
    std::vector<Endpoints> edges;
    std::vector<Part> parts;
    for (std::size_t i = 0; i < n; ++i) {
        edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n));
        parts.push_back(i % 2 == 0 ? Part::B : Part::A);
    }
    for (std::size_t i = 0; i < n; i += 2) {
        edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(parts.size()));
        parts.push_back(Part::A);
    }
    const std::size_t vertices = parts.size();
    return BipartiteGraph(Multigraph(vertices, std::move(edges)), std::move(parts));
}

/// Girth by removing each edge and measuring the distance between its ends.
/// Independent of the library's cycle search.
inline std::optional<std::size_t> brute_girth(const Multigraph& g) {
    std::optional<std::size_t> best;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto [s, t] = g.endpoints(e);
        std::vector<std::size_t> dist(g.vertex_count(), std::numeric_limits<std::size_t>::max());
        std::deque<VertexId> q{s};
        dist[s] = 0;
        while (!q.empty()) {
            const VertexId x = q.front();
            q.pop_front();
            for (const auto& [f, y] : g.neighbors(x)) {
                if (f == e || dist[y] != std::numeric_limits<std::size_t>::max()) continue;
                dist[y] = dist[x] + 1;
                q.push_back(y);
            }
        }
        if (dist[t] != std::numeric_limits<std::size_t>::max() && (!best || dist[t] + 1 < *best)) best = dist[t] + 1;
    }
    return best;
}

/// Conflict test straight from the definition: shared endpoint or a joining edge.
inline bool brute_conflict(const Multigraph& g, EdgeId e, EdgeId f) {
    if (e == f) return false;
    const auto [a, b] = g.endpoints(e);
    const auto [c, d] = g.endpoints(f);
    if (a == c || a == d || b == c || b == d) return true;
    for (VertexId x : {a, b})
        for (VertexId y : {c, d})
            if (g.adjacent(x, y)) return true;
    return false;
}

/// Instance graph drawn the way the stress harness does.
inline BipartiteGraph random_instance(SplitMix64& rng, std::size_t max_b) {
    const std::size_t nb = 2 + rng.uniform_below(std::max<std::size_t>(2, max_b) - 1);
    const std::size_t na = nb + rng.uniform_below(nb + 1);
    return random_23_bipartite(na, nb, rng.next());
}

/// Biregular instance: every A-vertex of degree 2, every B-vertex of degree 3.
inline BipartiteGraph random_biregular(SplitMix64& rng, std::size_t max_half) {
    const std::size_t k = 1 + rng.uniform_below(max_half);
    return random_23_bipartite(3 * k + 3, 2 * k + 2, rng.next());
}

} // namespace testing_support
