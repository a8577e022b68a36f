#include "strongcolor/generate.hpp"

#include <algorithm>
#include <array>

#include "strongcolor/error.hpp"

namespace strongcolor {

std::uint64_t SplitMix64::next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::uniform_below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
        const std::uint64_t r = next();
        if (r >= threshold) return r % n;
    }
}

namespace {

constexpr int kMaxAttempts = 100000;

Multigraph sorted_multigraph(std::size_t n, std::vector<Endpoints> edges) {
    for (auto& [a, b] : edges)
        if (a > b) std::swap(a, b);
    std::sort(edges.begin(), edges.end());
    return Multigraph(n, std::move(edges));
}

} // namespace

Multigraph random_cubic(std::size_t n, std::uint64_t seed) {
    if (n < 4 || n % 2 != 0) fail(ErrorKind::BadSize, "random_cubic needs an even n >= 4");
    SplitMix64 rng(seed);
    std::vector<VertexId> stubs(3 * n);
    for (;;) {
        for (std::size_t i = 0; i < stubs.size(); ++i) stubs[i] = static_cast<VertexId>(i / 3);
        rng.shuffle(stubs);
        bool loop = false;
        for (std::size_t i = 0; i < stubs.size() && !loop; i += 2) loop = stubs[i] == stubs[i + 1];
        if (loop) continue;
        std::vector<Endpoints> edges;
        edges.reserve(stubs.size() / 2);
        for (std::size_t i = 0; i < stubs.size(); i += 2) edges.emplace_back(stubs[i], stubs[i + 1]);
        return sorted_multigraph(n, std::move(edges));
    }
}

BipartiteGraph random_23_bipartite(std::size_t na, std::size_t nb, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<Part> parts(na + nb, Part::B);
    std::fill(parts.begin(), parts.begin() + static_cast<std::ptrdiff_t>(na), Part::A);
    const std::size_t m = std::min(2 * na, 3 * nb);
    std::vector<VertexId> a_stubs(2 * na), b_stubs(3 * nb);
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        for (std::size_t i = 0; i < a_stubs.size(); ++i) a_stubs[i] = static_cast<VertexId>(i / 2);
        for (std::size_t i = 0; i < b_stubs.size(); ++i) b_stubs[i] = static_cast<VertexId>(na + i / 3);
        rng.shuffle(a_stubs);
        rng.shuffle(b_stubs);
        std::vector<Endpoints> edges(m);
        for (std::size_t i = 0; i < m; ++i) edges[i] = {a_stubs[i], b_stubs[i]};
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
        return BipartiteGraph(Multigraph(na + nb, std::move(edges)), std::move(parts));
    }
    fail(ErrorKind::Infeasible, "random_23_bipartite found no simple pairing");
}

ListAssignment random_lists(std::size_t edge_count, std::size_t k, std::size_t palette, std::uint64_t seed) {
    if (k > palette) fail(ErrorKind::BadSize, "list size exceeds palette");
    SplitMix64 rng(seed);
    std::vector<Color> pool(palette);
    std::vector<ColorList> lists(edge_count);
    for (auto& list : lists) {
        for (std::size_t i = 0; i < palette; ++i) pool[i] = static_cast<Color>(i);
        for (std::size_t i = 0; i < k; ++i) std::swap(pool[i], pool[i + rng.uniform_below(palette - i)]);
        list.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
        std::sort(list.begin(), list.end());
    }
    return ListAssignment(std::move(lists));
}

namespace {

struct Fixture {
    std::string_view name;
    AnyGraph (*make)();
};

/// Cycle on 0..n-1 plus extra edges, on vertex_count vertices.
Multigraph cycle_with_chords(std::size_t n, std::size_t vertex_count, std::vector<Endpoints> extra) {
    std::vector<Endpoints> edges;
    for (std::size_t i = 0; i < n; ++i)
        edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n));
    edges.insert(edges.end(), extra.begin(), extra.end());
    return sorted_multigraph(vertex_count, std::move(edges));
}

AnyGraph make_k23() {
    std::vector<Endpoints> edges;
    for (VertexId a = 0; a < 3; ++a)
        for (VertexId b = 3; b < 5; ++b) edges.emplace_back(a, b);
    return BipartiteGraph(Multigraph(5, edges), {Part::A, Part::A, Part::A, Part::B, Part::B});
}

AnyGraph make_petersen() {
    std::vector<Endpoints> extra;
    for (VertexId i = 0; i < 5; ++i) {
        extra.emplace_back(i, i + 5);
        extra.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return cycle_with_chords(5, 10, std::move(extra));
}

AnyGraph make_heawood() {
    std::vector<Endpoints> chords;
    for (VertexId i = 0; i < 14; i += 2) chords.emplace_back(i, (i + 5) % 14);
    return cycle_with_chords(14, 14, std::move(chords));
}

AnyGraph make_cube() {
    std::vector<Endpoints> edges;
    for (VertexId v = 0; v < 8; ++v)
        for (VertexId bit = 1; bit < 8; bit <<= 1)
            if ((v & bit) == 0) edges.emplace_back(v, v | bit);
    return sorted_multigraph(8, std::move(edges));
}

const std::array<Fixture, 14> kFixtures{{
    {"k23", make_k23},
    {"double-edge", [] { return AnyGraph{Multigraph(2, {{0, 1}, {0, 1}})}; }},
    {"theta", [] { return AnyGraph{Multigraph(2, {{0, 1}, {0, 1}, {0, 1}})}; }},
    {"twin-digons", [] { return AnyGraph{Multigraph(4, {{0, 1}, {0, 1}, {0, 2}, {1, 3}, {2, 3}, {2, 3}})}; }},
    {"k4", [] { return AnyGraph{sorted_multigraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})}; }},
    {"prism", [] { return AnyGraph{cycle_with_chords(3, 6, {{3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}})}; }},
    {"k33", [] {
         std::vector<Endpoints> e;
         for (VertexId a = 0; a < 3; ++a)
             for (VertexId b = 3; b < 6; ++b) e.emplace_back(a, b);
         return AnyGraph{Multigraph(6, e)};
     }},
    {"cube", make_cube},
    {"petersen", make_petersen},
    {"heawood", make_heawood},
    {"path", [] { return AnyGraph{Multigraph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}})}; }},
    {"star", [] { return AnyGraph{Multigraph(4, {{0, 1}, {0, 2}, {0, 3}})}; }},
    {"tree", [] { return AnyGraph{Multigraph(7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}})}; }},
    {"c8", [] { return AnyGraph{cycle_with_chords(8, 8, {})}; }},
}};

} // namespace

AnyGraph named(std::string_view name) {
    for (const auto& f : kFixtures)
        if (f.name == name) return f.make();
    fail(ErrorKind::UnknownName, "unknown fixture: " + std::string(name));
}

std::vector<std::string> fixture_names() {
    std::vector<std::string> out;
    for (const auto& f : kFixtures) out.emplace_back(f.name);
    return out;
}

const Multigraph& underlying(const AnyGraph& g) {
    if (const auto* b = std::get_if<BipartiteGraph>(&g)) return b->graph();
    return std::get<Multigraph>(g);
}

} // namespace strongcolor
