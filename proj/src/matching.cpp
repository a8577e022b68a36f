#include "strongcolor/matching.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "strongcolor/error.hpp"

namespace strongcolor {
namespace {

bool augment(std::size_t u, const std::vector<std::vector<std::size_t>>& adj, std::vector<std::uint8_t>& visited,
             Matching& left, std::vector<std::optional<std::size_t>>& right) {
    for (std::size_t r : adj[u]) {
        if (visited[r]) continue;
        visited[r] = 1;
        if (!right[r] || augment(*right[r], adj, visited, left, right)) {
            left[u] = r;
            right[r] = u;
            return true;
        }
    }
    return false;
}

} // namespace

Matching max_matching(std::size_t left_count, std::size_t right_count,
                      const std::vector<std::vector<std::size_t>>& adjacency) {
    Matching left(left_count);
    std::vector<std::optional<std::size_t>> right(right_count);
    std::vector<std::uint8_t> visited(right_count);
    for (std::size_t u = 0; u < left_count; ++u) {
        std::fill(visited.begin(), visited.end(), 0);
        augment(u, adjacency, visited, left, right);
    }
    return left;
}

std::size_t matching_size(const Matching& m) {
    return static_cast<std::size_t>(std::count_if(m.begin(), m.end(), [](const auto& x) { return x.has_value(); }));
}

std::optional<std::vector<Color>> rainbow_sdr(const SdrProblem& p) {
    ColorList palette;
    for (const auto& l : p.lists) palette.insert(palette.end(), l.begin(), l.end());
    std::sort(palette.begin(), palette.end());
    palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
    if (palette.size() < p.items.size()) return std::nullopt;

    std::vector<std::vector<std::size_t>> adj(p.items.size());
    for (std::size_t i = 0; i < p.items.size(); ++i)
        for (Color c : p.lists[i])
            adj[i].push_back(static_cast<std::size_t>(std::lower_bound(palette.begin(), palette.end(), c) - palette.begin()));
    const Matching m = max_matching(p.items.size(), palette.size(), adj);
    if (matching_size(m) < p.items.size()) return std::nullopt;
    std::vector<Color> out(p.items.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = palette[*m[i]];
    return out;
}

std::optional<std::vector<std::size_t>> hall_witness(const SdrProblem& p) {
    const std::size_t n = p.items.size();
    if (n > 20) fail(ErrorKind::TooLarge, "hall_witness scans 2^n subsets; n = " + std::to_string(n));
    // smallest violating subset in (size, mask) order
    std::optional<std::uint32_t> best;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        ColorList un;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) un.insert(un.end(), p.lists[i].begin(), p.lists[i].end());
        std::sort(un.begin(), un.end());
        un.erase(std::unique(un.begin(), un.end()), un.end());
        const auto size = static_cast<std::size_t>(std::popcount(mask));
        if (size > un.size() && (!best || std::popcount(*best) > std::popcount(mask))) best = mask;
    }
    if (!best) return std::nullopt;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i)
        if (*best & (1u << i)) out.push_back(i);
    return out;
}

} // namespace strongcolor
