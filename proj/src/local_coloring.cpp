#include "strongcolor/local_coloring.hpp"

#include <algorithm>
#include <string>

#include "strongcolor/error.hpp"
#include "strongcolor/matching.hpp"

namespace strongcolor {

std::optional<Color> first_common(const ColorList& a, const ColorList& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j) return *i;
        if (*i < *j)
            ++i;
        else
            ++j;
    }
    return std::nullopt;
}

bool contains(const ColorList& l, Color c) { return std::binary_search(l.begin(), l.end(), c); }

ColorList set_union(const ColorList& a, const ColorList& b) {
    ColorList out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

LocalColoring::LocalColoring(std::vector<EdgeId> edges, std::vector<ColorList> lists, const ConflictGraph& cg)
    : edges_(std::move(edges)), lists_(std::move(lists)), local_conflicts_(edges_.size()), colors_(edges_.size()) {
    ensure(lists_.size() == edges_.size(), "local lists misaligned");
    for (std::size_t i = 0; i < edges_.size(); ++i)
        for (std::size_t j = 0; j < edges_.size(); ++j)
            if (i != j && cg.conflict(edges_[i], edges_[j])) local_conflicts_[i].push_back(j);
}

bool LocalColoring::conflicts(std::size_t i, std::size_t j) const {
    const auto& s = local_conflicts_[i];
    return std::find(s.begin(), s.end(), j) != s.end();
}

bool LocalColoring::complete() const {
    return std::all_of(colors_.begin(), colors_.end(), [](const auto& c) { return c.has_value(); });
}

ColorList LocalColoring::available(std::size_t i) const {
    ColorList out = lists_[i];
    for (std::size_t j : local_conflicts_[i]) {
        if (!colors_[j]) continue;
        auto it = std::lower_bound(out.begin(), out.end(), *colors_[j]);
        if (it != out.end() && *it == *colors_[j]) out.erase(it);
    }
    return out;
}

void LocalColoring::assign(std::size_t i, Color c) {
    ensure(!colors_[i], "edge " + std::to_string(edges_[i]) + " colored twice");
    ensure(contains(available(i), c),
           "color " + std::to_string(c) + " unavailable for edge " + std::to_string(edges_[i]));
    colors_[i] = c;
}

Color LocalColoring::assign_first(std::size_t i, const std::function<bool(Color)>& pred, const char* step) {
    for (Color c : available(i))
        if (pred(c)) {
            colors_[i] = c;
            return c;
        }
    fail(ErrorKind::InternalInvariant, std::string(step) + ": no admissible color for edge " + std::to_string(edges_[i]));
}

Color LocalColoring::assign_smallest(std::size_t i, const char* step) {
    return assign_first(i, [](Color) { return true; }, step);
}

void LocalColoring::truncate(std::size_t i, std::size_t size, const char* step) {
    ColorList avail = available(i);
    ensure(avail.size() >= size, std::string(step) + ": edge " + std::to_string(edges_[i]) + " has " +
                                     std::to_string(avail.size()) + " available colors, expected >= " +
                                     std::to_string(size));
    avail.resize(size);
    lists_[i] = std::move(avail);
}

bool LocalColoring::assign_sdr(const std::vector<std::size_t>& positions) {
    SdrProblem p;
    for (std::size_t i : positions) {
        p.items.push_back(edges_[i]);
        p.lists.push_back(available(i));
    }
    const auto sdr = rainbow_sdr(p);
    if (!sdr) return false;
    // distinct colors, each available against everything already colored
    for (std::size_t k = 0; k < positions.size(); ++k) colors_[positions[k]] = (*sdr)[k];
    return true;
}

bool LocalColoring::complete_exhaustively() {
    std::size_t best = size();
    std::size_t best_avail = 0;
    for (std::size_t i = 0; i < size(); ++i) {
        if (colors_[i]) continue;
        const std::size_t a = available(i).size();
        if (best == size() || a < best_avail) {
            best = i;
            best_avail = a;
        }
    }
    if (best == size()) return true;
    for (Color c : available(best)) {
        colors_[best] = c;
        if (complete_exhaustively()) return true;
    }
    colors_[best].reset();
    return false;
}

void LocalColoring::commit(PartialColoring& pc, bool require_complete) const {
    for (std::size_t i = 0; i < size(); ++i) {
        ensure(colors_[i].has_value() || !require_complete, "committing an incomplete local coloring");
        if (colors_[i]) pc[edges_[i]] = colors_[i];
    }
}

} // namespace strongcolor
