#include "strongcolor/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>

namespace strongcolor {

OracleBudget OracleBudget::from_env() {
    OracleBudget b;
    if (const char* s = std::getenv("STRONGCOLOR_ORACLE_MAX_EDGES")) b.max_edges = std::strtoull(s, nullptr, 10);
    if (const char* s = std::getenv("STRONGCOLOR_ORACLE_MAX_NODES")) b.max_nodes = std::strtoull(s, nullptr, 10);
    return b;
}

namespace {

class Search {
public:
    Search(const ListAssignment& lists, const ConflictGraph& cg, std::uint64_t max_nodes)
        : lists_(lists), cg_(cg), max_nodes_(max_nodes), colors_(cg.size()) {}

    OracleStatus run() {
        const auto r = descend(0);
        if (r == Outcome::Found) return OracleStatus::Feasible;
        if (r == Outcome::Budget) return OracleStatus::BudgetExceeded;
        return OracleStatus::Infeasible;
    }
    const PartialColoring& colors() const { return colors_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    enum class Outcome { Found, Dead, Budget };

    std::size_t free_count(EdgeId e) const {
        std::size_t n = 0;
        for (Color c : lists_[e]) n += allowed(e, c) ? 1 : 0;
        return n;
    }
    bool allowed(EdgeId e, Color c) const {
        return std::none_of(cg_[e].begin(), cg_[e].end(), [&](EdgeId f) { return colors_[f] == c; });
    }

    Outcome descend(std::size_t depth) {
        if (++nodes_ > max_nodes_) return Outcome::Budget;
        if (depth == colors_.size()) return Outcome::Found;
        EdgeId pick = 0;
        std::size_t best = SIZE_MAX;
        for (EdgeId e = 0; e < colors_.size(); ++e) {
            if (colors_[e]) continue;
            const std::size_t n = free_count(e);
            if (n == 0) return Outcome::Dead;
            if (n < best) {
                best = n;
                pick = e;
            }
        }
        for (Color c : lists_[pick]) {
            if (!allowed(pick, c)) continue;
            colors_[pick] = c;
            const auto r = descend(depth + 1);
            if (r != Outcome::Dead) return r;
        }
        colors_[pick].reset();
        return Outcome::Dead;
    }

    const ListAssignment& lists_;
    const ConflictGraph& cg_;
    std::uint64_t max_nodes_;
    std::uint64_t nodes_ = 0;
    PartialColoring colors_;
};

void grow_clique(std::uint64_t candidates, std::size_t size, const std::vector<std::uint64_t>& nbr, std::size_t& best) {
    if (candidates == 0) {
        best = std::max(best, size);
        return;
    }
    if (size + static_cast<std::size_t>(std::popcount(candidates)) <= best) return;
    while (candidates) {
        if (size + static_cast<std::size_t>(std::popcount(candidates)) <= best) return;
        const int v = std::countr_zero(candidates);
        candidates &= candidates - 1;
        grow_clique(candidates & nbr[static_cast<std::size_t>(v)], size + 1, nbr, best);
    }
}

} // namespace

OracleResult backtrack_color(const BipartiteGraph& b, const ListAssignment& lists, OracleBudget budget) {
    OracleResult out;
    if (b.edge_count() > budget.max_edges) return out;
    const ConflictGraph cg = build_conflict_graph_serial(b);
    Search s(lists, cg, budget.max_nodes);
    out.status = s.run();
    out.nodes = s.nodes();
    if (out.status == OracleStatus::Feasible) out.coloring = s.colors();
    return out;
}

std::size_t conflict_clique_number(const ConflictGraph& cg) {
    if (cg.size() == 0) return 0;
    if (cg.size() > 64) return 1;
    std::vector<std::uint64_t> nbr(cg.size(), 0);
    for (EdgeId e = 0; e < cg.size(); ++e)
        for (EdgeId f : cg[e]) nbr[e] |= std::uint64_t{1} << f;
    std::size_t best = 0;
    const std::uint64_t all = cg.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << cg.size()) - 1;
    grow_clique(all, 0, nbr, best);
    return best;
}

CountResult strong_chromatic_index(const BipartiteGraph& b, OracleBudget budget) {
    if (b.edge_count() > budget.max_edges) return {};
    if (b.edge_count() == 0) return {OracleStatus::Feasible, 0};
    const std::size_t lower = std::max<std::size_t>(1, conflict_clique_number(build_conflict_graph_serial(b)));
    for (std::size_t k = lower; k <= b.edge_count(); ++k) {
        const auto r = backtrack_color(b, ListAssignment::uniform(b.edge_count(), k), budget);
        if (r.status == OracleStatus::BudgetExceeded) return {};
        if (r.status == OracleStatus::Feasible) return {OracleStatus::Feasible, k};
    }
    return {OracleStatus::Infeasible, 0};
}

CountResult incidence_chromatic_number(const Multigraph& g, OracleBudget budget) {
    return strong_chromatic_index(subdivide(g).bipartite, budget);
}

} // namespace strongcolor
