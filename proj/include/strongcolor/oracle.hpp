#pragma once

#include <cstdint>

#include "strongcolor/conflict.hpp"
#include "strongcolor/graph.hpp"

namespace strongcolor {

struct OracleBudget {
    std::size_t max_edges = 20;
    std::uint64_t max_nodes = 100'000'000;

    /// Defaults overridden by STRONGCOLOR_ORACLE_MAX_EDGES / STRONGCOLOR_ORACLE_MAX_NODES.
    static OracleBudget from_env();
};

enum class OracleStatus { Feasible, Infeasible, BudgetExceeded };

struct OracleResult {
    OracleStatus status = OracleStatus::BudgetExceeded;
    PartialColoring coloring;  // total when Feasible
    std::uint64_t nodes = 0;
};

/// Exact search for a strong list edge-coloring: most constrained edge first,
/// smallest color first, backtracking as soon as some edge has no color left.
OracleResult backtrack_color(const BipartiteGraph& b, const ListAssignment& lists, OracleBudget budget = {});

struct CountResult {
    OracleStatus status = OracleStatus::BudgetExceeded;
    std::size_t value = 0;  // valid when Feasible
};

/// Least k such that lists {1..k} on every edge are feasible, scanning upward
/// from the largest clique of the conflict graph.
CountResult strong_chromatic_index(const BipartiteGraph& b, OracleBudget budget = {});

/// Strong chromatic index of the subdivision.
CountResult incidence_chromatic_number(const Multigraph& g, OracleBudget budget = {});

/// Size of a largest set of pairwise conflicting edges (graphs with <= 64 edges).
std::size_t conflict_clique_number(const ConflictGraph& cg);

} // namespace strongcolor
