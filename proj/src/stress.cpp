#include "strongcolor/stress.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <sstream>

#include "strongcolor/error.hpp"
#include "strongcolor/generate.hpp"
#include "strongcolor/oracle.hpp"

namespace strongcolor {

std::uint64_t instance_seed(std::uint64_t seed, std::size_t i) {
    return SplitMix64(seed + static_cast<std::uint64_t>(i) * 0x9E3779B97F4A7C15ULL).next();
}

namespace {

enum class Outcome : std::uint8_t { Ok, Rejected, Invariant, Invalid };

struct InstanceResult {
    Outcome outcome = Outcome::Ok;
    bool oracle_checked = false;
    bool oracle_disagrees = false;
    std::size_t edges = 0;
    SolveStats stats;
};

InstanceResult run_instance(const StressOptions& opt, std::size_t i) {
    const std::uint64_t s = instance_seed(opt.seed, i);
    SplitMix64 rng(s);
    const std::size_t top = std::max<std::size_t>(2, opt.size);
    const std::size_t nb = 2 + rng.uniform_below(top - 1);
    const std::size_t na = nb + rng.uniform_below(nb + 1);
    const BipartiteGraph b = random_23_bipartite(na, nb, s);
    const ListAssignment lists = random_lists(b.edge_count(), opt.k, opt.palette, s + 1);

    InstanceResult r;
    r.edges = b.edge_count();
    try {
        const StrongSolution sol = color_strong_23(b, lists);
        r.stats = sol.stats;
        if (!verify_strong(b, lists, sol.coloring, true).empty()) r.outcome = Outcome::Invalid;
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::InternalInvariant) r.outcome = Outcome::Invariant;
        else if (e.kind() == ErrorKind::ListTooSmall) r.outcome = Outcome::Rejected;
        else throw;
    }
    if (r.outcome == Outcome::Ok && b.edge_count() <= opt.oracle_max_edges) {
        r.oracle_checked = true;
        OracleBudget budget;
        budget.max_edges = opt.oracle_max_edges;
        r.oracle_disagrees = backtrack_color(b, lists, budget).status != OracleStatus::Feasible;
    }
    return r;
}

StressSummary aggregate(const std::vector<InstanceResult>& results) {
    StressSummary s;
    s.instances = results.size();
    for (const auto& r : results) {
        s.succeeded += r.outcome == Outcome::Ok && !r.oracle_disagrees;
        s.rejected += r.outcome == Outcome::Rejected;
        s.invariant_failures += r.outcome == Outcome::Invariant;
        s.invalid += r.outcome == Outcome::Invalid;
        s.oracle_checked += r.oracle_checked;
        s.oracle_disagreements += r.oracle_disagrees;
        s.max_edges = std::max(s.max_edges, r.edges);
        s.totals += r.stats;
    }
    return s;
}

template <class Loop>
StressSummary timed(const StressOptions& opt, Loop loop) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<InstanceResult> results(opt.count);
    loop(results);
    StressSummary s = aggregate(results);
    s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return s;
}

} // namespace

StressSummary run_stress(const StressOptions& opt) {
    return timed(opt, [&](std::vector<InstanceResult>& results) {
        const auto n = static_cast<std::ptrdiff_t>(results.size());
        // Exceptions must not escape the parallel region; park the first one.
        std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 4)
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            try {
                results[static_cast<std::size_t>(i)] = run_instance(opt, static_cast<std::size_t>(i));
            } catch (...) {
#pragma omp critical(stress_error)
                if (!error) error = std::current_exception();
            }
        }
        if (error) std::rethrow_exception(error);
    });
}

StressSummary run_stress_serial(const StressOptions& opt) {
    return timed(opt, [&](std::vector<InstanceResult>& results) {
        for (std::size_t i = 0; i < results.size(); ++i) results[i] = run_instance(opt, i);
    });
}

std::string StressSummary::line() const {
    std::ostringstream out;
    out << "stress: " << succeeded << "/" << instances << " ok"
        << ", rejected " << rejected << ", invariant failures " << invariant_failures << ", invalid " << invalid
        << ", oracle checked " << oracle_checked << " (" << oracle_disagreements << " disagreements)"
        << ", max edges " << max_edges << ", peeled " << totals.peeled_edges << ", k23 " << totals.k23_base_cases
        << ", c4 " << totals.c4_extensions << ", c6 " << totals.c6_extensions << ", long "
        << totals.long_cycle_extensions << ", sdr " << totals.sdr_calls << ", fallback_uses "
        << totals.fallback_uses;
    return out.str();
}

} // namespace strongcolor
