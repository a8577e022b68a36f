#pragma once

#include <cstdint>
#include <string>

#include "strongcolor/solver.hpp"

namespace strongcolor {

struct StressOptions {
    std::size_t count = 100;
    std::size_t size = 40;  // upper bound on B-side vertices per instance
    std::uint64_t seed = 1;
    std::size_t palette = 12;
    std::size_t k = 6;
    std::size_t oracle_max_edges = 16;
};

struct StressSummary {
    std::size_t instances = 0;
    std::size_t succeeded = 0;
    std::size_t rejected = 0;            // precondition failures (ListTooSmall)
    std::size_t invariant_failures = 0;  // InternalInvariant thrown
    std::size_t invalid = 0;             // solver returned, verification failed
    std::size_t oracle_checked = 0;
    std::size_t oracle_disagreements = 0;
    std::size_t max_edges = 0;
    SolveStats totals;
    double seconds = 0;

    bool all_succeeded() const { return succeeded == instances; }
    /// Everything but wall time, so repeated runs print identical lines.
    std::string line() const;

    friend bool operator==(const StressSummary& a, const StressSummary& b) {
        return a.instances == b.instances && a.succeeded == b.succeeded && a.rejected == b.rejected &&
               a.invariant_failures == b.invariant_failures && a.invalid == b.invalid &&
               a.oracle_checked == b.oracle_checked && a.oracle_disagreements == b.oracle_disagreements &&
               a.max_edges == b.max_edges && a.totals == b.totals;
    }
};

/// Seed of instance i: first output of SplitMix64(seed + i * 0x9E3779B97F4A7C15).
std::uint64_t instance_seed(std::uint64_t seed, std::size_t i);

/// Instance i: nB uniform in [2, max(2, size)], nA uniform in [nB, 2nB],
/// graph random_23_bipartite(nA, nB, s), lists random_lists(m, k, palette, s + 1)
/// with s = instance_seed(seed, i). Instances run in parallel; results are
/// aggregated by instance index.
StressSummary run_stress(const StressOptions& opt);
StressSummary run_stress_serial(const StressOptions& opt);

} // namespace strongcolor
