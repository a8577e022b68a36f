// Serial reference vs OpenMP kernels: conflict-graph build, shortest cycle, stress harness.

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>

#include "strongcolor/conflict.hpp"
#include "strongcolor/generate.hpp"
#include "strongcolor/graph.hpp"
#include "strongcolor/stress.hpp"

using namespace strongcolor;

namespace {

/// Best of `reps` wall-clock runs, in milliseconds.
double time_ms(const std::function<void()>& fn, int reps) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const auto start = std::chrono::steady_clock::now();
        fn();
        best = std::min(best, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
    }
    return best;
}

void row(const char* kernel, double serial, double parallel, bool agree) {
    std::printf("%-28s %12.3f %12.3f %8.2fx  %s\n", kernel, serial, parallel, serial / parallel,
                agree ? "agree" : "DISAGREE");
}

} // namespace

int main() {
    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-28s %12s %12s %9s\n", "kernel", "serial ms", "parallel ms", "speedup");

    const BipartiteGraph big = subdivide(random_cubic(20000, 1)).bipartite;
    ConflictGraph s, p;
    const double cs = time_ms([&] { s = build_conflict_graph_serial(big); }, 3);
    const double cp = time_ms([&] { p = build_conflict_graph(big); }, 3);
    bool same = s.size() == p.size();
    for (EdgeId e = 0; same && e < s.size(); ++e) same = std::ranges::equal(s[e], p[e]);
    row("conflict graph (60k edges)", cs, cp, same);

    // one long ring: every start runs a deep BFS before the bound applies
    std::vector<Endpoints> ring;
    for (VertexId v = 0; v < 3000; ++v) ring.emplace_back(v, (v + 1) % 3000);
    const BipartiteGraph girthy = subdivide(Multigraph(3000, ring)).bipartite;
    std::optional<CycleDescriptor> a, b;
    const double gs = time_ms([&] { a = shortest_cycle_serial(girthy); }, 3);
    const double gp = time_ms([&] { b = shortest_cycle(girthy); }, 3);
    row("shortest cycle (6k ring)", gs, gp, a && b && a->edges == b->edges);

    StressOptions opt;
    opt.count = 2000;
    opt.size = 100;
    opt.seed = 9;
    StressSummary ss, sp;
    const double ts = time_ms([&] { ss = run_stress_serial(opt); }, 1);
    const double tp = time_ms([&] { sp = run_stress(opt); }, 1);
    row("stress harness (2000 solves)", ts, tp, ss == sp);
    return 0;
}
