#include <doctest.h>

#include <set>

#include "strongcolor/error.hpp"
#include "strongcolor/generate.hpp"
#include "strongcolor/solver.hpp"
#include "support.hpp"

using namespace strongcolor;
using namespace testing_support;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::InternalInvariant;
}

IncidenceLists uniform_incidence(const Multigraph& g, std::size_t k) {
    return ListAssignment::uniform(2 * g.edge_count(), k).lists();
}

} // namespace

TEST_CASE("K_{2,3} needs all six colors") {
    const BipartiteGraph k23 = std::get<BipartiteGraph>(named("k23"));
    const StrongSolution sol = color_strong_23(k23, ListAssignment::uniform(6, 6));
    CHECK(verify_strong(k23, ListAssignment::uniform(6, 6), sol.coloring, true).empty());
    std::set<Color> used;
    for (const auto& c : sol.coloring) used.insert(*c);
    CHECK(used.size() == 6);
    CHECK(sol.stats.k23_base_cases == 1);
    CHECK(sol.stats.peeled_edges == 0);
}

TEST_CASE("preconditions") {
    const BipartiteGraph k23 = std::get<BipartiteGraph>(named("k23"));
    CHECK(kind_of([&] { color_strong_23(k23, ListAssignment::uniform(6, 5)); }) == ErrorKind::ListTooSmall);
    CHECK(kind_of([&] { color_strong_23(k23, ListAssignment::uniform(5, 6)); }) == ErrorKind::ListTooSmall);
    const BipartiteGraph claw(Multigraph(4, {{0, 1}, {0, 2}, {0, 3}}), {Part::A, Part::B, Part::B, Part::B});
    CHECK(kind_of([&] { color_strong_23(claw, ListAssignment::uniform(3, 6)); }) == ErrorKind::NotTwoThree);

    const Multigraph star4(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(kind_of([&] { color_incidence(star4, uniform_incidence(star4, 6)); }) == ErrorKind::DegreeTooHigh);
    const Multigraph k4 = std::get<Multigraph>(named("k4"));
    CHECK(kind_of([&] { color_incidence(k4, uniform_incidence(k4, 5)); }) == ErrorKind::ListTooSmall);
}

TEST_CASE("edgeless and multi-component inputs") {
    const BipartiteGraph empty(Multigraph(3, {}), {Part::A, Part::B, Part::B});
    const StrongSolution none = color_strong_23(empty, ListAssignment());
    CHECK(none.coloring.empty());
    CHECK(none.stats == SolveStats{});

    // K_{2,3} next to a path, both shifted into one graph
    std::vector<Endpoints> edges;
    for (VertexId a = 0; a < 3; ++a)
        for (VertexId b = 3; b < 5; ++b) edges.emplace_back(a, b);
    edges.insert(edges.end(), {{5, 6}, {6, 7}, {7, 8}});
    const BipartiteGraph g(Multigraph(9, edges),
                           {Part::A, Part::A, Part::A, Part::B, Part::B, Part::B, Part::A, Part::B, Part::A});
    const ListAssignment lists = ListAssignment::uniform(g.edge_count(), 6);
    const StrongSolution sol = color_strong_23(g, lists);
    CHECK(verify_strong(g, lists, sol.coloring, true).empty());
    CHECK(sol.stats.k23_base_cases == 1);
    CHECK(sol.stats.peeled_edges == 3);
}

TEST_CASE("peeling") {
    // path 0-1-2-3 with 0 in B: vertex 0 (B, degree 1) is the lowest low vertex
    const BipartiteGraph p(Multigraph(4, {{0, 1}, {1, 2}, {2, 3}}), {Part::B, Part::A, Part::B, Part::A});
    ReductionState st(p);
    const std::vector<VertexId> all{0, 1, 2, 3};
    st.focus(all);
    CHECK(st.live_edges() == 3);
    std::vector<EdgeId> deferred;
    CHECK(peel_step(st, deferred) == EdgeId{0});
    CHECK_FALSE(st.alive(0));
    CHECK(st.live_degree(1) == 1);
    while (peel_step(st, deferred)) {}
    CHECK(deferred.size() == 3);
    CHECK(st.live_edges() == 0);

    const ListAssignment lists = ListAssignment::uniform(3, 6);
    const ConflictGraph cg = build_conflict_graph(p);
    SolveContext ctx(p, lists, cg);
    greedy_unwind(ctx, deferred);
    CHECK(deferred.empty());
    CHECK(verify_strong(p, lists, ctx.coloring, true).empty());

    // (2,3)-regular: nothing to peel
    const BipartiteGraph k23 = std::get<BipartiteGraph>(named("k23"));
    ReductionState reg(k23);
    const std::vector<VertexId> v5{0, 1, 2, 3, 4};
    reg.focus(v5);
    std::vector<EdgeId> none;
    CHECK_FALSE(peel_step(reg, none));
    CHECK_FALSE(reg.next_low());
}

TEST_CASE("fixture battery covers every solver path") {
    SolveStats total;
    for (const std::string& name : fixture_names()) {
        CAPTURE(name);
        const AnyGraph any = named(name);
        const Multigraph& g = underlying(any);
        if (g.max_degree() <= 3) {
            const IncidenceSolution sol = color_incidence(g, uniform_incidence(g, 6));
            IncidenceColoring c(sol.coloring.begin(), sol.coloring.end());
            CHECK(verify_incidence(g, c).empty());
            total += sol.stats;
        }
        if (const auto* b = std::get_if<BipartiteGraph>(&any)) {
            const StrongSolution sol = color_strong_23(*b, ListAssignment::uniform(b->edge_count(), 6));
            CHECK(verify_strong(*b, ListAssignment::uniform(b->edge_count(), 6), sol.coloring, true).empty());
            total += sol.stats;
        }
    }
    CHECK(total.peeled_edges >= 1);
    CHECK(total.k23_base_cases >= 1);
    CHECK(total.c4_extensions >= 1);
    CHECK(total.c6_extensions >= 1);
    CHECK(total.long_cycle_extensions >= 1);
    CHECK(total.fallback_uses == 0);
}

TEST_CASE("petersen incidence coloring takes the long-cycle path") {
    const Multigraph g = std::get<Multigraph>(named("petersen"));
    const IncidenceSolution sol = color_incidence(g, uniform_incidence(g, 6));
    CHECK(sol.stats.long_cycle_extensions >= 1);
    CHECK(*std::max_element(sol.coloring.begin(), sol.coloring.end()) <= 6);
}

TEST_CASE("random (2,3)-bipartite graphs with 6-lists") {
    SplitMix64 rng(2024);
    SolveStats total;
    for (int trial = 0; trial < 1500; ++trial) {
        const BipartiteGraph b = trial % 3 ? random_instance(rng, 40) : random_biregular(rng, 20);
        const std::size_t palette = 6 + rng.uniform_below(7);
        const ListAssignment lists = random_lists(b.edge_count(), 6, palette, rng.next());
        const StrongSolution sol = color_strong_23(b, lists);
        REQUIRE(verify_strong(b, lists, sol.coloring, true).empty());
        total += sol.stats;
    }
    MESSAGE("fallback_uses over random solves: " << total.fallback_uses);
    CHECK(total.c6_extensions + total.long_cycle_extensions + total.c4_extensions > 0);
}

TEST_CASE("longer lists are fine") {
    SplitMix64 rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        const BipartiteGraph b = random_biregular(rng, 15);
        const ListAssignment lists = random_lists(b.edge_count(), 6 + rng.uniform_below(4), 14, rng.next());
        REQUIRE(verify_strong(b, lists, color_strong_23(b, lists).coloring, true).empty());
    }
}

TEST_CASE("incidence coloring of random cubic multigraphs") {
    SplitMix64 rng(99);
    for (int trial = 0; trial < 400; ++trial) {
        const Multigraph g = random_cubic(4 + 2 * rng.uniform_below(30), rng.next());
        const bool uniform = trial % 2 == 0;
        const IncidenceLists lists =
            uniform ? uniform_incidence(g, 6) : random_lists(2 * g.edge_count(), 6, 6 + rng.uniform_below(5), rng.next()).lists();
        const IncidenceSolution sol = color_incidence(g, lists);
        IncidenceColoring c(sol.coloring.begin(), sol.coloring.end());
        REQUIRE(verify_incidence(g, c).empty());
        for (std::size_t i = 0; i < c.size(); ++i) CHECK(std::binary_search(lists[i].begin(), lists[i].end(), *c[i]));
    }
}

TEST_CASE("determinism") {
    SplitMix64 rng(4);
    for (int trial = 0; trial < 50; ++trial) {
        const BipartiteGraph b = random_biregular(rng, 20);
        const ListAssignment lists = random_lists(b.edge_count(), 6, 8, rng.next());
        const StrongSolution x = color_strong_23(b, lists);
        const StrongSolution y = color_strong_23(b, lists);
        CHECK(x.coloring == y.coloring);
        CHECK(x.stats == y.stats);
    }
}
