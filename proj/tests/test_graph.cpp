#include <doctest.h>

#include "strongcolor/error.hpp"
#include "strongcolor/generate.hpp"
#include "strongcolor/graph.hpp"
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

} // namespace

TEST_CASE("multigraph validation") {
    CHECK(kind_of([] { Multigraph(3, {{1, 1}}); }) == ErrorKind::LoopEdge);
    CHECK(kind_of([] { Multigraph(3, {{0, 3}}); }) == ErrorKind::BadVertexId);

    const Multigraph g(3, {{0, 1}, {1, 2}, {0, 1}});
    CHECK(g.degree(1) == 3);
    CHECK(g.max_degree() == 3);
    CHECK(g.other_end(1, 2) == 1);
    CHECK(g.adjacent(0, 1));
    CHECK_FALSE(g.adjacent(0, 2));
    const auto nb = g.neighbors(1);
    REQUIRE(nb.size() == 3);
    CHECK(nb[0].edge == 0);
    CHECK(nb[1].edge == 1);
    CHECK(nb[2].edge == 2);
}

TEST_CASE("bipartite validation") {
    const Multigraph path(3, {{0, 1}, {1, 2}});
    CHECK(kind_of([&] { BipartiteGraph(path, {Part::A, Part::A, Part::B}); }) == ErrorKind::NotBipartite);
    CHECK(kind_of([&] { BipartiteGraph(path, {Part::A, Part::B}); }) == ErrorKind::NotTwoThree);
    CHECK(kind_of([] { BipartiteGraph(Multigraph(2, {{0, 1}, {0, 1}}), {Part::A, Part::B}); }) ==
          ErrorKind::NotTwoThree);

    const BipartiteGraph b(path, {Part::B, Part::A, Part::B});
    CHECK(b.a_end(0) == 1);
    CHECK(b.b_end(0) == 0);
    CHECK(b.is_two_three());

    const BipartiteGraph star(Multigraph(4, {{0, 1}, {0, 2}, {0, 3}}), {Part::A, Part::B, Part::B, Part::B});
    CHECK_FALSE(star.is_two_three());
    CHECK(kind_of([&] { star.require_two_three(); }) == ErrorKind::NotTwoThree);
}

TEST_CASE("incidence numbering and subdivision") {
    const Multigraph g = std::get<Multigraph>(named("double-edge"));
    const auto inc = incidences(g);
    REQUIRE(inc.size() == 4);
    CHECK(inc[0] == Incidence{0, 0});
    CHECK(inc[1] == Incidence{1, 0});
    for (std::size_t i = 0; i < inc.size(); ++i) {
        CHECK(incidence_index(g, inc[i]) == i);
        CHECK(incidence_at(g, i) == inc[i]);
    }

    const SubdivisionMap m = subdivide(g);
    const BipartiteGraph& s = m.bipartite;
    CHECK(s.vertex_count() == 4);
    CHECK(s.edge_count() == 4);
    CHECK(m.edge_to_mid == std::vector<VertexId>{2, 3});
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        CHECK(s.part(m.edge_to_mid[e]) == Part::A);
        for (std::size_t side = 0; side < 2; ++side) {
            const Incidence i = incidence_at(g, 2 * e + side);
            const EdgeId half = m.incidence_to_edge(g, i);
            CHECK(half == 2 * e + side);
            CHECK(s.b_end(half) == i.vertex);
            CHECK(s.a_end(half) == m.edge_to_mid[e]);
        }
    }
    CHECK(s.is_two_three());
}

TEST_CASE("infer_parts") {
    const BipartiteGraph k23 = infer_parts(std::get<BipartiteGraph>(named("k23")).graph());
    CHECK(k23.part(0) == Part::A);
    CHECK(k23.part(3) == Part::B);
    // A path: the lowest vertex goes to B.
    const BipartiteGraph p = infer_parts(Multigraph(3, {{0, 1}, {1, 2}}));
    CHECK(p.part(0) == Part::B);
    CHECK(p.part(1) == Part::A);
    CHECK_THROWS_AS(infer_parts(Multigraph(3, {{0, 1}, {1, 2}, {2, 0}})), Error);
    CHECK(kind_of([] { infer_parts(Multigraph(3, {{0, 1}, {1, 2}, {2, 0}})); }) == ErrorKind::NotBipartite);
    CHECK(kind_of([] { infer_parts(std::get<Multigraph>(named("k33"))); }) == ErrorKind::NotTwoThree);
    for (const char* name : {"double-edge", "theta", "k4", "petersen", "heawood", "cube"})
        CHECK(infer_parts(subdivide(underlying(named(name))).bipartite.graph()).is_two_three());
}

TEST_CASE("components are sorted and ordered") {
    const Multigraph g(6, {{4, 5}, {0, 3}, {3, 1}});
    const auto cs = components(g);
    REQUIRE(cs.size() == 3);
    CHECK(cs[0] == std::vector<VertexId>{0, 1, 3});
    CHECK(cs[1] == std::vector<VertexId>{2});
    CHECK(cs[2] == std::vector<VertexId>{4, 5});
}

TEST_CASE("shortest cycle on fixture subdivisions") {
    const std::vector<std::pair<const char*, std::size_t>> girth = {
        {"double-edge", 4}, {"theta", 4}, {"twin-digons", 4}, {"k4", 6},   {"prism", 6},
        {"k33", 8},         {"cube", 8},  {"petersen", 10},   {"heawood", 12}};
    for (const auto& [name, expected] : girth) {
        CAPTURE(name);
        const BipartiteGraph s = subdivide(underlying(named(name))).bipartite;
        const auto c = shortest_cycle(s);
        REQUIRE(c);
        CHECK(c->length() == expected);
        CHECK(c->length() == 2 * *brute_girth(underlying(named(name))));
        for (std::size_t i = 0; i < c->length(); ++i) {
            const auto [x, y] = s.graph().endpoints(c->edges[i]);
            const VertexId a = c->vertices[i], b = c->vertices[(i + 1) % c->length()];
            CHECK(((x == a && y == b) || (x == b && y == a)));
        }
    }
    CHECK_FALSE(shortest_cycle(infer_parts(underlying(named("tree")))));
}

TEST_CASE("cycle descriptor pendants") {
    const BipartiteGraph s = sun(6);
    const auto c = shortest_cycle(s);
    REQUIRE(c);
    CHECK(c->length() == 6);
    CHECK(c->pendants.size() == 3);
    for (const Pendant& p : c->pendants) {
        CHECK(s.part(p.vertex) == Part::B);
        CHECK(p.neighbor >= 6);
        CHECK(c->pendant_of(p.vertex) == &p);
    }
    CHECK(c->pendant_of(1) == nullptr);
}

TEST_CASE("shortest cycle: parallel, serial and brute force agree") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const BipartiteGraph b = trial % 2 ? random_instance(rng, 30) : random_biregular(rng, 12);
        const auto par = shortest_cycle(b);
        const auto ser = shortest_cycle_serial(b);
        const auto girth = brute_girth(b.graph());
        REQUIRE(par.has_value() == girth.has_value());
        REQUIRE(ser.has_value() == girth.has_value());
        if (!girth) continue;
        CHECK(par->length() == *girth);
        CHECK(par->vertices == ser->vertices);
        CHECK(par->edges == ser->edges);
    }
}

TEST_CASE("shortest_cycle_in respects the edge mask") {
    const BipartiteGraph s = subdivide(underlying(named("theta"))).bipartite;
    std::vector<std::uint8_t> alive(s.edge_count(), 1);
    std::vector<VertexId> starts(s.vertex_count());
    for (VertexId v = 0; v < starts.size(); ++v) starts[v] = v;
    const auto full = shortest_cycle_in(s, {alive}, starts);
    REQUIRE(full);
    CHECK(full->length() == 4);
    CHECK(full->pendants.size() == 2);
    // Drop both halves of the third original edge: the pendants disappear.
    alive[4] = alive[5] = 0;
    const auto cut = shortest_cycle_in(s, {alive}, starts);
    REQUIRE(cut);
    CHECK(cut->length() == 4);
    CHECK(cut->pendants.empty());
    alive[0] = 0;
    CHECK_FALSE(shortest_cycle_in(s, {alive}, starts));
}
