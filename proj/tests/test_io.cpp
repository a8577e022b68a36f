#include <doctest.h>

#include "strongcolor/error.hpp"
#include "strongcolor/generate.hpp"
#include "strongcolor/io.hpp"

using namespace strongcolor;

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

TEST_CASE("graph document golden text") {
    const std::string text = write_graph(named("k23"));
    CHECK(text ==
          "{\n"
          "  \"format_version\": 1,\n"
          "  \"kind\": \"bipartite\",\n"
          "  \"vertex_count\": 5,\n"
          "  \"edges\": [\n"
          "    [0, 3],\n"
          "    [0, 4],\n"
          "    [1, 3],\n"
          "    [1, 4],\n"
          "    [2, 3],\n"
          "    [2, 4]\n"
          "  ],\n"
          "  \"parts\": {\n"
          "    \"A\": [0, 1, 2],\n"
          "    \"B\": [3, 4]\n"
          "  }\n"
          "}\n");
    CHECK(write_graph(AnyGraph{Multigraph(2, {})}) ==
          "{\n  \"format_version\": 1,\n  \"kind\": \"multigraph\",\n  \"vertex_count\": 2,\n  \"edges\": []\n}\n");
}

TEST_CASE("graph round trips") {
    for (const auto& name : fixture_names()) {
        CAPTURE(name);
        const AnyGraph g = named(name);
        const std::string text = write_graph(g);
        const AnyGraph back = read_graph(text);
        CHECK(back == g);
        CHECK(write_graph(back) == text);
    }
    const AnyGraph cubic = random_cubic(30, 5);
    CHECK(read_graph(write_graph(cubic)) == cubic);
    const AnyGraph bip = random_23_bipartite(20, 14, 5);
    CHECK(read_graph(write_graph(bip)) == bip);
}

TEST_CASE("bipartite document without parts gets inferred parts") {
    const AnyGraph g = read_graph(R"({"format_version": 1, "kind": "bipartite", "vertex_count": 3, "edges": [[0, 1], [1, 2]]})");
    const auto& b = std::get<BipartiteGraph>(g);
    CHECK(b.part(0) == Part::B);
    CHECK(b.part(1) == Part::A);
}

TEST_CASE("lists and colorings round trip in both modes") {
    const Multigraph g = std::get<Multigraph>(named("k4"));
    const auto lists = random_lists(g.edge_count(), 6, 12, 3).lists();
    const std::string lt = write_lists(g, Mode::Strong, lists);
    CHECK(read_lists(lt, g, Mode::Strong) == lists);
    CHECK(write_lists(g, Mode::Strong, read_lists(lt, g, Mode::Strong)) == lt);

    const auto ilists = random_lists(2 * g.edge_count(), 6, 12, 4).lists();
    const std::string ilt = write_lists(g, Mode::Incidence, ilists);
    CHECK(ilt.find("\"0:0\": [") != std::string::npos);
    CHECK(ilt.find("\"1:0\": [") != std::string::npos);
    CHECK(read_lists(ilt, g, Mode::Incidence) == ilists);

    std::vector<std::optional<Color>> colors(2 * g.edge_count());
    for (std::size_t i = 0; i < colors.size(); ++i)
        if (i % 3) colors[i] = static_cast<Color>(i);
    for (Mode m : {Mode::Strong, Mode::Incidence}) {
        std::vector<std::optional<Color>> c = colors;
        if (m == Mode::Strong) c.resize(g.edge_count());
        const std::string ct = write_coloring(g, m, c);
        CHECK(read_coloring(ct, g, m) == c);
        CHECK(write_coloring(g, m, read_coloring(ct, g, m)) == ct);
    }
    CHECK(write_coloring(g, Mode::Strong, {1, 2}) ==
          "{\n  \"format_version\": 1,\n  \"mode\": \"strong\",\n  \"colors\": {\n    \"0\": 1,\n    \"1\": 2\n  }\n}\n");
}

TEST_CASE("malformed documents") {
    const Multigraph g = std::get<Multigraph>(named("double-edge"));
    CHECK(kind_of([] { read_graph("{"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { read_graph(R"({"format_version": 2, "kind": "multigraph", "vertex_count": 1, "edges": []})"); }) ==
          ErrorKind::Parse);
    CHECK(kind_of([] { read_graph(R"({"format_version": 1, "kind": "tree", "vertex_count": 1, "edges": []})"); }) ==
          ErrorKind::Parse);
    CHECK(kind_of([] { read_graph(R"({"format_version": 1, "kind": "multigraph", "vertex_count": 2, "edges": [[0]]})"); }) ==
          ErrorKind::Parse);
    CHECK(kind_of([] { read_graph(R"({"format_version": 1, "kind": "multigraph", "vertex_count": 2, "edges": [[0, 0]]})"); }) ==
          ErrorKind::LoopEdge);
    CHECK(kind_of([] { read_graph(R"({"format_version": 1, "kind": "multigraph", "vertex_count": 2, "edges": [[0, 5]]})"); }) ==
          ErrorKind::BadVertexId);
    CHECK(kind_of([] {
              read_graph(R"({"format_version": 1, "kind": "bipartite", "vertex_count": 2, "edges": [[0, 1]],
                             "parts": {"A": [0], "B": [0, 1]}})");
          }) == ErrorKind::Parse);
    // missing list, unknown key, wrong mode
    CHECK(kind_of([&] { read_lists(R"({"format_version": 1, "mode": "strong", "lists": {"0": [1]}})", g, Mode::Strong); }) ==
          ErrorKind::Parse);
    CHECK(kind_of([&] { read_coloring(R"({"format_version": 1, "mode": "strong", "colors": {"9": 1}})", g, Mode::Strong); }) ==
          ErrorKind::Parse);
    CHECK(kind_of([&] { read_coloring(R"({"format_version": 1, "mode": "strong", "colors": {"1:0": 1}})", g, Mode::Incidence); }) ==
          ErrorKind::Parse);
    CHECK(kind_of([&] { read_coloring(R"({"format_version": 1, "mode": "incidence", "colors": {"0:1": 1.5}})", g, Mode::Incidence); }) ==
          ErrorKind::Parse);
    CHECK(kind_of([] { parse_mode("weak"); }) == ErrorKind::Parse);
}

TEST_CASE("stats document") {
    SolveStats s;
    s.peeled_edges = 4;
    s.long_cycle_extensions = 1;
    const std::string t = write_stats(s);
    CHECK(t.find("\"peeled_edges\": 4,") != std::string::npos);
    CHECK(t.find("\"long_cycle_extensions\": 1,") != std::string::npos);
    CHECK(t.find("\"fallback_uses\": 0,") != std::string::npos);
}
