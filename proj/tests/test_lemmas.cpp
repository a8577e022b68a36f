#include <doctest.h>

#include "lemma_suites.hpp"
#include "strongcolor/generate.hpp"

using namespace strongcolor;
using namespace testing_support;

TEST_CASE("color_lemma2 size table") {
    // n = 7: path edges 3 4 5 5 4 3, pendants at 2 4 6: 2 3 2
    const std::vector<std::size_t> path{3, 4, 5, 5, 4, 3};
    for (std::size_t i = 1; i < 7; ++i) CHECK(lemma2_path_size(7, i) == path[i - 1]);
    CHECK(lemma2_pendant_size(7, 2) == 2);
    CHECK(lemma2_pendant_size(7, 4) == 3);
    CHECK(lemma2_pendant_size(7, 6) == 2);
    // n = 5: 3 4 4 3 and 2 2
    CHECK(lemma2_path_size(5, 2) == 4);
    CHECK(lemma2_path_size(5, 3) == 4);
    CHECK(lemma2_pendant_size(5, 4) == 2);
}

TEST_CASE("precolor_lemma1 configuration checks") {
    const BipartiteGraph b = lemma1_graph();
    const Lemma1Config cfg = make_lemma1_config(b, {0, 1, 2, 3, 4}, 5, 6);
    CHECK(cfg.uv == 0);
    CHECK(cfg.vz == 4);
    CHECK(cfg.xt == 5);
    CHECK_THROWS_AS(make_lemma1_config(b, {1, 2, 3, 4, 0}, 5, 6), Error);
    CHECK_THROWS_AS(make_lemma2_config(lemma2_graph(5), {0, 1, 2, 3}, {5, 6}), Error);
}

TEST_CASE("precolor_lemma1: pendants with one shared list share a color") {
    const BipartiteGraph b = lemma1_graph();
    const ConflictGraph cg = build_conflict_graph(b);
    const ColorList five{1, 2, 3, 4, 5};
    const ListAssignment lists({five, five, five, five, {1, 2, 3}, {1, 2, 3}});
    SolveContext ctx(b, lists, cg);
    const Lemma1Residual res = precolor_lemma1(ctx, make_lemma1_config(b, {0, 1, 2, 3, 4}, 5, 6));
    CHECK(ctx.coloring[4] == ctx.coloring[5]);
    CHECK(res.vw.size() >= 3);
    CHECK(res.wx.size() >= 2);
}

TEST_CASE("precolor_lemma1 suite") {
    const SuiteResult r = lemma1_suite(1, 3000);
    INFO(r.first_failure);
    CHECK(r.ok());
}

TEST_CASE("color_lemma2 suites") {
    for (std::size_t n : {5, 7, 9, 11, 13}) {
        CAPTURE(n);
        const SuiteResult r = lemma2_suite(n, 100 + n, 2000);
        INFO(r.first_failure);
        CHECK(r.ok());
    }
}

TEST_CASE("cycle extensions on suns") {
    for (std::size_t n : {4, 6, 8, 10, 12, 14}) {
        CAPTURE(n);
        const SuiteResult r = extension_suite(n, 7 * n, 3000);
        INFO(r.first_failure);
        CHECK(r.ok());
        MESSAGE("sun(" << n << "): fallback_uses " << r.fallback_uses << " over " << r.draws << " draws");
    }
}

TEST_CASE("C4 with coinciding pendant neighbors is the K_{2,3} base case") {
    const BipartiteGraph k23 = std::get<BipartiteGraph>(named("k23"));
    const ConflictGraph cg = build_conflict_graph(k23);
    SplitMix64 rng(3);
    for (int d = 0; d < 500; ++d) {
        const ListAssignment lists = sized_lists(rng, std::vector<std::size_t>(6, 6), 3);
        SolveContext ctx(k23, lists, cg);
        extend_c4(ctx, *shortest_cycle(k23));
        CHECK(ctx.stats.k23_base_cases == 1);
        CHECK(verify_strong(k23, lists, ctx.coloring, true).empty());
    }
}

TEST_CASE("C6 lists that defeat the case chain are finished by the exhaustive fallback") {
    // Alternate cycle edges get {1..5} and {6..10}: no opposite pair shares a color,
    // the pendant lists differ, and six edges compete for {1..5}.
    const BipartiteGraph b = sun(6);
    const ConflictGraph cg = build_conflict_graph(b);
    const ColorList low{1, 2, 3, 4, 5}, high{6, 7, 8, 9, 10};
    const ListAssignment lists({low, high, low, high, low, high, {1, 2, 3}, {1, 2, 4}, {1, 2, 5}});
    SolveContext ctx(b, lists, cg);
    extend_c6(ctx, *shortest_cycle(b));
    CHECK(verify_strong(b, lists, ctx.coloring, true).empty());
    CHECK(ctx.stats.fallback_uses == 1);
    CHECK(ctx.stats.c6_extensions == 1);
}
