#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <string>

#include "strongcolor/error.hpp"
#include "strongcolor/generate.hpp"
#include "strongcolor/io.hpp"
#include "strongcolor/oracle.hpp"
#include "strongcolor/solver.hpp"
#include "strongcolor/stress.hpp"

using namespace strongcolor;

namespace {

enum Exit { kOk = 0, kPrecondition = 1, kMalformed = 2, kInvariant = 3, kBudget = 4 };

int exit_code(ErrorKind k) {
    switch (k) {
    case ErrorKind::Parse:
    case ErrorKind::LoopEdge:
    case ErrorKind::BadVertexId:
    case ErrorKind::BadEdgeId:
    case ErrorKind::UnknownName:
    case ErrorKind::BadSize:
        return kMalformed;
    case ErrorKind::InternalInvariant:
        return kInvariant;
    default:
        return kPrecondition;
    }
}

/// The graph a strong-mode command works on.
BipartiteGraph as_bipartite(const AnyGraph& g) {
    if (const auto* b = std::get_if<BipartiteGraph>(&g)) return *b;
    return infer_parts(std::get<Multigraph>(g));
}

std::size_t entry_count(const Multigraph& g, Mode m) {
    return m == Mode::Strong ? g.edge_count() : 2 * g.edge_count();
}

std::vector<ColorList> load_lists(const std::optional<std::string>& path, std::optional<std::size_t> uniform,
                                  const Multigraph& g, Mode m) {
    if (path) return read_lists(read_file(*path), g, m);
    return ListAssignment::uniform(entry_count(g, m), *uniform).lists();
}

struct ColorArgs {
    std::string graph, out;
    std::optional<std::string> lists;
    std::optional<std::size_t> uniform;
    std::string mode = "strong";
    bool stats = false;
};

int run_color(const ColorArgs& a) {
    const Mode m = parse_mode(a.mode);
    const AnyGraph any = read_graph(read_file(a.graph));
    const Multigraph& g = underlying(any);
    const auto lists = load_lists(a.lists, a.uniform, g, m);
    std::vector<std::optional<Color>> colors;
    SolveStats stats;
    if (m == Mode::Strong) {
        const BipartiteGraph b = as_bipartite(any);
        StrongSolution sol = color_strong_23(b, ListAssignment(lists));
        colors = std::move(sol.coloring);
        stats = sol.stats;
    } else {
        IncidenceSolution sol = color_incidence(g, lists);
        colors.assign(sol.coloring.begin(), sol.coloring.end());
        stats = sol.stats;
    }
    write_file(a.out, write_coloring(g, m, colors));
    if (a.stats) std::cout << write_stats(stats);
    return kOk;
}

struct VerifyArgs {
    std::string graph, coloring;
    std::optional<std::string> lists;
    std::string mode = "strong";
};

int run_verify(const VerifyArgs& a) {
    const Mode m = parse_mode(a.mode);
    const AnyGraph any = read_graph(read_file(a.graph));
    const Multigraph& g = underlying(any);
    const auto colors = read_coloring(read_file(a.coloring), g, m);
    const std::optional<std::vector<ColorList>> lists =
        a.lists ? std::optional(read_lists(read_file(*a.lists), g, m)) : std::nullopt;
    std::vector<Violation> found;
    if (m == Mode::Strong) {
        found = verify_strong(as_bipartite(any), lists ? ListAssignment(*lists) : ListAssignment(), colors, true);
    } else {
        found = verify_incidence(g, colors);
        if (lists)
            for (std::size_t i = 0; i < colors.size(); ++i)
                if (colors[i] && !std::binary_search((*lists)[i].begin(), (*lists)[i].end(), *colors[i]))
                    found.push_back({Violation::Kind::ListBreach, static_cast<EdgeId>(i), 0, *colors[i]});
    }
    for (const auto& v : found) std::cout << describe(v, m == Mode::Incidence ? &g : nullptr) << '\n';
    return found.empty() ? kOk : kPrecondition;
}

struct GenArgs {
    std::string family, out;
    std::size_t n = 0, na = 0, nb = 0;
    std::uint64_t seed = 1;
};

int run_gen(const GenArgs& a) {
    AnyGraph g;
    if (a.family == "cubic") g = random_cubic(a.n, a.seed);
    else if (a.family == "bipartite") g = random_23_bipartite(a.na, a.nb, a.seed);
    else g = named(a.family);
    write_file(a.out, write_graph(g));
    return kOk;
}

struct OracleArgs {
    std::string graph;
    std::optional<std::string> lists;
    std::optional<std::size_t> uniform;
    bool min_colors = false;
    std::string mode = "strong";
};

int report(OracleStatus s) {
    switch (s) {
    case OracleStatus::Feasible:
        std::cout << "feasible\n";
        return kOk;
    case OracleStatus::Infeasible:
        std::cout << "infeasible\n";
        return kPrecondition;
    case OracleStatus::BudgetExceeded:
        break;
    }
    std::cout << "budget exceeded\n";
    return kBudget;
}

int run_oracle(const OracleArgs& a) {
    const Mode m = parse_mode(a.mode);
    const AnyGraph any = read_graph(read_file(a.graph));
    const Multigraph& g = underlying(any);
    const OracleBudget budget = OracleBudget::from_env();
    const BipartiteGraph b = m == Mode::Strong ? as_bipartite(any) : subdivide(g).bipartite;
    if (a.min_colors) {
        const CountResult r = strong_chromatic_index(b, budget);
        if (r.status != OracleStatus::Feasible) return report(r.status);
        std::cout << r.value << '\n';
        return kOk;
    }
    const auto lists = load_lists(a.lists, a.uniform, g, m);
    return report(backtrack_color(b, ListAssignment(lists), budget).status);
}

int run_stress_cmd(const StressOptions& opt, bool serial) {
    const StressSummary s = serial ? run_stress_serial(opt) : run_stress(opt);
    std::cout << s.line() << '\n' << "wall time: " << s.seconds << " s\n";
    if (s.invariant_failures > 0) return kInvariant;
    return s.all_succeeded() ? kOk : kPrecondition;
}

template <class Fn>
int guarded(Fn fn) {
    try {
        return fn();
    } catch (const Error& e) {
        std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
        return exit_code(e.kind());
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Strong list edge-coloring of (2,3)-bipartite graphs and list incidence coloring of subcubic multigraphs"};
    app.require_subcommand(1);

    ColorArgs color;
    auto* c = app.add_subcommand("color", "Color a graph and write a coloring file");
    c->add_option("graph", color.graph, "Graph file")->required();
    auto* c_lists = c->add_option("--lists", color.lists, "Lists file");
    c->add_option("--uniform", color.uniform, "Lists {1..k} on every edge or incidence")->excludes(c_lists);
    c->add_option("--mode", color.mode, "strong or incidence")->check(CLI::IsMember({"strong", "incidence"}));
    c->add_option("--out", color.out, "Coloring file to write")->required();
    c->add_flag("--stats", color.stats, "Print solver statistics");

    VerifyArgs verify;
    auto* v = app.add_subcommand("verify", "Check a coloring file");
    v->add_option("graph", verify.graph, "Graph file")->required();
    v->add_option("coloring", verify.coloring, "Coloring file")->required();
    v->add_option("--lists", verify.lists, "Lists file");
    v->add_option("--mode", verify.mode, "strong or incidence")->check(CLI::IsMember({"strong", "incidence"}));

    GenArgs gen;
    auto* g = app.add_subcommand("gen", "Write a generated or named graph");
    g->add_option("family", gen.family, "cubic, bipartite, or a fixture name")->required();
    g->add_option("--n", gen.n, "Vertex count (cubic)");
    g->add_option("--na", gen.na, "A-side vertex count (bipartite)");
    g->add_option("--nb", gen.nb, "B-side vertex count (bipartite)");
    g->add_option("--seed", gen.seed, "Seed");
    g->add_option("--out", gen.out, "Graph file to write")->required();

    OracleArgs oracle;
    auto* o = app.add_subcommand("oracle", "Exact feasibility or minimum color count");
    o->add_option("graph", oracle.graph, "Graph file")->required();
    auto* o_lists = o->add_option("--lists", oracle.lists, "Lists file");
    auto* o_uniform = o->add_option("--uniform", oracle.uniform, "Lists {1..k}")->excludes(o_lists);
    o->add_flag("--min-colors", oracle.min_colors, "Print the least k with {1..k} feasible")
        ->excludes(o_lists)
        ->excludes(o_uniform);
    o->add_option("--mode", oracle.mode, "strong or incidence")->check(CLI::IsMember({"strong", "incidence"}));

    StressOptions stress;
    bool serial = false;
    auto* s = app.add_subcommand("stress", "Solve and verify seeded random instances");
    s->add_option("--count", stress.count, "Instances");
    s->add_option("--size", stress.size, "Largest B-side vertex count");
    s->add_option("--seed", stress.seed, "Seed");
    s->add_option("--palette", stress.palette, "Palette size");
    s->add_option("--k", stress.k, "List size");
    s->add_flag("--serial", serial, "Run instances one after another");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kMalformed;
    }

    if (*c) {
        if (!color.lists && !color.uniform) {
            std::cerr << "color: one of --lists or --uniform is required\n";
            return kMalformed;
        }
        return guarded([&] { return run_color(color); });
    }
    if (*v) return guarded([&] { return run_verify(verify); });
    if (*g) return guarded([&] { return run_gen(gen); });
    if (*o) {
        if (!oracle.min_colors && !oracle.lists && !oracle.uniform) {
            std::cerr << "oracle: one of --lists, --uniform or --min-colors is required\n";
            return kMalformed;
        }
        return guarded([&] { return run_oracle(oracle); });
    }
    return guarded([&] { return run_stress_cmd(stress, serial); });
}
