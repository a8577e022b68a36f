#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "strongcolor/conflict.hpp"
#include "strongcolor/generate.hpp"
#include "strongcolor/solver.hpp"

namespace strongcolor {

inline constexpr int kFormatVersion = 1;

/// Strong documents key entries by edge id ("7"); incidence documents by
/// incidence "v:e", in incidence-index order.
enum class Mode { Strong, Incidence };

std::string mode_name(Mode m);
/// Throws Parse.
Mode parse_mode(std::string_view s);

/// Entry key of index i (edge id or incidence index) in mode m.
std::string entry_key(const Multigraph& g, Mode m, std::size_t i);

/// Writers produce one canonical text per value; every reader throws Parse on
/// malformed documents and lets graph validation errors through.
std::string write_graph(const AnyGraph& g);
/// Bipartite documents without parts get inferred parts.
AnyGraph read_graph(std::string_view text);

std::string write_lists(const Multigraph& g, Mode m, const std::vector<ColorList>& lists);
/// Keys must cover the edge (incidence) set exactly.
std::vector<ColorList> read_lists(std::string_view text, const Multigraph& g, Mode m);

std::string write_coloring(const Multigraph& g, Mode m, const std::vector<std::optional<Color>>& colors);
/// Missing keys read as uncolored; unknown keys throw Parse.
std::vector<std::optional<Color>> read_coloring(std::string_view text, const Multigraph& g, Mode m);

std::string write_stats(const SolveStats& s);

/// Whole-file helpers. read_file throws Parse when the file cannot be opened.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

} // namespace strongcolor
