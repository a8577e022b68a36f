#include "strongcolor/io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "strongcolor/error.hpp"

namespace strongcolor {

using nlohmann::json;

std::string mode_name(Mode m) { return m == Mode::Strong ? "strong" : "incidence"; }

Mode parse_mode(std::string_view s) {
    if (s == "strong") return Mode::Strong;
    if (s == "incidence") return Mode::Incidence;
    fail(ErrorKind::Parse, "unknown mode: " + std::string(s));
}

std::string entry_key(const Multigraph& g, Mode m, std::size_t i) {
    if (m == Mode::Strong) return std::to_string(i);
    const Incidence inc = incidence_at(g, i);
    return std::to_string(inc.vertex) + ":" + std::to_string(inc.edge);
}

namespace {

std::size_t entry_count(const Multigraph& g, Mode m) {
    return m == Mode::Strong ? g.edge_count() : 2 * g.edge_count();
}

json parse(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        fail(ErrorKind::Parse, e.what());
    }
}

const json& field(const json& doc, const char* name) {
    if (!doc.is_object() || !doc.contains(name)) fail(ErrorKind::Parse, std::string("missing field: ") + name);
    return doc.at(name);
}

std::int64_t integer(const json& v) {
    if (!v.is_number_integer()) fail(ErrorKind::Parse, "expected an integer, got " + v.dump());
    return v.get<std::int64_t>();
}

std::uint32_t index_value(const json& v) {
    const auto x = integer(v);
    if (x < 0 || x > static_cast<std::int64_t>(UINT32_MAX)) fail(ErrorKind::Parse, "index out of range: " + v.dump());
    return static_cast<std::uint32_t>(x);
}

Color color_value(const json& v) {
    const auto x = integer(v);
    if (x < INT32_MIN || x > INT32_MAX) fail(ErrorKind::Parse, "color out of range: " + v.dump());
    return static_cast<Color>(x);
}

void check_header(const json& doc, const char* mode_field, Mode expected) {
    if (integer(field(doc, "format_version")) != kFormatVersion) fail(ErrorKind::Parse, "unsupported format_version");
    const json& m = field(doc, mode_field);
    if (!m.is_string() || parse_mode(m.get<std::string>()) != expected)
        fail(ErrorKind::Parse, "document mode is not " + mode_name(expected));
}

void write_ints(std::ostream& out, std::span<const Color> xs) {
    out << '[';
    for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? ", " : "") << xs[i];
    out << ']';
}

void write_ids(std::ostream& out, const std::vector<VertexId>& xs) {
    out << '[';
    for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? ", " : "") << xs[i];
    out << ']';
}

/// Maps keys to entry indices; throws Parse on an unknown key.
class KeyIndex {
public:
    KeyIndex(const Multigraph& g, Mode m) {
        const std::size_t n = entry_count(g, m);
        for (std::size_t i = 0; i < n; ++i) index_.emplace(entry_key(g, m, i), i);
    }
    std::size_t at(const std::string& key) const {
        const auto it = index_.find(key);
        if (it == index_.end()) fail(ErrorKind::Parse, "unknown key: " + key);
        return it->second;
    }

private:
    std::unordered_map<std::string, std::size_t> index_;
};

} // namespace

std::string write_graph(const AnyGraph& any) {
    const Multigraph& g = underlying(any);
    const auto* b = std::get_if<BipartiteGraph>(&any);
    std::ostringstream out;
    out << "{\n  \"format_version\": " << kFormatVersion << ",\n";
    out << "  \"kind\": \"" << (b ? "bipartite" : "multigraph") << "\",\n";
    out << "  \"vertex_count\": " << g.vertex_count() << ",\n";
    out << "  \"edges\": [";
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto [x, y] = g.endpoints(e);
        out << (e ? ",\n" : "\n") << "    [" << x << ", " << y << "]";
    }
    out << (g.edge_count() ? "\n  ]" : "]");
    if (b) {
        std::vector<VertexId> a_side, b_side;
        for (VertexId v = 0; v < g.vertex_count(); ++v) (b->part(v) == Part::A ? a_side : b_side).push_back(v);
        out << ",\n  \"parts\": {\n    \"A\": ";
        write_ids(out, a_side);
        out << ",\n    \"B\": ";
        write_ids(out, b_side);
        out << "\n  }";
    }
    out << "\n}\n";
    return out.str();
}

AnyGraph read_graph(std::string_view text) {
    const json doc = parse(text);
    if (integer(field(doc, "format_version")) != kFormatVersion) fail(ErrorKind::Parse, "unsupported format_version");
    const json& kind = field(doc, "kind");
    if (!kind.is_string()) fail(ErrorKind::Parse, "kind must be a string");
    const std::uint32_t n = index_value(field(doc, "vertex_count"));
    const json& edges_doc = field(doc, "edges");
    if (!edges_doc.is_array()) fail(ErrorKind::Parse, "edges must be an array");
    std::vector<Endpoints> edges;
    edges.reserve(edges_doc.size());
    for (const json& pair : edges_doc) {
        if (!pair.is_array() || pair.size() != 2) fail(ErrorKind::Parse, "edge must be a pair: " + pair.dump());
        edges.emplace_back(index_value(pair[0]), index_value(pair[1]));
    }
    Multigraph g(n, std::move(edges));
    const std::string k = kind.get<std::string>();
    if (k == "multigraph") return g;
    if (k != "bipartite") fail(ErrorKind::Parse, "unknown kind: " + k);
    if (!doc.contains("parts")) return infer_parts(g);

    const json& parts_doc = doc.at("parts");
    std::vector<int> seen(n, 0);
    std::vector<Part> parts(n, Part::B);
    for (const auto& [name, part] : {std::pair{"A", Part::A}, std::pair{"B", Part::B}}) {
        const json& side = field(parts_doc, name);
        if (!side.is_array()) fail(ErrorKind::Parse, "parts must be arrays");
        for (const json& v : side) {
            const auto id = index_value(v);
            if (id >= n) fail(ErrorKind::Parse, "part vertex out of range: " + v.dump());
            ++seen[id];
            parts[id] = part;
        }
    }
    for (VertexId v = 0; v < n; ++v)
        if (seen[v] != 1) fail(ErrorKind::Parse, "vertex " + std::to_string(v) + " must be in exactly one part");
    return BipartiteGraph(std::move(g), std::move(parts));
}

std::string write_lists(const Multigraph& g, Mode m, const std::vector<ColorList>& lists) {
    std::ostringstream out;
    out << "{\n  \"format_version\": " << kFormatVersion << ",\n";
    out << "  \"mode\": \"" << mode_name(m) << "\",\n  \"lists\": {";
    for (std::size_t i = 0; i < lists.size(); ++i) {
        out << (i ? ",\n" : "\n") << "    \"" << entry_key(g, m, i) << "\": ";
        write_ints(out, lists[i]);
    }
    out << (lists.empty() ? "}" : "\n  }") << "\n}\n";
    return out.str();
}

std::vector<ColorList> read_lists(std::string_view text, const Multigraph& g, Mode m) {
    const json doc = parse(text);
    check_header(doc, "mode", m);
    const json& lists_doc = field(doc, "lists");
    if (!lists_doc.is_object()) fail(ErrorKind::Parse, "lists must be an object");
    const KeyIndex keys(g, m);
    std::vector<std::optional<ColorList>> seen(entry_count(g, m));
    for (const auto& [key, value] : lists_doc.items()) {
        if (!value.is_array()) fail(ErrorKind::Parse, "list must be an array: " + key);
        ColorList list;
        for (const json& c : value) list.push_back(color_value(c));
        seen[keys.at(key)] = std::move(list);
    }
    std::vector<ColorList> out;
    out.reserve(seen.size());
    for (std::size_t i = 0; i < seen.size(); ++i) {
        if (!seen[i]) fail(ErrorKind::Parse, "missing list for " + entry_key(g, m, i));
        out.push_back(std::move(*seen[i]));
    }
    return out;
}

std::string write_coloring(const Multigraph& g, Mode m, const std::vector<std::optional<Color>>& colors) {
    std::ostringstream out;
    out << "{\n  \"format_version\": " << kFormatVersion << ",\n";
    out << "  \"mode\": \"" << mode_name(m) << "\",\n  \"colors\": {";
    bool first = true;
    for (std::size_t i = 0; i < colors.size(); ++i) {
        if (!colors[i]) continue;
        out << (first ? "\n" : ",\n") << "    \"" << entry_key(g, m, i) << "\": " << *colors[i];
        first = false;
    }
    out << (first ? "}" : "\n  }") << "\n}\n";
    return out.str();
}

std::vector<std::optional<Color>> read_coloring(std::string_view text, const Multigraph& g, Mode m) {
    const json doc = parse(text);
    check_header(doc, "mode", m);
    const json& colors_doc = field(doc, "colors");
    if (!colors_doc.is_object()) fail(ErrorKind::Parse, "colors must be an object");
    const KeyIndex keys(g, m);
    std::vector<std::optional<Color>> out(entry_count(g, m));
    for (const auto& [key, value] : colors_doc.items()) out[keys.at(key)] = color_value(value);
    return out;
}

std::string write_stats(const SolveStats& s) {
    std::ostringstream out;
    out << "{\n  \"format_version\": " << kFormatVersion << ",\n"
        << "  \"peeled_edges\": " << s.peeled_edges << ",\n"
        << "  \"k23_base_cases\": " << s.k23_base_cases << ",\n"
        << "  \"c4_extensions\": " << s.c4_extensions << ",\n"
        << "  \"c6_extensions\": " << s.c6_extensions << ",\n"
        << "  \"long_cycle_extensions\": " << s.long_cycle_extensions << ",\n"
        << "  \"fallback_uses\": " << s.fallback_uses << ",\n"
        << "  \"sdr_calls\": " << s.sdr_calls << "\n}\n";
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::Parse, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorKind::Parse, "cannot write " + path);
    out << text;
}

} // namespace strongcolor
