#ifndef MTT_IO_HPP
#define MTT_IO_HPP

#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "mtt/error.hpp"
#include "mtt/graph.hpp"

namespace mtt {

// Text format: "n m", then m lines "u v c" (c is r or b, omitted for uncoloured
// graphs). Lines starting with '#' are comments. Writers emit canonical edge order.

struct ParsedEdgeList {
    int n = 0;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<std::optional<Color>> colors;
};

namespace detail {

inline bool next_content_line(std::istream& in, std::string& line, int& lineno)
{
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        return true;
    }
    return false;
}

} // namespace detail

inline ParsedEdgeList parse_edge_list(std::istream& in)
{
    ParsedEdgeList out;
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& why) {
        throw Error(ErrorKind::MalformedInput, "line " + std::to_string(lineno) + ": " + why);
    };
    if (!detail::next_content_line(in, line, lineno))
        fail("missing header 'n m'");
    long long n = -1, m = -1;
    {
        std::istringstream hs(line);
        std::string extra;
        if (!(hs >> n >> m) || (hs >> extra) || n < 0 || m < 0)
            fail("header must be two non-negative integers");
    }
    out.n = static_cast<int>(n);
    for (long long i = 0; i < m; ++i) {
        if (!detail::next_content_line(in, line, lineno))
            fail("expected " + std::to_string(m) + " edges, got " + std::to_string(i));
        std::istringstream es(line);
        long long u = -1, v = -1;
        std::string c, extra;
        if (!(es >> u >> v))
            fail("edge line must start with two vertex ids");
        std::optional<Color> color;
        if (es >> c) {
            if (c == "r" || c == "R")
                color = Color::Red;
            else if (c == "b" || c == "B")
                color = Color::Blue;
            else
                fail("colour must be 'r' or 'b'");
            if (es >> extra)
                fail("trailing tokens");
        }
        out.edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        out.colors.push_back(color);
    }
    if (detail::next_content_line(in, line, lineno))
        fail("unexpected content after edge list");
    return out;
}

inline Graph read_graph(std::istream& in)
{
    auto parsed = parse_edge_list(in);
    return make_graph(parsed.n, parsed.edges);
}

inline ColoredGraph read_colored_graph(std::istream& in)
{
    auto parsed = parse_edge_list(in);
    std::vector<ColoredEdge> edges;
    for (std::size_t i = 0; i < parsed.edges.size(); ++i) {
        if (!parsed.colors[i])
            throw Error(ErrorKind::MalformedInput, "edge " + std::to_string(i) + " has no colour (partial colourings are rejected)");
        edges.push_back({parsed.edges[i].first, parsed.edges[i].second, *parsed.colors[i]});
    }
    return build_colored_graph(parsed.n, edges);
}

inline void write_graph(std::ostream& out, const Graph& g)
{
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
}

inline void write_colored_graph(std::ostream& out, const ColoredGraph& g)
{
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges())
        out << e.u << ' ' << e.v << ' ' << color_code(e.color) << '\n';
}

/// Plain tiling file: one "a b c r|b" line per triangle, '#' comments allowed.
inline std::vector<Triangle> read_triangles(std::istream& in)
{
    std::vector<Triangle> out;
    std::string line;
    int lineno = 0;
    while (detail::next_content_line(in, line, lineno)) {
        std::istringstream ts(line);
        long long a, b, c;
        std::string col, extra;
        if (!(ts >> a >> b >> c >> col) || (ts >> extra))
            throw Error(ErrorKind::MalformedInput, "line " + std::to_string(lineno) + ": expected 'a b c colour'");
        Color color;
        if (col == "r" || col == "R")
            color = Color::Red;
        else if (col == "b" || col == "B")
            color = Color::Blue;
        else if (col == "m" || col == "M")
            color = Color::Mixed;
        else
            throw Error(ErrorKind::MalformedInput, "line " + std::to_string(lineno) + ": bad colour '" + col + "'");
        out.push_back(make_triangle(static_cast<Vertex>(a), static_cast<Vertex>(b), static_cast<Vertex>(c), color));
    }
    return out;
}

inline void write_triangles(std::ostream& out, const std::vector<Triangle>& triangles)
{
    for (const auto& t : triangles)
        out << t.vertices[0] << ' ' << t.vertices[1] << ' ' << t.vertices[2] << ' ' << color_code(t.color) << '\n';
}

/// "key = value" block; '#' comments. Used for instance sidecars and configs.
using KeyValues = std::map<std::string, std::string>;

inline KeyValues read_key_values(std::istream& in)
{
    KeyValues out;
    std::string line;
    int lineno = 0;
    while (detail::next_content_line(in, line, lineno)) {
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw Error(ErrorKind::MalformedInput, "line " + std::to_string(lineno) + ": expected key = value");
        auto trim = [](std::string s) {
            auto a = s.find_first_not_of(" \t\r");
            auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
        };
        out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return out;
}

inline void write_key_values(std::ostream& out, const KeyValues& kv)
{
    for (const auto& [k, v] : kv)
        out << k << " = " << v << '\n';
}

} // namespace mtt

#endif
