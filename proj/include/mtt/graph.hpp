#ifndef MTT_GRAPH_HPP
#define MTT_GRAPH_HPP

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mtt/error.hpp"

namespace mtt {

using Vertex = int;

/// Dense vertex set over ids 0..n-1. Neighbourhood intersections dominate runtime.
using VertexSet = boost::dynamic_bitset<std::uint64_t>;

inline VertexSet make_set(int n, std::initializer_list<Vertex> members = {})
{
    VertexSet s(static_cast<std::size_t>(n));
    for (Vertex v : members)
        s.set(static_cast<std::size_t>(v));
    return s;
}

inline VertexSet make_set(int n, std::span<const Vertex> members)
{
    VertexSet s(static_cast<std::size_t>(n));
    for (Vertex v : members)
        s.set(static_cast<std::size_t>(v));
    return s;
}

inline VertexSet full_set(int n)
{
    VertexSet s(static_cast<std::size_t>(n));
    s.set();
    return s;
}

inline std::vector<Vertex> members(const VertexSet& s)
{
    std::vector<Vertex> out;
    out.reserve(s.count());
    for (auto i = s.find_first(); i != VertexSet::npos; i = s.find_next(i))
        out.push_back(static_cast<Vertex>(i));
    return out;
}

/// Calls f(v) for each member in increasing order.
template <typename F>
void for_each_member(const VertexSet& s, F&& f)
{
    for (auto i = s.find_first(); i != VertexSet::npos; i = s.find_next(i))
        f(static_cast<Vertex>(i));
}

inline bool intersects(const VertexSet& a, const VertexSet& b) { return a.intersects(b); }

/// Simple undirected graph on 0..n-1, immutable once built.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : adj_(static_cast<std::size_t>(n), VertexSet(static_cast<std::size_t>(n))) {}

    int order() const noexcept { return static_cast<int>(adj_.size()); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    bool adjacent(Vertex u, Vertex v) const { return adj_[u].test(static_cast<std::size_t>(v)); }
    const VertexSet& neighbors(Vertex u) const { return adj_[u]; }
    int degree(Vertex u) const { return static_cast<int>(adj_[u].count()); }

    /// 0 for the empty graph.
    int min_degree() const
    {
        if (adj_.empty())
            return 0;
        int best = order();
        for (Vertex v = 0; v < order(); ++v)
            best = std::min(best, degree(v));
        return best;
    }

    /// Minimum over `within` of the degree into `within`; 0 if `within` is empty.
    int min_degree(const VertexSet& within) const
    {
        int best = -1;
        for_each_member(within, [&](Vertex v) {
            int d = static_cast<int>((adj_[v] & within).count());
            if (best < 0 || d < best)
                best = d;
        });
        return best < 0 ? 0 : best;
    }

    /// Edges as (u, v) with u < v in lexicographic order.
    std::vector<std::pair<Vertex, Vertex>> edges() const
    {
        std::vector<std::pair<Vertex, Vertex>> out;
        out.reserve(edge_count_);
        for (Vertex u = 0; u < order(); ++u)
            for (auto v = adj_[u].find_next(static_cast<std::size_t>(u)); v != VertexSet::npos; v = adj_[u].find_next(v))
                out.emplace_back(u, static_cast<Vertex>(v));
        return out;
    }

    bool operator==(const Graph& other) const { return adj_ == other.adj_; }

private:
    friend class GraphBuilder;

    std::vector<VertexSet> adj_;
    std::size_t edge_count_ = 0;
};

/// Incremental, validating construction of a Graph.
class GraphBuilder {
public:
    explicit GraphBuilder(int n) : graph_(n)
    {
        if (n < 0)
            throw Error(ErrorKind::VertexOutOfRange, "negative vertex count");
    }

    int order() const noexcept { return graph_.order(); }

    void add_edge(Vertex u, Vertex v)
    {
        check_pair(u, v);
        if (graph_.adjacent(u, v))
            throw Error(ErrorKind::DuplicateEdge, "edge " + std::to_string(u) + "-" + std::to_string(v) + " given twice");
        graph_.adj_[u].set(static_cast<std::size_t>(v));
        graph_.adj_[v].set(static_cast<std::size_t>(u));
        ++graph_.edge_count_;
    }

    void remove_edge(Vertex u, Vertex v)
    {
        check_pair(u, v);
        if (!graph_.adjacent(u, v))
            return;
        graph_.adj_[u].reset(static_cast<std::size_t>(v));
        graph_.adj_[v].reset(static_cast<std::size_t>(u));
        --graph_.edge_count_;
    }

    bool has_edge(Vertex u, Vertex v) const { return graph_.adjacent(u, v); }
    const VertexSet& neighbors(Vertex u) const { return graph_.neighbors(u); }
    int degree(Vertex u) const { return graph_.degree(u); }

    Graph build() const { return graph_; }

private:
    void check_pair(Vertex u, Vertex v) const
    {
        if (u < 0 || v < 0 || u >= order() || v >= order())
            throw Error(ErrorKind::VertexOutOfRange,
                        "edge " + std::to_string(u) + "-" + std::to_string(v) + " outside 0.." + std::to_string(order() - 1));
        if (u == v)
            throw Error(ErrorKind::SelfLoop, "self-loop at " + std::to_string(u));
    }

    Graph graph_;
};

inline Graph make_graph(int n, std::span<const std::pair<Vertex, Vertex>> edges)
{
    GraphBuilder b(n);
    for (auto [u, v] : edges)
        b.add_edge(u, v);
    return b.build();
}

inline Graph complete_graph(int n)
{
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            b.add_edge(u, v);
    return b.build();
}

inline Graph cycle_graph(int n)
{
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        b.add_edge(u, (u + 1) % n);
    return b.build();
}

inline Graph complement(const Graph& g)
{
    GraphBuilder b(g.order());
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v))
                b.add_edge(u, v);
    return b.build();
}

enum class Color : std::uint8_t { Red, Blue, Mixed };

inline char color_code(Color c)
{
    switch (c) {
    case Color::Red: return 'r';
    case Color::Blue: return 'b';
    case Color::Mixed: return 'm';
    }
    return '?';
}

inline const char* color_name(Color c)
{
    switch (c) {
    case Color::Red: return "Red";
    case Color::Blue: return "Blue";
    case Color::Mixed: return "Mixed";
    }
    return "?";
}

struct ColoredEdge {
    Vertex u;
    Vertex v;
    Color color;
};

/// A graph with a total red/blue colouring of its edges.
class ColoredGraph {
public:
    ColoredGraph() = default;

    const Graph& graph() const noexcept { return graph_; }
    int order() const noexcept { return graph_.order(); }
    std::size_t edge_count() const noexcept { return graph_.edge_count(); }
    bool adjacent(Vertex u, Vertex v) const { return graph_.adjacent(u, v); }
    int min_degree() const { return graph_.min_degree(); }

    /// Colour of uv; std::nullopt for a non-edge.
    std::optional<Color> color(Vertex u, Vertex v) const
    {
        if (red_[u].test(static_cast<std::size_t>(v)))
            return Color::Red;
        if (blue_[u].test(static_cast<std::size_t>(v)))
            return Color::Blue;
        return std::nullopt;
    }

    const VertexSet& red_neighbors(Vertex u) const { return red_[u]; }
    const VertexSet& blue_neighbors(Vertex u) const { return blue_[u]; }
    const VertexSet& neighbors(Vertex u, Color c) const { return c == Color::Red ? red_[u] : blue_[u]; }

    std::vector<ColoredEdge> edges() const
    {
        std::vector<ColoredEdge> out;
        for (auto [u, v] : graph_.edges())
            out.push_back({u, v, *color(u, v)});
        return out;
    }

    bool operator==(const ColoredGraph& other) const
    {
        return graph_ == other.graph_ && red_ == other.red_ && blue_ == other.blue_;
    }

private:
    friend ColoredGraph build_colored_graph(int n, std::span<const ColoredEdge> edges);

    Graph graph_;
    std::vector<VertexSet> red_;
    std::vector<VertexSet> blue_;
};

inline ColoredGraph build_colored_graph(int n, std::span<const ColoredEdge> edges)
{
    GraphBuilder b(n);
    ColoredGraph out;
    out.red_.assign(static_cast<std::size_t>(n), VertexSet(static_cast<std::size_t>(n)));
    out.blue_.assign(static_cast<std::size_t>(n), VertexSet(static_cast<std::size_t>(n)));
    for (const auto& e : edges) {
        b.add_edge(e.u, e.v);
        if (e.color == Color::Mixed)
            throw Error(ErrorKind::MalformedInput, "edge colour must be red or blue");
        auto& side = e.color == Color::Red ? out.red_ : out.blue_;
        side[e.u].set(static_cast<std::size_t>(e.v));
        side[e.v].set(static_cast<std::size_t>(e.u));
    }
    out.graph_ = b.build();
    return out;
}

inline ColoredGraph build_colored_graph(int n, std::initializer_list<ColoredEdge> edges)
{
    return build_colored_graph(n, std::span<const ColoredEdge>(edges.begin(), edges.size()));
}

/// Colours every edge of g with c.
inline ColoredGraph monochromatic(const Graph& g, Color c)
{
    std::vector<ColoredEdge> edges;
    for (auto [u, v] : g.edges())
        edges.push_back({u, v, c});
    return build_colored_graph(g.order(), edges);
}

/// Spanning red and blue subgraphs; their edge sets partition E(G).
inline std::pair<Graph, Graph> color_class_views(const ColoredGraph& g)
{
    GraphBuilder red(g.order());
    GraphBuilder blue(g.order());
    for (const auto& e : g.edges())
        (e.color == Color::Red ? red : blue).add_edge(e.u, e.v);
    return {red.build(), blue.build()};
}

struct Triangle {
    std::array<Vertex, 3> vertices{}; // sorted ascending
    Color color = Color::Mixed;

    auto operator<=>(const Triangle&) const = default;

    bool contains(Vertex v) const { return vertices[0] == v || vertices[1] == v || vertices[2] == v; }
};

inline Triangle make_triangle(Vertex a, Vertex b, Vertex c, Color color)
{
    Triangle t{{a, b, c}, color};
    std::sort(t.vertices.begin(), t.vertices.end());
    return t;
}

/// Edge-colour pattern of {a,b,c}; std::nullopt if some pair is not an edge.
inline std::optional<Color> triangle_color(const ColoredGraph& g, Vertex a, Vertex b, Vertex c)
{
    if (a == b || b == c || a == c)
        return std::nullopt;
    auto ab = g.color(a, b);
    auto bc = g.color(b, c);
    auto ac = g.color(a, c);
    if (!ab || !bc || !ac)
        return std::nullopt;
    if (*ab == *bc && *bc == *ac)
        return *ab;
    return Color::Mixed;
}

enum class TilingMode { Weak, Strong };

inline const char* mode_name(TilingMode m) { return m == TilingMode::Weak ? "weak" : "strong"; }

struct Tiling {
    std::vector<Triangle> triangles;
    TilingMode mode = TilingMode::Weak;

    std::size_t size() const noexcept { return triangles.size(); }
};

/// Monochromatic triangles inside `within`, lexicographic on sorted triples.
/// A limit of 0 means no limit.
inline std::vector<Triangle> enumerate_mono_triangles(const ColoredGraph& g, const VertexSet& within,
                                                      std::size_t limit = 0)
{
    std::vector<Triangle> out;
    for (Vertex u = 0; u < g.order(); ++u) {
        if (!within.test(static_cast<std::size_t>(u)))
            continue;
        const VertexSet higher_r = g.red_neighbors(u) & within;
        const VertexSet higher_b = g.blue_neighbors(u) & within;
        for (Vertex v = u + 1; v < g.order(); ++v) {
            if (!within.test(static_cast<std::size_t>(v)))
                continue;
            auto c = g.color(u, v);
            if (!c)
                continue;
            const VertexSet common = (*c == Color::Red ? higher_r & g.red_neighbors(v) : higher_b & g.blue_neighbors(v));
            for (auto w = common.find_next(static_cast<std::size_t>(v)); w != VertexSet::npos; w = common.find_next(w)) {
                out.push_back(Triangle{{u, v, static_cast<Vertex>(w)}, *c});
                if (limit != 0 && out.size() >= limit)
                    return out;
            }
        }
    }
    return out;
}

inline std::vector<Triangle> enumerate_mono_triangles(const ColoredGraph& g, std::optional<std::size_t> limit = {})
{
    return enumerate_mono_triangles(g, full_set(g.order()), limit.value_or(0));
}

/// Monochromatic triangle through u, or a witness from the two-vertex form.
///
/// Single form (v absent): the canonically smallest triangle uxy with xy an edge of
/// colour c inside N_c(u). Two-vertex form: when |N_R(u) & N_B(v)| >= alpha_bound + 1,
/// the first edge xy of the intersection gives red uxy (xy red) or blue vxy (xy blue).
inline std::optional<Triangle> mono_triangle_witness(const ColoredGraph& g, Vertex u, std::optional<Vertex> v = {},
                                                    std::optional<std::size_t> alpha_bound = {})
{
    auto check = [&](Vertex x) {
        if (x < 0 || x >= g.order())
            throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(x));
    };
    check(u);
    if (!v) {
        std::optional<Triangle> best;
        for (Color c : {Color::Red, Color::Blue}) {
            const VertexSet& nu = g.neighbors(u, c);
            for_each_member(nu, [&](Vertex x) {
                const VertexSet common = nu & g.neighbors(x, c);
                auto y = common.find_next(static_cast<std::size_t>(x));
                if (y == VertexSet::npos)
                    return;
                Triangle t = make_triangle(u, x, static_cast<Vertex>(y), c);
                if (!best || t < *best)
                    best = t;
            });
        }
        return best;
    }
    check(*v);
    if (*v == u)
        throw Error(ErrorKind::MalformedInput, "mono_triangle_witness needs two distinct vertices");
    const VertexSet common = g.red_neighbors(u) & g.blue_neighbors(*v);
    if (common.count() < alpha_bound.value_or(0) + 1)
        return std::nullopt;
    for (auto x = common.find_first(); x != VertexSet::npos; x = common.find_next(x)) {
        const Vertex xv = static_cast<Vertex>(x);
        const VertexSet inside = common & g.graph().neighbors(xv);
        auto y = inside.find_next(x);
        if (y == VertexSet::npos)
            continue;
        Color c = *g.color(xv, static_cast<Vertex>(y));
        return make_triangle(c == Color::Red ? u : *v, xv, static_cast<Vertex>(y), c);
    }
    return std::nullopt;
}

} // namespace mtt

#endif
