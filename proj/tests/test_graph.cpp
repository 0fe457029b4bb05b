#include <gtest/gtest.h>

#include <sstream>

#include "mtt/generators.hpp"
#include "mtt/io.hpp"
#include "oracles.hpp"

using namespace mtt;

namespace {

ColoredGraph red_k(int n) { return monochromatic(complete_graph(n), Color::Red); }

// K5 split into a red 5-cycle and a blue 5-cycle (its complement).
ColoredGraph pentagon_coloring()
{
    std::vector<ColoredEdge> e;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            e.push_back({i, j, (j - i == 1 || j - i == 4) ? Color::Red : Color::Blue});
    return build_colored_graph(5, e);
}

ErrorKind kind_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorKind::InternalInvariant;
}

} // namespace

TEST(Build, RedTriangle)
{
    auto g = build_colored_graph(3, {{0, 1, Color::Red}, {1, 2, Color::Red}, {0, 2, Color::Red}});
    EXPECT_EQ(g.min_degree(), 2);
    EXPECT_EQ(g.edge_count(), 3u);
    EXPECT_EQ(g.color(2, 0), Color::Red);
}

TEST(Build, Rejections)
{
    EXPECT_EQ(kind_of([] { build_colored_graph(2, {{0, 0, Color::Red}}); }), ErrorKind::SelfLoop);
    EXPECT_EQ(kind_of([] { build_colored_graph(3, {{0, 1, Color::Red}, {1, 0, Color::Blue}}); }),
              ErrorKind::DuplicateEdge);
    EXPECT_EQ(kind_of([] { build_colored_graph(3, {{0, 3, Color::Red}}); }), ErrorKind::VertexOutOfRange);
    EXPECT_EQ(kind_of([] { build_colored_graph(3, {{0, 1, Color::Mixed}}); }), ErrorKind::MalformedInput);
}

TEST(Build, PentagonColoring)
{
    auto g = pentagon_coloring();
    EXPECT_EQ(g.min_degree(), 4);
    auto [red, blue] = color_class_views(g);
    EXPECT_EQ(red.edge_count(), 5u);
    EXPECT_EQ(blue.edge_count(), 5u);
    for (int v = 0; v < 5; ++v) {
        EXPECT_EQ(red.degree(v), 2);
        EXPECT_EQ(blue.degree(v), 2);
    }
}

TEST(ColorViews, Trivial)
{
    auto [r, b] = color_class_views(red_k(3));
    EXPECT_EQ(r, complete_graph(3));
    EXPECT_EQ(b, Graph(3));
    auto [r0, b0] = color_class_views(build_colored_graph(4, {}));
    EXPECT_EQ(r0.edge_count() + b0.edge_count(), 0u);
}

TEST(Enumerate, Examples)
{
    auto k3 = enumerate_mono_triangles(red_k(3));
    ASSERT_EQ(k3.size(), 1u);
    EXPECT_EQ(k3[0], make_triangle(0, 1, 2, Color::Red));
    EXPECT_TRUE(enumerate_mono_triangles(pentagon_coloring()).empty());
    EXPECT_EQ(enumerate_mono_triangles(red_k(6)).size(), 20u);
    EXPECT_EQ(enumerate_mono_triangles(red_k(6), 5).size(), 5u);
}

TEST(Enumerate, MatchesTripleScan)
{
    for (int seed = 0; seed < 60; ++seed) {
        const int n = 3 + seed % 8;
        auto g = random_coloring(random_graph(n, 0.7, seed), 0.5, seed + 1000);
        auto fast = enumerate_mono_triangles(g);
        auto slow = oracle::mono_triples(g);
        ASSERT_EQ(fast.size(), slow.size());
        for (std::size_t i = 0; i < fast.size(); ++i) {
            EXPECT_EQ(fast[i].vertices[0], slow[i].a);
            EXPECT_EQ(fast[i].vertices[1], slow[i].b);
            EXPECT_EQ(fast[i].vertices[2], slow[i].c);
            EXPECT_EQ(fast[i].color, slow[i].color);
        }
        auto [r, b] = color_class_views(g);
        EXPECT_EQ(r.edge_count() + b.edge_count(), g.edge_count());
    }
}

TEST(Witness, SingleVertex)
{
    auto g = build_colored_graph(3, {{0, 1, Color::Red}, {1, 2, Color::Red}, {0, 2, Color::Red}});
    EXPECT_EQ(mono_triangle_witness(g, 0), make_triangle(0, 1, 2, Color::Red));

    auto star = build_colored_graph(5, {{0, 1, Color::Red}, {0, 2, Color::Red}, {0, 3, Color::Red}, {0, 4, Color::Red}});
    EXPECT_FALSE(mono_triangle_witness(star, 0));
    EXPECT_EQ(kind_of([&] { mono_triangle_witness(star, 7); }), ErrorKind::VertexOutOfRange);
}

TEST(Witness, TwoVertex)
{
    // u=0, v=1; N_R(0) = N_B(1) = {2,3,4}; the only edge among them is 23, blue.
    std::vector<ColoredEdge> e{{2, 3, Color::Blue}};
    for (int x = 2; x <= 4; ++x) {
        e.push_back({0, x, Color::Red});
        e.push_back({1, x, Color::Blue});
    }
    auto g = build_colored_graph(5, e);
    EXPECT_EQ(mono_triangle_witness(g, 0, 1, 2), make_triangle(1, 2, 3, Color::Blue));
    // Intersection of size 3 does not exceed an alpha bound of 3.
    EXPECT_FALSE(mono_triangle_witness(g, 0, 1, 3));
}

TEST(Witness, SingleFormMatchesScan)
{
    for (int seed = 0; seed < 40; ++seed) {
        auto g = random_coloring(random_graph(9, 0.6, seed), 0.5, seed + 1);
        auto all = oracle::mono_triples(g);
        for (int u = 0; u < 9; ++u) {
            bool through = std::any_of(all.begin(), all.end(), [&](auto& t) { return t.a == u || t.b == u || t.c == u; });
            auto w = mono_triangle_witness(g, u);
            EXPECT_EQ(w.has_value(), through);
            if (w) {
                EXPECT_TRUE(w->contains(u));
                EXPECT_EQ(triangle_color(g, w->vertices[0], w->vertices[1], w->vertices[2]), w->color);
            }
        }
    }
}

TEST(TextFormat, RoundTrip)
{
    auto g = random_coloring(random_graph(12, 0.5, 3), 0.4, 4);
    std::stringstream ss;
    write_colored_graph(ss, g);
    EXPECT_EQ(read_colored_graph(ss), g);

    std::istringstream in("# header comment\n3 2\n0 1 r\n# mid\n1 2 b\n");
    auto h = read_colored_graph(in);
    EXPECT_EQ(h.color(0, 1), Color::Red);
    EXPECT_EQ(h.color(1, 2), Color::Blue);

    std::istringstream plain("3 3\n0 1\n1 2\n0 2\n");
    EXPECT_EQ(read_graph(plain), complete_graph(3));
}

TEST(TextFormat, Rejections)
{
    auto parse = [](const char* text) {
        std::istringstream in(text);
        read_colored_graph(in);
    };
    EXPECT_EQ(kind_of([&] { parse("3 1\n0 1\n"); }), ErrorKind::MalformedInput);
    EXPECT_EQ(kind_of([&] { parse("3 1\n0 1 g\n"); }), ErrorKind::MalformedInput);
    EXPECT_EQ(kind_of([&] { parse("3 2\n0 1 r\n"); }), ErrorKind::MalformedInput);
    EXPECT_EQ(kind_of([&] { parse("3 2\n0 1 r\n1 0 b\n"); }), ErrorKind::DuplicateEdge);
    EXPECT_EQ(kind_of([&] { parse("3 1\n1 1 r\n"); }), ErrorKind::SelfLoop);
}
