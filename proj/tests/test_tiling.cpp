#include <gtest/gtest.h>

#include "mtt/generators.hpp"
#include "mtt/report.hpp"
#include "mtt/tiling.hpp"
#include "oracles.hpp"

using namespace mtt;

namespace {

ColoredGraph red_k(int n) { return monochromatic(complete_graph(n), Color::Red); }

ColoredGraph pentagon_coloring()
{
    std::vector<ColoredEdge> e;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            e.push_back({i, j, (j - i == 1 || j - i == 4) ? Color::Red : Color::Blue});
    return build_colored_graph(5, e);
}

ColoredGraph random_instance(int n, double p, std::uint64_t seed)
{
    return random_coloring(random_graph(n, p, derive_seed(seed, 0)), 0.5, derive_seed(seed, 1));
}

} // namespace

TEST(Exact, Examples)
{
    auto k6 = max_mono_tiling_exact(red_k(6), TilingMode::Weak);
    EXPECT_EQ(k6.tiling.size(), 2u);
    EXPECT_TRUE(k6.exact);
    EXPECT_TRUE(verify_tiling(red_k(6), k6.tiling));

    auto c5 = max_mono_tiling_exact(pentagon_coloring(), TilingMode::Weak);
    EXPECT_EQ(c5.tiling.size(), 0u);
    EXPECT_TRUE(c5.exact);

    auto inst = extremal_instance(26, 13, PartMethod::CirculantCatalog, 1);
    auto r = max_mono_tiling_exact(inst.colored_graph, TilingMode::Weak);
    ASSERT_TRUE(r.exact);
    EXPECT_LE(r.tiling.size(), 4u);
    EXPECT_EQ(static_cast<int>(r.tiling.size()), oracle::max_packing(inst.colored_graph, false));
}

TEST(Exact, MatchesPackingEnumeration)
{
    for (int seed = 0; seed < 60; ++seed) {
        const int n = 3 + seed % 10;
        auto g = random_instance(n, 0.6, seed);
        for (auto mode : {TilingMode::Weak, TilingMode::Strong}) {
            auto r = max_mono_tiling_exact(g, mode);
            ASSERT_TRUE(r.exact);
            EXPECT_TRUE(verify_tiling(g, r.tiling));
            EXPECT_EQ(r.tiling.mode, mode);
            EXPECT_EQ(static_cast<int>(r.tiling.size()), oracle::max_packing(g, mode == TilingMode::Strong))
                << "n=" << n << " seed=" << seed;
        }
    }
}

TEST(Exact, BudgetExhaustionKeepsValidIncumbent)
{
    auto g = random_instance(30, 0.7, 5);
    auto r = max_mono_tiling_exact(g, TilingMode::Weak, 2);
    EXPECT_FALSE(r.exact);
    EXPECT_TRUE(verify_tiling(g, r.tiling));
    EXPECT_GE(r.tiling.size(), greedy_tiling(g, TilingMode::Weak).size());
}

TEST(Exact, Deterministic)
{
    auto g = random_instance(15, 0.6, 77);
    auto a = max_mono_tiling_exact(g, TilingMode::Weak);
    auto b = max_mono_tiling_exact(g, TilingMode::Weak);
    EXPECT_EQ(a.tiling.triangles, b.tiling.triangles);
    EXPECT_EQ(a.nodes_expanded, b.nodes_expanded);
}

TEST(Heuristic, Examples)
{
    EXPECT_EQ(heuristic_tiling(red_k(6), TilingMode::Weak, 100, 1).size(), 2u);
    int optimal = 0;
    for (int seed = 0; seed < 30; ++seed) {
        auto g = random_instance(12, 0.6, 500 + seed);
        auto h = heuristic_tiling(g, TilingMode::Weak, 2000, seed);
        EXPECT_TRUE(verify_tiling(g, h));
        EXPECT_GE(h.size(), greedy_tiling(g, TilingMode::Weak).size());
        optimal += h.size() == max_mono_tiling_exact(g, TilingMode::Weak).tiling.size();
    }
    EXPECT_GE(optimal, 27);
}

TEST(Heuristic, DeterministicAndMonotone)
{
    for (int seed = 0; seed < 40; ++seed) {
        auto g = random_instance(20, 0.5, seed);
        for (auto mode : {TilingMode::Weak, TilingMode::Strong}) {
            auto a = heuristic_tiling(g, mode, 300, seed);
            EXPECT_EQ(a.triangles, heuristic_tiling(g, mode, 300, seed).triangles);
            EXPECT_GE(a.size(), greedy_tiling(g, mode).size());
            EXPECT_TRUE(verify_tiling(g, a));
        }
    }
}

TEST(Verify, Examples)
{
    auto k6 = red_k(6);
    Tiling ok{{make_triangle(0, 1, 2, Color::Red), make_triangle(3, 4, 5, Color::Red)}, TilingMode::Weak};
    EXPECT_TRUE(verify_tiling(k6, ok));

    Tiling shared{{make_triangle(0, 1, 2, Color::Red), make_triangle(2, 3, 4, Color::Red)}, TilingMode::Weak};
    EXPECT_FALSE(verify_tiling(k6, shared));

    std::vector<ColoredEdge> e;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            e.push_back({i, j, (i < 3) == (j < 3) && i >= 3 ? Color::Blue : Color::Red});
    auto two = build_colored_graph(6, e);
    Tiling mixed{{make_triangle(0, 1, 2, Color::Red), make_triangle(3, 4, 5, Color::Blue)}, TilingMode::Strong};
    EXPECT_FALSE(verify_tiling(two, mixed));
    mixed.mode = TilingMode::Weak;
    EXPECT_TRUE(verify_tiling(two, mixed));

    Tiling wrong_tag{{make_triangle(0, 1, 2, Color::Blue)}, TilingMode::Weak};
    EXPECT_FALSE(verify_tiling(k6, wrong_tag));
    Tiling missing{{make_triangle(0, 1, 2, Color::Red)}, TilingMode::Weak};
    EXPECT_FALSE(verify_tiling(pentagon_coloring(), missing));
}

TEST(Peel, CompleteRed)
{
    auto r = peel_to_three_fifths(red_k(10));
    EXPECT_EQ(r.tiling.size(), 3u);
    EXPECT_EQ(r.residual.count(), 1u);
    EXPECT_EQ(r.stop, PeelStop::ReachedWindow);
    // K10 -> K7 -> K4 -> K1
    ASSERT_EQ(r.trace.size(), 4u);
    const int orders[] = {10, 7, 4, 1};
    for (int i = 0; i < 4; ++i) {
        EXPECT_EQ(r.trace[static_cast<std::size_t>(i)].order, orders[i]);
        EXPECT_EQ(r.trace[static_cast<std::size_t>(i)].min_degree, orders[i] - 1);
    }
}

TEST(Peel, ShortCircuits)
{
    auto c5 = peel_to_three_fifths(pentagon_coloring());
    EXPECT_EQ(c5.tiling.size(), 0u);
    EXPECT_EQ(c5.residual.count(), 5u);
    EXPECT_EQ(c5.stop, PeelStop::NoMonoTriangle);

    auto sparse = peel_to_three_fifths(monochromatic(cycle_graph(8), Color::Red));
    EXPECT_EQ(sparse.stop, PeelStop::BelowThreshold);
    EXPECT_EQ(sparse.residual.count(), 8u);
}

TEST(Peel, WindowAndCut)
{
    for (int seed = 0; seed < 60; ++seed) {
        auto g = random_coloring(random_graph_min_degree(12 + seed % 12, 9 + seed % 12, seed), 0.5, seed);
        auto r = peel_to_three_fifths(g);
        Tiling all = r.tiling;
        ASSERT_TRUE(verify_tiling(g, all));
        for (std::size_t i = 0; i + 1 < r.trace.size(); ++i)
            EXPECT_GE(5 * r.trace[i].min_degree, 3 * r.trace[i].order);
        const auto& last = r.trace.back();
        if (r.stop == PeelStop::ReachedWindow) {
            EXPECT_LT(5 * last.min_degree, 3 * last.order);
            EXPECT_GE(5 * last.min_degree, 3 * last.order - 15);
        }
        // Peeled triangles plus a tiling of the residual still form a tiling.
        for (const auto& t : enumerate_mono_triangles(g, r.residual)) {
            bool fits = true;
            for (const auto& u : all.triangles)
                for (Vertex v : t.vertices)
                    fits &= !u.contains(v);
            if (fits)
                all.triangles.push_back(t);
        }
        EXPECT_TRUE(verify_tiling(g, all));
    }
}

TEST(Bounds, Examples)
{
    auto a = bound_table(100, 55);
    EXPECT_EQ(a.lower, 10);
    EXPECT_EQ(a.construction_upper, 10);
    auto b = bound_table(100, 90);
    EXPECT_EQ(b.lower, 30);
    EXPECT_EQ(b.construction_upper, 30);
    EXPECT_EQ(b.dense_weak, 26);
    EXPECT_EQ(bound_table(100, 50).lower, 0);
    EXPECT_EQ(bound_table(100, 82).dense_weak, 10); // 5*82 - 400
    EXPECT_EQ(bound_table(100, 85).dense_weak, 20); // floor((340 - 300) / 2)
    EXPECT_EQ(bound_table(100, 79).dense_weak, 0);
}

TEST(Bounds, Gamma)
{
    auto r = bound_table(100, 55, ratio(1, 100));
    EXPECT_EQ(r.lower, 9);
    EXPECT_EQ(r.construction_upper, 10);
    EXPECT_EQ(bound_table(100, 70, ratio(1, 50)).lower, ratio(70, 3) - 2);
}

TEST(Bounds, LowerNeverExceedsUpper)
{
    for (int n = 1; n <= 80; ++n)
        for (int d = (n + 1) / 2; d <= n - 1; ++d) {
            auto r = bound_table(n, d);
            EXPECT_LE(r.lower, r.construction_upper) << n << "," << d;
        }
}

TEST(Bounds, Rejections)
{
    for (auto [n, d] : {std::pair{0, 0}, {10, -1}, {10, 10}}) {
        try {
            bound_table(n, d);
            ADD_FAILURE();
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::ParameterOutOfRange);
        }
    }
}

TEST(Report, Shape)
{
    auto g = red_k(6);
    auto r = max_mono_tiling_exact(g, TilingMode::Weak);
    auto j = solve_report(g, TilingMode::Weak, r.tiling, r.exact, r.nodes_expanded, bound_table(6, 5));
    EXPECT_EQ(j["n"], 6);
    EXPECT_EQ(j["delta"], 5);
    EXPECT_EQ(j["mode"], "weak");
    EXPECT_EQ(j["size"], 2);
    EXPECT_EQ(j["tiling"][0], Json::parse(R"([0,1,2,"r"])"));
    EXPECT_EQ(j["bounds"]["remarkA"], "5/3");
    auto back = tiling_from_json(j, TilingMode::Weak);
    EXPECT_EQ(back.triangles, r.tiling.triangles);
}
