// Brute-force reference implementations used as test oracles. They deliberately
// avoid the library's search code and use only plain adjacency queries.
#ifndef MTT_TESTS_ORACLES_HPP
#define MTT_TESTS_ORACLES_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "mtt/graph.hpp"

namespace oracle {

using mtt::Color;
using mtt::ColoredGraph;
using mtt::Graph;

struct Triple {
    int a, b, c;
    Color color;
    bool operator==(const Triple&) const = default;
};

inline std::vector<Triple> mono_triples(const ColoredGraph& g)
{
    std::vector<Triple> out;
    const int n = g.order();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                auto x = g.color(a, b), y = g.color(b, c), z = g.color(a, c);
                if (x && y && z && *x == *y && *y == *z)
                    out.push_back({a, b, c, *x});
            }
    return out;
}

inline int alpha(const Graph& g)
{
    const int n = g.order();
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (size <= best)
            continue;
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            if (mask >> u & 1)
                for (int v = u + 1; v < n && ok; ++v)
                    if ((mask >> v & 1) && g.adjacent(u, v))
                        ok = false;
        if (ok)
            best = size;
    }
    return best;
}

inline bool has_triangle(const Graph& g)
{
    const int n = g.order();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c))
                    return true;
    return false;
}

// Maximum number of pairwise disjoint triples, by plain recursion over the list:
// either skip triple i or take it when it fits.
inline int max_packing(const std::vector<Triple>& ts)
{
    std::function<int(std::size_t, std::uint64_t)> go = [&](std::size_t i, std::uint64_t used) -> int {
        if (i == ts.size())
            return 0;
        int best = go(i + 1, used);
        std::uint64_t m = (1ull << ts[i].a) | (1ull << ts[i].b) | (1ull << ts[i].c);
        if (!(used & m))
            best = std::max(best, 1 + go(i + 1, used | m));
        return best;
    };
    return go(0, 0);
}

inline int max_packing(const ColoredGraph& g, bool strong)
{
    auto all = mono_triples(g);
    if (!strong)
        return max_packing(all);
    int best = 0;
    for (Color c : {Color::Red, Color::Blue}) {
        std::vector<Triple> one;
        for (const auto& t : all)
            if (t.color == c)
                one.push_back(t);
        best = std::max(best, max_packing(one));
    }
    return best;
}

} // namespace oracle

#endif
