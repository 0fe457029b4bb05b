#ifndef MTT_TILING_HPP
#define MTT_TILING_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mtt/error.hpp"
#include "mtt/graph.hpp"
#include "mtt/rational.hpp"
#include "mtt/rng.hpp"

namespace mtt {

/// Reason the tiling is invalid, or std::nullopt if it is a valid tiling of g.
inline std::optional<std::string> tiling_violation(const ColoredGraph& g, const Tiling& t)
{
    VertexSet used(static_cast<std::size_t>(g.order()));
    std::optional<Color> shared;
    for (std::size_t i = 0; i < t.triangles.size(); ++i) {
        const Triangle& tri = t.triangles[i];
        const std::string where = "triangle " + std::to_string(i);
        for (Vertex v : tri.vertices)
            if (v < 0 || v >= g.order())
                return where + ": vertex out of range";
        auto c = triangle_color(g, tri.vertices[0], tri.vertices[1], tri.vertices[2]);
        if (!c)
            return where + ": not a triangle of the graph";
        if (*c == Color::Mixed)
            return where + ": not monochromatic";
        if (*c != tri.color)
            return where + ": colour tag does not match edge colours";
        for (Vertex v : tri.vertices) {
            if (used.test(static_cast<std::size_t>(v)))
                return where + ": shares vertex " + std::to_string(v);
            used.set(static_cast<std::size_t>(v));
        }
        if (t.mode == TilingMode::Strong) {
            if (shared && *shared != *c)
                return where + ": strong tiling mixes colours";
            shared = *c;
        }
    }
    return std::nullopt;
}

inline bool verify_tiling(const ColoredGraph& g, const Tiling& t) { return !tiling_violation(g, t); }

struct SolveResult {
    Tiling tiling;
    bool exact = false;
    std::uint64_t nodes_expanded = 0;
    std::size_t upper_bound_used = 0; // root upper bound
};

namespace detail {

// Upper bound on a packing of `live`: a greedy hitting set of the triangles
// (every packed triangle owns a distinct hitting vertex).
inline std::size_t greedy_hitting_bound(const std::vector<const Triangle*>& live, int n)
{
    std::vector<char> removed(live.size(), 0);
    std::vector<int> count(static_cast<std::size_t>(n));
    std::size_t remaining = live.size();
    std::size_t picks = 0;
    while (remaining > 0) {
        std::fill(count.begin(), count.end(), 0);
        for (std::size_t i = 0; i < live.size(); ++i)
            if (!removed[i])
                for (Vertex v : live[i]->vertices)
                    ++count[static_cast<std::size_t>(v)];
        auto best = std::max_element(count.begin(), count.end()) - count.begin();
        ++picks;
        for (std::size_t i = 0; i < live.size(); ++i)
            if (!removed[i] && live[i]->contains(static_cast<Vertex>(best))) {
                removed[i] = 1;
                --remaining;
            }
    }
    return picks;
}

class PackingSearch {
public:
    PackingSearch(int n, const std::vector<Triangle>& triangles, std::uint64_t budget)
        : n_(n), tris_(triangles), by_vertex_(static_cast<std::size_t>(n)), budget_(budget)
    {
        for (std::size_t i = 0; i < tris_.size(); ++i)
            for (Vertex v : tris_[i].vertices)
                by_vertex_[static_cast<std::size_t>(v)].push_back(i);
    }

    SolveResult run(TilingMode mode)
    {
        VertexSet alive = full_set(n_);
        // canonical greedy seeds the incumbent
        VertexSet free = alive;
        for (const auto& t : tris_)
            if (all_in(t, free)) {
                best_.push_back(t);
                for (Vertex v : t.vertices)
                    free.reset(static_cast<std::size_t>(v));
            }
        root_bound_ = bound(alive);
        complete_ = true;
        expand(alive);
        SolveResult r;
        r.tiling.triangles = best_;
        r.tiling.mode = mode;
        r.exact = complete_;
        r.nodes_expanded = nodes_;
        r.upper_bound_used = root_bound_;
        return r;
    }

private:
    static bool all_in(const Triangle& t, const VertexSet& s)
    {
        return s.test(static_cast<std::size_t>(t.vertices[0])) && s.test(static_cast<std::size_t>(t.vertices[1])) &&
               s.test(static_cast<std::size_t>(t.vertices[2]));
    }

    std::vector<const Triangle*> live_triangles(const VertexSet& alive) const
    {
        std::vector<const Triangle*> live;
        for (const auto& t : tris_)
            if (all_in(t, alive))
                live.push_back(&t);
        return live;
    }

    std::size_t bound(const VertexSet& alive) const
    {
        auto live = live_triangles(alive);
        VertexSet coverable(static_cast<std::size_t>(n_));
        for (const Triangle* t : live)
            for (Vertex v : t->vertices)
                coverable.set(static_cast<std::size_t>(v));
        return std::min(coverable.count() / 3, greedy_hitting_bound(live, n_));
    }

    void expand(VertexSet alive)
    {
        if (!complete_)
            return;
        if (nodes_ >= budget_) {
            complete_ = false;
            return;
        }
        ++nodes_;
        auto live = live_triangles(alive);
        if (live.empty()) {
            if (current_.size() > best_.size())
                best_ = current_;
            return;
        }
        VertexSet coverable(static_cast<std::size_t>(n_));
        for (const Triangle* t : live)
            for (Vertex v : t->vertices)
                coverable.set(static_cast<std::size_t>(v));
        const std::size_t ub = std::min(coverable.count() / 3, greedy_hitting_bound(live, n_));
        if (current_.size() + ub <= best_.size())
            return;

        const Vertex branch = static_cast<Vertex>(coverable.find_first());
        for (std::size_t idx : by_vertex_[static_cast<std::size_t>(branch)]) {
            const Triangle& t = tris_[idx];
            if (!all_in(t, alive))
                continue;
            VertexSet next = alive;
            for (Vertex v : t.vertices)
                next.reset(static_cast<std::size_t>(v));
            current_.push_back(t);
            expand(std::move(next));
            current_.pop_back();
            if (!complete_)
                return;
        }
        alive.reset(static_cast<std::size_t>(branch));
        expand(std::move(alive));
    }

    int n_;
    const std::vector<Triangle>& tris_;
    std::vector<std::vector<std::size_t>> by_vertex_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool complete_ = true;
    std::size_t root_bound_ = 0;
    std::vector<Triangle> current_;
    std::vector<Triangle> best_;
};

inline std::vector<Triangle> of_color(const std::vector<Triangle>& all, Color c)
{
    std::vector<Triangle> out;
    for (const auto& t : all)
        if (t.color == c)
            out.push_back(t);
    return out;
}

} // namespace detail

/// Maximum monochromatic triangle packing by branch and bound.
///
/// Branches on the smallest vertex that still lies in a live triangle: cover it by
/// one of its triangles (canonical order) or discard it. Prunes with
/// min(coverable / 3, greedy hitting set). Strong mode solves each colour class and
/// keeps the larger (red on ties). On budget exhaustion the incumbent is returned
/// with exact = false.
inline SolveResult max_mono_tiling_exact(const ColoredGraph& g, TilingMode mode, std::uint64_t budget = 50'000'000)
{
    const auto all = enumerate_mono_triangles(g);
    if (mode == TilingMode::Weak)
        return detail::PackingSearch(g.order(), all, budget).run(mode);
    const auto red = detail::of_color(all, Color::Red);
    const auto blue = detail::of_color(all, Color::Blue);
    SolveResult r = detail::PackingSearch(g.order(), red, budget).run(mode);
    SolveResult b = detail::PackingSearch(g.order(), blue, budget).run(mode);
    SolveResult& better = b.tiling.size() > r.tiling.size() ? b : r;
    SolveResult out = better;
    out.exact = r.exact && b.exact;
    out.nodes_expanded = r.nodes_expanded + b.nodes_expanded;
    out.upper_bound_used = std::max(r.upper_bound_used, b.upper_bound_used);
    return out;
}

namespace detail {

inline std::vector<Triangle> greedy_packing(const std::vector<Triangle>& tris, VertexSet& free)
{
    std::vector<Triangle> out;
    for (const auto& t : tris) {
        if (free.test(static_cast<std::size_t>(t.vertices[0])) && free.test(static_cast<std::size_t>(t.vertices[1])) &&
            free.test(static_cast<std::size_t>(t.vertices[2]))) {
            out.push_back(t);
            for (Vertex v : t.vertices)
                free.reset(static_cast<std::size_t>(v));
        }
    }
    return out;
}

inline bool disjoint(const Triangle& a, const Triangle& b)
{
    for (Vertex v : a.vertices)
        if (b.contains(v))
            return false;
    return true;
}

inline std::vector<Triangle> local_search(int n, const std::vector<Triangle>& tris, std::size_t iters, std::uint64_t seed)
{
    VertexSet free = full_set(n);
    std::vector<Triangle> cur = greedy_packing(tris, free);
    std::vector<Triangle> best = cur;
    Rng rng(seed);
    std::vector<const Triangle*> cands;
    for (std::size_t it = 0; it < iters && !cur.empty(); ++it) {
        const std::size_t pick = static_cast<std::size_t>(uniform_below(rng, cur.size()));
        const Triangle removed = cur[pick];
        VertexSet freed = free;
        for (Vertex v : removed.vertices)
            freed.set(static_cast<std::size_t>(v));
        cands.clear();
        for (const auto& t : tris)
            if (t != removed && freed.test(static_cast<std::size_t>(t.vertices[0])) &&
                freed.test(static_cast<std::size_t>(t.vertices[1])) && freed.test(static_cast<std::size_t>(t.vertices[2])))
                cands.push_back(&t);
        if (cands.empty())
            continue;

        // (1,2)-swap: first disjoint pair in canonical order
        std::optional<std::pair<const Triangle*, const Triangle*>> pair;
        for (std::size_t i = 0; i < cands.size() && !pair; ++i)
            for (std::size_t j = i + 1; j < cands.size(); ++j)
                if (disjoint(*cands[i], *cands[j])) {
                    pair = std::make_pair(cands[i], cands[j]);
                    break;
                }
        cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(pick));
        free = freed;
        auto place = [&](const Triangle& t) {
            cur.push_back(t);
            for (Vertex v : t.vertices)
                free.reset(static_cast<std::size_t>(v));
        };
        if (pair) {
            place(*pair->first);
            place(*pair->second);
        } else {
            // (1,1)-swap: plateau move to a random alternative
            place(*cands[static_cast<std::size_t>(uniform_below(rng, cands.size()))]);
        }
        for (const auto& t : greedy_packing(tris, free))
            cur.push_back(t);
        if (cur.size() > best.size())
            best = cur;
    }
    std::sort(best.begin(), best.end());
    return best;
}

} // namespace detail

/// Canonical greedy followed by (1,1)/(1,2) swap local search. Never smaller than
/// the greedy tiling; deterministic given the seed.
inline Tiling heuristic_tiling(const ColoredGraph& g, TilingMode mode, std::size_t iters, std::uint64_t seed)
{
    const auto all = enumerate_mono_triangles(g);
    Tiling out;
    out.mode = mode;
    if (mode == TilingMode::Weak) {
        out.triangles = detail::local_search(g.order(), all, iters, seed);
        return out;
    }
    auto red = detail::local_search(g.order(), detail::of_color(all, Color::Red), iters, derive_seed(seed, 0));
    auto blue = detail::local_search(g.order(), detail::of_color(all, Color::Blue), iters, derive_seed(seed, 1));
    out.triangles = blue.size() > red.size() ? std::move(blue) : std::move(red);
    return out;
}

/// Canonical greedy alone (the heuristic's floor).
inline Tiling greedy_tiling(const ColoredGraph& g, TilingMode mode)
{
    const auto all = enumerate_mono_triangles(g);
    Tiling out;
    out.mode = mode;
    if (mode == TilingMode::Weak) {
        VertexSet free = full_set(g.order());
        out.triangles = detail::greedy_packing(all, free);
        return out;
    }
    VertexSet fr = full_set(g.order());
    VertexSet fb = full_set(g.order());
    auto red = detail::greedy_packing(detail::of_color(all, Color::Red), fr);
    auto blue = detail::greedy_packing(detail::of_color(all, Color::Blue), fb);
    out.triangles = blue.size() > red.size() ? std::move(blue) : std::move(red);
    return out;
}

enum class PeelStop {
    BelowThreshold, // delta(G) < 3n/5 from the start
    ReachedWindow,  // delta(G') < 3|G'|/5 after at least one removal
    NoMonoTriangle, // still dense but no monochromatic triangle left
};

inline const char* peel_stop_name(PeelStop s)
{
    switch (s) {
    case PeelStop::BelowThreshold: return "below_threshold";
    case PeelStop::ReachedWindow: return "reached_window";
    case PeelStop::NoMonoTriangle: return "no_mono_triangle";
    }
    return "?";
}

struct PeelState {
    int order = 0;
    int min_degree = 0;
};

struct PeelResult {
    Tiling tiling;
    VertexSet residual;
    PeelStop stop = PeelStop::BelowThreshold;
    std::vector<PeelState> trace; // one entry per visited state, the last is the residual
    /// delta(G') >= 3|G'|/5 - 3 at the stopping state; meaningful for ReachedWindow.
    bool lower_window_holds = true;
};

/// Removes the canonically first monochromatic triangle while delta >= 3/5 of the order.
inline PeelResult peel_to_three_fifths(const ColoredGraph& g)
{
    PeelResult out;
    out.tiling.mode = TilingMode::Weak;
    out.residual = full_set(g.order());
    auto dense = [](int order, int delta) { return 5 * delta >= 3 * order; };

    int order = g.order();
    int delta = g.graph().min_degree(out.residual);
    out.trace.push_back({order, delta});
    if (!dense(order, delta)) {
        out.stop = PeelStop::BelowThreshold;
        return out;
    }
    while (dense(order, delta)) {
        auto first = enumerate_mono_triangles(g, out.residual, 1);
        if (first.empty()) {
            out.stop = PeelStop::NoMonoTriangle;
            return out;
        }
        out.tiling.triangles.push_back(first.front());
        for (Vertex v : first.front().vertices)
            out.residual.reset(static_cast<std::size_t>(v));
        order -= 3;
        delta = g.graph().min_degree(out.residual);
        out.trace.push_back({order, delta});
    }
    out.stop = PeelStop::ReachedWindow;
    out.lower_window_holds = 5 * delta >= 3 * order - 15;
    if (!out.lower_window_holds)
        throw Error(ErrorKind::InternalInvariant, "peeling overshot the lower window edge");
    return out;
}

struct BoundReport {
    int n = 0;
    int delta = 0;
    Rational gamma = 0;
    Rational lower = 0;
    Rational construction_upper = 0;
    Rational dense_weak = 0;
    std::optional<std::size_t> achieved_weak;
    std::optional<std::size_t> achieved_strong;
};

/// Piecewise minimum-degree bounds for weak monochromatic triangle tilings.
///
/// lower: 2d - n - gamma n on [n/2, 3n/5], d/3 - gamma n above, 0 below n/2.
/// construction_upper: the matching construction, 2d - n up to 3n/5 and d/3 above (0 at or
/// below n/2, where the two-part construction has no monochromatic triangle).
/// dense_weak: the dense-graph bound without the independence condition:
/// 5d - 4n on [4n/5, 5n/6], floor((4d - 3n)/2) up to 7n/8, floor((2d - n)/3) above.
inline BoundReport bound_table(int n, int delta, const Rational& gamma = 0,
                               std::optional<std::size_t> achieved_weak = {},
                               std::optional<std::size_t> achieved_strong = {})
{
    if (n < 1 || delta < 0 || delta > n - 1)
        throw Error(ErrorKind::ParameterOutOfRange, "need n >= 1 and 0 <= delta <= n-1");
    if (gamma < 0)
        throw Error(ErrorKind::ParameterOutOfRange, "gamma must be non-negative");
    BoundReport r;
    r.n = n;
    r.delta = delta;
    r.gamma = gamma;
    r.achieved_weak = achieved_weak;
    r.achieved_strong = achieved_strong;
    const Rational nn = n;
    const Rational d = delta;
    if (2 * delta < n) {
        r.lower = 0;
        r.construction_upper = 0;
    } else if (5 * delta <= 3 * n) {
        r.lower = 2 * d - nn - gamma * nn;
        r.construction_upper = 2 * d - nn;
    } else {
        r.lower = d / 3 - gamma * nn;
        r.construction_upper = d / 3;
    }
    if (5 * delta < 4 * n)
        r.dense_weak = 0;
    else if (6 * delta <= 5 * n)
        r.dense_weak = 5 * d - 4 * nn;
    else if (8 * delta <= 7 * n)
        r.dense_weak = Rational(floor_of((4 * d - 3 * nn) / 2));
    else
        r.dense_weak = Rational(floor_of((2 * d - nn) / 3));
    return r;
}

} // namespace mtt

#endif
