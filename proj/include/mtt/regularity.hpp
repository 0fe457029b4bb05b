#ifndef MTT_REGULARITY_HPP
#define MTT_REGULARITY_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "mtt/error.hpp"
#include "mtt/graph.hpp"
#include "mtt/rational.hpp"
#include "mtt/rng.hpp"

namespace mtt {

inline std::size_t cross_edges(const Graph& g, const VertexSet& x, const VertexSet& y)
{
    std::size_t e = 0;
    for_each_member(x, [&](Vertex v) { e += (g.neighbors(v) & y).count(); });
    return e;
}

/// d(X, Y) = e(X, Y) / (|X| |Y|), exact.
inline Rational density(const Graph& g, const VertexSet& x, const VertexSet& y)
{
    if (x.none() || y.none())
        throw Error(ErrorKind::EmptySide, "density needs two non-empty sides");
    if (x.intersects(y))
        throw Error(ErrorKind::OverlappingSides, "density needs disjoint sides");
    return Rational(BigInt(cross_edges(g, x, y)), BigInt(x.count() * y.count()));
}

/// A sub-pair certifying that (A, B) is not eps-regular.
struct RegularityWitness {
    std::vector<Vertex> x;
    std::vector<Vertex> y;
    Rational sub_density;
    Rational pair_density;
    Rational deviation; // |d(X,Y) - d(A,B)|
};

/// Rechecks the three defining inequalities from scratch.
inline bool witness_holds(const Graph& g, const VertexSet& a, const VertexSet& b, const Rational& eps,
                          const RegularityWitness& w)
{
    const int n = g.order();
    const VertexSet x = make_set(n, w.x);
    const VertexSet y = make_set(n, w.y);
    if (x.none() || y.none() || !x.is_subset_of(a) || !y.is_subset_of(b))
        return false;
    if (Rational(x.count()) < eps * a.count() || Rational(y.count()) < eps * b.count())
        return false;
    Rational dev = density(g, x, y) - density(g, a, b);
    if (dev < 0)
        dev = -dev;
    return dev > eps && dev == w.deviation;
}

namespace detail {

// Deviation |e/(s t) - E/(S T)| kept as an exact fraction of int128 values.
struct Deviation {
    __int128 num = -1;
    __int128 den = 1;

    bool operator>(const Deviation& o) const
    {
        if (o.num < 0)
            return num >= 0;
        return num * o.den > o.num * den;
    }
};

class Refuter {
public:
    Refuter(const Graph& g, std::vector<Vertex> a, std::vector<Vertex> b, Rational eps)
        : g_(g), a_(std::move(a)), b_(std::move(b)), eps_(std::move(eps))
    {
        const VertexSet as = make_set(g.order(), a_);
        const VertexSet bs = make_set(g.order(), b_);
        total_edges_ = cross_edges(g, as, bs);
        min_a_ = min_size(a_.size());
        min_b_ = min_size(b_.size());
    }

    // For fixed `fixed` on one side, the extremal subsets of the other side of each
    // size are degree-sorted prefixes and suffixes, so this is the exact best response.
    void best_response(const std::vector<Vertex>& fixed, bool fixed_is_b)
    {
        const auto& other = fixed_is_b ? a_ : b_;
        const std::size_t need_fixed = fixed_is_b ? min_b_ : min_a_;
        const std::size_t need_other = fixed_is_b ? min_a_ : min_b_;
        if (fixed.empty() || fixed.size() < need_fixed || need_other > other.size())
            return;
        const VertexSet fs = make_set(g_.order(), fixed);
        std::vector<std::pair<std::size_t, Vertex>> deg;
        deg.reserve(other.size());
        for (Vertex v : other)
            deg.emplace_back((g_.neighbors(v) & fs).count(), v);
        std::sort(deg.begin(), deg.end());
        std::vector<std::size_t> prefix(deg.size() + 1, 0);
        for (std::size_t i = 0; i < deg.size(); ++i)
            prefix[i + 1] = prefix[i] + deg[i].first;
        const std::size_t total = prefix.back();
        for (std::size_t k = std::max<std::size_t>(need_other, 1); k <= deg.size(); ++k) {
            consider(prefix[k], k, fixed.size(), deg, fixed, fixed_is_b, true);
            consider(total - prefix[deg.size() - k], k, fixed.size(), deg, fixed, fixed_is_b, false);
        }
    }

    std::optional<RegularityWitness> result() const
    {
        if (best_.num < 0)
            return std::nullopt;
        RegularityWitness w;
        w.x = best_x_;
        w.y = best_y_;
        std::sort(w.x.begin(), w.x.end());
        std::sort(w.y.begin(), w.y.end());
        const VertexSet xs = make_set(g_.order(), w.x);
        const VertexSet ys = make_set(g_.order(), w.y);
        w.sub_density = density(g_, xs, ys);
        w.pair_density = density(g_, make_set(g_.order(), a_), make_set(g_.order(), b_));
        w.deviation = w.sub_density - w.pair_density;
        if (w.deviation < 0)
            w.deviation = -w.deviation;
        if (w.deviation <= eps_)
            return std::nullopt;
        return w;
    }

    const std::vector<Vertex>& a() const { return a_; }
    const std::vector<Vertex>& b() const { return b_; }
    std::size_t min_a() const { return min_a_; }
    std::size_t min_b() const { return min_b_; }

private:
    std::size_t min_size(std::size_t side) const
    {
        // smallest k with k >= eps * side
        BigInt k = ceil_of(eps_ * Rational(side));
        return k < 0 ? 0 : k.convert_to<std::size_t>();
    }

    void consider(std::size_t edges, std::size_t k, std::size_t fixed_size,
                  const std::vector<std::pair<std::size_t, Vertex>>& deg, const std::vector<Vertex>& fixed,
                  bool fixed_is_b, bool low)
    {
        const __int128 sa = static_cast<__int128>(a_.size());
        const __int128 sb = static_cast<__int128>(b_.size());
        const __int128 sub = static_cast<__int128>(k) * static_cast<__int128>(fixed_size);
        __int128 num = static_cast<__int128>(edges) * sa * sb - static_cast<__int128>(total_edges_) * sub;
        if (num < 0)
            num = -num;
        Deviation d{num, sub * sa * sb};
        if (!(d > best_))
            return;
        best_ = d;
        std::vector<Vertex> chosen;
        for (std::size_t i = 0; i < k; ++i)
            chosen.push_back(low ? deg[i].second : deg[deg.size() - 1 - i].second);
        best_x_ = fixed_is_b ? chosen : fixed;
        best_y_ = fixed_is_b ? fixed : chosen;
    }

    const Graph& g_;
    std::vector<Vertex> a_;
    std::vector<Vertex> b_;
    Rational eps_;
    std::size_t total_edges_ = 0;
    std::size_t min_a_ = 0;
    std::size_t min_b_ = 0;
    Deviation best_;
    std::vector<Vertex> best_x_;
    std::vector<Vertex> best_y_;
};

inline std::vector<std::vector<Vertex>> candidate_slices(const Graph& g, const std::vector<Vertex>& side,
                                                         const std::vector<Vertex>& other, std::size_t min_size)
{
    std::vector<std::vector<Vertex>> out;
    out.push_back(side);
    for (Vertex v : other) {
        std::vector<Vertex> in, out_n;
        for (Vertex s : side)
            (g.adjacent(v, s) ? in : out_n).push_back(s);
        out.push_back(std::move(in));
        out.push_back(std::move(out_n));
    }
    const VertexSet other_set = make_set(g.order(), other);
    std::vector<std::pair<std::size_t, Vertex>> deg;
    for (Vertex s : side)
        deg.emplace_back((g.neighbors(s) & other_set).count(), s);
    std::sort(deg.begin(), deg.end());
    for (std::size_t k : {min_size, (side.size() + 3) / 4, (side.size() + 1) / 2}) {
        if (k == 0 || k > side.size())
            continue;
        std::vector<Vertex> low, high;
        for (std::size_t i = 0; i < k; ++i) {
            low.push_back(deg[i].second);
            high.push_back(deg[deg.size() - 1 - i].second);
        }
        out.push_back(std::move(low));
        out.push_back(std::move(high));
    }
    return out;
}

} // namespace detail

/// One-sided search for a violation of eps-regularity of (A, B).
///
/// Sides of at most 12 vertices are searched exhaustively (every Y with a best-response
/// X). Larger pairs try neighbourhood slices, degree slices and `sample_count` seeded
/// random subsets on each side. The maximum-deviation witness found is returned and
/// rechecked; std::nullopt means no witness was found, not that the pair is regular.
inline std::optional<RegularityWitness> regularity_refuter(const Graph& g, const VertexSet& a, const VertexSet& b,
                                                           const Rational& eps, std::size_t sample_count,
                                                           std::uint64_t seed)
{
    if (a.none() || b.none())
        throw Error(ErrorKind::EmptySide, "regularity_refuter needs non-empty sides");
    if (a.intersects(b))
        throw Error(ErrorKind::OverlappingSides, "regularity_refuter needs disjoint sides");
    if (eps <= 0)
        throw Error(ErrorKind::ParameterOutOfRange, "eps must be positive");
    detail::Refuter search(g, members(a), members(b), eps);
    const auto& av = search.a();
    const auto& bv = search.b();

    if (av.size() <= 12 && bv.size() <= 12) {
        const std::uint32_t limit = 1u << bv.size();
        for (std::uint32_t mask = 1; mask < limit; ++mask) {
            std::vector<Vertex> y;
            for (std::size_t i = 0; i < bv.size(); ++i)
                if (mask & (1u << i))
                    y.push_back(bv[i]);
            search.best_response(y, true);
        }
    } else {
        for (const auto& y : detail::candidate_slices(g, bv, av, search.min_b()))
            search.best_response(y, true);
        for (const auto& x : detail::candidate_slices(g, av, bv, search.min_a()))
            search.best_response(x, false);
        Rng rng(seed);
        auto random_subset = [&](std::vector<Vertex> side, std::size_t min_size) {
            const std::size_t lo = std::max<std::size_t>(min_size, 1);
            const std::size_t k = lo + static_cast<std::size_t>(uniform_below(rng, side.size() - lo + 1));
            for (std::size_t i = 0; i < k; ++i)
                std::swap(side[i], side[i + static_cast<std::size_t>(uniform_below(rng, side.size() - i))]);
            side.resize(k);
            return side;
        };
        for (std::size_t s = 0; s < sample_count; ++s) {
            if (search.min_b() <= bv.size())
                search.best_response(random_subset(bv, search.min_b()), true);
            if (search.min_a() <= av.size())
                search.best_response(random_subset(av, search.min_a()), false);
        }
    }
    auto w = search.result();
    if (w && !witness_holds(g, a, b, eps, *w))
        throw Error(ErrorKind::InternalInvariant, "regularity witness failed its recheck");
    return w;
}

struct TypicalSplit {
    std::vector<Vertex> typical;
    std::vector<Vertex> atypical;
};

/// atypical = { x in A : |N(x) & Y| <= (d - eps) |Y| }, exact; ties are atypical.
inline TypicalSplit typical_vertex_filter(const Graph& g, const VertexSet& a, const VertexSet& b, const VertexSet& y,
                                          const Rational& d, const Rational& eps)
{
    if (y.none())
        throw Error(ErrorKind::EmptySide, "Y must be non-empty");
    if (!y.is_subset_of(b))
        throw Error(ErrorKind::ParameterOutOfRange, "Y must be a subset of B");
    if (a.intersects(b))
        throw Error(ErrorKind::OverlappingSides, "A and B must be disjoint");
    const Rational threshold = (d - eps) * Rational(y.count());
    TypicalSplit out;
    for_each_member(a, [&](Vertex x) {
        if (Rational((g.neighbors(x) & y).count()) <= threshold)
            out.atypical.push_back(x);
        else
            out.typical.push_back(x);
    });
    return out;
}

/// Smallest t with (1 - (d - 2 eps))^t < eps, by exact powering.
inline std::size_t t_bound(const Rational& d, const Rational& eps)
{
    const Rational gamma = d - 2 * eps;
    if (eps <= 0 || gamma <= 0)
        throw Error(ErrorKind::DegenerateParameters, "need d > 2 eps > 0");
    const Rational base = 1 - gamma;
    Rational power = 1;
    std::size_t t = 0;
    while (!(power < eps)) {
        power *= base;
        ++t;
    }
    return t;
}

struct DominatingStep {
    Vertex pick = -1;
    std::size_t uncovered_before = 0;
    std::size_t newly_covered = 0;
    bool irregular = false; // no vertex covered gamma of the uncovered set
};

struct DominatingResult {
    std::vector<Vertex> picks;
    std::vector<Vertex> covered;
    std::size_t t_target = 0;
    std::vector<DominatingStep> steps;
    bool coverage_reached = false; // |covered| >= (1 - eps) |B|

    std::size_t irregular_steps() const
    {
        return static_cast<std::size_t>(std::count_if(steps.begin(), steps.end(), [](const auto& s) { return s.irregular; }));
    }
};

/// Picks u_1, u_2, ... in A whose neighbourhoods cover all but eps|B| of B.
///
/// Each step takes the smallest-id unpicked vertex covering at least
/// gamma = d - 2 eps of the still-uncovered part of B; when none exists the
/// maximum-coverage vertex is taken and the step is flagged irregular. Stops once
/// at most eps|B| remains uncovered or t_bound(d, eps) vertices have been picked.
inline DominatingResult dominating_greedy(const Graph& g, const VertexSet& a, const VertexSet& b, const Rational& d,
                                          const Rational& eps)
{
    if (a.none() || b.none())
        throw Error(ErrorKind::EmptySide, "dominating_greedy needs non-empty sides");
    if (a.intersects(b))
        throw Error(ErrorKind::OverlappingSides, "dominating_greedy needs disjoint sides");
    DominatingResult out;
    out.t_target = t_bound(d, eps);
    const Rational gamma = d - 2 * eps;
    const Rational stop_at = eps * Rational(b.count());
    VertexSet uncovered = b;
    VertexSet available = a;
    while (out.picks.size() < out.t_target && Rational(uncovered.count()) > stop_at && available.any()) {
        const Rational need = gamma * Rational(uncovered.count());
        Vertex pick = -1;
        Vertex widest = -1;
        std::size_t widest_gain = 0;
        for (auto i = available.find_first(); i != VertexSet::npos; i = available.find_next(i)) {
            const Vertex v = static_cast<Vertex>(i);
            const std::size_t gain = (g.neighbors(v) & uncovered).count();
            if (Rational(gain) >= need) {
                pick = v;
                break;
            }
            if (widest < 0 || gain > widest_gain) {
                widest = v;
                widest_gain = gain;
            }
        }
        DominatingStep step;
        step.uncovered_before = uncovered.count();
        step.irregular = pick < 0;
        step.pick = pick < 0 ? widest : pick;
        const VertexSet gained = g.neighbors(step.pick) & uncovered;
        step.newly_covered = gained.count();
        uncovered -= gained;
        available.reset(static_cast<std::size_t>(step.pick));
        out.picks.push_back(step.pick);
        out.steps.push_back(step);
    }
    out.covered = members(b - uncovered);
    out.coverage_reached = !(Rational(uncovered.count()) > stop_at);
    return out;
}

/// (delta_G / n - (beta + eps)) * k: the guaranteed minimum degree of a reduced graph on k clusters.
inline Rational reduced_min_degree_bound(const Rational& delta_g, const Rational& n, const Rational& beta,
                                         const Rational& eps, const Rational& k)
{
    if (n <= 0 || k <= 0)
        throw Error(ErrorKind::ParameterOutOfRange, "need n > 0 and k > 0");
    return (delta_g / n - (beta + eps)) * k;
}

} // namespace mtt

#endif
