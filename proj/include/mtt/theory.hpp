#ifndef MTT_THEORY_HPP
#define MTT_THEORY_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "mtt/error.hpp"
#include "mtt/generators.hpp"
#include "mtt/graph.hpp"
#include "mtt/rational.hpp"
#include "mtt/regularity.hpp"

namespace mtt {

// ---------------------------------------------------------------------------
// Chromatic parameters

/// std::nullopt stands for infinity (gcd of an empty set of differences).
using CountOrInfinity = std::optional<int>;

inline CountOrInfinity gcd_ext(CountOrInfinity a, CountOrInfinity b)
{
    if (!a)
        return b;
    if (!b)
        return a;
    return std::gcd(*a, *b);
}

struct ChromaticProfile {
    int chi = 0;
    int sigma = 0;
    Rational chi_cr;
    CountOrInfinity hcf_chi;
    CountOrInfinity hcf_c;
    CountOrInfinity hcf;
    Rational chi_star;
    std::size_t optimal_colorings = 0; // as unlabelled partitions
    std::vector<std::vector<int>> class_size_profiles; // sorted, deduplicated
};

namespace detail {

// All partitions of V(h) into exactly r independent classes (restricted growth order).
inline void for_each_proper_partition(const Graph& h, int r, const std::function<void(const std::vector<int>&)>& visit)
{
    const int n = h.order();
    std::vector<int> cls(static_cast<std::size_t>(n), -1);
    std::function<void(int, int)> go = [&](int v, int used) {
        if (n - v < r - used)
            return;
        if (v == n) {
            if (used == r)
                visit(cls);
            return;
        }
        for (int c = 0; c < std::min(used + 1, r); ++c) {
            bool ok = true;
            for (Vertex u = 0; u < v && ok; ++u)
                if (cls[static_cast<std::size_t>(u)] == c && h.adjacent(u, v))
                    ok = false;
            if (!ok)
                continue;
            cls[static_cast<std::size_t>(v)] = c;
            go(v + 1, std::max(used, c + 1));
        }
        cls[static_cast<std::size_t>(v)] = -1;
    };
    go(0, 0);
}

inline std::vector<int> component_sizes(const Graph& h)
{
    std::vector<int> sizes;
    VertexSet seen(static_cast<std::size_t>(h.order()));
    for (Vertex s = 0; s < h.order(); ++s) {
        if (seen.test(static_cast<std::size_t>(s)))
            continue;
        VertexSet comp(static_cast<std::size_t>(h.order()));
        comp.set(static_cast<std::size_t>(s));
        VertexSet frontier = comp;
        while (frontier.any()) {
            VertexSet next(static_cast<std::size_t>(h.order()));
            for_each_member(frontier, [&](Vertex v) { next |= h.neighbors(v); });
            next -= comp;
            comp |= next;
            frontier = next;
        }
        seen |= comp;
        sizes.push_back(static_cast<int>(comp.count()));
    }
    return sizes;
}

inline CountOrInfinity gcd_of_differences(const std::vector<int>& sizes)
{
    CountOrInfinity g;
    for (std::size_t i = 0; i < sizes.size(); ++i)
        for (std::size_t j = 0; j < sizes.size(); ++j) {
            int d = std::abs(sizes[i] - sizes[j]);
            if (d != 0)
                g = gcd_ext(g, d);
        }
    return g;
}

} // namespace detail

/// chi, sigma, critical chromatic number, the hcf parameters and chi* of a small graph.
///
/// Enumerates every proper chi(H)-colouring as a partition. For edgeless H
/// (chi = 1, |H| - sigma = 0) chi_cr is taken to be 1.
inline ChromaticProfile chromatic_parameters(const Graph& h)
{
    const int n = h.order();
    if (n > 12)
        throw Error(ErrorKind::TooLarge, "chromatic_parameters enumerates colourings; |H| <= 12");
    if (n < 1)
        throw Error(ErrorKind::ParameterOutOfRange, "H must have at least one vertex");
    ChromaticProfile p;
    std::set<std::vector<int>> profiles;
    std::set<int> differences;
    for (int r = 1; r <= n && p.chi == 0; ++r) {
        detail::for_each_proper_partition(h, r, [&](const std::vector<int>& cls) {
            std::vector<int> sizes(static_cast<std::size_t>(r), 0);
            for (int c : cls)
                ++sizes[static_cast<std::size_t>(c)];
            std::sort(sizes.begin(), sizes.end());
            profiles.insert(sizes);
            ++p.optimal_colorings;
        });
        if (p.optimal_colorings > 0)
            p.chi = r;
    }
    p.class_size_profiles.assign(profiles.begin(), profiles.end());
    p.sigma = n;
    for (const auto& sizes : p.class_size_profiles) {
        p.sigma = std::min(p.sigma, sizes.front());
        p.hcf_chi = gcd_ext(p.hcf_chi, detail::gcd_of_differences(sizes));
    }
    p.hcf_c = detail::gcd_of_differences(detail::component_sizes(h));
    p.hcf = gcd_ext(p.hcf_chi, p.hcf_c);
    if (n == p.sigma)
        p.chi_cr = 1;
    else
        p.chi_cr = Rational(BigInt((p.chi - 1) * n), BigInt(n - p.sigma));
    p.chi_star = (p.hcf && *p.hcf == 1) ? p.chi_cr : Rational(p.chi);
    return p;
}

/// Two triangles sharing vertex 0: wings {1,2} and {3,4}.
inline Graph bowtie_graph()
{
    const std::array<std::pair<Vertex, Vertex>, 6> e{{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}};
    return make_graph(5, e);
}

// ---------------------------------------------------------------------------
// Auxiliary-graph reduction

/// Smallest C with C >= (5/2) C_F2 + 10, (3/2)k - (5/2)delta + C a non-negative
/// integer and (5/2)k - (5/2)delta + C divisible by 5. Requires k/2 < delta <= 3k/5.
inline Rational admissible_C(int k, int delta, const Rational& c_f2 = 0)
{
    if (k < 1 || 2 * delta <= k || 5 * delta > 3 * k)
        throw Error(ErrorKind::ParameterOutOfRange,
                    "need k/2 < delta <= 3k/5, got k=" + std::to_string(k) + " delta=" + std::to_string(delta));
    const Rational half(BigInt(1), BigInt(2));
    const Rational lower = Rational(5) / 2 * c_f2 + 10;
    const Rational w_base = Rational(3 * k - 5 * delta) / 2;
    const Rational v_base = Rational(5 * k - 5 * delta) / 2;
    Rational c = Rational(ceil_of(lower * 2)) / 2;
    for (;;) {
        const Rational w = w_base + c;
        const Rational v = v_base + c;
        if (c >= lower && is_integer(w) && w >= 0 && is_integer(v) && numerator(v) % 5 == 0)
            return c;
        c += half;
    }
}

struct AuxReduction {
    Graph base;
    int k = 0;
    int delta = 0;
    Rational c;
    Rational c_f2;
    std::vector<Vertex> w; // ids k .. k+|W|-1 in aux
    Graph aux;
    int aux_order = 0;
    int aux_min_degree = 0;
    /// delta(R') >= (3/5)|V(R')| + C_F2, the perfect-tiling hypothesis; reported, not assumed.
    bool degree_hypothesis_holds = false;
    /// |W| <= 2 |V(R')| / 5: independent W fits into a perfect F2-tiling at all.
    bool w_capacity_ok = false;
};

/// R' = R plus an independent set W joined completely to V(R),
/// |W| = (3/2)k - (5/2)delta(R) + C.
inline AuxReduction auxiliary_reduction(const Graph& r, const Rational& c, const Rational& c_f2 = 0)
{
    AuxReduction out;
    out.base = r;
    out.k = r.order();
    out.delta = r.min_degree();
    out.c = c;
    out.c_f2 = c_f2;
    const Rational w_size = Rational(3 * out.k - 5 * out.delta) / 2 + c;
    const Rational order = Rational(5 * out.k - 5 * out.delta) / 2 + c;
    if (!is_integer(w_size) || w_size < 0)
        throw Error(ErrorKind::ArithmeticConstraintViolated, "|W| = " + to_string(w_size) + " is not a non-negative integer");
    if (!is_integer(order) || numerator(order) % 5 != 0)
        throw Error(ErrorKind::ArithmeticConstraintViolated, "|V(R')| = " + to_string(order) + " is not divisible by 5");
    const int wn = numerator(w_size).convert_to<int>();
    out.aux_order = out.k + wn;
    GraphBuilder b(out.aux_order);
    for (auto [u, v] : r.edges())
        b.add_edge(u, v);
    for (int i = 0; i < wn; ++i) {
        const Vertex w = out.k + i;
        out.w.push_back(w);
        for (Vertex v = 0; v < out.k; ++v)
            b.add_edge(v, w);
    }
    out.aux = b.build();
    out.aux_min_degree = out.aux.min_degree();
    out.degree_hypothesis_holds = Rational(out.aux_min_degree) >= Rational(3 * out.aux_order) / 5 + c_f2;
    out.w_capacity_ok = 5 * wn <= 2 * out.aux_order;
    return out;
}

// ---------------------------------------------------------------------------
// F2 tilings

struct F2Copy {
    Vertex center = -1;
    std::array<std::array<Vertex, 2>, 2> wings{}; // each wing sorted, wings sorted

    auto operator<=>(const F2Copy&) const = default;

    std::array<Vertex, 5> vertices() const { return {center, wings[0][0], wings[0][1], wings[1][0], wings[1][1]}; }
};

inline F2Copy make_f2(Vertex center, Vertex a, Vertex b, Vertex x, Vertex y)
{
    F2Copy f;
    f.center = center;
    f.wings[0] = {std::min(a, b), std::max(a, b)};
    f.wings[1] = {std::min(x, y), std::max(x, y)};
    if (f.wings[1] < f.wings[0])
        std::swap(f.wings[0], f.wings[1]);
    return f;
}

inline bool is_f2_copy(const Graph& g, const F2Copy& f)
{
    auto vs = f.vertices();
    for (Vertex v : vs)
        if (v < 0 || v >= g.order())
            return false;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (vs[i] == vs[j])
                return false;
    for (const auto& w : f.wings)
        if (!g.adjacent(f.center, w[0]) || !g.adjacent(f.center, w[1]) || !g.adjacent(w[0], w[1]))
            return false;
    return true;
}

struct F2TilingResult {
    std::vector<F2Copy> copies;
    bool perfect = false;
    bool exact = false; // search finished within budget
    std::uint64_t nodes = 0;
};

namespace detail {

class F2Search {
public:
    F2Search(const Graph& g, bool perfect, std::uint64_t budget) : g_(g), perfect_(perfect), budget_(budget) {}

    F2TilingResult run()
    {
        F2TilingResult out;
        const int n = g_.order();
        target_ = static_cast<std::size_t>(n / 5);
        if (perfect_ && n % 5 != 0) {
            out.exact = true;
            return out;
        }
        expand(full_set(n));
        out.copies = best_;
        std::sort(out.copies.begin(), out.copies.end());
        out.perfect = n > 0 ? best_.size() * 5 == static_cast<std::size_t>(n) : true;
        if (n == 0)
            out.perfect = true;
        out.exact = !exhausted_;
        out.nodes = nodes_;
        if (perfect_ && !out.perfect)
            out.copies.clear();
        return out;
    }

private:
    bool done() const { return exhausted_ || best_.size() == target_; }

    // Vertices that could still lie in a copy: repeatedly drop alive-degree < 2.
    VertexSet core(VertexSet alive) const
    {
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto i = alive.find_first(); i != VertexSet::npos; i = alive.find_next(i))
                if ((g_.neighbors(static_cast<Vertex>(i)) & alive).count() < 2) {
                    alive.reset(i);
                    changed = true;
                }
        }
        return alive;
    }

    void expand(VertexSet alive)
    {
        if (done())
            return;
        if (nodes_ >= budget_) {
            exhausted_ = true;
            return;
        }
        ++nodes_;
        if (alive.none()) {
            if (current_.size() > best_.size())
                best_ = current_;
            return;
        }
        const VertexSet usable = core(alive);
        if (perfect_ && usable != alive)
            return;
        if (!perfect_) {
            if (current_.size() > best_.size())
                best_ = current_;
            if (current_.size() + usable.count() / 5 <= best_.size())
                return;
            alive = usable;
            if (alive.none())
                return;
        }

        // vertices by (alive degree, id); the branch vertex is the most constrained one
        std::vector<std::pair<std::size_t, Vertex>> deg;
        for_each_member(alive, [&](Vertex v) { deg.emplace_back((g_.neighbors(v) & alive).count(), v); });
        std::sort(deg.begin(), deg.end());
        std::vector<Vertex> order;
        std::vector<int> pos(static_cast<std::size_t>(g_.order()), -1);
        for (auto [d, v] : deg) {
            pos[static_cast<std::size_t>(v)] = static_cast<int>(order.size());
            order.push_back(v);
        }
        const Vertex v = order.front();
        auto in = [&](Vertex x, const VertexSet& s) { return s.test(static_cast<std::size_t>(x)); };

        auto take = [&](const F2Copy& f) {
            VertexSet next = alive;
            for (Vertex x : f.vertices())
                next.reset(static_cast<std::size_t>(x));
            current_.push_back(f);
            expand(std::move(next));
            current_.pop_back();
            return done();
        };

        const VertexSet nv = g_.neighbors(v) & alive;
        // v in a wing {v, b} with centre c; other wing {x, y}
        for (Vertex c : order) {
            if (!in(c, nv))
                continue;
            const VertexSet nc = g_.neighbors(c) & alive;
            for (Vertex b : order) {
                if (!in(b, nv) || !in(b, nc))
                    continue;
                for (Vertex x : order) {
                    if (x == v || x == b || !in(x, nc))
                        continue;
                    for (Vertex y : order) {
                        if (pos[static_cast<std::size_t>(y)] <= pos[static_cast<std::size_t>(x)] || y == v || y == b ||
                            !in(y, nc) || !g_.adjacent(x, y))
                            continue;
                        if (take(make_f2(c, v, b, x, y)))
                            return;
                    }
                }
            }
        }
        // v as the centre
        for (Vertex a : order) {
            if (!in(a, nv))
                continue;
            for (Vertex b : order) {
                if (pos[static_cast<std::size_t>(b)] <= pos[static_cast<std::size_t>(a)] || !in(b, nv) || !g_.adjacent(a, b))
                    continue;
                for (Vertex x : order) {
                    if (pos[static_cast<std::size_t>(x)] <= pos[static_cast<std::size_t>(a)] || x == b || !in(x, nv))
                        continue;
                    for (Vertex y : order) {
                        if (pos[static_cast<std::size_t>(y)] <= pos[static_cast<std::size_t>(x)] || y == b || !in(y, nv) ||
                            !g_.adjacent(x, y))
                            continue;
                        if (take(make_f2(v, a, b, x, y)))
                            return;
                    }
                }
            }
        }
        if (!perfect_) {
            alive.reset(static_cast<std::size_t>(v));
            expand(std::move(alive));
        }
    }

    const Graph& g_;
    bool perfect_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
    std::size_t target_ = 0;
    std::vector<F2Copy> current_;
    std::vector<F2Copy> best_;
};

} // namespace detail

/// Maximum (or perfect) vertex-disjoint F2 packing by branch and bound.
///
/// Branches on the vertex of smallest degree among the remaining ones, trying every
/// copy through it. With require_perfect the search fails fast when 5 does not divide
/// |V(G)| and returns no copies unless a perfect tiling was found; `exact` tells
/// whether the search finished inside the node budget.
inline F2TilingResult f2_tiling_exact(const Graph& g, bool require_perfect, std::uint64_t budget = 5'000'000)
{
    auto r = detail::F2Search(g, require_perfect, budget).run();
    for (const auto& f : r.copies)
        if (!is_f2_copy(g, f))
            throw Error(ErrorKind::InternalInvariant, "F2 search produced a non-copy");
    return r;
}

struct F2Classification {
    std::size_t s = 0; // copies with two W vertices
    std::size_t t = 0; // copies with one W vertex
    std::size_t l = 0; // copies inside R
    Rational l_minus_s;          // counted
    Rational l_minus_s_identity; // 2 delta - k - (4/5) C
    bool lower_bound_holds = false; // l >= 2 delta - k - C
};

/// Counts copies of a perfect F2-tiling of R' by how many W vertices they use and
/// checks 2s + t = |W| and 3s + 4t + 5l = k exactly.
inline F2Classification classify_f2_copies(std::span<const F2Copy> tiling, std::span<const Vertex> w, int k, int delta,
                                           const Rational& c)
{
    const int order = k + static_cast<int>(w.size());
    VertexSet in_w(static_cast<std::size_t>(order));
    for (Vertex x : w) {
        if (x < 0 || x >= order)
            throw Error(ErrorKind::VertexOutOfRange, "W vertex " + std::to_string(x));
        in_w.set(static_cast<std::size_t>(x));
    }
    VertexSet covered(static_cast<std::size_t>(order));
    F2Classification out;
    for (const auto& f : tiling) {
        int in_w_count = 0;
        for (Vertex x : f.vertices()) {
            if (x < 0 || x >= order || covered.test(static_cast<std::size_t>(x)))
                throw Error(ErrorKind::NotPerfect, "copies overlap or leave the vertex range");
            covered.set(static_cast<std::size_t>(x));
            in_w_count += in_w.test(static_cast<std::size_t>(x)) ? 1 : 0;
        }
        switch (in_w_count) {
        case 0: ++out.l; break;
        case 1: ++out.t; break;
        case 2: ++out.s; break;
        default:
            throw Error(ErrorKind::CountIdentityViolated,
                        "a copy uses " + std::to_string(in_w_count) + " vertices of the independent set W");
        }
    }
    if (covered.count() != static_cast<std::size_t>(order))
        throw Error(ErrorKind::NotPerfect, "tiling covers " + std::to_string(covered.count()) + " of " +
                                               std::to_string(order) + " vertices");
    const Rational w_formula = Rational(3 * k - 5 * delta) / 2 + c;
    if (Rational(2 * out.s + out.t) != Rational(w.size()) || Rational(w.size()) != w_formula)
        throw Error(ErrorKind::CountIdentityViolated, "2s + t != |W|");
    if (3 * out.s + 4 * out.t + 5 * out.l != static_cast<std::size_t>(k))
        throw Error(ErrorKind::CountIdentityViolated, "3s + 4t + 5l != k");
    out.l_minus_s = Rational(static_cast<long long>(out.l)) - Rational(static_cast<long long>(out.s));
    out.l_minus_s_identity = Rational(2 * delta - k) - Rational(4) / 5 * c;
    if (out.l_minus_s != out.l_minus_s_identity)
        throw Error(ErrorKind::CountIdentityViolated, "l - s != 2 delta - k - 4C/5");
    out.lower_bound_holds = Rational(static_cast<long long>(out.l)) >= Rational(2 * delta - k) - c;
    if (!out.lower_bound_holds)
        throw Error(ErrorKind::CountIdentityViolated, "l < 2 delta - k - C");
    return out;
}

// ---------------------------------------------------------------------------
// Constructive triangle finders

enum class FinderStage {
    None,
    WithinClass,       // colour edge inside a dominated class X_i^c
    ClassIntersection, // edge inside X_i^r & X_j^b
    CrossColor,        // edge inside N_R(y) & X_i^b or N_B(y) & X_i^r
    Transversal,       // one vertex in each part
    Enumeration,       // direct scan fallback
};

inline const char* stage_name(FinderStage s)
{
    switch (s) {
    case FinderStage::None: return "none";
    case FinderStage::WithinClass: return "within_class";
    case FinderStage::ClassIntersection: return "class_intersection";
    case FinderStage::CrossColor: return "cross_color";
    case FinderStage::Transversal: return "transversal";
    case FinderStage::Enumeration: return "enumeration";
    }
    return "?";
}

struct ThreePartResult {
    std::optional<Triangle> triangle;
    FinderStage stage = FinderStage::None;
    bool complete = true; // false if the enumeration fallback hit the budget
    std::uint64_t examined = 0;
};

/// Monochromatic triangle inside P u Q u S with at most one vertex in S and at most
/// two in each of P and Q.
inline bool three_part_distribution_ok(const ColoredGraph& g, const Triangle& t, const VertexSet& p, const VertexSet& q,
                                       const VertexSet& s)
{
    auto c = triangle_color(g, t.vertices[0], t.vertices[1], t.vertices[2]);
    if (!c || *c == Color::Mixed || *c != t.color)
        return false;
    int in_p = 0, in_q = 0, in_s = 0;
    for (Vertex v : t.vertices) {
        const auto i = static_cast<std::size_t>(v);
        if (p.test(i))
            ++in_p;
        else if (q.test(i))
            ++in_q;
        else if (s.test(i))
            ++in_s;
        else
            return false;
    }
    return in_s <= 1 && in_p <= 2 && in_q <= 2;
}

namespace detail {

// First edge (x < y) inside `inside`, in lexicographic order.
inline std::optional<std::pair<Vertex, Vertex>> first_edge_within(const Graph& g, const VertexSet& inside)
{
    for (auto x = inside.find_first(); x != VertexSet::npos; x = inside.find_next(x)) {
        const VertexSet nx = g.neighbors(static_cast<Vertex>(x)) & inside;
        auto y = nx.find_next(x);
        if (y != VertexSet::npos)
            return std::make_pair(static_cast<Vertex>(x), static_cast<Vertex>(y));
    }
    return std::nullopt;
}

struct DominatedClasses {
    std::vector<Vertex> dominators; // u_i in Y
    std::vector<VertexSet> red;     // X_i^r = N_R(u_i) & X
    std::vector<VertexSet> blue;    // X_i^b = N_B(u_i) & X
};

} // namespace detail

/// Searches for a monochromatic triangle with at most one vertex in S and at most two
/// in each of P and Q.
///
/// Stages, in order: for the ordered pairs (P,Q), (Q,P), (P,S), (Q,S) pick dominating
/// vertices u_1..u_h of Y over X (h = t_bound(beta - eps, eps)) and split X into
/// colour classes X_i^r, X_i^b; look for a colour edge inside a class, inside
/// X_i^r & X_j^b (when it has more than alpha_bound vertices) and inside the
/// cross-colour sets N_R(y) & X_i^b, N_B(y) & X_i^r; then transversal triangles through
/// a vertex of S; finally a direct canonical scan, limited to `budget` triangles.
/// Each stage scans canonically, so the result is deterministic.
inline ThreePartResult three_part_mono_finder(const ColoredGraph& g, const VertexSet& p, const VertexSet& q,
                                              const VertexSet& s, const Rational& beta, const Rational& eps,
                                              std::size_t alpha_bound, std::uint64_t budget = 10'000'000)
{
    if (p.intersects(q) || q.intersects(s) || p.intersects(s))
        throw Error(ErrorKind::OverlappingSides, "P, Q and S must be pairwise disjoint");
    const Graph& graph = g.graph();
    ThreePartResult out;
    auto accept = [&](const Triangle& t, FinderStage stage) {
        if (!three_part_distribution_ok(g, t, p, q, s))
            throw Error(ErrorKind::InternalInvariant, "finder produced a triangle violating the distribution");
        out.triangle = t;
        out.stage = stage;
        return out;
    };

    struct OrderedPair {
        const VertexSet* x;
        const VertexSet* y;
    };
    const std::array<OrderedPair, 4> pairs{{{&p, &q}, {&q, &p}, {&p, &s}, {&q, &s}}};

    std::vector<detail::DominatedClasses> classes(pairs.size());
    const Rational d = beta - eps;
    const bool dominating_ok = eps > 0 && d > 2 * eps;
    if (dominating_ok) {
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            const auto& [x, y] = pairs[k];
            if (x->none() || y->none())
                continue;
            auto dom = dominating_greedy(graph, *y, *x, d, eps);
            for (Vertex u : dom.picks) {
                classes[k].dominators.push_back(u);
                classes[k].red.push_back(g.red_neighbors(u) & *x);
                classes[k].blue.push_back(g.blue_neighbors(u) & *x);
            }
        }

        for (std::size_t k = 0; k < pairs.size(); ++k) {
            const auto& cl = classes[k];
            for (std::size_t i = 0; i < cl.dominators.size(); ++i)
                for (Color c : {Color::Red, Color::Blue}) {
                    const VertexSet& cls = c == Color::Red ? cl.red[i] : cl.blue[i];
                    for (auto x = cls.find_first(); x != VertexSet::npos; x = cls.find_next(x)) {
                        const VertexSet nx = g.neighbors(static_cast<Vertex>(x), c) & cls;
                        auto y = nx.find_next(x);
                        if (y != VertexSet::npos)
                            return accept(make_triangle(cl.dominators[i], static_cast<Vertex>(x), static_cast<Vertex>(y), c),
                                          FinderStage::WithinClass);
                    }
                }
        }

        for (std::size_t k = 0; k < pairs.size(); ++k) {
            const auto& cl = classes[k];
            for (std::size_t i = 0; i < cl.dominators.size(); ++i)
                for (std::size_t j = 0; j < cl.dominators.size(); ++j) {
                    if (i == j)
                        continue;
                    const VertexSet both = cl.red[i] & cl.blue[j];
                    if (both.count() < alpha_bound + 1)
                        continue;
                    if (auto e = detail::first_edge_within(graph, both)) {
                        Color c = *g.color(e->first, e->second);
                        Vertex apex = c == Color::Red ? cl.dominators[i] : cl.dominators[j];
                        return accept(make_triangle(apex, e->first, e->second, c), FinderStage::ClassIntersection);
                    }
                }
        }

        for (std::size_t k = 0; k < pairs.size(); ++k) {
            const auto& cl = classes[k];
            const VertexSet& ys = *pairs[k].y;
            for (auto yi = ys.find_first(); yi != VertexSet::npos; yi = ys.find_next(yi)) {
                const Vertex y = static_cast<Vertex>(yi);
                for (std::size_t i = 0; i < cl.dominators.size(); ++i) {
                    // y red to a blue class: red edge closes at y, blue edge at u_i; symmetric for blue.
                    for (Color c : {Color::Red, Color::Blue}) {
                        const VertexSet& cls = c == Color::Red ? cl.blue[i] : cl.red[i];
                        const VertexSet both = g.neighbors(y, c) & cls;
                        if (both.count() < alpha_bound + 1)
                            continue;
                        if (auto e = detail::first_edge_within(graph, both)) {
                            Color ec = *g.color(e->first, e->second);
                            Vertex apex = ec == c ? y : cl.dominators[i];
                            return accept(make_triangle(apex, e->first, e->second, ec), FinderStage::CrossColor);
                        }
                    }
                }
            }
        }
    }

    for (auto vi = s.find_first(); vi != VertexSet::npos; vi = s.find_next(vi)) {
        const Vertex v = static_cast<Vertex>(vi);
        for (Color c : {Color::Red, Color::Blue}) {
            const VertexSet np = g.neighbors(v, c) & p;
            const VertexSet nq = g.neighbors(v, c) & q;
            if (nq.none())
                continue;
            for (auto x = np.find_first(); x != VertexSet::npos; x = np.find_next(x)) {
                const VertexSet hit = g.neighbors(static_cast<Vertex>(x), c) & nq;
                auto y = hit.find_first();
                if (y != VertexSet::npos)
                    return accept(make_triangle(v, static_cast<Vertex>(x), static_cast<Vertex>(y), c), FinderStage::Transversal);
            }
        }
    }

    const VertexSet all = p | q | s;
    for (const auto& t : enumerate_mono_triangles(g, all)) {
        if (out.examined >= budget) {
            out.complete = false;
            return out;
        }
        ++out.examined;
        if (three_part_distribution_ok(g, t, p, q, s))
            return accept(t, FinderStage::Enumeration);
    }
    return out;
}

struct FivePartTiling {
    Tiling tiling;
    bool target_reached = false; // |tiling| >= (1 - sqrt(eps)) m
    std::size_t first_phase = 0;
    std::size_t second_phase = 0;
    bool second_phase_run = false;
};

namespace detail {

// x >= sqrt(eps) * m for x, m >= 0, exactly.
inline bool at_least_sqrt_eps_m(std::size_t x, const Rational& eps, int m)
{
    return Rational(static_cast<long long>(x * x)) >= eps * Rational(static_cast<long long>(m) * m);
}

inline std::size_t tile_three_parts(const ColoredGraph& g, VertexSet p, VertexSet q, VertexSet s, const Rational& beta,
                                    const Rational& eps, std::vector<Triangle>& out)
{
    std::size_t added = 0;
    for (;;) {
        auto r = three_part_mono_finder(g, p, q, s, beta, eps, 0);
        if (!r.triangle)
            return added;
        out.push_back(*r.triangle);
        ++added;
        for (Vertex v : r.triangle->vertices) {
            p.reset(static_cast<std::size_t>(v));
            q.reset(static_cast<std::size_t>(v));
            s.reset(static_cast<std::size_t>(v));
        }
    }
}

} // namespace detail

/// Maximal constrained tiling of V1 u V2 u V3 (at most one vertex in V1, two in V2 and
/// two in V3 per triangle); if at least sqrt(eps) m vertices of V1 stay uncovered, the
/// same on V1' u V4 u V5.
inline FivePartTiling five_part_tiler(const FivePartInstance& inst, const Rational& eps, const Rational& beta = Rational(3) / 10)
{
    if (eps <= 0 || eps >= 1)
        throw Error(ErrorKind::ParameterOutOfRange, "eps must lie in (0, 1)");
    const ColoredGraph& g = inst.colored_graph;
    FivePartTiling out;
    out.tiling.mode = TilingMode::Weak;
    auto& tris = out.tiling.triangles;
    out.first_phase = detail::tile_three_parts(g, inst.part_set(1), inst.part_set(2), inst.part_set(0), beta, eps, tris);

    VertexSet v1_left = inst.part_set(0);
    for (const auto& t : tris)
        for (Vertex v : t.vertices)
            v1_left.reset(static_cast<std::size_t>(v));
    if (detail::at_least_sqrt_eps_m(v1_left.count(), eps, inst.m)) {
        out.second_phase_run = true;
        out.second_phase = detail::tile_three_parts(g, inst.part_set(3), inst.part_set(4), v1_left, beta, eps, tris);
    }
    const std::size_t size = tris.size();
    const std::size_t m = static_cast<std::size_t>(inst.m);
    const std::size_t short_by = size >= m ? 0 : m - size;
    out.target_reached = Rational(static_cast<long long>(short_by * short_by)) <= eps * Rational(static_cast<long long>(m * m));
    return out;
}

} // namespace mtt

#endif
