#ifndef MTT_INDEPENDENCE_HPP
#define MTT_INDEPENDENCE_HPP

#include <cstdint>
#include <vector>

#include "mtt/error.hpp"
#include "mtt/graph.hpp"

namespace mtt {

struct IndependenceResult {
    std::size_t alpha = 0;
    std::vector<Vertex> witness;
    bool exact = false;
    std::uint64_t nodes = 0;
};

inline bool is_independent(const Graph& g, std::span<const Vertex> vertices)
{
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (vertices[i] == vertices[j] || g.adjacent(vertices[i], vertices[j]))
                return false;
    return true;
}

/// True iff no three mutually adjacent vertices; scans N(u) & N(v) over edges.
inline bool is_triangle_free(const Graph& g)
{
    for (auto [u, v] : g.edges())
        if (g.neighbors(u).intersects(g.neighbors(v)))
            return false;
    return true;
}

namespace detail {

class MisSearch {
public:
    MisSearch(const Graph& g, std::uint64_t budget) : g_(g), budget_(budget) {}

    IndependenceResult run()
    {
        const VertexSet all = full_set(g_.order());
        best_ = greedy(all);
        VertexSet chosen(static_cast<std::size_t>(g_.order()));
        complete_ = true;
        expand(all, chosen);
        IndependenceResult r;
        r.witness = members(best_);
        r.alpha = r.witness.size();
        r.exact = complete_;
        r.nodes = nodes_;
        if (!is_independent(g_, r.witness))
            throw Error(ErrorKind::InternalInvariant, "independence witness is not independent");
        return r;
    }

private:
    // Min-degree greedy; seeds the incumbent.
    VertexSet greedy(VertexSet cand) const
    {
        VertexSet out(cand.size());
        while (cand.any()) {
            Vertex pick = -1;
            std::size_t best = 0;
            for_each_member(cand, [&](Vertex v) {
                std::size_t d = (g_.neighbors(v) & cand).count();
                if (pick < 0 || d < best) {
                    pick = v;
                    best = d;
                }
            });
            out.set(static_cast<std::size_t>(pick));
            cand &= ~g_.neighbors(pick);
            cand.reset(static_cast<std::size_t>(pick));
        }
        return out;
    }

    // Greedy clique cover of cand: an upper bound on alpha(G[cand]).
    std::size_t clique_cover_bound(VertexSet cand) const
    {
        std::size_t cliques = 0;
        while (cand.any()) {
            ++cliques;
            VertexSet q = cand;
            while (q.any()) {
                auto v = q.find_first();
                cand.reset(v);
                q.reset(v);
                q &= g_.neighbors(static_cast<Vertex>(v));
            }
        }
        return cliques;
    }

    void expand(VertexSet cand, VertexSet& chosen)
    {
        if (!complete_)
            return;
        if (nodes_ >= budget_) {
            complete_ = false;
            return;
        }
        ++nodes_;
        const std::size_t have = chosen.count();
        if (cand.none()) {
            if (have > best_.count())
                best_ = chosen;
            return;
        }
        if (have + clique_cover_bound(cand) <= best_.count())
            return;

        // highest degree inside cand, smallest id on ties
        Vertex branch = -1;
        std::size_t best_deg = 0;
        for_each_member(cand, [&](Vertex v) {
            std::size_t d = (g_.neighbors(v) & cand).count();
            if (branch < 0 || d > best_deg) {
                branch = v;
                best_deg = d;
            }
        });
        if (best_deg == 0) {
            if (have + cand.count() > best_.count())
                best_ = chosen | cand;
            return;
        }

        VertexSet with = cand & ~g_.neighbors(branch);
        with.reset(static_cast<std::size_t>(branch));
        chosen.set(static_cast<std::size_t>(branch));
        expand(with, chosen);
        chosen.reset(static_cast<std::size_t>(branch));

        cand.reset(static_cast<std::size_t>(branch));
        expand(cand, chosen);
    }

    const Graph& g_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool complete_ = true;
    VertexSet best_;
};

} // namespace detail

/// Branch and bound on the highest-degree vertex with a clique-cover bound.
/// `exact` is false when the node budget ran out; the witness is then the best found.
inline IndependenceResult max_independent_set_exact(const Graph& g, std::uint64_t budget = 10'000'000)
{
    return detail::MisSearch(g, budget).run();
}

} // namespace mtt

#endif
