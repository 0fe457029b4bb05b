#ifndef MTT_GENERATORS_HPP
#define MTT_GENERATORS_HPP

#include <array>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "mtt/error.hpp"
#include "mtt/graph.hpp"
#include "mtt/independence.hpp"
#include "mtt/io.hpp"
#include "mtt/rational.hpp"
#include "mtt/rng.hpp"

namespace mtt {

enum class PartMethod { CirculantCatalog, TriangleFreeProcess };

inline const char* method_name(PartMethod m)
{
    return m == PartMethod::CirculantCatalog ? "circulant_catalog" : "triangle_free_process";
}

inline PartMethod parse_part_method(const std::string& s)
{
    if (s == "circulant_catalog" || s == "catalog")
        return PartMethod::CirculantCatalog;
    if (s == "triangle_free_process" || s == "process")
        return PartMethod::TriangleFreeProcess;
    throw Error(ErrorKind::MalformedInput, "unknown part method '" + s + "'");
}

inline Graph circulant_graph(int n, std::span<const int> connection)
{
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (int s : connection) {
            Vertex v = static_cast<Vertex>(((u + s) % n + n) % n);
            if (v != u && !b.has_edge(u, v))
                b.add_edge(u, v);
        }
    return b.build();
}

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i ~ i+5.
inline Graph petersen_graph()
{
    GraphBuilder b(10);
    for (Vertex i = 0; i < 5; ++i) {
        b.add_edge(i, (i + 1) % 5);
        b.add_edge(i + 5, (i + 2) % 5 + 5);
        b.add_edge(i, i + 5);
    }
    return b.build();
}

/// Random maximal triangle-free graph: scan all pairs in a seeded random order,
/// adding each pair that closes no triangle. A single pass is maximal because
/// edges are never removed.
inline Graph triangle_free_process(int n, std::uint64_t seed)
{
    GraphBuilder b(n);
    if (n <= 2)
        return b.build();
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    Rng rng(seed);
    shuffle(pairs, rng);
    for (auto [u, v] : pairs)
        if (!b.neighbors(u).intersects(b.neighbors(v)))
            b.add_edge(u, v);
    return b.build();
}

/// Catalog: C5, Petersen (n=10), circulant Z13 {+-1, +-5}; otherwise the process.
inline Graph triangle_free_low_alpha(int n, PartMethod method, std::uint64_t seed)
{
    if (n < 1)
        throw Error(ErrorKind::ParameterOutOfRange, "triangle_free_low_alpha needs n >= 1");
    if (method == PartMethod::CirculantCatalog) {
        if (n == 5)
            return cycle_graph(5);
        if (n == 10)
            return petersen_graph();
        if (n == 13) {
            const std::array<int, 4> conn{1, -1, 5, -5};
            return circulant_graph(13, conn);
        }
    }
    return triangle_free_process(n, seed);
}

enum class CertificateKind { AvoidV1, AvoidV1AndV3Budget };

inline const char* certificate_name(CertificateKind k)
{
    return k == CertificateKind::AvoidV1 ? "AvoidV1" : "AvoidV1AndV3Budget";
}

struct UpperBoundCertificate {
    CertificateKind kind = CertificateKind::AvoidV1;
    std::size_t bound = 0;
    std::vector<int> parts_used; // 0-based part indices the argument relies on
};

struct ExtremalInstance {
    ColoredGraph colored_graph;
    std::vector<int> part_of;               // part index per vertex
    std::vector<std::vector<Vertex>> parts; // contiguous id ranges
    int ell = 0;
    int delta_target = 0;
    int achieved_delta = 0;
    PartMethod method = PartMethod::CirculantCatalog;
    std::uint64_t seed = 0;
    std::vector<UpperBoundCertificate> certificates;
    std::vector<std::size_t> part_alpha; // achieved, reported only
    std::vector<bool> part_alpha_exact;

    std::size_t best_bound() const
    {
        std::size_t b = certificates.front().bound;
        for (const auto& c : certificates)
            b = std::min(b, c.bound);
        return b;
    }
};

/// Two-or-more part construction whose first part meets no monochromatic triangle.
///
/// ell = ceil(n / (n - delta)); |V_1| = ... = |V_{ell-1}| = n - delta and V_ell takes
/// the rest. Each part is triangle-free, all cross pairs are edges, edges with
/// exactly one end in V_1 are red and every other edge is blue.
inline ExtremalInstance extremal_instance(int n, int delta_target, PartMethod method, std::uint64_t seed)
{
    if (n < 2 || delta_target >= n || 2 * delta_target < n)
        throw Error(ErrorKind::InfeasibleSizes, "need n/2 <= delta < n, got n=" + std::to_string(n) +
                                                     " delta=" + std::to_string(delta_target));
    const int gap = n - delta_target;
    const int ell = (n + gap - 1) / gap;
    std::vector<int> sizes(static_cast<std::size_t>(ell), gap);
    sizes.back() = n - (ell - 1) * gap;
    if (sizes.back() <= 0)
        throw Error(ErrorKind::InfeasibleSizes, "last part would be empty");

    ExtremalInstance inst;
    inst.ell = ell;
    inst.delta_target = delta_target;
    inst.method = method;
    inst.seed = seed;
    inst.part_of.resize(static_cast<std::size_t>(n));

    std::vector<ColoredEdge> edges;
    Vertex offset = 0;
    for (int p = 0; p < ell; ++p) {
        const int size = sizes[static_cast<std::size_t>(p)];
        std::vector<Vertex> part;
        for (Vertex v = offset; v < offset + size; ++v) {
            part.push_back(v);
            inst.part_of[static_cast<std::size_t>(v)] = p;
        }
        Graph inner = triangle_free_low_alpha(size, method, derive_seed(seed, static_cast<std::uint64_t>(p)));
        auto mis = max_independent_set_exact(inner);
        inst.part_alpha.push_back(mis.alpha);
        inst.part_alpha_exact.push_back(mis.exact);
        for (auto [u, v] : inner.edges())
            edges.push_back({offset + u, offset + v, Color::Blue});
        inst.parts.push_back(std::move(part));
        offset += size;
    }
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            const int pu = inst.part_of[static_cast<std::size_t>(u)];
            const int pv = inst.part_of[static_cast<std::size_t>(v)];
            if (pu == pv)
                continue;
            const bool leaves_first = (pu == 0) != (pv == 0);
            edges.push_back({u, v, leaves_first ? Color::Red : Color::Blue});
        }
    inst.colored_graph = build_colored_graph(n, edges);
    inst.achieved_delta = inst.colored_graph.min_degree();

    const std::size_t outside_first = static_cast<std::size_t>(n - sizes[0]);
    inst.certificates.push_back({CertificateKind::AvoidV1, outside_first / 3, {0}});
    const int third = 2 * delta_target - n;
    if (ell == 3 && 2 * third <= gap)
        inst.certificates.push_back(
            {CertificateKind::AvoidV1AndV3Budget, static_cast<std::size_t>(sizes[2]), {0, 1, 2}});
    return inst;
}

inline KeyValues instance_metadata(const ExtremalInstance& inst)
{
    KeyValues kv;
    kv["kind"] = "extremal";
    kv["n"] = std::to_string(inst.colored_graph.order());
    kv["ell"] = std::to_string(inst.ell);
    kv["delta_target"] = std::to_string(inst.delta_target);
    kv["achieved_delta"] = std::to_string(inst.achieved_delta);
    kv["seed"] = std::to_string(inst.seed);
    kv["method"] = method_name(inst.method);
    std::ostringstream parts, alpha;
    for (std::size_t i = 0; i < inst.part_of.size(); ++i)
        parts << (i ? " " : "") << inst.part_of[i];
    for (std::size_t i = 0; i < inst.part_alpha.size(); ++i)
        alpha << (i ? " " : "") << inst.part_alpha[i] << (inst.part_alpha_exact[i] ? "" : "?");
    kv["parts"] = parts.str();
    kv["part_alpha"] = alpha.str();
    for (const auto& c : inst.certificates)
        kv[std::string("certificate.") + certificate_name(c.kind)] = std::to_string(c.bound);
    kv["certificate.bound"] = std::to_string(inst.best_bound());
    return kv;
}

/// G(n, p) with a seeded stream, pairs visited in lexicographic order.
inline Graph random_graph(int n, double p, std::uint64_t seed)
{
    Rng rng(seed);
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (bernoulli(rng, p))
                b.add_edge(u, v);
    return b.build();
}

/// Bipartite G(a, b, p): side A is 0..a-1, side B is a..a+b-1.
inline Graph random_bipartite(int a, int b, double p, std::uint64_t seed)
{
    Rng rng(seed);
    GraphBuilder g(a + b);
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = a; v < a + b; ++v)
            if (bernoulli(rng, p))
                g.add_edge(u, v);
    return g.build();
}

/// Dense graph on k vertices with minimum degree exactly delta (0 <= delta <= k-1):
/// start from K_k and drop edges in seeded random order while both ends stay above delta.
inline Graph random_graph_min_degree(int k, int delta, std::uint64_t seed)
{
    if (k < 1 || delta < 0 || delta > k - 1)
        throw Error(ErrorKind::ParameterOutOfRange, "need 0 <= delta <= k-1");
    GraphBuilder b(k);
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u < k; ++u)
        for (Vertex v = u + 1; v < k; ++v) {
            b.add_edge(u, v);
            pairs.emplace_back(u, v);
        }
    Rng rng(seed);
    shuffle(pairs, rng);
    for (auto [u, v] : pairs)
        if (b.degree(u) > delta && b.degree(v) > delta)
            b.remove_edge(u, v);
    return b.build();
}

/// Each edge independently red with probability p_red, in canonical edge order.
inline ColoredGraph random_coloring(const Graph& g, double p_red, std::uint64_t seed)
{
    if (!(p_red >= 0.0 && p_red <= 1.0))
        throw Error(ErrorKind::ParameterOutOfRange, "p_red must lie in [0, 1]");
    Rng rng(seed);
    std::vector<ColoredEdge> edges;
    for (auto [u, v] : g.edges())
        edges.push_back({u, v, bernoulli(rng, p_red) ? Color::Red : Color::Blue});
    return build_colored_graph(g.order(), edges);
}

/// The six part pairs of a blown-up bowtie; part 0 is the centre.
inline constexpr std::array<std::pair<int, int>, 6> kBowtiePairs{{{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}}};

struct FivePartInstance {
    ColoredGraph colored_graph;
    int m = 0;
    std::array<std::vector<Vertex>, 5> parts; // part i holds i*m .. (i+1)*m - 1
    std::array<Rational, 6> pair_density;     // indexed like kBowtiePairs

    VertexSet part_set(int i) const { return make_set(colored_graph.order(), parts[static_cast<std::size_t>(i)]); }
};

inline FivePartInstance five_part_instance(int m, double density, double p_red, std::uint64_t seed)
{
    if (m < 1)
        throw Error(ErrorKind::ParameterOutOfRange, "five_part_instance needs m >= 1");
    if (!(density > 0.0 && density <= 1.0))
        throw Error(ErrorKind::ParameterOutOfRange, "density must lie in (0, 1]");
    FivePartInstance inst;
    inst.m = m;
    for (int i = 0; i < 5; ++i)
        for (Vertex v = i * m; v < (i + 1) * m; ++v)
            inst.parts[static_cast<std::size_t>(i)].push_back(v);

    Rng rng(derive_seed(seed, 0));
    GraphBuilder b(5 * m);
    for (std::size_t p = 0; p < kBowtiePairs.size(); ++p) {
        auto [i, j] = kBowtiePairs[p];
        std::int64_t count = 0;
        for (Vertex u : inst.parts[static_cast<std::size_t>(i)])
            for (Vertex v : inst.parts[static_cast<std::size_t>(j)])
                if (bernoulli(rng, density)) {
                    b.add_edge(u, v);
                    ++count;
                }
        inst.pair_density[p] = ratio(count, static_cast<std::int64_t>(m) * m);
    }
    inst.colored_graph = random_coloring(b.build(), p_red, derive_seed(seed, 1));
    return inst;
}

} // namespace mtt

#endif
