#ifndef MTT_REPORT_HPP
#define MTT_REPORT_HPP

#include <json.hpp>

#include <string>
#include <vector>

#include "mtt/graph.hpp"
#include "mtt/rational.hpp"
#include "mtt/regularity.hpp"
#include "mtt/theory.hpp"
#include "mtt/tiling.hpp"

namespace mtt {

// JSON reports. Rationals are written as exact strings ("10", "55/3"); runtime data
// lives only under the "runtime" key so everything else can be compared byte-exactly.

using Json = nlohmann::ordered_json;

inline Json to_json(const Triangle& t)
{
    return Json::array({t.vertices[0], t.vertices[1], t.vertices[2], std::string(1, color_code(t.color))});
}

inline Json to_json(const Tiling& t)
{
    Json arr = Json::array();
    for (const auto& tri : t.triangles)
        arr.push_back(to_json(tri));
    return arr;
}

inline Json to_json(const BoundReport& b)
{
    Json j;
    j["thm3"] = to_string(b.lower);
    j["remarkA"] = to_string(b.construction_upper);
    j["bft"] = to_string(b.dense_weak);
    j["gamma"] = to_string(b.gamma);
    if (b.achieved_weak)
        j["achieved_weak"] = *b.achieved_weak;
    if (b.achieved_strong)
        j["achieved_strong"] = *b.achieved_strong;
    return j;
}

/// {n, delta, mode, size, exact, nodes, tiling, bounds}
inline Json solve_report(const ColoredGraph& g, TilingMode mode, const Tiling& tiling, bool exact, std::uint64_t nodes,
                         const BoundReport& bounds)
{
    Json j;
    j["n"] = g.order();
    j["delta"] = g.min_degree();
    j["mode"] = mode_name(mode);
    j["size"] = tiling.size();
    j["exact"] = exact;
    j["nodes"] = nodes;
    j["tiling"] = to_json(tiling);
    j["bounds"] = to_json(bounds);
    return j;
}

inline Tiling tiling_from_json(const Json& j, TilingMode mode)
{
    const Json& arr = j.contains("tiling") ? j.at("tiling") : j;
    Tiling t;
    t.mode = mode;
    for (const auto& item : arr) {
        if (!item.is_array() || item.size() != 4)
            throw Error(ErrorKind::MalformedInput, "tiling entries must be [a, b, c, colour]");
        const std::string c = item[3].get<std::string>();
        Color color = c == "r" ? Color::Red : c == "b" ? Color::Blue : Color::Mixed;
        t.triangles.push_back(make_triangle(item[0].get<int>(), item[1].get<int>(), item[2].get<int>(), color));
    }
    return t;
}

inline Json count_or_infinity(const CountOrInfinity& c)
{
    return c ? Json(*c) : Json("inf");
}

inline Json to_json(const ChromaticProfile& p)
{
    Json j;
    j["chi"] = p.chi;
    j["sigma"] = p.sigma;
    j["chi_cr"] = to_string(p.chi_cr);
    j["hcf_chi"] = count_or_infinity(p.hcf_chi);
    j["hcf_c"] = count_or_infinity(p.hcf_c);
    j["hcf"] = count_or_infinity(p.hcf);
    j["chi_star"] = to_string(p.chi_star);
    j["optimal_colorings"] = p.optimal_colorings;
    j["class_size_profiles"] = p.class_size_profiles;
    return j;
}

inline Json to_json(const AuxReduction& r)
{
    Json j;
    j["k"] = r.k;
    j["delta"] = r.delta;
    j["C"] = to_string(r.c);
    j["C_F2"] = to_string(r.c_f2);
    j["W"] = r.w.size();
    j["aux_order"] = r.aux_order;
    j["aux_min_degree"] = r.aux_min_degree;
    j["degree_hypothesis_holds"] = r.degree_hypothesis_holds;
    j["w_capacity_ok"] = r.w_capacity_ok;
    return j;
}

inline Json to_json(const F2Classification& c)
{
    Json j;
    j["s"] = c.s;
    j["t"] = c.t;
    j["l"] = c.l;
    j["l_minus_s"] = to_string(c.l_minus_s);
    j["identity"] = to_string(c.l_minus_s_identity);
    j["lower_bound_holds"] = c.lower_bound_holds;
    return j;
}

inline Json to_json(const RegularityWitness& w)
{
    Json j;
    j["X"] = w.x;
    j["Y"] = w.y;
    j["sub_density"] = to_string(w.sub_density);
    j["pair_density"] = to_string(w.pair_density);
    j["deviation"] = to_string(w.deviation);
    return j;
}

} // namespace mtt

#endif
