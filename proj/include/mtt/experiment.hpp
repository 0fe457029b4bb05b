#ifndef MTT_EXPERIMENT_HPP
#define MTT_EXPERIMENT_HPP

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "mtt/error.hpp"
#include "mtt/generators.hpp"
#include "mtt/rational.hpp"
#include "mtt/tiling.hpp"

namespace mtt {

/// A seeded sweep over extremal instances and colourings.
///
/// JSON form:
///   { "instances": [[n, delta], ...], "seeds": [1, 2], "p_red": ["extremal", 0.5],
///     "modes": ["weak", "strong"], "solver": "exact" | "heuristic",
///     "method": "catalog" | "process", "budget": 20000000, "iters": 2000,
///     "gamma": "0", "beta": "3/10", "eps": "1/100", "C_F2": "0", "out": "sweep.csv" }
/// "extremal" keeps the construction's own colouring; a number recolours the same
/// graph at random with that red probability.
struct ExperimentConfig {
    std::vector<std::pair<int, int>> instances;
    std::vector<std::uint64_t> seeds;
    std::vector<std::optional<double>> p_red{std::nullopt};
    std::vector<TilingMode> modes{TilingMode::Weak};
    bool exact = true;
    PartMethod method = PartMethod::CirculantCatalog;
    std::uint64_t budget = 20'000'000;
    std::size_t iters = 2000;
    Rational gamma = 0;
    Rational beta = Rational(3) / 10;
    Rational eps = Rational(1) / 100;
    Rational c_f2 = 0;
    std::string out;
};

namespace detail {

inline Rational json_rational(const nlohmann::json& j)
{
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(j.get<long long>());
    if (j.is_number())
        return parse_rational(j.dump());
    throw Error(ErrorKind::MalformedInput, "expected a number or rational string");
}

} // namespace detail

inline ExperimentConfig parse_experiment_config(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::MalformedInput, std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object())
        throw Error(ErrorKind::MalformedInput, "config must be a JSON object");
    static const std::set<std::string> known{"instances", "seeds", "p_red", "modes", "solver", "method", "budget",
                                             "iters", "gamma", "beta", "eps", "C_F2", "out"};
    for (const auto& [key, value] : j.items())
        if (!known.count(key))
            throw Error(ErrorKind::MalformedInput, "unknown config key \"" + key + "\"");
    ExperimentConfig c;
    try {
        if (!j.contains("instances") || !j.contains("seeds"))
            throw Error(ErrorKind::MalformedInput, "config needs \"instances\" and explicit \"seeds\"");
        for (const auto& pair : j.at("instances")) {
            if (!pair.is_array() || pair.size() != 2)
                throw Error(ErrorKind::MalformedInput, "instances are [n, delta] pairs");
            c.instances.emplace_back(pair[0].get<int>(), pair[1].get<int>());
        }
        for (const auto& s : j.at("seeds"))
            c.seeds.push_back(s.get<std::uint64_t>());
        if (j.contains("p_red")) {
            c.p_red.clear();
            for (const auto& p : j.at("p_red")) {
                if (p.is_string() && p.get<std::string>() == "extremal")
                    c.p_red.push_back(std::nullopt);
                else
                    c.p_red.push_back(p.get<double>());
            }
        }
        if (j.contains("modes")) {
            c.modes.clear();
            for (const auto& m : j.at("modes")) {
                const auto s = m.get<std::string>();
                if (s == "weak")
                    c.modes.push_back(TilingMode::Weak);
                else if (s == "strong")
                    c.modes.push_back(TilingMode::Strong);
                else
                    throw Error(ErrorKind::MalformedInput, "unknown mode '" + s + "'");
            }
        }
        if (j.contains("solver")) {
            const auto s = j.at("solver").get<std::string>();
            if (s != "exact" && s != "heuristic")
                throw Error(ErrorKind::MalformedInput, "solver must be exact or heuristic");
            c.exact = s == "exact";
        }
        if (j.contains("method"))
            c.method = parse_part_method(j.at("method").get<std::string>());
        if (j.contains("budget"))
            c.budget = j.at("budget").get<std::uint64_t>();
        if (j.contains("iters"))
            c.iters = j.at("iters").get<std::size_t>();
        if (j.contains("gamma"))
            c.gamma = detail::json_rational(j.at("gamma"));
        if (j.contains("beta"))
            c.beta = detail::json_rational(j.at("beta"));
        if (j.contains("eps"))
            c.eps = detail::json_rational(j.at("eps"));
        if (j.contains("C_F2"))
            c.c_f2 = detail::json_rational(j.at("C_F2"));
        if (j.contains("out"))
            c.out = j.at("out").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::MalformedInput, std::string("bad config field: ") + e.what());
    }
    for (auto [n, delta] : c.instances)
        if (n < 2 || delta >= n || 2 * delta < n)
            throw Error(ErrorKind::ParameterOutOfRange,
                        "instance (" + std::to_string(n) + ", " + std::to_string(delta) + ") needs n/2 <= delta < n");
    for (const auto& p : c.p_red)
        if (p && !(*p >= 0.0 && *p <= 1.0))
            throw Error(ErrorKind::ParameterOutOfRange, "p_red values must lie in [0, 1]");
    if (c.seeds.empty())
        throw Error(ErrorKind::MalformedInput, "at least one seed is required");
    if (c.gamma < 0)
        throw Error(ErrorKind::ParameterOutOfRange, "gamma must be non-negative");
    return c;
}

struct ExperimentRow {
    int n = 0;
    int delta = 0; // achieved minimum degree of the instance
    std::uint64_t seed = 0;
    std::optional<double> p_red;
    TilingMode mode = TilingMode::Weak;
    std::size_t size = 0;
    bool exact = false;
    BoundReport bounds;
    double runtime_ms = 0;
};

inline const char* kExperimentCsvHeader =
    "n,delta,seed,size,exact,thm3_lower,remarkA_upper,bft_weak,runtime_ms,mode,p_red";

inline void write_csv_row(std::ostream& out, const ExperimentRow& r)
{
    out << r.n << ',' << r.delta << ',' << r.seed << ',' << r.size << ',' << (r.exact ? "true" : "false") << ','
        << to_string(r.bounds.lower) << ',' << to_string(r.bounds.construction_upper) << ','
        << to_string(r.bounds.dense_weak) << ',' << r.runtime_ms << ',' << mode_name(r.mode) << ',';
    if (r.p_red)
        out << *r.p_red;
    else
        out << "extremal";
    out << '\n';
}

/// Runs the grid; rows come back in grid order regardless of thread count.
inline std::vector<ExperimentRow> run_experiment(const ExperimentConfig& c, unsigned threads = 1)
{
    struct Job {
        int n, delta;
        std::uint64_t seed;
        std::optional<double> p_red;
    };
    std::vector<Job> jobs;
    for (auto [n, delta] : c.instances)
        for (auto seed : c.seeds)
            for (auto p : c.p_red)
                jobs.push_back({n, delta, seed, p});
    std::vector<std::vector<ExperimentRow>> results(jobs.size());
    std::atomic<std::size_t> next{0};
    std::mutex failure_mutex;
    std::exception_ptr failure;
    auto run_job = [&](std::size_t i) {
        const Job& job = jobs[i];
        auto inst = extremal_instance(job.n, job.delta, c.method, job.seed);
        ColoredGraph g = job.p_red ? random_coloring(inst.colored_graph.graph(), *job.p_red, derive_seed(job.seed, 77))
                                   : inst.colored_graph;
        for (TilingMode mode : c.modes) {
            const auto start = std::chrono::steady_clock::now();
            ExperimentRow row;
            row.n = g.order();
            row.delta = g.min_degree();
            row.seed = job.seed;
            row.p_red = job.p_red;
            row.mode = mode;
            if (c.exact) {
                auto r = max_mono_tiling_exact(g, mode, c.budget);
                row.size = r.tiling.size();
                row.exact = r.exact;
            } else {
                row.size = heuristic_tiling(g, mode, c.iters, job.seed).size();
                row.exact = false;
            }
            row.bounds = bound_table(row.n, row.delta, c.gamma);
            row.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            results[i].push_back(row);
        }
    };
    auto worker = [&] {
        try {
            for (std::size_t i = next++; i < jobs.size(); i = next++)
                run_job(i);
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure)
                failure = std::current_exception();
            next = jobs.size();
        }
    };
    threads = std::max(1u, threads);
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
    std::vector<ExperimentRow> rows;
    for (auto& r : results)
        rows.insert(rows.end(), r.begin(), r.end());
    return rows;
}

} // namespace mtt

#endif
