#ifndef MTT_CLI_HPP
#define MTT_CLI_HPP

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mtt/error.hpp"
#include "mtt/experiment.hpp"
#include "mtt/generators.hpp"
#include "mtt/io.hpp"
#include "mtt/report.hpp"
#include "mtt/theory.hpp"
#include "mtt/tiling.hpp"

namespace mtt {

namespace cli_detail {

inline std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::MalformedInput, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void spill(const std::string& path, const std::string& text, bool append = false)
{
    std::ofstream out(path, append ? std::ios::app : std::ios::trunc);
    if (!out)
        throw Error(ErrorKind::MalformedInput, "cannot write '" + path + "'");
    out << text;
}

inline ColoredGraph load_colored(const std::string& path)
{
    std::istringstream in(slurp(path));
    return read_colored_graph(in);
}

inline Graph load_graph(const std::string& path)
{
    std::istringstream in(slurp(path));
    return read_graph(in);
}

inline TilingMode parse_mode(const std::string& s)
{
    if (s == "weak")
        return TilingMode::Weak;
    if (s == "strong")
        return TilingMode::Strong;
    throw Error(ErrorKind::MalformedInput, "mode must be weak or strong");
}

inline Graph named_graph(const std::string& name)
{
    if (name == "F2" || name == "bowtie")
        return bowtie_graph();
    if (name == "K2")
        return complete_graph(2);
    if (name == "K3")
        return complete_graph(3);
    if (name == "C5")
        return cycle_graph(5);
    if (name == "petersen")
        return petersen_graph();
    throw Error(ErrorKind::MalformedInput, "unknown named graph '" + name + "'");
}

} // namespace cli_detail

/// Command-line front end. Exit codes: 0 success, 1 invalid input (or an invalid
/// tiling for `verify`), 2 internal assertion failure.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr)
{
    using namespace cli_detail;
    CLI::App app{"Monochromatic triangle tilings of 2-edge-coloured graphs", "mtt"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "write an instance file and its .meta sidecar");
    bool gen_extremal = false, gen_random = false, gen_five = false;
    int gen_n = 0, gen_delta = 0, gen_m = 0;
    double gen_p_edge = 0.5, gen_p_red = 0.5, gen_density = 1.0;
    std::uint64_t gen_seed = 0;
    std::string gen_method = "catalog", gen_out;
    auto* kind = gen->add_option_group("kind");
    kind->add_flag("--extremal", gen_extremal, "two-colour extremal construction");
    kind->add_flag("--random", gen_random, "random G(n, p) with a random colouring");
    kind->add_flag("--five-part", gen_five, "blown-up bowtie with five parts");
    kind->require_option(1);
    gen->add_option("--n", gen_n, "vertex count");
    gen->add_option("--delta", gen_delta, "target minimum degree (extremal)");
    gen->add_option("--m", gen_m, "part size (five-part)");
    gen->add_option("--p-edge", gen_p_edge, "edge probability (random)");
    gen->add_option("--p-red", gen_p_red, "red probability (random, five-part)");
    gen->add_option("--density", gen_density, "pair density (five-part)");
    gen->add_option("--method", gen_method, "catalog or process (extremal parts)");
    gen->add_option("--seed", gen_seed, "seed")->required();
    gen->add_option("--out", gen_out, "instance path; metadata goes to <out>.meta")->required();

    // solve
    auto* solve = app.add_subcommand("solve", "maximum monochromatic triangle tiling with a JSON report");
    std::string solve_in, solve_out, solve_mode = "weak", solve_gamma = "0";
    bool solve_exact = false, solve_heuristic = false, solve_omit_runtime = false;
    std::uint64_t solve_budget = 50'000'000, solve_seed = 0;
    std::size_t solve_iters = 2000;
    unsigned solve_threads = 1;
    solve->add_option("--in", solve_in, "instance file")->required();
    auto* algo = solve->add_option_group("algorithm");
    algo->add_flag("--exact", solve_exact, "branch and bound (default)");
    auto* heur_flag = algo->add_flag("--heuristic", solve_heuristic, "greedy plus local search");
    algo->require_option(0, 1);
    solve->add_option("--mode", solve_mode, "weak or strong");
    solve->add_option("--budget", solve_budget, "node budget for the exact solver");
    solve->add_option("--iters", solve_iters, "local search iterations");
    auto* seed_opt = solve->add_option("--seed", solve_seed, "seed (required with --heuristic)");
    solve->add_option("--gamma", solve_gamma, "gamma term of the lower bound");
    solve->add_option("--out", solve_out, "report path (default stdout)");
    solve->add_option("--threads", solve_threads, "worker threads; never changes reported values");
    solve->add_flag("--omit-runtime", solve_omit_runtime, "leave out the runtime block");

    // verify
    auto* verify = app.add_subcommand("verify", "check a tiling against an instance");
    std::string ver_in, ver_tiling, ver_mode = "weak";
    verify->add_option("--in", ver_in, "instance file")->required();
    verify->add_option("--tiling", ver_tiling, "tiling: 'a b c r|b' lines or a JSON report")->required();
    verify->add_option("--mode", ver_mode, "weak or strong");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "evaluate the piecewise tiling bounds");
    int b_n = 0, b_delta = 0;
    std::string b_gamma = "0";
    bool b_json = false;
    bounds->add_option("--n", b_n, "vertex count")->required();
    bounds->add_option("--delta", b_delta, "minimum degree")->required();
    bounds->add_option("--gamma", b_gamma, "gamma term (rational)");
    bounds->add_flag("--json", b_json, "print JSON instead of key=value lines");

    // theory
    auto* theory = app.add_subcommand("theory", "chromatic parameters and F2 reduction diagnostics");
    theory->require_subcommand(1);
    auto* chrom = theory->add_subcommand("chromatic", "chi, sigma, chi_cr, hcf, chi* of a small graph");
    std::string th_graph, th_named, th_cf2 = "0", th_c;
    int th_k = 0, th_delta = 0;
    std::uint64_t th_budget = 5'000'000;
    bool th_tile = false;
    auto* chrom_src = chrom->add_option_group("source");
    chrom_src->add_option("--graph", th_graph, "uncoloured graph file");
    chrom_src->add_option("--named", th_named, "F2, K2, K3, C5 or petersen");
    chrom_src->require_option(1);
    auto* adm = theory->add_subcommand("admissible-c", "smallest admissible reduction constant C");
    adm->add_option("--k", th_k, "reduced graph order")->required();
    adm->add_option("--delta", th_delta, "reduced graph minimum degree")->required();
    adm->add_option("--cf2", th_cf2, "C_F2 constant (default 0)");
    auto* red = theory->add_subcommand("reduction", "auxiliary graph R' and optional perfect F2 tiling");
    red->add_option("--graph", th_graph, "base graph file")->required();
    red->add_option("--c", th_c, "constant C (default: admissible C)");
    red->add_option("--cf2", th_cf2, "C_F2 constant (default 0)");
    red->add_flag("--tile", th_tile, "search a perfect F2 tiling and classify it");
    red->add_option("--budget", th_budget, "F2 search node budget");

    // experiment
    auto* exp = app.add_subcommand("experiment", "seeded sweep writing CSV rows");
    std::string exp_config, exp_out;
    unsigned exp_threads = 1;
    exp->add_option("--config", exp_config, "JSON config")->required();
    exp->add_option("--out", exp_out, "CSV path (overrides the config)");
    exp->add_option("--threads", exp_threads, "worker threads; never changes reported values");

    std::vector<std::string> argv_store{"mtt"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store)
        argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 1;
    }

    try {
        if (*gen) {
            KeyValues meta;
            ColoredGraph g;
            meta["seed"] = std::to_string(gen_seed);
            if (gen_extremal) {
                auto inst = extremal_instance(gen_n, gen_delta, parse_part_method(gen_method), gen_seed);
                g = inst.colored_graph;
                meta = instance_metadata(inst);
            } else if (gen_random) {
                if (gen_n < 1)
                    throw Error(ErrorKind::ParameterOutOfRange, "--n must be positive");
                if (!(gen_p_edge >= 0 && gen_p_edge <= 1))
                    throw Error(ErrorKind::ParameterOutOfRange, "--p-edge must lie in [0, 1]");
                g = random_coloring(random_graph(gen_n, gen_p_edge, derive_seed(gen_seed, 0)), gen_p_red,
                                    derive_seed(gen_seed, 1));
                meta["kind"] = "random";
                meta["n"] = std::to_string(gen_n);
                meta["p_edge"] = std::to_string(gen_p_edge);
                meta["p_red"] = std::to_string(gen_p_red);
            } else {
                auto inst = five_part_instance(gen_m, gen_density, gen_p_red, gen_seed);
                g = inst.colored_graph;
                meta["kind"] = "five_part";
                meta["m"] = std::to_string(gen_m);
                meta["density"] = std::to_string(gen_density);
                meta["p_red"] = std::to_string(gen_p_red);
                for (std::size_t p = 0; p < kBowtiePairs.size(); ++p)
                    meta["pair_density." + std::to_string(kBowtiePairs[p].first + 1) +
                         std::to_string(kBowtiePairs[p].second + 1)] = to_string(inst.pair_density[p]);
            }
            std::ostringstream graph_text, meta_text;
            write_colored_graph(graph_text, g);
            write_key_values(meta_text, meta);
            spill(gen_out, graph_text.str());
            spill(gen_out + ".meta", meta_text.str());
            return 0;
        }

        if (*solve) {
            const bool heuristic = solve_heuristic && heur_flag->count() > 0;
            if (heuristic && seed_opt->count() == 0)
                throw Error(ErrorKind::MalformedInput, "--heuristic needs an explicit --seed");
            const TilingMode mode = parse_mode(solve_mode);
            const Rational gamma = parse_rational(solve_gamma);
            const ColoredGraph g = load_colored(solve_in);
            const auto start = std::chrono::steady_clock::now();
            Tiling tiling;
            bool exact = false;
            std::uint64_t nodes = 0;
            if (heuristic) {
                tiling = heuristic_tiling(g, mode, solve_iters, solve_seed);
            } else {
                auto r = max_mono_tiling_exact(g, mode, solve_budget);
                tiling = r.tiling;
                exact = r.exact;
                nodes = r.nodes_expanded;
            }
            const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            if (!verify_tiling(g, tiling))
                throw Error(ErrorKind::InternalInvariant, "solver returned an invalid tiling");
            std::optional<std::size_t> weak, strong;
            (mode == TilingMode::Weak ? weak : strong) = tiling.size();
            Json report = solve_report(g, mode, tiling, exact, nodes,
                                       bound_table(std::max(g.order(), 1), g.min_degree(), gamma, weak, strong));
            report["solver"] = heuristic ? "heuristic" : "exact";
            const std::string meta_path = solve_in + ".meta";
            if (std::filesystem::exists(meta_path)) {
                std::istringstream in(slurp(meta_path));
                auto meta = read_key_values(in);
                if (meta.count("certificate.bound")) {
                    Json cert;
                    for (const auto& [k, v] : meta)
                        if (k.rfind("certificate.", 0) == 0)
                            cert[k.substr(12)] = std::stoll(v);
                    report["certificate"] = cert;
                }
            }
            if (!solve_omit_runtime)
                report["runtime"] = Json{{"ms", ms}, {"threads", solve_threads}};
            const std::string text = report.dump(2) + "\n";
            if (solve_out.empty())
                out << text;
            else
                spill(solve_out, text);
            return 0;
        }

        if (*verify) {
            const ColoredGraph g = load_colored(ver_in);
            const TilingMode mode = parse_mode(ver_mode);
            const std::string text = slurp(ver_tiling);
            Tiling t;
            const auto first = text.find_first_not_of(" \t\r\n");
            if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) {
                try {
                    t = tiling_from_json(Json::parse(text), mode);
                } catch (const nlohmann::json::exception& e) {
                    throw Error(ErrorKind::MalformedInput, std::string("bad tiling JSON: ") + e.what());
                }
            } else {
                std::istringstream in(text);
                t.triangles = read_triangles(in);
                t.mode = mode;
            }
            if (auto why = tiling_violation(g, t)) {
                err << "invalid: " << *why << '\n';
                return 1;
            }
            out << "valid: " << t.size() << " triangles\n";
            return 0;
        }

        if (*bounds) {
            auto r = bound_table(b_n, b_delta, parse_rational(b_gamma));
            if (b_json) {
                Json j;
                j["n"] = r.n;
                j["delta"] = r.delta;
                j["bounds"] = to_json(r);
                out << j.dump(2) << '\n';
            } else {
                out << "n=" << r.n << '\n'
                    << "delta=" << r.delta << '\n'
                    << "gamma=" << to_string(r.gamma) << '\n'
                    << "thm3_lower=" << to_string(r.lower) << '\n'
                    << "remarkA_upper=" << to_string(r.construction_upper) << '\n'
                    << "bft_weak=" << to_string(r.dense_weak) << '\n';
            }
            return 0;
        }

        if (*theory) {
            Json j;
            const Rational c_f2 = parse_rational(th_cf2);
            if (*chrom) {
                const Graph h = th_named.empty() ? load_graph(th_graph) : named_graph(th_named);
                j["theory"]["chromatic"] = to_json(chromatic_parameters(h));
            } else if (*adm) {
                j["theory"]["admissible_C"] = to_string(admissible_C(th_k, th_delta, c_f2));
                j["theory"]["k"] = th_k;
                j["theory"]["delta"] = th_delta;
            } else {
                const Graph r = load_graph(th_graph);
                const Rational c = th_c.empty() ? admissible_C(r.order(), r.min_degree(), c_f2) : parse_rational(th_c);
                auto reduction = auxiliary_reduction(r, c, c_f2);
                j["theory"]["reduction"] = to_json(reduction);
                if (th_tile) {
                    auto tiling = f2_tiling_exact(reduction.aux, true, th_budget);
                    Json tj;
                    tj["perfect_found"] = tiling.perfect;
                    tj["search_complete"] = tiling.exact;
                    tj["nodes"] = tiling.nodes;
                    if (tiling.perfect)
                        tj["classification"] =
                            to_json(classify_f2_copies(tiling.copies, reduction.w, reduction.k, reduction.delta, c));
                    j["theory"]["f2_tiling"] = tj;
                }
            }
            j["theory"]["params"] = Json{{"C_F2", to_string(c_f2)}};
            out << j.dump(2) << '\n';
            return 0;
        }

        if (*exp) {
            auto config = parse_experiment_config(slurp(exp_config));
            if (!exp_out.empty())
                config.out = exp_out;
            if (config.out.empty())
                throw Error(ErrorKind::MalformedInput, "no CSV output path (config \"out\" or --out)");
            auto rows = run_experiment(config, exp_threads);
            std::ostringstream csv;
            const bool fresh = !std::filesystem::exists(config.out) || std::filesystem::file_size(config.out) == 0;
            if (fresh)
                csv << kExperimentCsvHeader << '\n';
            for (const auto& r : rows)
                write_csv_row(csv, r);
            spill(config.out, csv.str(), true);
            out << "wrote " << rows.size() << " rows to " << config.out << " (beta=" << to_string(config.beta)
                << ", eps=" << to_string(config.eps) << ", gamma=" << to_string(config.gamma)
                << ", C_F2=" << to_string(config.c_f2) << ")\n";
            return 0;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return is_internal(e.kind()) ? 2 : 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 2;
    }
    return 1;
}

} // namespace mtt

#endif
