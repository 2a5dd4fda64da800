#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "happycol/dimacs.hpp"
#include "happycol/errors.hpp"
#include "happycol/experiment.hpp"
#include "happycol/happiness.hpp"
#include "happycol/metrics.hpp"
#include "happycol/rng.hpp"
#include "happycol/solvers.hpp"
#include "happycol/theory.hpp"

namespace {

using namespace happycol;
using nlohmann::json;

/// Relative output paths are resolved under $HAPPYCOL_OUT_DIR when set.
std::filesystem::path resolve_out(const std::string& path) {
    std::filesystem::path p(path);
    if (p.is_relative()) {
        if (const char* dir = std::getenv("HAPPYCOL_OUT_DIR"); dir && *dir) return std::filesystem::path(dir) / p;
    }
    return p;
}

std::vector<double> parse_doubles(const std::vector<std::string>& items) {
    std::vector<double> out;
    for (const auto& s : items) out.push_back(std::stod(s));
    return out;
}

json record_json(const EvalRecord& r) {
    return json{{"algo", r.algo},
                {"n", r.params.n},
                {"k", r.params.k},
                {"p", r.params.p},
                {"q", r.params.q},
                {"pcc", r.params.pcc},
                {"seed", r.params.seed},
                {"rho", r.rho.value()},
                {"happy_count", r.happy_count},
                {"happy_ratio", r.happy_ratio},
                {"complete_happy", r.complete_happy},
                {"community_accuracy", r.community_accuracy},
                {"elapsed_ms", r.elapsed_ms},
                {"timed_out", r.timed_out},
                {"xi", r.xi},
                {"rho_below_xi", r.rho_below_xi}};
}

void write_record(const std::filesystem::path& path, const EvalRecord& record) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << csv_header() << "\n" << csv_row(record) << "\n";
    if (!out) throw IoError("write failed for " + path.string());
}

void write_json(const std::filesystem::path& path, const json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << j.dump(2) << "\n";
    if (!out) throw IoError("write failed for " + path.string());
}

void print_record(const EvalRecord& r) {
    std::cout << "algo " << r.algo << "\n"
              << "happy_count " << r.happy_count << "\n"
              << "happy_ratio " << r.happy_ratio << "\n"
              << "complete_happy " << (r.complete_happy ? "true" : "false") << "\n"
              << "community_accuracy " << r.community_accuracy << "\n"
              << "elapsed_ms " << r.elapsed_ms << "\n"
              << "timed_out " << (r.timed_out ? "true" : "false") << "\n"
              << "xi " << r.xi << "\n"
              << "rho_below_xi " << (r.rho_below_xi ? "true" : "false") << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"soft happy colouring toolkit: SBM instances, heuristics, thresholds"};
    app.require_subcommand(1);

    // ---- generate ----
    auto* generate = app.add_subcommand("generate", "sample an SBM instance and write it to a file");
    SbmParams gen_params;
    std::string gen_out;
    generate->add_option("--n", gen_params.n, "vertex count")->required();
    generate->add_option("--k", gen_params.k, "community count")->required();
    generate->add_option("--p", gen_params.p, "intra-community edge probability")->required();
    generate->add_option("--q", gen_params.q, "inter-community edge probability")->required();
    generate->add_option("--pcc", gen_params.pcc, "precoloured vertices per community");
    generate->add_option("--seed", gen_params.seed, "instance seed");
    generate->add_option("--out", gen_out, "output instance path")->required();
    generate->callback([&] {
        const Instance instance = make_instance(gen_params);
        const auto path = resolve_out(gen_out);
        write_instance(path, instance);
        std::cout << "wrote " << path.string() << " (n=" << instance.graph.vertex_count()
                  << " m=" << instance.graph.edge_count() << ")\n";
    });

    // ---- solve ----
    auto* solve = app.add_subcommand("solve", "run one algorithm on an instance file");
    std::string solve_in, solve_algo, solve_rho_text, solve_out, solve_json;
    std::optional<std::uint64_t> solve_seed;
    std::int64_t solve_time_limit = 0;
    bool solve_deterministic = false;
    solve->add_option("--in", solve_in, "instance path")->required();
    solve->add_option("--algo", solve_algo, "one of greedy|ngc|lmc|growth|community|oracle")->required();
    solve->add_option("--rho", solve_rho_text, "happiness proportion, e.g. 0.5")->required();
    solve->add_option("--seed", solve_seed, "solver seed (default: derived from the instance seed)");
    solve->add_option("--time-limit-ms", solve_time_limit, "wall-clock limit, 0 = unlimited");
    solve->add_flag("--deterministic", solve_deterministic, "lowest-id/lowest-colour tie-breaking");
    solve->add_option("--out", solve_out, "write the result row as CSV");
    solve->add_option("--json", solve_json, "write the result as JSON");
    solve->callback([&] {
        const Instance instance = read_instance(solve_in);
        const Fraction rho = Fraction::parse(solve_rho_text);
        SolverConfig config{rho, solve_seed.value_or(subseed(instance.params.seed, 1)), solve_time_limit,
                            solve_deterministic};
        SolveResult result;
        if (solve_algo == "oracle") {
            const auto start = std::chrono::steady_clock::now();
            OracleResult oracle = exact_oracle(instance.graph, instance.precolouring, rho);
            result.colouring = std::move(oracle.colouring);
            result.happy_count = oracle.max_happy;
            result.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                    std::chrono::steady_clock::now() - start)
                                    .count();
        } else {
            result = run_algorithm(solve_algo, instance, config);
        }
        EvalRecord record = evaluate(instance.graph, instance.communities, instance.precolouring, result,
                                     rho, instance.params, solve_algo);
        if (solve_deterministic) record.elapsed_ms = 0;
        print_record(record);
        if (!solve_out.empty()) write_record(resolve_out(solve_out), record);
        if (!solve_json.empty()) write_json(resolve_out(solve_json), record_json(record));
    });

    // ---- thresholds ----
    auto* thresholds = app.add_subcommand("thresholds", "closed-form thresholds for G(n,k,p,q)");
    double th_n = 0, th_k = 0, th_p = 0, th_q = 0, th_rho = 0;
    std::optional<double> th_epsilon;
    std::string th_json;
    thresholds->add_option("--n", th_n, "vertex count")->required();
    thresholds->add_option("--k", th_k, "community count")->required();
    thresholds->add_option("--p", th_p, "intra-community edge probability")->required();
    thresholds->add_option("--q", th_q, "inter-community edge probability")->required();
    thresholds->add_option("--rho", th_rho, "happiness proportion")->required();
    thresholds->add_option("--epsilon", th_epsilon, "probability budget (default n^-2)");
    thresholds->add_option("--json", th_json, "write the report as JSON");
    thresholds->callback([&] {
        const ThresholdReport report = threshold_report(th_n, th_k, th_p, th_q, th_rho, th_epsilon);
        std::cout << "n " << th_n << "\n"
                  << "k " << th_k << "\n"
                  << "p " << th_p << "\n"
                  << "q " << th_q << "\n"
                  << "rho " << th_rho << "\n"
                  << "epsilon_used " << report.epsilon_used << "\n"
                  << "expected_degree " << report.expected_degree << "\n"
                  << "phi " << report.phi << "\n"
                  << "epsilon_tilde " << report.epsilon_tilde << "\n"
                  << "prob_lower_bound " << report.prob_lower_bound << "\n"
                  << "inequality_holds " << (report.inequality_holds ? "true" : "false") << "\n"
                  << "xi " << report.xi << "\n"
                  << "xi_tilde " << report.xi_tilde << "\n";
        if (!th_json.empty()) {
            write_json(resolve_out(th_json), json{{"n", th_n},
                                                  {"k", th_k},
                                                  {"p", th_p},
                                                  {"q", th_q},
                                                  {"rho", th_rho},
                                                  {"epsilon_used", report.epsilon_used},
                                                  {"expected_degree", report.expected_degree},
                                                  {"phi", report.phi},
                                                  {"epsilon_tilde", report.epsilon_tilde},
                                                  {"prob_lower_bound", report.prob_lower_bound},
                                                  {"inequality_holds", report.inequality_holds},
                                                  {"xi", report.xi},
                                                  {"xi_tilde", report.xi_tilde}});
        }
    });

    // ---- experiment ----
    auto* experiment = app.add_subcommand("experiment", "run a sweep and append rows to a CSV");
    ExperimentConfig config;
    std::vector<std::string> exp_p, exp_q, exp_rho;
    std::string exp_out;
    experiment->add_option("--n", config.n_values, "vertex counts")->required()->delimiter(',');
    experiment->add_option("--k", config.k_values, "community counts")->required()->delimiter(',');
    experiment->add_option("--p", exp_p, "intra probabilities")->delimiter(',');
    auto* q_opt = experiment->add_option("--q", exp_q, "inter probabilities")->delimiter(',');
    experiment->add_option("--q-factor", config.q_factor, "q = factor * p")->excludes(q_opt);
    experiment->add_option("--pcc", config.pcc_values, "precoloured vertices per community")
        ->required()
        ->delimiter(',');
    experiment->add_option("--rho", exp_rho, "happiness proportions")->delimiter(',');
    experiment->add_option("--instances", config.instances_per_cell, "instances per grid cell");
    std::optional<std::int64_t> exp_runs;
    experiment->add_option("--runs", exp_runs, "random mode: number of randomly drawn instances");
    experiment->add_option("--seed", config.base_seed, "base seed; run i uses base+i");
    experiment->add_option("--time-limit-ms", config.time_limit_ms, "per-solve wall clock limit");
    experiment->add_option("--algos", config.algorithms, "of greedy,ngc,lmc,growth,community")
        ->required()
        ->delimiter(',');
    experiment->add_flag("--deterministic", config.deterministic, "byte-stable output rows");
    experiment->add_option("--out", exp_out, "CSV output path")->required();
    experiment->callback([&] {
        config.p_values = parse_doubles(exp_p);
        config.q_values = parse_doubles(exp_q);
        for (const auto& r : exp_rho) config.rho_values.push_back(Fraction::parse(r));
        if (exp_runs) {
            config.random_mode = true;
            config.runs = *exp_runs;
        }
        config.out_path = resolve_out(exp_out);
        run_experiment_to_csv(config);
        std::ifstream in(config.out_path);
        std::size_t lines = 0;
        std::string line;
        while (std::getline(in, line)) ++lines;
        std::cout << "wrote " << config.out_path.string() << " (" << (lines > 0 ? lines - 1 : 0)
                  << " rows)\n";
    });

    // ---- oracle ----
    auto* oracle = app.add_subcommand("oracle", "exhaustive optimum for a small instance file");
    std::string oracle_in, oracle_rho_text, oracle_out;
    oracle->add_option("--in", oracle_in, "instance path")->required();
    oracle->add_option("--rho", oracle_rho_text, "happiness proportion")->required();
    oracle->add_option("--out", oracle_out, "write the result row as CSV");
    oracle->callback([&] {
        const Instance instance = read_instance(oracle_in);
        const Fraction rho = Fraction::parse(oracle_rho_text);
        const auto start = std::chrono::steady_clock::now();
        OracleResult best = exact_oracle(instance.graph, instance.precolouring, rho);
        SolveResult result;
        result.colouring = std::move(best.colouring);
        result.happy_count = best.max_happy;
        result.elapsed_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                .count();
        const EvalRecord record = evaluate(instance.graph, instance.communities, instance.precolouring,
                                           result, rho, instance.params, "oracle");
        std::cout << "max_happy " << record.happy_count << "\n";
        print_record(record);
        if (!oracle_out.empty()) write_record(resolve_out(oracle_out), record);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1; // validation failure
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const OracleRefusal& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
