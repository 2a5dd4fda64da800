#include "happycol/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <set>
#include <sstream>

#include "happycol/errors.hpp"
#include "happycol/happiness.hpp"
#include "happycol/rng.hpp"
#include "happycol/theory.hpp"

namespace happycol {

namespace {

const std::vector<std::string> kAlgorithms = {"greedy", "ngc", "lmc", "growth", "community"};

std::string shortest(double x) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

struct RunSpec {
    SbmParams params;
    Fraction rho;
};

/// Expands the config into one RunSpec per instance. Grid mode pairs each
/// instance with every rho; random mode draws one rho per instance, so the
/// rho list here has a single entry.
struct Plan {
    std::vector<std::pair<SbmParams, std::vector<Fraction>>> instances;
};

Plan plan_grid(const ExperimentConfig& config) {
    Plan plan;
    std::uint64_t counter = 0;
    for (const auto n : config.n_values)
        for (const auto k : config.k_values)
            for (const auto p : config.p_values) {
                std::vector<double> qs;
                if (config.q_factor > 0.0) {
                    qs.push_back(config.q_factor * p);
                } else {
                    for (const auto q : config.q_values)
                        if (q <= p / 2.0) qs.push_back(q);
                }
                for (const auto q : qs)
                    for (const auto pcc : config.pcc_values)
                        for (std::int64_t j = 0; j < config.instances_per_cell; ++j) {
                            SbmParams params{n, k, p, q, pcc, config.base_seed + counter};
                            ++counter;
                            plan.instances.emplace_back(params, config.rho_values);
                        }
            }
    return plan;
}

Plan plan_random(const ExperimentConfig& config) {
    Plan plan;
    for (std::int64_t i = 0; i < config.runs; ++i) {
        SplitMix64 rng(config.base_seed + static_cast<std::uint64_t>(i));
        SbmParams params;
        params.n = config.n_values[rng.next_below(config.n_values.size())];
        params.k = config.k_values[rng.next_below(config.k_values.size())];
        params.p = config.p_values.empty() ? 1.0 - rng.next_double()
                                           : config.p_values[rng.next_below(config.p_values.size())];
        if (config.q_factor > 0.0) {
            params.q = config.q_factor * params.p;
        } else if (!config.q_values.empty()) {
            std::vector<double> fits;
            for (const auto q : config.q_values)
                if (q <= params.p / 2.0) fits.push_back(q);
            if (fits.empty())
                throw ParameterError("no q value fits q <= p/2 for p = " + shortest(params.p));
            params.q = fits[rng.next_below(fits.size())];
        } else {
            params.q = (1.0 - rng.next_double()) * params.p / 2.0;
        }
        params.pcc = config.pcc_values[rng.next_below(config.pcc_values.size())];
        const Fraction rho = config.rho_values.empty()
                                 ? Fraction::from_double(1.0 - rng.next_double())
                                 : config.rho_values[rng.next_below(config.rho_values.size())];
        params.seed = rng.next_u64();
        plan.instances.emplace_back(params, std::vector<Fraction>{rho});
    }
    return plan;
}

struct RowKey {
    std::string algo;
    std::int64_t n = 0;
    Colour k = 0;
    double p = 0;
    double q = 0;
    std::int64_t pcc = 0;
    std::uint64_t seed = 0;
    double rho = 0;

    auto tie() const { return std::tie(algo, n, k, p, q, pcc, seed, rho); }
    bool operator<(const RowKey& other) const { return tie() < other.tie(); }
};

std::vector<std::string> split_fields(const std::string& row) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(row);
    while (std::getline(in, field, ',')) fields.push_back(field);
    return fields;
}

bool parse_row_key(const std::string& row, RowKey& key) {
    const auto fields = split_fields(row);
    if (fields.size() != 16) return false;
    try {
        key.algo = fields[0];
        key.n = std::stoll(fields[1]);
        key.k = static_cast<Colour>(std::stol(fields[2]));
        key.p = std::stod(fields[3]);
        key.q = std::stod(fields[4]);
        key.pcc = std::stoll(fields[5]);
        key.seed = std::stoull(fields[6]);
        key.rho = std::stod(fields[7]);
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

std::string key_prefix(const std::string& row) {
    std::size_t commas = 0;
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (row[i] == ',' && ++commas == 8) return row.substr(0, i);
    }
    return row;
}

} // namespace

void validate(const ExperimentConfig& config) {
    if (config.n_values.empty()) throw ParameterError("experiment needs at least one n");
    if (config.k_values.empty()) throw ParameterError("experiment needs at least one k");
    if (config.pcc_values.empty()) throw ParameterError("experiment needs at least one pcc");
    if (config.algorithms.empty()) throw ParameterError("experiment needs at least one algorithm");
    for (const auto& algo : config.algorithms)
        if (std::find(kAlgorithms.begin(), kAlgorithms.end(), algo) == kAlgorithms.end())
            throw ParameterError("unknown algorithm '" + algo + "'");

    if (config.q_factor > 0.0) {
        if (config.q_factor > 0.5) throw ParameterError("q factor must not exceed 1/2 (q <= p/2)");
        if (!config.q_values.empty()) throw ParameterError("give either q values or a q factor, not both");
    }
    for (const auto p : config.p_values)
        if (!(p > 0.0) || p > 1.0) throw ParameterError("p must lie in (0, 1]");
    const double p_max = config.p_values.empty()
                             ? 1.0
                             : *std::max_element(config.p_values.begin(), config.p_values.end());
    for (const auto q : config.q_values) {
        if (!(q > 0.0)) throw ParameterError("q must be positive");
        if (q > p_max / 2.0)
            throw ParameterError("q = " + shortest(q) + " exceeds p/2 for every configured p");
    }
    for (const auto& rho : config.rho_values)
        if (Fraction::of(1, 1) < rho) throw ParameterError("rho must lie in [0, 1]");

    if (config.random_mode) {
        if (config.runs < 1) throw ParameterError("random mode needs runs >= 1");
    } else {
        if (config.instances_per_cell < 1) throw ParameterError("grid mode needs instances_per_cell >= 1");
        if (config.p_values.empty()) throw ParameterError("grid mode needs explicit p values");
        if (config.q_values.empty() && config.q_factor <= 0.0)
            throw ParameterError("grid mode needs q values or a q factor");
        if (config.rho_values.empty()) throw ParameterError("grid mode needs explicit rho values");
        for (const auto n : config.n_values)
            for (const auto k : config.k_values) {
                if (k < 2 || k > n) throw ParameterError("k must satisfy 2 <= k <= n");
                for (const auto pcc : config.pcc_values)
                    if (pcc < 0 || pcc > n / k) throw ParameterError("pcc must lie in 0..floor(n/k)");
            }
    }
}

SolveResult run_algorithm(const std::string& name, const Instance& instance, const SolverConfig& config) {
    if (name == "greedy") return greedy_soft_mhv(instance.graph, instance.precolouring, config);
    if (name == "ngc") return ngc(instance.graph, instance.precolouring, config);
    if (name == "lmc") return lmc(instance.graph, instance.precolouring, config);
    if (name == "growth") return growth_soft_mhv(instance.graph, instance.precolouring, config);
    if (name == "community") {
        const auto start = std::chrono::steady_clock::now();
        SolveResult result;
        result.colouring = induced_colouring(instance.communities);
        result.happy_count = happy_count(instance.graph, result.colouring, config.rho);
        result.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - start)
                                .count();
        return result;
    }
    throw ParameterError("unknown algorithm '" + name + "'");
}

std::vector<EvalRecord> run_experiment(const ExperimentConfig& config, const ResultHook& hook) {
    validate(config);
    const Plan plan = config.random_mode ? plan_random(config) : plan_grid(config);

    std::vector<EvalRecord> records;
    for (const auto& [params, rhos] : plan.instances) {
        validate(params);
        const Instance instance = make_instance(params);
        for (const auto& rho : rhos) {
            for (const auto& algo : config.algorithms) {
                SolverConfig solver_config{rho, subseed(params.seed, 1), config.time_limit_ms,
                                           config.deterministic};
                const SolveResult result = run_algorithm(algo, instance, solver_config);
                EvalRecord record = evaluate(instance.graph, instance.communities, instance.precolouring,
                                             result, rho, params, algo);
                if (config.deterministic) record.elapsed_ms = 0;
                if (hook) hook(record, result);
                records.push_back(std::move(record));
            }
        }
    }
    return records;
}

void run_experiment_to_csv(const ExperimentConfig& config) {
    validate(config);
    if (config.out_path.empty()) throw ParameterError("experiment needs an output path");

    std::set<std::string> done;
    std::vector<std::string> rows;
    if (std::filesystem::exists(config.out_path)) {
        std::ifstream in(config.out_path);
        if (!in) throw IoError("cannot open " + config.out_path.string());
        std::string line;
        bool first = true;
        while (std::getline(in, line)) {
            if (first) {
                first = false;
                if (line == csv_header()) continue;
            }
            RowKey key;
            if (!parse_row_key(line, key)) continue; // torn or foreign line
            done.insert(key_prefix(line));
            rows.push_back(line);
        }
    }

    std::ofstream out(config.out_path, std::ios::app);
    if (!out) throw IoError("cannot open " + config.out_path.string() + " for writing");
    if (done.empty() && rows.empty() && out.tellp() == 0) out << csv_header() << "\n";

    const Plan plan = config.random_mode ? plan_random(config) : plan_grid(config);
    for (const auto& [params, rhos] : plan.instances) {
        validate(params);
        // Skip generating the instance when every row of it is done already.
        bool all_done = true;
        std::vector<EvalRecord> keys;
        for (const auto& rho : rhos)
            for (const auto& algo : config.algorithms) {
                EvalRecord probe;
                probe.algo = algo;
                probe.params = params;
                probe.rho = rho;
                if (!done.count(csv_key(probe))) all_done = false;
            }
        if (all_done) continue;

        const Instance instance = make_instance(params);
        for (const auto& rho : rhos) {
            for (const auto& algo : config.algorithms) {
                EvalRecord probe;
                probe.algo = algo;
                probe.params = params;
                probe.rho = rho;
                if (done.count(csv_key(probe))) continue;
                SolverConfig solver_config{rho, subseed(params.seed, 1), config.time_limit_ms,
                                           config.deterministic};
                const SolveResult result = run_algorithm(algo, instance, solver_config);
                EvalRecord record = evaluate(instance.graph, instance.communities, instance.precolouring,
                                             result, rho, params, algo);
                if (config.deterministic) record.elapsed_ms = 0;
                const std::string row = csv_row(record);
                out << row << "\n";
                out.flush();
                rows.push_back(row);
                done.insert(csv_key(record));
            }
        }
    }
    out.close();

    // Canonical order: sort by the identifying key, then rewrite atomically.
    std::sort(rows.begin(), rows.end(), [](const std::string& a, const std::string& b) {
        RowKey ka, kb;
        const bool pa = parse_row_key(a, ka);
        const bool pb = parse_row_key(b, kb);
        if (pa != pb) return pa;
        if (pa && pb && !(ka.tie() == kb.tie())) return ka < kb;
        return a < b;
    });
    const auto tmp = config.out_path.string() + ".tmp";
    {
        std::ofstream fin(tmp, std::ios::binary | std::ios::trunc);
        if (!fin) throw IoError("cannot open " + tmp + " for writing");
        fin << csv_header() << "\n";
        for (const auto& row : rows) fin << row << "\n";
        fin.flush();
        if (!fin) throw IoError("write failed for " + tmp);
    }
    std::filesystem::rename(tmp, config.out_path);
}

std::string csv_header() {
    return "algo,n,k,p,q,pcc,seed,rho,happy_count,happy_ratio,complete_happy,"
           "community_accuracy,elapsed_ms,timed_out,xi,rho_below_xi";
}

std::string csv_key(const EvalRecord& r) {
    std::ostringstream out;
    out << r.algo << "," << r.params.n << "," << r.params.k << "," << shortest(r.params.p) << ","
        << shortest(r.params.q) << "," << r.params.pcc << "," << r.params.seed << ","
        << shortest(r.rho.value());
    return out.str();
}

std::string csv_row(const EvalRecord& r) {
    std::ostringstream out;
    out << csv_key(r) << "," << r.happy_count << "," << shortest(r.happy_ratio) << ","
        << bool_str(r.complete_happy) << "," << shortest(r.community_accuracy) << "," << r.elapsed_ms
        << "," << bool_str(r.timed_out) << "," << shortest(r.xi) << "," << bool_str(r.rho_below_xi);
    return out.str();
}

} // namespace happycol
