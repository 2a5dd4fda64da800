#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "happycol/dimacs.hpp"
#include "happycol/fraction.hpp"
#include "happycol/metrics.hpp"

namespace happycol {

/// Sweep description. Grid mode takes the cartesian product of the value
/// lists and generates `instances_per_cell` graphs per cell; random mode
/// draws each run's parameters uniformly (from a list when given, otherwise
/// from the documented continuous range: p in (0,1], q in (0,p/2], rho in
/// (0,1]). Run i derives its randomness from base_seed + i.
struct ExperimentConfig {
    bool random_mode = false;
    std::int64_t runs = 0;                 // random mode: number of instances
    std::vector<std::int64_t> n_values;
    std::vector<Colour> k_values;
    std::vector<double> p_values;          // random mode: empty = continuous
    std::vector<double> q_values;          // empty = use q_factor or continuous
    double q_factor = 0.0;                 // q = q_factor * p when > 0
    std::vector<std::int64_t> pcc_values;
    std::vector<Fraction> rho_values;      // random mode: empty = continuous
    std::int64_t instances_per_cell = 1;   // grid mode
    std::uint64_t base_seed = 0;
    std::int64_t time_limit_ms = 40000;
    std::vector<std::string> algorithms;   // of {greedy, ngc, lmc, growth, community}
    bool deterministic = false;
    std::filesystem::path out_path;
};

void validate(const ExperimentConfig& config);

/// Runs one named algorithm on an instance. "community" evaluates the
/// colouring induced by the ground-truth communities.
SolveResult run_algorithm(const std::string& name, const Instance& instance, const SolverConfig& config);

using ResultHook = std::function<void(const EvalRecord&, const SolveResult&)>;

/// Runs the whole sweep in memory. Deterministic mode zeroes elapsed_ms in
/// the records so that serialised results are byte-stable.
std::vector<EvalRecord> run_experiment(const ExperimentConfig& config, const ResultHook& hook = {});

/// Runs the sweep into config.out_path as CSV. Rows already present in the
/// file are skipped, new rows are appended and flushed as they finish, and
/// on success the file is rewritten in canonical (sorted) order via a
/// temporary file. Malformed (torn) trailing lines are dropped on resume.
void run_experiment_to_csv(const ExperimentConfig& config);

std::string csv_header();
std::string csv_row(const EvalRecord& record);

/// The identifying prefix "algo,n,k,p,q,pcc,seed,rho" of a CSV row.
std::string csv_key(const EvalRecord& record);

} // namespace happycol
