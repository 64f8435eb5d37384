// SPDX-License-Identifier: MIT
#include "zxgopt/anneal.hpp"
#include "zxgopt/qasm.hpp"
#include "zxgopt/report.hpp"
#include "zxgopt/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace fs = std::filesystem;
using namespace zxgopt;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitInternal = 3;

void add_param_flags(CLI::App* app, AnnealConfig& cfg) {
    app->add_option("-k,--lookahead", cfg.lookahead.k, "Lookahead depth k")->check(CLI::PositiveNumber);
    app->add_option("--samples-per-step", cfg.lookahead.j, "Candidates sampled per lookahead step")
        ->check(CLI::PositiveNumber);
    app->add_option("--min-groups", cfg.min_groups, "Minimum group count b")->check(CLI::PositiveNumber);
    app->add_option("--temperature", cfg.initial_temperature, "Initial annealing temperature");
    app->add_option("--cooling", cfg.cooling, "Geometric cooling factor");
    app->add_option("--iters-per-level", cfg.iters_per_level, "Iterations per temperature level")
        ->check(CLI::PositiveNumber);
    app->add_option("--patience", cfg.patience, "Non-improving levels before stopping")
        ->check(CLI::PositiveNumber);
    app->add_option("--seed", cfg.seed, "Master random seed");
    app->add_option("--max-iters", cfg.max_total_iters,
                    "Total iteration cap (0 disables optimization)");
}

OptimizationResult run_once(const Circuit& input, AnnealConfig cfg) {
    if (cfg.max_total_iters == 0) {
        OptimizationResult res;
        res.best_circuit = input;
        res.best_report = gate_stats(input);
        return res;
    }
    return anneal(input, cfg);
}

int cmd_optimize(const std::string& input_path, const std::string& output_path,
                 const std::string& report_path, AnnealConfig cfg, int runs, bool verify,
                 bool with_trace) {
    QasmResult parsed;
    try {
        parsed = read_qasm_file(input_path);
    } catch (const QasmError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    if (parsed.inexact_angles)
        std::cerr << "warning: rz angle(s) rounded to rational multiples of pi\n";

    try {
        OptimizationResult best;
        bool have = false;
        const std::uint64_t base_seed = cfg.seed;
        for (int r = 0; r < runs; ++r) {
            AnnealConfig run_cfg = cfg;
            run_cfg.seed = base_seed + static_cast<std::uint64_t>(r);
            OptimizationResult res = run_once(parsed.circuit, run_cfg);
            if (!have || res.best_report.two_qubit_count < best.best_report.two_qubit_count) {
                best = std::move(res);
                have = true;
            }
        }

        std::string verified = "structural";
        if (verify && parsed.circuit.n_qubits <= kDefaultOracleQubitLimit) {
            const auto eq = equivalent(parsed.circuit, best.best_circuit, 1e-8);
            if (eq == Equivalence::NotEquivalent) {
                std::cerr << "internal error: optimized circuit failed the equivalence oracle\n";
                return kExitInternal;
            }
            if (eq == Equivalence::Equivalent) verified = "unitary";
        }

        if (!output_path.empty()) write_qasm_file(best.best_circuit, output_path);
        const nlohmann::json report =
            build_optimize_report(input_path, parsed.circuit, best, cfg, verified, with_trace);
        if (!report_path.empty()) {
            std::ofstream out(report_path, std::ios::binary);
            out << report.dump(2) << "\n";
        } else {
            std::cout << report.dump(2) << "\n";
        }
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

int cmd_bench(const std::string& corpus_dir, const std::string& csv_path,
              const std::string& report_path, AnnealConfig cfg, int runs) {
    std::vector<fs::path> files;
    try {
        for (const auto& entry : fs::directory_iterator(corpus_dir))
            if (entry.path().extension() == ".qasm") files.push_back(entry.path());
    } catch (const std::exception& e) {
        std::cerr << "error: cannot read corpus directory: " << e.what() << "\n";
        return kExitParse;
    }
    std::sort(files.begin(), files.end());

    std::vector<BenchRow> rows;
    double reduction_sum = 0.0;
    int reduction_count = 0;
    for (const fs::path& f : files) {
        BenchRow row;
        row.name = f.stem().string();
        try {
            const QasmResult parsed = read_qasm_file(f.string());
            const CostReport before = gate_stats(parsed.circuit);
            row.qubits = parsed.circuit.n_qubits;
            row.gates_before = before.total_count;
            row.two_qubit_before = before.two_qubit_count;

            std::vector<std::pair<int, int>> outcomes; // (two_qubit, total)
            double wall = 0.0;
            for (int r = 0; r < runs; ++r) {
                AnnealConfig run_cfg = cfg;
                run_cfg.seed = cfg.seed + static_cast<std::uint64_t>(r);
                const OptimizationResult res = run_once(parsed.circuit, run_cfg);
                outcomes.push_back({res.best_report.two_qubit_count, res.best_report.total_count});
                row.per_seed_two_qubit.push_back(res.best_report.two_qubit_count);
                wall += res.wall_time_s;
            }
            row.wall_time_s = wall;
            std::vector<std::pair<int, int>> sorted = outcomes;
            std::sort(sorted.begin(), sorted.end());
            const auto median = sorted[sorted.size() / 2];
            row.two_qubit_after = median.first;
            row.gates_after = median.second;
            row.two_qubit_best = sorted.front().first;
            row.reduction = row.two_qubit_before > 0
                                ? static_cast<double>(row.two_qubit_before - row.two_qubit_after) /
                                      static_cast<double>(row.two_qubit_before)
                                : 0.0;
            reduction_sum += row.reduction;
            ++reduction_count;
            std::cout << row.name << ": 2q " << row.two_qubit_before << " -> "
                      << row.two_qubit_after << " (median of " << runs << ")\n";
        } catch (const std::exception& e) {
            row.error = e.what();
            std::cerr << row.name << ": failed: " << e.what() << "\n";
        }
        rows.push_back(std::move(row));
    }

    const double mean_reduction = reduction_count ? reduction_sum / reduction_count : 0.0;
    std::cout << "mean two-qubit reduction: " << mean_reduction << "\n";

    if (!csv_path.empty()) {
        std::ofstream out(csv_path, std::ios::binary);
        out << bench_rows_csv(rows);
    }
    const nlohmann::json report = build_bench_report(corpus_dir, rows, cfg, runs, mean_reduction);
    if (!report_path.empty()) {
        std::ofstream out(report_path, std::ios::binary);
        out << report.dump(2) << "\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ZX-calculus two-qubit gate optimizer"};
    app.require_subcommand(1);

    AnnealConfig cfg;
    std::string input_path, output_path, report_path, corpus_dir, csv_path;
    int runs = 1;
    int bench_runs = 5;
    bool verify = false, with_trace = false;

    CLI::App* opt = app.add_subcommand("optimize", "Optimize one OpenQASM 2.0 circuit");
    opt->add_option("--input", input_path, "Input QASM file")->required();
    opt->add_option("--output", output_path, "Optimized QASM output path");
    opt->add_option("--report", report_path, "JSON report path (stdout when omitted)");
    opt->add_option("--runs", runs, "Independent seeds; the best result is kept")
        ->check(CLI::PositiveNumber);
    opt->add_flag("--verify", verify, "Run the unitary equivalence oracle (<= 10 qubits)");
    opt->add_flag("--trace", with_trace, "Embed the per-iteration trace in the report");
    add_param_flags(opt, cfg);

    CLI::App* bench = app.add_subcommand("bench", "Optimize a corpus directory of QASM files");
    bench->add_option("--corpus", corpus_dir, "Directory of .qasm files")->required();
    bench->add_option("--csv", csv_path, "CSV summary output path");
    bench->add_option("--report", report_path, "JSON report path");
    bench->add_option("--runs", bench_runs, "Seeds per circuit (median reported)")
        ->check(CLI::PositiveNumber);
    add_param_flags(bench, cfg);

    CLI11_PARSE(app, argc, argv);

    if (opt->parsed())
        return cmd_optimize(input_path, output_path, report_path, cfg, runs, verify, with_trace);
    if (bench->parsed())
        return cmd_bench(corpus_dir, csv_path, report_path, cfg, bench_runs);
    return kExitOk;
}
