// SPDX-License-Identifier: MIT
#pragma once

#include "zxgopt/anneal.hpp"
#include "zxgopt/circuit.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace zxgopt {

/// Machine-readable run report (schema 1). Deterministic for fixed inputs
/// and seed except for the wall_time_s field.
nlohmann::json build_optimize_report(const std::string& input_file, const Circuit& input,
                                     const OptimizationResult& res, const AnnealConfig& cfg,
                                     const std::string& verified, bool include_trace);

struct BenchRow {
    std::string name;
    int qubits = 0;
    int gates_before = 0;
    int two_qubit_before = 0;
    int gates_after = 0;       // from the median-2q run
    int two_qubit_after = 0;   // median over seeds
    int two_qubit_best = 0;
    std::vector<int> per_seed_two_qubit;
    double reduction = 0.0;    // (before - median) / before
    double wall_time_s = 0.0;
    std::string error;         // nonempty when the file failed
};

nlohmann::json build_bench_report(const std::string& corpus_dir, const std::vector<BenchRow>& rows,
                                  const AnnealConfig& cfg, int runs, double mean_reduction);

std::string bench_rows_csv(const std::vector<BenchRow>& rows);

} // namespace zxgopt
