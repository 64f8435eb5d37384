// SPDX-License-Identifier: MIT
#include "zxgopt/report.hpp"

#include <sstream>

namespace zxgopt {

using nlohmann::json;

namespace {

json params_json(const AnnealConfig& cfg) {
    return json{{"temperature", cfg.initial_temperature},
                {"cooling", cfg.cooling},
                {"iters_per_level", cfg.iters_per_level},
                {"patience", cfg.patience},
                {"min_groups", cfg.min_groups},
                {"lookahead_k", cfg.lookahead.k},
                {"samples_per_step", cfg.lookahead.j},
                {"lookahead_patience", cfg.lookahead.p}};
}

} // namespace

json build_optimize_report(const std::string& input_file, const Circuit& input,
                           const OptimizationResult& res, const AnnealConfig& cfg,
                           const std::string& verified, bool include_trace) {
    const CostReport in_stats = gate_stats(input);
    const CostReport& out_stats = res.best_report;
    const double reduction =
        in_stats.two_qubit_count > 0
            ? static_cast<double>(in_stats.two_qubit_count - out_stats.two_qubit_count) /
                  static_cast<double>(in_stats.two_qubit_count)
            : 0.0;
    json j{{"schema", 1},
           {"input",
            {{"file", input_file},
             {"qubits", input.n_qubits},
             {"gates", in_stats.total_count},
             {"two_qubit", in_stats.two_qubit_count}}},
           {"output",
            {{"gates", out_stats.total_count},
             {"two_qubit", out_stats.two_qubit_count},
             {"reduction_ratio", reduction}}},
           {"params", params_json(cfg)},
           {"seed", cfg.seed},
           {"iterations", res.iterations},
           {"wall_time_s", res.wall_time_s},
           {"verified", verified}};
    if (include_trace) {
        json trace = json::array();
        for (const IterationRecord& r : res.trace) {
            trace.push_back(json{{"iteration", r.iteration},
                                 {"temperature", r.temperature},
                                 {"groups", r.n_groups},
                                 {"candidate_two_qubit", r.candidate_two_qubit},
                                 {"delta", r.delta},
                                 {"accepted", r.accepted},
                                 {"best_two_qubit", r.best_two_qubit}});
        }
        j["trace"] = std::move(trace);
    }
    return j;
}

json build_bench_report(const std::string& corpus_dir, const std::vector<BenchRow>& rows,
                        const AnnealConfig& cfg, int runs, double mean_reduction) {
    json jrows = json::array();
    for (const BenchRow& r : rows) {
        json row{{"name", r.name},
                 {"qubits", r.qubits},
                 {"gates_before", r.gates_before},
                 {"two_qubit_before", r.two_qubit_before},
                 {"gates_after", r.gates_after},
                 {"two_qubit_after_median", r.two_qubit_after},
                 {"two_qubit_best", r.two_qubit_best},
                 {"per_seed_two_qubit", r.per_seed_two_qubit},
                 {"reduction", r.reduction},
                 {"wall_time_s", r.wall_time_s}};
        if (!r.error.empty()) row["error"] = r.error;
        jrows.push_back(std::move(row));
    }
    return json{{"schema", 1},
                {"corpus", corpus_dir},
                {"runs", runs},
                {"params", params_json(cfg)},
                {"seed", cfg.seed},
                {"rows", std::move(jrows)},
                {"aggregate", {{"mean_two_qubit_reduction", mean_reduction}}}};
}

std::string bench_rows_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream os;
    os << "name,qubits,gates_before,two_qubit_before,gates_after,two_qubit_after_median,"
          "two_qubit_best,reduction,error\n";
    for (const BenchRow& r : rows) {
        os << r.name << ',' << r.qubits << ',' << r.gates_before << ',' << r.two_qubit_before
           << ',' << r.gates_after << ',' << r.two_qubit_after << ',' << r.two_qubit_best << ','
           << r.reduction << ',' << r.error << '\n';
    }
    return os.str();
}

} // namespace zxgopt
