#pragma once

#include <string>
#include <vector>

#include "complab/http_client.hpp"
#include "complab/logic_tasks.hpp"
#include "complab/rng.hpp"

namespace complab {

struct EvalRecord {
    std::string instance_id;
    int replication = 0;
    std::string raw_response;
    std::string prediction;  // normalized
    double score = 0.0;
    std::string metric;
    double latency_ms = 0.0;
    bool ok = true;
    std::string error;
};

struct SettingSummary {
    std::string task_pair;
    std::string setting;
    double mean = 0.0;
    long scored = 0;
    long failures = 0;
};

struct RunReport {
    std::string dataset_path;
    std::string dataset_sha256;
    std::string model;
    std::string metric;
    int replications = 0;
    std::vector<SettingSummary> rows;
};

struct RunOptions {
    int replications = 3;
    std::string records_path;  // EvalRecord JSONL, optional
    std::string report_path;   // report CSV, optional
};

/// Trim, cut at the first newline, and drop a leading "output:" prefix.
/// The raw response is kept verbatim in the record.
std::string normalize_prediction(const std::string& raw);

/**
 * Scores every instance of a JSONL dataset against an endpoint, one pass per
 * replication (replications differ by the demonstration resampling seed),
 * with bounded concurrent requests. Failures are recorded per instance and
 * flagged in the per-setting rows.
 */
RunReport run_experiment(const std::string& dataset_jsonl, const ModelEndpoint& endpoint,
                         ResponseCache* cache, const std::string& metric,
                         const RunOptions& options, std::vector<EvalRecord>* records_out = nullptr);

/// Deterministic CSV: task_pair,setting,model,metric,mean,replications.
std::string report_csv(const std::vector<RunReport>& reports);
std::vector<RunReport> parse_report_csv(const std::string& csv);

/// Rows = (task_pair, setting), columns = models, integer percentages.
std::string report_markdown(const std::vector<RunReport>& reports);

std::string records_to_jsonl(const std::vector<EvalRecord>& records);

}  // namespace complab
