#include "complab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "complab/chain_grammar.hpp"
#include "complab/metrics.hpp"
#include "complab/serialize.hpp"

namespace complab {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

bool is_logical_pair(const std::string& task_pair) {
    const auto& pairs = supported_pairs();
    return std::find(pairs.begin(), pairs.end(), task_pair) != pairs.end();
}

std::vector<Demonstration> demos_for_replication(const PromptInstance& instance, int rep) {
    if (rep == 0) return instance.demonstrations;
    if (is_logical_pair(instance.task_pair)) return resample_demonstrations(instance, rep);
    if (instance.task_pair == "T1" || instance.task_pair == "T2")
        return resample_linguistic_demonstrations(instance, rep);
    return instance.demonstrations;  // foreign dataset: replications share demos
}

double score_prediction(const std::string& metric, const std::string& prediction,
                        const std::vector<std::string>& gold) {
    if (metric == "exact_match") return exact_match(prediction, gold);
    if (metric == "wer") {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& g : gold) best = std::min(best, word_error_rate(prediction, g));
        return best;
    }
    throw std::invalid_argument("unknown metric '" + metric + "'");
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

}  // namespace

std::string normalize_prediction(const std::string& raw) {
    std::string text = raw;
    const auto nl = text.find('\n');
    if (nl != std::string::npos) {
        // Prefer the first non-empty line so leading blank lines don't hide
        // the answer.
        std::istringstream in(text);
        std::string line;
        text.clear();
        while (std::getline(in, line)) {
            if (!trim(line).empty()) {
                text = line;
                break;
            }
        }
    }
    text = trim(text);
    if (text.rfind("output:", 0) == 0) text = trim(text.substr(7));
    return text;
}

RunReport run_experiment(const std::string& dataset_jsonl, const ModelEndpoint& endpoint,
                         ResponseCache* cache, const std::string& metric,
                         const RunOptions& options, std::vector<EvalRecord>* records_out) {
    if (options.replications < 1)
        throw std::invalid_argument("run_experiment: replications >= 1");
    if (metric != "exact_match" && metric != "wer")
        throw std::invalid_argument("run_experiment: metric must be exact_match or wer");
    const auto instances = read_jsonl(dataset_jsonl);
    if (instances.empty()) throw std::invalid_argument("run_experiment: empty dataset");

    CompletionClient client(endpoint, cache);

    struct Job {
        size_t instance = 0;
        int rep = 0;
    };
    std::vector<Job> jobs;
    jobs.reserve(instances.size() * options.replications);
    for (int rep = 0; rep < options.replications; ++rep)
        for (size_t i = 0; i < instances.size(); ++i) jobs.push_back({i, rep});

    std::vector<EvalRecord> records(jobs.size());
    std::atomic<size_t> next{0};
    const int workers = std::max(1, std::min<int>(endpoint.max_concurrency,
                                                  static_cast<int>(jobs.size())));
    auto worker = [&] {
        for (;;) {
            const size_t j = next.fetch_add(1);
            if (j >= jobs.size()) return;
            const Job job = jobs[j];
            const PromptInstance& base = instances[job.instance];
            EvalRecord rec;
            rec.instance_id = base.id;
            rec.replication = job.rep;
            rec.metric = metric;
            try {
                PromptInstance inst = base;
                inst.demonstrations = demos_for_replication(base, job.rep);
                const std::string prompt = render_prompt(inst);
                const CompletionResult res = client.complete(prompt);
                rec.raw_response = res.text;
                rec.latency_ms = res.latency_ms;
                rec.prediction = normalize_prediction(res.text);
                rec.score = score_prediction(metric, rec.prediction, inst.gold);
            } catch (const std::exception& e) {
                rec.ok = false;
                rec.error = e.what();
            }
            records[j] = std::move(rec);
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    // Aggregate per (task_pair, setting) over all replications.
    std::map<std::pair<std::string, std::string>, SettingSummary> rows;
    for (size_t j = 0; j < jobs.size(); ++j) {
        const PromptInstance& inst = instances[jobs[j].instance];
        auto& row = rows[{inst.task_pair, inst.setting}];
        row.task_pair = inst.task_pair;
        row.setting = inst.setting;
        if (records[j].ok) {
            row.mean += records[j].score;
            row.scored += 1;
        } else {
            row.failures += 1;
        }
    }
    RunReport report;
    report.dataset_path = dataset_jsonl;
    report.dataset_sha256 = sha256_file(dataset_jsonl);
    report.model = endpoint.model;
    report.metric = metric;
    report.replications = options.replications;
    for (auto& [key, row] : rows) {
        if (row.scored > 0) row.mean /= row.scored;
        report.rows.push_back(row);
    }

    if (records_out) *records_out = records;
    if (!options.records_path.empty()) write_file(options.records_path, records_to_jsonl(records));
    if (!options.report_path.empty()) write_file(options.report_path, report_csv({report}));
    return report;
}

std::string report_csv(const std::vector<RunReport>& reports) {
    std::string out = "task_pair,setting,model,metric,mean,replications\n";
    struct Line {
        std::string task_pair, setting, model, metric;
        double mean;
        int replications;
    };
    std::vector<Line> lines;
    for (const auto& r : reports)
        for (const auto& row : r.rows)
            lines.push_back({row.task_pair, row.setting, r.model, r.metric, row.mean,
                             r.replications});
    std::sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) {
        return std::tie(a.task_pair, a.setting, a.model) <
               std::tie(b.task_pair, b.setting, b.model);
    });
    for (const auto& l : lines)
        out += l.task_pair + "," + l.setting + "," + l.model + "," + l.metric + "," +
               format_double(l.mean) + "," + std::to_string(l.replications) + "\n";
    return out;
}

std::vector<RunReport> parse_report_csv(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    if (!std::getline(in, line) || line != "task_pair,setting,model,metric,mean,replications")
        throw std::invalid_argument("parse_report_csv: bad header");
    // One report per (model, metric, replications) triple.
    std::map<std::tuple<std::string, std::string, int>, RunReport> by_model;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::istringstream ls(line);
        std::string field;
        while (std::getline(ls, field, ',')) fields.push_back(field);
        if (fields.size() != 6) throw std::invalid_argument("parse_report_csv: bad row");
        const auto key = std::make_tuple(fields[2], fields[3], std::stoi(fields[5]));
        auto& report = by_model[key];
        report.model = fields[2];
        report.metric = fields[3];
        report.replications = std::stoi(fields[5]);
        SettingSummary row;
        row.task_pair = fields[0];
        row.setting = fields[1];
        row.mean = std::stod(fields[4]);
        report.rows.push_back(row);
    }
    std::vector<RunReport> out;
    for (auto& [key, report] : by_model) out.push_back(std::move(report));
    return out;
}

std::string report_markdown(const std::vector<RunReport>& reports) {
    std::vector<std::string> models;
    std::map<std::pair<std::string, std::string>, std::map<std::string, double>> cells;
    for (const auto& r : reports) {
        if (std::find(models.begin(), models.end(), r.model) == models.end())
            models.push_back(r.model);
        for (const auto& row : r.rows) cells[{row.task_pair, row.setting}][r.model] = row.mean;
    }
    std::sort(models.begin(), models.end());

    std::string out = "| task | setting |";
    for (const auto& m : models) out += " " + m + " |";
    out += "\n|---|---|";
    for (size_t i = 0; i < models.size(); ++i) out += "---|";
    out += "\n";
    for (const auto& [key, by_model] : cells) {
        out += "| " + key.first + " | " + key.second + " |";
        for (const auto& m : models) {
            const auto it = by_model.find(m);
            if (it == by_model.end()) {
                out += " - |";
            } else {
                out += " " + std::to_string(static_cast<long>(std::lround(it->second * 100.0))) +
                       " |";
            }
        }
        out += "\n";
    }
    return out;
}

std::string records_to_jsonl(const std::vector<EvalRecord>& records) {
    std::string out;
    for (const auto& r : records) {
        nlohmann::json j{{"id", r.instance_id},     {"replication", r.replication},
                         {"raw_response", r.raw_response}, {"prediction", r.prediction},
                         {"score", r.score},        {"metric", r.metric},
                         {"latency_ms", r.latency_ms},     {"ok", r.ok},
                         {"error", r.error}};
        out += j.dump();
        out += '\n';
    }
    return out;
}

}  // namespace complab
