// Command-line entry point: dataset generation, theory experiments,
// endpoint evaluation and report assembly.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "complab/chain_grammar.hpp"
#include "complab/composition.hpp"
#include "complab/harness.hpp"
#include "complab/logic_tasks.hpp"
#include "complab/serialize.hpp"

namespace {

using namespace complab;

bool is_linguistic(const std::string& pair) { return pair == "T1" || pair == "T2"; }

int cmd_generate(const std::string& pair, const std::string& setting_name_arg, int n, int k,
                 std::uint64_t seed, bool instruction, const std::string& out) {
    const Setting setting = setting_from_name(setting_name_arg);
    std::vector<PromptInstance> data;
    if (is_linguistic(pair)) {
        LingGenerateOptions opt;
        if (n > 0) opt.n = n;
        opt.k = k;
        data = generate_linguistic_dataset(pair, setting, opt, seed);
    } else {
        GenerateOptions opt;
        if (n > 0) opt.n = n;
        opt.k = k;
        opt.with_instruction = instruction;
        data = generate_dataset(composite_rule(pair), setting, opt, seed);
    }
    if (out.empty()) {
        std::cout << to_jsonl(data);
    } else {
        write_jsonl(data, out);
        std::cerr << "wrote " << data.size() << " instances to " << out << " (sha256 "
                  << sha256_file(out) << ")\n";
    }
    return 0;
}

struct TheoryOptions {
    int d1 = 2, d2 = 2;
    std::vector<double> spectrum1{1.0, 1.0}, spectrum2{1.0, 1.0};
    double epsilon = 0.0;
    double delta = 0.0;
    int examples_per_task = 40;
    int trials = 2000;
    int scaling_N = 16;
    int alignment_N = 100;
    long alignment_trials = 100000;
    std::uint64_t seed = 0;
};

TheoryOptions theory_from_json(const nlohmann::json& j) {
    TheoryOptions o;
    o.d1 = j.value("d1", o.d1);
    o.d2 = j.value("d2", o.d2);
    o.spectrum1 = j.value("spectrum1", o.spectrum1);
    o.spectrum2 = j.value("spectrum2", o.spectrum2);
    o.epsilon = j.value("epsilon", o.epsilon);
    o.delta = j.value("delta", o.delta);
    o.examples_per_task = j.value("examples_per_task", o.examples_per_task);
    o.trials = j.value("trials", o.trials);
    o.scaling_N = j.value("scaling_N", o.scaling_N);
    o.alignment_N = j.value("alignment_N", o.alignment_N);
    o.alignment_trials = j.value("alignment_trials", o.alignment_trials);
    o.seed = j.value("seed", o.seed);
    return o;
}

ExperimentConfig experiment_config(const TheoryOptions& o) {
    ExperimentConfig cfg;
    cfg.space.d = o.d1 + o.d2;
    cfg.space.K = 2;
    std::vector<int> first(o.d1), second(o.d2);
    for (int i = 0; i < o.d1; ++i) first[i] = i;
    for (int i = 0; i < o.d2; ++i) second[i] = o.d1 + i;
    cfg.space.active_sets = {first, second};
    cfg.cov = make_block_covariance(o.d1, o.d2, o.spectrum1, o.spectrum2, o.epsilon, o.seed);
    cfg.examples_per_task = o.examples_per_task;
    cfg.delta = o.delta;
    cfg.trials = o.trials;
    cfg.seed = o.seed;
    return cfg;
}

std::string csv_row(const std::string& experiment, const std::string& key, double mean,
                    double std_err, long trials, std::uint64_t seed) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%s,%s,%.10g,%.10g,%ld,%llu\n", experiment.c_str(),
                  key.c_str(), mean, std_err, trials,
                  static_cast<unsigned long long>(seed));
    return buf;
}

int cmd_theory(const TheoryOptions& o, const std::vector<std::string>& experiments,
               const std::string& out) {
    std::string csv = "experiment,r_or_setting,mean,std_err,trials,seed\n";
    auto wants = [&](const std::string& name) {
        return experiments.empty() ||
               std::find(experiments.begin(), experiments.end(), name) != experiments.end();
    };
    const ExperimentConfig cfg = experiment_config(o);

    if (wants("confined")) {
        const TripleResult r = run_confined_experiment(cfg);
        csv += csv_row("confined", "S_k", r.first_only.mean, r.first_only.std_err,
                       r.first_only.trials, o.seed);
        csv += csv_row("confined", "S_g", r.second_only.mean, r.second_only.std_err,
                       r.second_only.trials, o.seed);
        csv += csv_row("confined", "S_union", r.unioned.mean, r.unioned.std_err,
                       r.unioned.trials, o.seed);
        csv += csv_row("confined", "sum_minus_union", r.sum_minus_union, r.combined_std_err,
                       r.unioned.trials, o.seed);
        std::cerr << "confined: inequality " << (r.inequality_ok ? "holds" : "VIOLATED")
                  << ", union accuracy " << r.unioned.mean << "\n";
    }
    if (wants("overlap")) {
        const TripleResult r = run_overlap_experiment(cfg);
        csv += csv_row("overlap", "S_k", r.first_only.mean, r.first_only.std_err,
                       r.first_only.trials, o.seed);
        csv += csv_row("overlap", "S_g", r.second_only.mean, r.second_only.std_err,
                       r.second_only.trials, o.seed);
        csv += csv_row("overlap", "S_union", r.unioned.mean, r.unioned.std_err,
                       r.unioned.trials, o.seed);
        csv += csv_row("overlap", "parallel_cosine", overlap_parallelism_cosine(cfg, o.seed),
                       0.0, 1, o.seed);
    }
    if (wants("scaling")) {
        for (const ScalingPoint& p : scaling_bound_curve(cfg.cov, o.scaling_N)) {
            csv += csv_row("scaling_bound", std::to_string(p.r), p.bound, 0.0, 0, o.seed);
            csv += csv_row("scaling_display_truncated", std::to_string(p.r),
                           p.truncated_display, 0.0, 0, o.seed);
        }
    }
    if (wants("alignment")) {
        const AlignmentEstimate a =
            estimate_alignment(cfg.cov, o.alignment_N, o.alignment_trials, o.seed);
        csv += csv_row("alignment_empirical", "-", a.empirical_inner, a.std_err, a.trials,
                       o.seed);
        csv += csv_row("alignment_analytic", "-", a.analytic_trace, 0.0, 0, o.seed);
    }
    if (wants("case-study")) {
        const CaseStudyResult r = run_case_study();
        const char* names[3] = {"setting1", "setting2", "setting3"};
        for (int s = 0; s < 3; ++s)
            for (int k = 0; k < 2; ++k)
                csv += csv_row("case_study_sign",
                               std::string(names[s]) + "_y" + std::to_string(k + 1),
                               r.sign_patterns[s][k], 0.0, 1, o.seed);
    }

    if (out.empty())
        std::cout << csv;
    else
        write_file(out, csv);
    return 0;
}

int cmd_eval(const std::string& dataset, const std::string& endpoint_config,
             const std::string& metric, int replications, const std::string& records,
             const std::string& report_path, const std::string& cache_dir) {
    const ModelEndpoint endpoint = load_endpoint(endpoint_config);
    std::optional<ResponseCache> cache;
    if (!cache_dir.empty()) cache.emplace(cache_dir);
    RunOptions options;
    options.replications = replications;
    options.records_path = records;
    options.report_path = report_path;
    const RunReport report = run_experiment(dataset, endpoint, cache ? &*cache : nullptr,
                                            metric, options);
    std::cout << report_csv({report});
    long failures = 0;
    for (const auto& row : report.rows) failures += row.failures;
    if (failures > 0) {
        std::cerr << failures << " scoring failures; see the records file\n";
        return 1;
    }
    return 0;
}

int cmd_report(const std::vector<std::string>& inputs, const std::string& out,
               const std::string& merged_csv) {
    std::vector<RunReport> reports;
    for (const auto& path : inputs) {
        const auto parsed = parse_report_csv(read_file(path));
        reports.insert(reports.end(), parsed.begin(), parsed.end());
    }
    const std::string md = report_markdown(reports);
    if (out.empty())
        std::cout << md;
    else
        write_file(out, md);
    if (!merged_csv.empty()) write_file(merged_csv, report_csv(reports));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"composition lab: synthetic benchmarks, theory checks, model evaluation"};
    app.require_subcommand(1);

    // generate
    std::string pair, setting = "composite", out;
    int n = -1, k = 10;
    std::uint64_t seed = 0;
    bool instruction = false;
    auto* gen = app.add_subcommand("generate", "emit a benchmark dataset as JSONL");
    gen->add_option("--pair", pair, "task pair (A+B, A+C, A+F, B+D, B+E, D+F, G+H, T1, T2)")
        ->required();
    gen->add_option("--setting", setting,
                    "simple1 | simple2 | composite | composite-in-context");
    gen->add_option("--n", n, "instances (default 100 logical, 800 linguistic)");
    gen->add_option("--k", k, "demonstrations per instance");
    gen->add_option("--seed", seed, "generation seed");
    gen->add_flag("--instruction", instruction, "prepend the symbol-legend instruction");
    gen->add_option("--out", out, "output path (stdout when omitted)");

    // theory
    std::string theory_config, theory_out;
    std::vector<std::string> experiments;
    TheoryOptions topt;
    auto* theory = app.add_subcommand("theory", "run the attention-theory experiments");
    theory->add_option("--config", theory_config, "JSON experiment config");
    theory->add_option("--experiments", experiments,
                       "subset of confined,overlap,scaling,alignment,case-study")
        ->delimiter(',');
    auto* trials_opt = theory->add_option("--trials", topt.trials, "Monte Carlo trials");
    auto* seed_opt = theory->add_option("--seed", topt.seed, "experiment seed");
    auto* n_opt = theory->add_option("--n", topt.examples_per_task,
                                     "in-context examples per task");
    theory->add_option("--out", theory_out, "CSV output path (stdout when omitted)");

    // eval
    std::string dataset, endpoint_config, metric = "exact_match", records, report_path,
                cache_dir;
    int replications = 3;
    auto* eval = app.add_subcommand("eval", "score a dataset against an endpoint");
    eval->add_option("--dataset", dataset, "dataset JSONL path")->required();
    eval->add_option("--endpoint-config", endpoint_config, "endpoint JSON path")->required();
    eval->add_option("--metric", metric, "exact_match | wer");
    eval->add_option("--replications", replications, "replications (default 3)");
    eval->add_option("--records", records, "write per-instance records JSONL here");
    eval->add_option("--report", report_path, "write the report CSV here");
    eval->add_option("--cache", cache_dir, "response cache directory");

    // report
    std::vector<std::string> report_inputs;
    std::string report_out, merged_csv;
    auto* rep = app.add_subcommand("report", "merge run CSVs into a table");
    rep->add_option("inputs", report_inputs, "run CSV files")->required();
    rep->add_option("--out", report_out, "markdown output path (stdout when omitted)");
    rep->add_option("--csv", merged_csv, "also write the merged CSV here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_generate(pair, setting, n, k, seed, instruction, out);
        if (theory->parsed()) {
            TheoryOptions o = topt;
            if (!theory_config.empty()) {
                o = theory_from_json(nlohmann::json::parse(read_file(theory_config)));
                // Explicit flags win over the config file.
                if (trials_opt->count()) o.trials = topt.trials;
                if (seed_opt->count()) o.seed = topt.seed;
                if (n_opt->count()) o.examples_per_task = topt.examples_per_task;
            }
            return cmd_theory(o, experiments, theory_out);
        }
        if (eval->parsed())
            return cmd_eval(dataset, endpoint_config, metric, replications, records,
                            report_path, cache_dir);
        if (rep->parsed()) return cmd_report(report_inputs, report_out, merged_csv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
