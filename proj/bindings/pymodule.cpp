// Python bindings for the main operations: the Gaussian data model, the
// linear-attention engine, the composition experiments, the benchmark
// generators and the scoring metrics.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "complab/chain_grammar.hpp"
#include "complab/composition.hpp"
#include "complab/harness.hpp"
#include "complab/lexicon.hpp"
#include "complab/logic_tasks.hpp"
#include "complab/lsa.hpp"
#include "complab/metrics.hpp"
#include "complab/serialize.hpp"

namespace py = pybind11;
using namespace complab;

namespace {

SimpleRule rule_from_string(const std::string& s) {
    if (s.size() != 1) throw std::invalid_argument("rule must be a letter A..H");
    return rule_from_letter(s[0]);
}

std::vector<PromptInstance> py_generate(const std::string& pair, const std::string& setting,
                                        int n, int k, std::uint64_t seed,
                                        bool with_instruction) {
    const Setting s = setting_from_name(setting);
    if (pair == "T1" || pair == "T2") {
        LingGenerateOptions opt;
        if (n > 0) opt.n = n;
        opt.k = k;
        return generate_linguistic_dataset(pair, s, opt, seed);
    }
    GenerateOptions opt;
    if (n > 0) opt.n = n;
    opt.k = k;
    opt.with_instruction = with_instruction;
    return generate_dataset(composite_rule(pair), s, opt, seed);
}

}  // namespace

PYBIND11_MODULE(complab, m) {
    m.doc() = "composition lab: linear-attention theory checks and benchmark tooling";

    // ---- gaussian data model ------------------------------------------
    py::class_<CovarianceSpec>(m, "CovarianceSpec")
        .def(py::init([](Eigen::MatrixXd lambda, double epsilon) {
                 return make_covariance(std::move(lambda), epsilon);
             }),
             py::arg("lambda_matrix"), py::arg("epsilon") = std::numeric_limits<double>::infinity())
        .def_readonly("lambda_matrix", &CovarianceSpec::lambda)
        .def_readonly("epsilon", &CovarianceSpec::epsilon)
        .def_property_readonly("d", &CovarianceSpec::dim)
        .def("trace", &CovarianceSpec::trace)
        .def("sqrt_psd", &CovarianceSpec::sqrt_psd);

    py::class_<TaskSpace>(m, "TaskSpace")
        .def(py::init([](int d, std::vector<std::vector<int>> sets) {
                 TaskSpace s{d, static_cast<int>(sets.size()), std::move(sets)};
                 s.validate();
                 return s;
             }),
             py::arg("d"), py::arg("active_sets"))
        .def_readonly("d", &TaskSpace::d)
        .def_readonly("K", &TaskSpace::K)
        .def_readonly("active_sets", &TaskSpace::active_sets);

    py::class_<Prompt>(m, "Prompt")
        .def_readonly("xs", &Prompt::xs)
        .def_readonly("ys", &Prompt::ys)
        .def_readonly("query", &Prompt::query)
        .def_readonly("truth", &Prompt::truth);

    py::class_<PromptEmbedding>(m, "PromptEmbedding")
        .def_readonly("E", &PromptEmbedding::E)
        .def_readonly("d", &PromptEmbedding::d)
        .def_readonly("K", &PromptEmbedding::K)
        .def_property_readonly("examples", &PromptEmbedding::examples);

    m.def("make_block_covariance", &make_block_covariance, py::arg("d1"), py::arg("d2"),
          py::arg("spectrum1"), py::arg("spectrum2"), py::arg("epsilon"), py::arg("seed"));
    m.def(
        "sample_prompt",
        [](const CovarianceSpec& cov, const Eigen::MatrixXd& W, int N, std::uint64_t seed) {
            TaskWeights tw;
            tw.W = W;
            return sample_prompt(cov, tw, N, RngSeed(seed));
        },
        py::arg("cov"), py::arg("weights"), py::arg("n_examples"), py::arg("seed"));
    m.def("build_embedding", &build_embedding, py::arg("prompt"));

    // ---- linear self-attention engine ---------------------------------
    py::class_<GammaMatrix>(m, "GammaMatrix")
        .def_readonly("gamma", &GammaMatrix::gamma)
        .def_readonly("N", &GammaMatrix::N);

    py::class_<LsaParams>(m, "LsaParams")
        .def_readonly("d", &LsaParams::d)
        .def_readonly("K", &LsaParams::K)
        .def_readonly("w_pv", &LsaParams::w_pv)
        .def_readonly("w_kq", &LsaParams::w_kq);

    py::class_<ReparamPoint>(m, "ReparamPoint")
        .def(py::init([](Eigen::MatrixXd U, double u) {
                 ReparamPoint p;
                 p.U = std::move(U);
                 p.u = u;
                 return p;
             }),
             py::arg("U"), py::arg("u") = 1.0)
        .def_readonly("U", &ReparamPoint::U)
        .def_readonly("u", &ReparamPoint::u)
        .def_readonly("rank_budget", &ReparamPoint::rank_budget);

    py::class_<LossBreakdown>(m, "LossBreakdown")
        .def_readonly("loss", &LossBreakdown::loss)
        .def_readonly("min_loss", &LossBreakdown::min_loss)
        .def_readonly("gap", &LossBreakdown::gap);

    py::class_<PretrainConfig>(m, "PretrainConfig")
        .def(py::init([](int B, int N, int steps, double step_size) {
                 return PretrainConfig{B, N, steps, step_size};
             }),
             py::arg("B") = 1, py::arg("N") = 20, py::arg("steps") = 1000,
             py::arg("step_size") = 0.0)
        .def_readonly("N", &PretrainConfig::N)
        .def_readonly("steps", &PretrainConfig::steps);

    py::class_<DescentResult>(m, "DescentResult")
        .def_readonly("point", &DescentResult::point)
        .def_readonly("initial_loss", &DescentResult::initial_loss)
        .def_readonly("final_loss", &DescentResult::final_loss)
        .def_readonly("diverged", &DescentResult::diverged);

    m.def("compute_gamma", &compute_gamma, py::arg("cov"), py::arg("n_examples"));
    m.def("lsa_forward", &lsa_forward, py::arg("params"), py::arg("embedding"),
          py::arg("n_examples"));
    m.def("optimal_params", &optimal_params, py::arg("cov"), py::arg("n_examples"),
          py::arg("tasks"), py::arg("rank_budget"));
    m.def("refactored_loss", &refactored_loss, py::arg("point"), py::arg("cov"),
          py::arg("n_examples"));
    m.def("empirical_loss", &empirical_loss, py::arg("params"), py::arg("prompts"));
    m.def("fit_gradient_descent",
          [](const PretrainConfig& c, const CovarianceSpec& cov, std::uint64_t seed) {
              return fit_gradient_descent(c, cov, RngSeed(seed));
          },
          py::arg("config"), py::arg("cov"), py::arg("seed"));

    // ---- composition experiments ---------------------------------------
    py::class_<AccuracyEstimate>(m, "AccuracyEstimate")
        .def_readonly("mean", &AccuracyEstimate::mean)
        .def_readonly("std_err", &AccuracyEstimate::std_err)
        .def_readonly("trials", &AccuracyEstimate::trials);

    py::class_<ExperimentConfig>(m, "ExperimentConfig")
        .def(py::init([](TaskSpace space, CovarianceSpec cov, int examples_per_task,
                         double delta, int trials, std::uint64_t seed) {
                 return ExperimentConfig{std::move(space), std::move(cov), examples_per_task,
                                         delta, trials, RngSeed(seed)};
             }),
             py::arg("space"), py::arg("cov"), py::arg("examples_per_task") = 40,
             py::arg("delta") = 0.0, py::arg("trials") = 2000, py::arg("seed") = 0);

    py::class_<TripleResult>(m, "TripleResult")
        .def_readonly("first_only", &TripleResult::first_only)
        .def_readonly("second_only", &TripleResult::second_only)
        .def_readonly("unioned", &TripleResult::unioned)
        .def_readonly("sum_minus_union", &TripleResult::sum_minus_union)
        .def_readonly("combined_std_err", &TripleResult::combined_std_err)
        .def_readonly("inequality_ok", &TripleResult::inequality_ok);

    py::class_<AlignmentEstimate>(m, "AlignmentEstimate")
        .def_readonly("empirical_inner", &AlignmentEstimate::empirical_inner)
        .def_readonly("std_err", &AlignmentEstimate::std_err)
        .def_readonly("trials", &AlignmentEstimate::trials)
        .def_readonly("analytic_trace", &AlignmentEstimate::analytic_trace);

    m.def("sign_accuracy", &sign_accuracy, py::arg("prediction"), py::arg("truth"));
    m.def("check_compositional_ability", &check_compositional_ability, py::arg("acc_k"),
          py::arg("acc_g"), py::arg("acc_union"));
    m.def("run_confined_experiment", &run_confined_experiment, py::arg("config"));
    m.def("run_overlap_experiment", &run_overlap_experiment, py::arg("config"));
    m.def("overlap_parallelism_cosine", &overlap_parallelism_cosine, py::arg("config"),
          py::arg("seed"));
    m.def(
        "scaling_bound_curve",
        [](const CovarianceSpec& cov, int N) {
            std::vector<std::tuple<int, double, double>> out;
            for (const auto& p : scaling_bound_curve(cov, N))
                out.emplace_back(p.r, p.bound, p.truncated_display);
            return out;
        },
        py::arg("cov"), py::arg("n_examples"));
    m.def("estimate_alignment",
          [](const CovarianceSpec& cov, int N, long trials, std::uint64_t seed) {
              return estimate_alignment(cov, N, trials, RngSeed(seed));
          },
          py::arg("cov"), py::arg("n_examples"), py::arg("trials"), py::arg("seed"));
    m.def("run_case_study", [] {
        const CaseStudyResult r = run_case_study();
        std::vector<std::vector<int>> patterns;
        for (const auto& p : r.sign_patterns) patterns.push_back({p[0], p[1]});
        return patterns;
    });

    // ---- benchmark suites ----------------------------------------------
    py::class_<Demonstration>(m, "Demonstration")
        .def_readonly("input", &Demonstration::input)
        .def_readonly("output", &Demonstration::output);

    py::class_<PromptInstance>(m, "PromptInstance")
        .def_readonly("id", &PromptInstance::id)
        .def_readonly("task_pair", &PromptInstance::task_pair)
        .def_readonly("mode", &PromptInstance::mode)
        .def_readonly("setting", &PromptInstance::setting)
        .def_readonly("instruction", &PromptInstance::instruction)
        .def_readonly("demonstrations", &PromptInstance::demonstrations)
        .def_readonly("test_input", &PromptInstance::test_input)
        .def_readonly("gold", &PromptInstance::gold)
        .def_readonly("seed", &PromptInstance::seed);

    m.def("apply_simple_rule",
          [](const std::string& rule, const std::string& input) {
              return apply_simple_rule(rule_from_string(rule), input);
          },
          py::arg("rule"), py::arg("input"));
    m.def("apply_composite_rule",
          [](const std::string& pair, const std::string& input) {
              return apply_composite_rule(composite_rule(pair), input);
          },
          py::arg("pair"), py::arg("input"));
    m.def("generate_dataset", &py_generate, py::arg("pair"), py::arg("setting"),
          py::arg("n") = -1, py::arg("k") = 10, py::arg("seed") = 0,
          py::arg("with_instruction") = false);
    m.def("render_prompt", &render_prompt, py::arg("instance"));
    m.def("to_jsonl", &to_jsonl, py::arg("instances"));
    m.def("write_jsonl", &write_jsonl, py::arg("instances"), py::arg("path"));
    m.def("supported_pairs", [] { return supported_pairs(); });
    m.def("number_to_words", &number_to_words, py::arg("n"));
    m.def("words_to_number", &words_to_number, py::arg("words"));

    py::class_<SentencePair>(m, "SentencePair")
        .def_readonly("source", &SentencePair::source)
        .def_readonly("target", &SentencePair::target)
        .def_readonly("primitives", &SentencePair::primitives);

    m.def("compose_T1", &compose_T1, py::arg("phrase_item"), py::arg("chain_item"));
    m.def("compose_T2", &compose_T2, py::arg("passive_item"), py::arg("object_item"),
          py::arg("theme_noun"));
    m.def("select_in_context",
          [](const SentencePair& test, const std::vector<SentencePair>& pool, int K,
             std::uint64_t seed) { return select_in_context(test, pool, K, RngSeed(seed)); },
          py::arg("test"), py::arg("pool"), py::arg("K"), py::arg("seed"));
    m.def("linguistic_pool", &linguistic_pool, py::arg("task"), py::arg("setting"));
    m.def("rechain", [](const std::string& target) {
        return render_chain_form(parse_chain_form(target));
    });

    auto fx = m.def_submodule("fixtures", "bundled conversion fixtures");
    fx.def("phrase_recombination_baby", &fixtures::phrase_recombination_baby);
    fx.def("longer_chain_value", &fixtures::longer_chain_value);
    fx.def("passive_book_squeeze", &fixtures::passive_book_squeeze);
    fx.def("object_cockroach_box", &fixtures::object_cockroach_box);
    fx.def("active_sophia_donut", &fixtures::active_sophia_donut);
    fx.def("subject_cockroach_inflate", &fixtures::subject_cockroach_inflate);

    // ---- metrics and harness helpers ------------------------------------
    m.def("exact_match", &exact_match, py::arg("prediction"), py::arg("gold"));
    m.def("word_error_rate", &word_error_rate, py::arg("prediction"), py::arg("gold"));
    m.def("normalize_prediction", &normalize_prediction, py::arg("raw"));
    m.def("sha256_hex", &sha256_hex, py::arg("data"));
}
