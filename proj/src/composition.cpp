#include "complab/composition.hpp"

#include <cmath>
#include <stdexcept>

namespace complab {

namespace {

AccuracyEstimate summarize(const std::vector<double>& values) {
    AccuracyEstimate est;
    est.trials = static_cast<long>(values.size());
    if (values.empty()) return est;
    double sum = 0.0;
    for (double v : values) sum += v;
    est.mean = sum / values.size();
    double ss = 0.0;
    for (double v : values) ss += (v - est.mean) * (v - est.mean);
    est.std_err = values.size() > 1
                      ? std::sqrt(ss / (values.size() - 1.0)) / std::sqrt(double(values.size()))
                      : 0.0;
    return est;
}

TripleResult finalize_triple(const std::vector<double>& a, const std::vector<double>& b,
                             const std::vector<double>& u) {
    TripleResult r;
    r.first_only = summarize(a);
    r.second_only = summarize(b);
    r.unioned = summarize(u);
    r.sum_minus_union = r.first_only.mean + r.second_only.mean - r.unioned.mean;
    r.combined_std_err = std::sqrt(r.first_only.std_err * r.first_only.std_err +
                                   r.second_only.std_err * r.second_only.std_err +
                                   r.unioned.std_err * r.unioned.std_err);
    r.inequality_ok = r.sum_minus_union <= 2.0 * r.combined_std_err;
    return r;
}

Eigen::VectorXd predict(const LsaParams& params, const LabeledSet& set,
                        const Eigen::VectorXd& query) {
    const PromptEmbedding emb = embed_examples(set, query, params.K);
    return lsa_forward_reduced(params, emb, set.size());
}

LabeledSet concat(const LabeledSet& a, const LabeledSet& b) {
    LabeledSet out;
    out.xs.resize(a.xs.rows(), a.xs.cols() + b.xs.cols());
    out.xs << a.xs, b.xs;
    out.ys.resize(a.ys.rows(), a.ys.cols() + b.ys.cols());
    out.ys << a.ys, b.ys;
    return out;
}

Eigen::VectorXd standard_normal_vector(int n, CounterRng& rng) {
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v(i) = rng.normal();
    return v;
}

void check_pair_config(const ExperimentConfig& config) {
    config.space.validate();
    config.cov.validate();
    if (config.space.K != 2)
        throw std::invalid_argument("experiment: exactly two tasks expected");
    if (config.space.d != config.cov.dim())
        throw std::invalid_argument("experiment: covariance dimension mismatch");
    if (config.examples_per_task < 1)
        throw std::invalid_argument("experiment: examples_per_task >= 1");
    if (config.trials < 1) throw std::invalid_argument("experiment: trials >= 1");
    if (config.delta < 0.0) throw std::invalid_argument("experiment: negative delta");
}

/// Full-support example set labeled by block weights w = [(w_a, 0), (0, w_b)].
LabeledSet overlap_examples(const ExperimentConfig& config, const Eigen::MatrixXd& W,
                            const Eigen::MatrixXd& root, int N, CounterRng& rng) {
    LabeledSet s;
    s.xs.resize(config.space.d, N);
    for (int n = 0; n < N; ++n) s.xs.col(n) = root * standard_normal_vector(config.space.d, rng);
    s.ys = W * s.xs;
    return s;
}

Eigen::MatrixXd overlap_weights(const ExperimentConfig& config, CounterRng& rng) {
    Eigen::MatrixXd W = Eigen::MatrixXd::Zero(2, config.space.d);
    for (int k = 0; k < 2; ++k)
        for (int idx : config.space.active_sets[k]) W(k, idx) = rng.normal();
    return W;
}

}  // namespace

double sign_accuracy(const Eigen::VectorXd& prediction, const Eigen::VectorXd& truth) {
    if (prediction.size() != truth.size())
        throw std::invalid_argument("sign_accuracy: length mismatch");
    const int K = static_cast<int>(truth.size());
    int hits = 0;
    for (int k = 0; k < K; ++k) {
        if (prediction(k) == 0.0 || truth(k) == 0.0) continue;
        if ((prediction(k) > 0.0) == (truth(k) > 0.0)) ++hits;
    }
    return static_cast<double>(hits) / K;
}

bool check_compositional_ability(const AccuracyEstimate& acc_k, const AccuracyEstimate& acc_g,
                                 const AccuracyEstimate& acc_union) {
    return std::max(acc_k.mean, acc_g.mean) <= acc_union.mean;
}

TripleResult run_confined_experiment(const ExperimentConfig& config) {
    check_pair_config(config);
    validate_cross_blocks(config.cov, config.space);
    const int N = config.examples_per_task;
    const auto [params, point] =
        optimal_params(config.cov, N, config.space.K, config.cov.dim());
    (void)point;

    std::vector<double> acc_a, acc_b, acc_u;
    acc_a.reserve(config.trials);
    acc_b.reserve(config.trials);
    acc_u.reserve(config.trials);
    const CounterRng base(config.seed);
    for (int t = 0; t < config.trials; ++t) {
        CounterRng trial = base.fork(t);
        CounterRng w_rng = trial.fork(0);
        const TaskWeights weights = sample_confined_weights(config.space, config.delta, w_rng);
        const LabeledSet s_k = make_confined_dataset(config.space, 0, config.cov, weights,
                                                     config.delta, N, trial.fork(1));
        const LabeledSet s_g = make_confined_dataset(config.space, 1, config.cov, weights,
                                                     config.delta, N, trial.fork(2));
        CounterRng q_rng = trial.fork(3);
        const Eigen::VectorXd x_q = standard_normal_vector(config.space.d, q_rng);
        const Eigen::VectorXd y_q = weights.W * x_q;

        acc_a.push_back(sign_accuracy(predict(params, s_k, x_q), y_q));
        acc_b.push_back(sign_accuracy(predict(params, s_g, x_q), y_q));
        acc_u.push_back(sign_accuracy(predict(params, concat(s_k, s_g), x_q), y_q));
    }
    return finalize_triple(acc_a, acc_b, acc_u);
}

TripleResult run_overlap_experiment(const ExperimentConfig& config) {
    check_pair_config(config);
    const int N = config.examples_per_task;
    const auto [params, point] =
        optimal_params(config.cov, N, config.space.K, config.cov.dim());
    (void)point;
    const Eigen::MatrixXd root = config.cov.sqrt_psd();

    std::vector<double> acc_a, acc_b, acc_u;
    const CounterRng base(config.seed);
    for (int t = 0; t < config.trials; ++t) {
        CounterRng trial = base.fork(t);
        CounterRng w_rng = trial.fork(0);
        const Eigen::MatrixXd W = overlap_weights(config, w_rng);
        CounterRng x_rng = trial.fork(1);
        // One draw serves as either task's set; the tasks are
        // indistinguishable on overlapping support.
        const LabeledSet shared = overlap_examples(config, W, root, N, x_rng);
        CounterRng q_rng = trial.fork(2);
        const Eigen::VectorXd x_q = standard_normal_vector(config.space.d, q_rng);
        const Eigen::VectorXd y_q = W * x_q;

        acc_a.push_back(sign_accuracy(predict(params, shared, x_q), y_q));
        acc_b.push_back(sign_accuracy(predict(params, shared, x_q), y_q));
        acc_u.push_back(sign_accuracy(predict(params, concat(shared, shared), x_q), y_q));
    }
    return finalize_triple(acc_a, acc_b, acc_u);
}

double overlap_parallelism_cosine(const ExperimentConfig& config, RngSeed seed) {
    check_pair_config(config);
    const int N = config.examples_per_task;
    const auto [params, point] =
        optimal_params(config.cov, N, config.space.K, config.cov.dim());
    (void)point;
    const Eigen::MatrixXd root = config.cov.sqrt_psd();

    CounterRng rng(seed);
    CounterRng w_rng = rng.fork(0);
    const Eigen::MatrixXd W = overlap_weights(config, w_rng);
    CounterRng x_rng = rng.fork(1);
    const LabeledSet shared = overlap_examples(config, W, root, N, x_rng);
    CounterRng q_rng = rng.fork(2);
    const Eigen::VectorXd x_q = standard_normal_vector(config.space.d, q_rng);

    const Eigen::VectorXd single = predict(params, shared, x_q);
    const Eigen::VectorXd balanced = predict(params, concat(shared, shared), x_q);
    const double denom = single.norm() * balanced.norm();
    if (denom == 0.0) return 1.0;
    return single.dot(balanced) / denom;
}

std::vector<ScalingPoint> scaling_bound_curve(const CovarianceSpec& cov, int N) {
    cov.validate();
    if (N < 1) throw std::invalid_argument("scaling_bound_curve: N >= 1");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(cov.lambda, Eigen::EigenvaluesOnly);
    std::vector<double> values(eig.eigenvalues().data(),
                               eig.eigenvalues().data() + eig.eigenvalues().size());
    std::sort(values.begin(), values.end(), std::greater<double>());
    const double trace = cov.trace();
    const int d = cov.dim();

    std::vector<ScalingPoint> curve;
    curve.reserve(d + 1);
    double bound = 0.0;
    for (int r = 0; r <= d; ++r) {
        if (r > 0) {
            const double lam = std::max(values[r - 1], 0.0);
            bound += lam * N / ((N + 1.0) * lam + trace);
        }
        double truncated = 0.0;
        double partial = 0.0;
        for (int j = 0; j < r; ++j) partial += std::max(values[j], 0.0);
        for (int i = 0; i < r; ++i) {
            const double lam = std::max(values[i], 0.0);
            if (lam > 0.0) truncated += N * lam / ((N + 1.0) * lam + partial);
        }
        curve.push_back({r, bound, truncated});
    }
    return curve;
}

AlignmentEstimate estimate_alignment(const CovarianceSpec& cov, int N, long trials,
                                     RngSeed seed) {
    cov.validate();
    if (N < 1 || trials < 1) throw std::invalid_argument("estimate_alignment: N, trials >= 1");
    const int d = cov.dim();
    const Eigen::MatrixXd gamma = compute_gamma(cov, N).gamma;
    const Eigen::MatrixXd gamma_inv =
        gamma.llt().solve(Eigen::MatrixXd::Identity(d, d));
    const Eigen::MatrixXd root = cov.sqrt_psd();

    std::vector<double> inners;
    inners.reserve(trials);
    const CounterRng base(seed);
    for (long t = 0; t < trials; ++t) {
        CounterRng rng = base.fork(static_cast<std::uint64_t>(t));
        const Eigen::VectorXd w = standard_normal_vector(d, rng);
        Eigen::VectorXd acc = Eigen::VectorXd::Zero(d);
        for (int i = 0; i < N; ++i) {
            const Eigen::VectorXd x = root * standard_normal_vector(d, rng);
            acc += w.dot(x) * x;
        }
        const Eigen::VectorXd w_hat = gamma_inv * acc / N;
        inners.push_back(w_hat.dot(w));
    }
    AccuracyEstimate s = summarize(inners);
    AlignmentEstimate out;
    out.empirical_inner = s.mean;
    out.std_err = s.std_err;
    out.trials = s.trials;
    out.analytic_trace = (gamma_inv * cov.lambda).trace();
    return out;
}

CaseStudyResult run_case_study() {
    const int d = 4, K = 2;
    CovarianceSpec cov = make_covariance(Eigen::MatrixXd::Identity(d, d), 0.0);
    Eigen::MatrixXd W(K, d);
    W << 1, -1, 0, 0,
         0, 0, 1, -1;

    // Canonical one-hot inputs: two per binary attribute.
    std::vector<Eigen::Vector4d> xs(4);
    for (int i = 0; i < 4; ++i) xs[i] = Eigen::Vector4d::Unit(i);

    auto labeled = [&](std::initializer_list<int> idx) {
        LabeledSet s;
        s.xs.resize(d, static_cast<long>(idx.size()));
        int c = 0;
        for (int i : idx) s.xs.col(c++) = xs[i];
        s.ys = W * s.xs;
        return s;
    };
    const LabeledSet first_task = labeled({0, 1});   // both values of attribute 1
    const LabeledSet second_task = labeled({3, 2});  // both values of attribute 2
    const LabeledSet mixed = labeled({0, 2});        // one value of each

    const auto [params, point] = optimal_params(cov, 2, K, d);
    (void)point;
    const Eigen::VectorXd x_q = (Eigen::VectorXd(4) << 1, 0, 1, 0).finished();

    CaseStudyResult result;
    const std::array<const LabeledSet*, 3> settings{&first_task, &second_task, &mixed};
    for (int s = 0; s < 3; ++s) {
        const Eigen::VectorXd pred = predict(params, *settings[s], x_q);
        result.predictions[s] = pred;
        for (int k = 0; k < 2; ++k)
            result.sign_patterns[s][k] = pred(k) > 0.0 ? 1 : (pred(k) < 0.0 ? -1 : 0);
    }
    return result;
}

}  // namespace complab
