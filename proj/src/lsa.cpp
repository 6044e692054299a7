#include "complab/lsa.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace complab {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

Eigen::MatrixXd psd_inverse(const Eigen::MatrixXd& m) {
    return m.llt().solve(Eigen::MatrixXd::Identity(m.rows(), m.cols()));
}

struct SortedEig {
    Eigen::MatrixXd Q;       // columns ordered by descending eigenvalue
    Eigen::VectorXd values;  // descending
};

SortedEig sorted_eig_descending(const Eigen::MatrixXd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(m);
    if (eig.info() != Eigen::Success)
        throw std::runtime_error("eigendecomposition failed");
    const int n = static_cast<int>(m.rows());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    const auto& vals = eig.eigenvalues();  // ascending from Eigen
    // Descending by value; ties resolved by the original ascending index so
    // the retained set is reproducible.
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (vals(a) != vals(b)) return vals(a) > vals(b);
        return a < b;
    });
    SortedEig out;
    out.Q.resize(n, n);
    out.values.resize(n);
    for (int i = 0; i < n; ++i) {
        out.Q.col(i) = eig.eigenvectors().col(order[i]);
        out.values(i) = vals(order[i]);
    }
    return out;
}

}  // namespace

LsaParams LsaParams::zero(int d, int K) {
    LsaParams p;
    p.d = d;
    p.K = K;
    p.w_pv = Eigen::MatrixXd::Zero(d + K, d + K);
    p.w_kq = Eigen::MatrixXd::Zero(d + K, d + K);
    return p;
}

GammaMatrix compute_gamma(const CovarianceSpec& cov, int N) {
    require(N >= 1, "compute_gamma: N >= 1");
    cov.validate();
    const int d = cov.dim();
    GammaMatrix g;
    g.N = N;
    g.gamma = (1.0 + 1.0 / N) * cov.lambda +
              (cov.trace() / N) * Eigen::MatrixXd::Identity(d, d);
    return g;
}

Eigen::VectorXd lsa_forward(const LsaParams& params, const PromptEmbedding& emb, int N) {
    const int de = params.d + params.K;
    require(emb.d == params.d && emb.K == params.K, "lsa_forward: embedding/params mismatch");
    require(emb.E.rows() == de, "lsa_forward: embedding row count mismatch");
    require(N == emb.examples() && N >= 1, "lsa_forward: N must match demonstration count");
    const Eigen::MatrixXd f =
        emb.E + params.w_pv * emb.E * (emb.E.transpose() * params.w_kq * emb.E) / N;
    return f.col(N).segment(params.d, params.K);
}

Eigen::VectorXd lsa_forward_reduced(const LsaParams& params, const PromptEmbedding& emb, int N) {
    require(emb.d == params.d && emb.K == params.K,
            "lsa_forward_reduced: embedding/params mismatch");
    require(N == emb.examples() && N >= 1,
            "lsa_forward_reduced: N must match demonstration count");
    const int d = params.d, K = params.K;
    Eigen::MatrixXd bottom(K, d + K);
    bottom.leftCols(d) = params.pv_21_t();
    bottom.rightCols(K) = params.pv_22();
    Eigen::MatrixXd right(d + K, d);
    right.topRows(d) = params.kq_11();
    right.bottomRows(K) = params.kq_21_t();
    const Eigen::VectorXd x_q = emb.E.col(N).head(d);
    return bottom * (emb.E * emb.E.transpose() / N) * right * x_q;
}

std::pair<LsaParams, ReparamPoint> optimal_params(const CovarianceSpec& cov, int N, int K,
                                                  int r) {
    cov.validate();
    require(N >= 1, "optimal_params: N >= 1");
    require(K >= 1, "optimal_params: K >= 1");
    const int d = cov.dim();
    require(r >= 0 && r <= d, "optimal_params: rank budget must lie in [0, d]");
    require(cov.trace() > 0.0, "optimal_params: tr(Lambda) must be positive");

    ReparamPoint point;
    point.u = 1.0;
    point.rank_budget = r;
    if (r == d) {
        point.U = psd_inverse(compute_gamma(cov, N).gamma);
    } else {
        const SortedEig eig = sorted_eig_descending(cov.lambda);
        const double trace = cov.trace();
        Eigen::VectorXd v = Eigen::VectorXd::Zero(d);
        for (int i = 0; i < r; ++i)
            v(i) = static_cast<double>(N) / ((N + 1.0) * eig.values(i) + trace);
        point.U = eig.Q * v.asDiagonal() * eig.Q.transpose();
    }
    return {params_from_reparam(point, K), point};
}

LsaParams params_from_reparam(const ReparamPoint& point, int K) {
    require(point.U.rows() == point.U.cols(), "params_from_reparam: U must be square");
    require(K >= 1, "params_from_reparam: K >= 1");
    const int d = static_cast<int>(point.U.rows());
    LsaParams params = LsaParams::zero(d, K);
    params.w_kq.block(0, 0, d, d) = point.U;
    params.w_pv.block(d, d, K, K) = point.u * Eigen::MatrixXd::Identity(K, K);
    return params;
}

LossBreakdown refactored_loss(const ReparamPoint& point, const CovarianceSpec& cov, int N) {
    cov.validate();
    require(N >= 1, "refactored_loss: N >= 1");
    require(point.U.rows() == cov.dim() && point.U.cols() == cov.dim(),
            "refactored_loss: U dimension mismatch");
    require(cov.trace() > 0.0, "refactored_loss: tr(Lambda) must be positive");
    const Eigen::MatrixXd& L = cov.lambda;
    const Eigen::MatrixXd G = compute_gamma(cov, N).gamma;
    const Eigen::MatrixXd G_inv = psd_inverse(G);
    const Eigen::MatrixXd L_sqrt = cov.sqrt_psd();
    const Eigen::MatrixXd G_sqrt = CovarianceSpec{G}.sqrt_psd();
    const double u = point.u;
    const Eigen::MatrixXd& U = point.U;

    LossBreakdown out;
    out.loss = (0.5 * u * u * (G * L * U * L * U.transpose()).trace()) -
               u * (L * L * U.transpose()).trace();
    out.min_loss = -0.5 * (L * L * G_inv).trace();
    const Eigen::MatrixXd residual = u * (L_sqrt * U * L_sqrt) - L * G_inv;
    out.gap = 0.5 * (G_sqrt * residual).squaredNorm();
    return out;
}

Eigen::MatrixXd refactored_loss_grad_U(const ReparamPoint& point, const CovarianceSpec& cov,
                                       int N) {
    const Eigen::MatrixXd& L = cov.lambda;
    const Eigen::MatrixXd G = compute_gamma(cov, N).gamma;
    return point.u * point.u * (G * L * point.U * L) - point.u * (L * L);
}

double refactored_loss_grad_u(const ReparamPoint& point, const CovarianceSpec& cov, int N) {
    const Eigen::MatrixXd& L = cov.lambda;
    const Eigen::MatrixXd G = compute_gamma(cov, N).gamma;
    return point.u * (G * L * point.U * L * point.U.transpose()).trace() -
           (L * L * point.U.transpose()).trace();
}

double empirical_loss(const LsaParams& params, const std::vector<Prompt>& prompts) {
    require(!prompts.empty(), "empirical_loss: empty prompt batch");
    double total = 0.0;
    for (const Prompt& p : prompts) {
        const PromptEmbedding emb = build_embedding(p);
        const Eigen::VectorXd pred = lsa_forward(params, emb, p.examples());
        total += (pred - p.truth).squaredNorm();
    }
    return total / (2.0 * static_cast<double>(prompts.size()));
}

DescentResult fit_gradient_descent_from(const PretrainConfig& config, const CovarianceSpec& cov,
                                        ReparamPoint start) {
    require(config.steps >= 1, "fit_gradient_descent: positive step count");
    cov.validate();
    double step = config.step_size;
    if (step <= 0.0) {
        // Curvature of the U-quadratic is bounded by ||Gamma|| * ||Lambda||^2.
        const Eigen::MatrixXd G = compute_gamma(cov, config.N).gamma;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eg(G, Eigen::EigenvaluesOnly);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> el(cov.lambda, Eigen::EigenvaluesOnly);
        const double curvature =
            eg.eigenvalues().maxCoeff() * el.eigenvalues().maxCoeff() * el.eigenvalues().maxCoeff();
        step = 0.5 / std::max(curvature, 1e-8);
    }

    DescentResult result;
    result.initial_loss = refactored_loss(start, cov, config.N).loss;
    ReparamPoint point = std::move(start);
    double prev = result.initial_loss;
    for (int s = 0; s < config.steps; ++s) {
        const Eigen::MatrixXd gU = refactored_loss_grad_U(point, cov, config.N);
        const double gu = refactored_loss_grad_u(point, cov, config.N);
        point.U -= step * gU;
        point.u -= step * gu;
        const double now = refactored_loss(point, cov, config.N).loss;
        if (config.step_size <= 0.0 && now > prev) {
            step *= 0.5;  // auto mode backs off instead of diverging
        } else if (now > prev + 1e-9 * (1.0 + std::abs(prev))) {
            result.diverged = true;
        }
        prev = now;
    }
    result.final_loss = prev;
    point.rank_budget = -1;
    result.point = std::move(point);
    return result;
}

DescentResult fit_gradient_descent(const PretrainConfig& config, const CovarianceSpec& cov,
                                   RngSeed seed) {
    const int d = cov.dim();
    CounterRng rng(seed);
    ReparamPoint start;
    start.u = 1.0;
    start.U.resize(d, d);
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i) start.U(i, j) = rng.normal() / std::sqrt(double(d));
    return fit_gradient_descent_from(config, cov, std::move(start));
}

}  // namespace complab
