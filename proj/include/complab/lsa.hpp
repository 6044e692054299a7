#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "complab/gaussian_model.hpp"

namespace complab {

/**
 * Parameters of the one-layer linear self-attention network
 * f(E) = E + W_pv E (E^T W_kq E) / N.
 *
 * Only four blocks of (W_pv, W_kq) reach the prediction; the rest are
 * materialized as zeros.
 */
struct LsaParams {
    int d = 0;
    int K = 0;
    Eigen::MatrixXd w_pv;  // (d+K) x (d+K)
    Eigen::MatrixXd w_kq;  // (d+K) x (d+K)

    static LsaParams zero(int d, int K);

    // Blocks that participate in the prediction. The 21 blocks are stored
    // transposed (bottom-left), matching the block layout of the matrices.
    Eigen::Block<const Eigen::MatrixXd> pv_21_t() const { return w_pv.block(d, 0, K, d); }
    Eigen::Block<const Eigen::MatrixXd> pv_22() const { return w_pv.block(d, d, K, K); }
    Eigen::Block<const Eigen::MatrixXd> kq_11() const { return w_kq.block(0, 0, d, d); }
    Eigen::Block<const Eigen::MatrixXd> kq_21_t() const { return w_kq.block(d, 0, K, d); }
    Eigen::MatrixXd pv_21() const { return pv_21_t().transpose(); }
    Eigen::MatrixXd kq_21() const { return kq_21_t().transpose(); }
};

/// Gamma = (1 + 1/N) Lambda + (tr(Lambda)/N) I, the curvature matrix whose
/// inverse is the optimal key-query block.
struct GammaMatrix {
    Eigen::MatrixXd gamma;
    int N = 0;
};

/// The (U, u) pair the population loss actually depends on (through u*U).
struct ReparamPoint {
    Eigen::MatrixXd U;
    double u = 1.0;
    int rank_budget = -1;  // -1: unconstrained
};

struct LossBreakdown {
    double loss = 0.0;      // refactored objective value
    double min_loss = 0.0;  // -1/2 tr(Lambda^2 Gamma^-1)
    double gap = 0.0;       // 1/2 ||Gamma^1/2 (u L^1/2 U L^1/2 - L Gamma^-1)||_F^2
};

struct PretrainConfig {
    int B = 1;              // prompts per empirical-loss batch
    int N = 1;              // examples per prompt
    int steps = 1000;
    double step_size = 0.0;  // <= 0 selects a curvature-based default
};

struct DescentResult {
    ReparamPoint point;
    double initial_loss = 0.0;
    double final_loss = 0.0;
    bool diverged = false;
};

GammaMatrix compute_gamma(const CovarianceSpec& cov, int N);

/// Full-form evaluation: builds f(E) and reads the label block of the query
/// column. `N` must equal the number of demonstration columns.
Eigen::VectorXd lsa_forward(const LsaParams& params, const PromptEmbedding& emb, int N);

/// Reduced block form [pv_21^T pv_22] (E E^T / N) [kq_11; kq_21^T] x_q.
Eigen::VectorXd lsa_forward_reduced(const LsaParams& params, const PromptEmbedding& emb, int N);

/**
 * Closed-form optimum under a rank budget on the key-query block.
 *
 * For r = d the key-query block is exactly Gamma^-1. For r < d it is
 * Q V* Q^T where Lambda = Q D Q^T (eigenvalues sorted descending, ties kept
 * in ascending index order) and v*_i = N / ((N+1) lambda_i + tr(D)) for
 * i <= r, 0 beyond. The free scaling constant is pinned to c = 1.
 */
std::pair<LsaParams, ReparamPoint> optimal_params(const CovarianceSpec& cov, int N, int K,
                                                  int r);

/// Embeds (U, u) into full parameter matrices: kq_11 = U, pv_22 = u * I.
LsaParams params_from_reparam(const ReparamPoint& point, int K);

/// Refactored population objective, its global minimum and the exact gap.
LossBreakdown refactored_loss(const ReparamPoint& point, const CovarianceSpec& cov, int N);

/// Gradient of the refactored objective in U.
Eigen::MatrixXd refactored_loss_grad_U(const ReparamPoint& point, const CovarianceSpec& cov,
                                       int N);
/// Gradient of the refactored objective in u.
double refactored_loss_grad_u(const ReparamPoint& point, const CovarianceSpec& cov, int N);

/// (1/2B) sum of squared prediction errors over the batch.
double empirical_loss(const LsaParams& params, const std::vector<Prompt>& prompts);

/// Gradient descent on the refactored objective from a seeded random start.
DescentResult fit_gradient_descent(const PretrainConfig& config, const CovarianceSpec& cov,
                                   RngSeed seed);
/// Same descent from an explicit start point.
DescentResult fit_gradient_descent_from(const PretrainConfig& config, const CovarianceSpec& cov,
                                        ReparamPoint start);

}  // namespace complab
