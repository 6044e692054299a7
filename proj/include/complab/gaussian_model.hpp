#pragma once

#include <Eigen/Dense>
#include <limits>
#include <vector>

#include "complab/rng.hpp"

namespace complab {

/// Index sets on which each simple task's label depends.
struct TaskSpace {
    int d = 0;
    int K = 0;
    std::vector<std::vector<int>> active_sets;

    /// Throws std::invalid_argument unless the sets are nonempty, within
    /// [0, d) and pairwise disjoint.
    void validate() const;
};

/**
 * Input covariance with optional block structure.
 *
 * `epsilon` bounds the largest singular value of every cross block between
 * two tasks' active sets; `spectral_min/max` bracket the spectral norm of
 * the whole matrix.
 */
struct CovarianceSpec {
    Eigen::MatrixXd lambda;
    double epsilon = std::numeric_limits<double>::infinity();
    double spectral_min = 0.0;
    double spectral_max = std::numeric_limits<double>::infinity();

    int dim() const { return static_cast<int>(lambda.rows()); }
    double trace() const { return lambda.trace(); }

    /// Symmetric PSD square root; eigenvalues below 1e-12 are clamped to 0.
    Eigen::MatrixXd sqrt_psd() const;

    /// Throws std::invalid_argument on asymmetry, indefiniteness
    /// (smallest eigenvalue < -1e-12) or violated spectral bounds.
    void validate() const;
};

/// Per-task weight rows; off-support magnitudes bounded by delta.
struct TaskWeights {
    Eigen::MatrixXd W;  // K x d
    double delta = 0.0;

    int tasks() const { return static_cast<int>(W.rows()); }
    int dim() const { return static_cast<int>(W.cols()); }
};

/// N labeled demonstrations plus one query.
struct Prompt {
    Eigen::MatrixXd xs;     // d x N
    Eigen::MatrixXd ys;     // K x N
    Eigen::VectorXd query;  // d
    Eigen::VectorXd truth;  // K

    int examples() const { return static_cast<int>(xs.cols()); }
    int dim() const { return static_cast<int>(xs.rows()); }
    int tasks() const { return static_cast<int>(ys.rows()); }
};

/// Demonstrations and query stacked column-wise; the query's label slot is 0.
struct PromptEmbedding {
    Eigen::MatrixXd E;  // (d+K) x (N+1)
    int d = 0;
    int K = 0;

    int examples() const { return static_cast<int>(E.cols()) - 1; }
};

/// A labeled example set without a query (one task's in-context pool).
struct LabeledSet {
    Eigen::MatrixXd xs;  // d x N
    Eigen::MatrixXd ys;  // K x N

    int size() const { return static_cast<int>(xs.cols()); }
};

/**
 * Builds a d1+d2 covariance whose diagonal blocks realize the given spectra
 * under random orthogonal bases and whose cross block has largest singular
 * value at most epsilon. The result is exactly symmetric and PSD.
 */
CovarianceSpec make_block_covariance(int d1, int d2,
                                     const std::vector<double>& spectrum1,
                                     const std::vector<double>& spectrum2,
                                     double epsilon, RngSeed seed);

/// Covariance from an explicit matrix; validates and fills spectral bounds.
CovarianceSpec make_covariance(Eigen::MatrixXd lambda,
                               double epsilon = std::numeric_limits<double>::infinity());

/// x_i iid N(0, Lambda), y_i = W x_i exactly; query drawn the same way.
Prompt sample_prompt(const CovarianceSpec& cov, const TaskWeights& weights, int N,
                     RngSeed seed);
Prompt sample_prompt(const CovarianceSpec& cov, const TaskWeights& weights, int N,
                     CounterRng rng);

/// Stacks a prompt into its (d+K) x (N+1) embedding.
PromptEmbedding build_embedding(const Prompt& p);

/// Embedding for an explicit example set plus query.
PromptEmbedding embed_examples(const LabeledSet& set, const Eigen::VectorXd& query,
                               int tasks);

/**
 * Weight matrix whose row k is full-scale standard normal on task k's active
 * set; every off-support entry is delta-scale (truncated normal times delta).
 */
TaskWeights sample_confined_weights(const TaskSpace& space, double delta, CounterRng& rng);

/**
 * N examples confined to one task's active set: active coordinates follow the
 * corresponding block of `cov`, off-support coordinates are delta-scale
 * residue, and labels are y = W x with the confined x (residue enters the
 * label through x, never by re-projection).
 */
LabeledSet make_confined_dataset(const TaskSpace& space, int task, const CovarianceSpec& cov,
                                 const TaskWeights& weights, double delta, int N,
                                 CounterRng rng);
LabeledSet make_confined_dataset(const TaskSpace& space, int task, const CovarianceSpec& cov,
                                 const TaskWeights& weights, double delta, int N,
                                 RngSeed seed);

/// Largest singular value of lambda restricted to rows `a` and columns `b`.
double max_cross_singular_value(const CovarianceSpec& cov, const std::vector<int>& a,
                                const std::vector<int>& b);

/// Checks every task-pair cross block of `cov` against cov.epsilon.
void validate_cross_blocks(const CovarianceSpec& cov, const TaskSpace& space);

}  // namespace complab
