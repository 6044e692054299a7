#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "complab/gaussian_model.hpp"
#include "complab/lsa.hpp"

namespace complab {

struct AccuracyEstimate {
    double mean = 0.0;
    double std_err = 0.0;
    long trials = 0;
};

/// Monte Carlo estimate of E<w_hat, w> against its analytic value.
struct AlignmentEstimate {
    double empirical_inner = 0.0;
    double std_err = 0.0;
    long trials = 0;
    double analytic_trace = 0.0;  // tr(Gamma^-1 Lambda)
};

struct ExperimentConfig {
    TaskSpace space;      // exactly two tasks
    CovarianceSpec cov;   // full d x d input covariance
    int examples_per_task = 40;
    double delta = 0.0;
    int trials = 2000;
    RngSeed seed = 0;
};

/// Accuracies with each task's examples alone and with their union,
/// plus the composition inequality evaluated at statistical tolerance.
struct TripleResult {
    AccuracyEstimate first_only;
    AccuracyEstimate second_only;
    AccuracyEstimate unioned;
    double sum_minus_union = 0.0;  // mean(S_k) + mean(S_g) - mean(union)
    double combined_std_err = 0.0;
    bool inequality_ok = false;    // sum <= union within 2 combined std errs
};

struct ScalingPoint {
    int r = 0;
    double bound = 0.0;              // sum_{i<=r} lambda_i v*_i with full-trace v*
    double truncated_display = 0.0;  // same sum with the rank-truncated trace
};

struct CaseStudyResult {
    // Sign of each prediction coordinate (-1, 0, +1) for the three settings:
    // first-task examples, second-task examples, mixed examples.
    std::array<std::array<int, 2>, 3> sign_patterns{};
    std::array<Eigen::Vector2d, 3> predictions{};
};

/// Fraction of coordinates whose prediction sign equals the label sign.
/// A zero prediction never matches, so a task-only in-context set scores
/// at most 1/2 on a two-task composite.
double sign_accuracy(const Eigen::VectorXd& prediction, const Eigen::VectorXd& truth);

/// Non-strict comparison: max of the single-task accuracies <= union accuracy.
bool check_compositional_ability(const AccuracyEstimate& acc_k, const AccuracyEstimate& acc_g,
                                 const AccuracyEstimate& acc_union);

/**
 * Composition under confined support: per trial draws confined weights,
 * one example set per task (full-scale only on that task's active set),
 * and a composite query with identity covariance, then scores the
 * closed-form optimal predictor with each in-context set and their union
 * (N examples per task, 2N total).
 */
TripleResult run_confined_experiment(const ExperimentConfig& config);

/**
 * The overlapping-support construction: both tasks draw examples over the
 * full support with the full covariance and share the same label map, so a
 * single draw serves as either task's example set and the balanced union
 * duplicates it. The three predictions are then parallel by construction
 * and the three accuracies coincide.
 */
TripleResult run_overlap_experiment(const ExperimentConfig& config);

/// Cosine between the single-set and balanced-union predictions for one
/// fixed prompt of the overlap construction (exactly 1 up to rounding).
double overlap_parallelism_cosine(const ExperimentConfig& config, RngSeed seed);

/// Accuracy upper-bound curve as a function of the rank budget r = 0..d.
std::vector<ScalingPoint> scaling_bound_curve(const CovarianceSpec& cov, int N);

/// Monte Carlo check of E<w_hat, w> = tr(Gamma^-1 Lambda) at the
/// unnormalized level, with w ~ N(0, I) and w_hat the in-context estimate.
AlignmentEstimate estimate_alignment(const CovarianceSpec& cov, int N, long trials,
                                     RngSeed seed);

/// Two binary tasks on four coordinates, eight canonical inputs, query
/// (1,0,1,0): sign patterns (+,0), (0,+), (+,+) across the three settings.
CaseStudyResult run_case_study();

}  // namespace complab
