#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <Eigen/Dense>
#include <cmath>

#include "complab/lsa.hpp"
#include "complab/serialize.hpp"
#include "test_util.hpp"

using namespace complab;
using testutil::random_gaussian;
using testutil::random_psd;

namespace {

ReparamPoint point_of(Eigen::MatrixXd U, double u) {
    ReparamPoint p;
    p.U = std::move(U);
    p.u = u;
    return p;
}

}  // namespace

TEST_CASE("compute_gamma: identity covariance") {
    const CovarianceSpec cov = make_covariance(Eigen::MatrixXd::Identity(4, 4));
    const GammaMatrix g = compute_gamma(cov, 8);
    CHECK((g.gamma - 1.625 * Eigen::MatrixXd::Identity(4, 4)).norm() < 1e-15);
}

TEST_CASE("compute_gamma: diagonal covariance with a zero eigenvalue") {
    Eigen::VectorXd d(4);
    d << 2, 1, 1, 0;
    const CovarianceSpec cov = make_covariance(d.asDiagonal());
    const GammaMatrix g = compute_gamma(cov, 4);
    Eigen::VectorXd expect(4);
    expect << 3.5, 2.25, 2.25, 1.0;
    CHECK((g.gamma - Eigen::MatrixXd(expect.asDiagonal())).norm() < 1e-15);
}

TEST_CASE("compute_gamma: eigenvalues at least tr(Lambda)/N") {
    CounterRng rng(4);
    for (int it = 0; it < 20; ++it) {
        const CovarianceSpec cov = random_psd(5, rng);
        const GammaMatrix g = compute_gamma(cov, 7);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(g.gamma, Eigen::EigenvaluesOnly);
        CHECK(eig.eigenvalues().minCoeff() >= cov.trace() / 7 - 1e-12);
    }
}

TEST_CASE("lsa_forward: zero query gives zero prediction") {
    CounterRng rng(5);
    LsaParams params = LsaParams::zero(3, 2);
    params.w_pv = random_gaussian(5, 5, rng);
    params.w_kq = random_gaussian(5, 5, rng);
    Prompt p;
    p.xs = random_gaussian(3, 6, rng);
    p.ys = random_gaussian(2, 6, rng);
    p.query = Eigen::VectorXd::Zero(3);
    p.truth = Eigen::VectorXd::Zero(2);
    const Eigen::VectorXd pred = lsa_forward(params, build_embedding(p), 6);
    CHECK(pred.norm() == 0.0);
}

TEST_CASE("lsa_forward: zero labels at optimal parameters give zero prediction") {
    CounterRng rng(6);
    const CovarianceSpec cov = random_psd(3, rng);
    const auto [params, point] = optimal_params(cov, 6, 2, 3);
    (void)point;
    Prompt p;
    p.xs = random_gaussian(3, 6, rng);
    p.ys = Eigen::MatrixXd::Zero(2, 6);
    p.query = random_gaussian(3, 1, rng);
    p.truth = Eigen::VectorXd::Zero(2);
    const Eigen::VectorXd pred = lsa_forward(params, build_embedding(p), 6);
    CHECK(pred.norm() == 0.0);
}

TEST_CASE("lsa_forward: full form equals reduced block form") {
    CounterRng rng(7);
    for (int it = 0; it < 50; ++it) {
        const int d = 2 + static_cast<int>(rng.below(4));
        const int K = 1 + static_cast<int>(rng.below(3));
        const int N = 3 + static_cast<int>(rng.below(8));
        LsaParams params = LsaParams::zero(d, K);
        params.w_pv = random_gaussian(d + K, d + K, rng);
        params.w_kq = random_gaussian(d + K, d + K, rng);
        Prompt p;
        p.xs = random_gaussian(d, N, rng);
        p.ys = random_gaussian(K, N, rng);
        p.query = random_gaussian(d, 1, rng);
        p.truth = Eigen::VectorXd::Zero(K);
        const PromptEmbedding emb = build_embedding(p);
        const Eigen::VectorXd full = lsa_forward(params, emb, N);
        const Eigen::VectorXd reduced = lsa_forward_reduced(params, emb, N);
        CHECK((full - reduced).cwiseAbs().maxCoeff() <= 1e-12 * (1.0 + full.norm()));
    }
}

TEST_CASE("lsa_forward: wrong N rejected") {
    LsaParams params = LsaParams::zero(2, 1);
    Prompt p;
    p.xs = Eigen::MatrixXd::Zero(2, 4);
    p.ys = Eigen::MatrixXd::Zero(1, 4);
    p.query = Eigen::VectorXd::Zero(2);
    p.truth = Eigen::VectorXd::Zero(1);
    const PromptEmbedding emb = build_embedding(p);
    CHECK_THROWS_AS(lsa_forward(params, emb, 3), std::invalid_argument);
}

TEST_CASE("optimal_params: full rank on identity covariance") {
    const int d = 5, N = 10;
    const CovarianceSpec cov = make_covariance(Eigen::MatrixXd::Identity(d, d));
    const auto [params, point] = optimal_params(cov, N, 1, d);
    const double expect = 1.0 / (1.0 + double(d + 1) / N);
    CHECK((point.U - expect * Eigen::MatrixXd::Identity(d, d)).norm() < 1e-12);
    CHECK((params.kq_11() - point.U).norm() == 0.0);
    CHECK((params.pv_22() - Eigen::MatrixXd::Identity(1, 1)).norm() == 0.0);
    // Non-participating blocks stay zero.
    CHECK(params.w_pv.topRows(d).norm() == 0.0);
    CHECK(params.w_kq.rightCols(1).norm() == 0.0);
}

TEST_CASE("optimal_params: rank budget zero gives the zero matrix") {
    CounterRng rng(8);
    const CovarianceSpec cov = random_psd(4, rng);
    const auto [params, point] = optimal_params(cov, 6, 1, 0);
    (void)params;
    CHECK(point.U.norm() == 0.0);
}

TEST_CASE("optimal_params: rank-1 closed form matches substitution and grid search") {
    Eigen::VectorXd d(2);
    d << 3, 1;
    const CovarianceSpec cov = make_covariance(d.asDiagonal());
    const int N = 2;
    const auto [params, point] = optimal_params(cov, N, 1, 1);
    (void)params;
    Eigen::MatrixXd expect = Eigen::MatrixXd::Zero(2, 2);
    expect(0, 0) = 2.0 / 13.0;
    CHECK((point.U - expect).norm() < 1e-12);

    const double closed = refactored_loss(point, cov, N).loss;
    CHECK(closed == doctest::Approx(-9.0 / 13.0).epsilon(1e-12));

    // Independent check: grid over rank-1 symmetric candidates v * q q^T.
    double grid_min = 0.0;
    for (double phi = 0.0; phi < M_PI; phi += 0.002) {
        const double c = std::cos(phi), s = std::sin(phi);
        Eigen::MatrixXd qq(2, 2);
        qq << c * c, c * s, c * s, s * s;
        for (double v = 0.0; v <= 0.5; v += 0.002) {
            const double value = refactored_loss(point_of(v * qq, 1.0), cov, N).loss;
            grid_min = std::min(grid_min, value);
        }
    }
    CHECK(closed <= grid_min + 1e-6);
    CHECK(grid_min <= closed + 1e-3);  // the grid brackets the optimum
}

TEST_CASE("optimal_params: rank budget above d rejected") {
    const CovarianceSpec cov = make_covariance(Eigen::MatrixXd::Identity(3, 3));
    CHECK_THROWS_AS(optimal_params(cov, 4, 1, 4), std::invalid_argument);
    CHECK_THROWS_AS(optimal_params(cov, 4, 1, -1), std::invalid_argument);
}

TEST_CASE("refactored_loss: optimum has zero gap and the closed-form value") {
    CounterRng rng(10);
    for (int it = 0; it < 10; ++it) {
        const CovarianceSpec cov = random_psd(4, rng);
        const int N = 3 + static_cast<int>(rng.below(20));
        const auto [params, opt] = optimal_params(cov, N, 1, 4);
        (void)params;
        const LossBreakdown lb = refactored_loss(opt, cov, N);
        CHECK(std::abs(lb.gap) <= 1e-9);
        CHECK(std::abs(lb.loss - lb.min_loss) <= 1e-9);
    }
}

TEST_CASE("refactored_loss: zero point has zero objective") {
    const CovarianceSpec cov = make_covariance(Eigen::MatrixXd::Identity(3, 3));
    const LossBreakdown lb = refactored_loss(point_of(Eigen::MatrixXd::Zero(3, 3), 0.0), cov, 5);
    CHECK(lb.loss == 0.0);
    CHECK(lb.gap == doctest::Approx(-lb.min_loss).epsilon(1e-12));
}

TEST_CASE("refactored_loss: invariant under (cU, u/c)") {
    CounterRng rng(11);
    const CovarianceSpec cov = random_psd(3, rng);
    const Eigen::MatrixXd U = random_gaussian(3, 3, rng);
    const double u = 0.8;
    const double base = refactored_loss(point_of(U, u), cov, 9).loss;
    const double scaled = refactored_loss(point_of(7.0 * U, u / 7.0), cov, 9).loss;
    CHECK(std::abs(base - scaled) <= 1e-12 * (1.0 + std::abs(base)));
}

TEST_CASE("refactored_loss: identity loss = min + gap on random points") {
    CounterRng rng(12);
    for (int it = 0; it < 1000; ++it) {
        const int d = 2 + static_cast<int>(rng.below(3));
        const CovarianceSpec cov = random_psd(d, rng);
        const int N = 2 + static_cast<int>(rng.below(30));
        const Eigen::MatrixXd U = random_gaussian(d, d, rng);
        const double u = rng.normal();
        const LossBreakdown lb = refactored_loss(point_of(U, u), cov, N);
        CHECK(std::abs(lb.loss - lb.min_loss - lb.gap) <= 1e-9 * (1.0 + std::abs(lb.loss)));
    }
}

TEST_CASE("refactored_loss gradients match central finite differences") {
    CounterRng rng(13);
    const double h = 1e-6;
    for (int it = 0; it < 20; ++it) {
        const int d = 2 + static_cast<int>(rng.below(3));
        const CovarianceSpec cov = random_psd(d, rng);
        const int N = 2 + static_cast<int>(rng.below(10));
        const Eigen::MatrixXd U = random_gaussian(d, d, rng);
        const double u = 1.0 + 0.2 * rng.normal();
        const Eigen::MatrixXd grad = refactored_loss_grad_U(point_of(U, u), cov, N);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                Eigen::MatrixXd up = U, dn = U;
                up(i, j) += h;
                dn(i, j) -= h;
                const double fd = (refactored_loss(point_of(up, u), cov, N).loss -
                                   refactored_loss(point_of(dn, u), cov, N).loss) /
                                  (2 * h);
                CHECK(std::abs(grad(i, j) - fd) <= 1e-5 * (1.0 + std::abs(fd)));
            }
        const double gu = refactored_loss_grad_u(point_of(U, u), cov, N);
        const double fd_u = (refactored_loss(point_of(U, u + h), cov, N).loss -
                             refactored_loss(point_of(U, u - h), cov, N).loss) /
                            (2 * h);
        CHECK(std::abs(gu - fd_u) <= 1e-5 * (1.0 + std::abs(fd_u)));
    }
}

TEST_CASE("rank-r gap is nonincreasing in the budget") {
    CounterRng rng(14);
    for (int it = 0; it < 10; ++it) {
        const int d = 4;
        const CovarianceSpec cov = random_psd(d, rng);
        const int N = 5;
        double prev_gap = std::numeric_limits<double>::infinity();
        for (int r = 0; r <= d; ++r) {
            const auto [params, point] = optimal_params(cov, N, 1, r);
            (void)params;
            const double gap = refactored_loss(point, cov, N).gap;
            CHECK(gap <= prev_gap + 1e-12);
            prev_gap = gap;
        }
    }
}

TEST_CASE("rank-r closed form beats a random search") {
    CounterRng rng(15);
    for (const int d : {3, 4}) {
        const CovarianceSpec cov = random_psd(d, rng);
        const int N = 6;
        for (const int r : {1, 2}) {
            const auto [params, point] = optimal_params(cov, N, 1, r);
            (void)params;
            const double closed = refactored_loss(point, cov, N).loss;
            double best = 0.0;
            for (int it = 0; it < 10000; ++it) {
                const Eigen::MatrixXd A = random_gaussian(d, r, rng);
                const Eigen::MatrixXd B = random_gaussian(d, r, rng);
                const Eigen::MatrixXd U = A * B.transpose();
                // Best scalar for this U in closed form.
                const double denom =
                    (compute_gamma(cov, N).gamma * cov.lambda * U * cov.lambda * U.transpose())
                        .trace();
                const double numer = (cov.lambda * cov.lambda * U.transpose()).trace();
                const double u = denom > 0 ? numer / denom : 0.0;
                best = std::min(best, refactored_loss(point_of(U, u), cov, N).loss);
            }
            CHECK(closed <= best + 1e-9);
        }
    }
}

TEST_CASE("empirical_loss: zero parameters score the label energy") {
    CounterRng rng(16);
    const CovarianceSpec cov = random_psd(3, rng);
    TaskWeights w;
    w.W = random_gaussian(2, 3, rng);
    std::vector<Prompt> prompts;
    double expect = 0.0;
    for (int b = 0; b < 5; ++b) {
        prompts.push_back(sample_prompt(cov, w, 6, RngSeed{100 + b}));
        expect += prompts.back().truth.squaredNorm();
    }
    expect /= 2.0 * prompts.size();
    CHECK(empirical_loss(LsaParams::zero(3, 2), prompts) == doctest::Approx(expect));
    CHECK_THROWS_AS(empirical_loss(LsaParams::zero(3, 2), {}), std::invalid_argument);
}

TEST_CASE("empirical_loss: forced-correct prompt scores zero") {
    CounterRng rng(17);
    const CovarianceSpec cov = random_psd(2, rng);
    const auto [params, point] = optimal_params(cov, 4, 1, 2);
    (void)point;
    TaskWeights w;
    w.W = random_gaussian(1, 2, rng);
    Prompt p = sample_prompt(cov, w, 4, RngSeed{55});
    p.truth = lsa_forward(params, build_embedding(p), 4);
    CHECK(empirical_loss(params, {p}) == doctest::Approx(0.0));
}

TEST_CASE("empirical loss at the optimum: two independent estimates agree") {
    const CovarianceSpec cov = make_covariance(Eigen::MatrixXd::Identity(2, 2));
    const int N = 20;
    const auto [params, point] = optimal_params(cov, N, 1, 2);
    (void)point;
    TaskWeights w;
    w.W = Eigen::MatrixXd::Zero(1, 2);

    auto estimate = [&](int count, RngSeed seed, double* se) {
        CounterRng rng(seed);
        double sum = 0.0, ss = 0.0;
        for (int b = 0; b < count; ++b) {
            CounterRng trial = rng.fork(b);
            CounterRng wr = trial.fork(0);
            TaskWeights tw;
            tw.W = random_gaussian(1, 2, wr);
            const Prompt p = sample_prompt(cov, tw, N, trial.fork(1));
            const Eigen::VectorXd pred = lsa_forward(params, build_embedding(p), N);
            const double loss = 0.5 * (pred - p.truth).squaredNorm();
            sum += loss;
            ss += loss * loss;
        }
        const double mean = sum / count;
        *se = std::sqrt((ss / count - mean * mean) / count);
        return mean;
    };
    double se_small = 0.0, se_big = 0.0;
    const double small = estimate(10000, 1, &se_small);
    const double big = estimate(100000, 2, &se_big);
    const double combined = std::sqrt(se_small * se_small + se_big * se_big);
    CHECK(std::abs(small - big) <= 3.0 * combined);
}

TEST_CASE("gradient descent: starting at the optimum cannot worsen the gap") {
    CounterRng rng(18);
    const CovarianceSpec cov = random_psd(3, rng);
    const int N = 10;
    const auto [params, opt] = optimal_params(cov, N, 1, 3);
    (void)params;
    PretrainConfig config;
    config.N = N;
    config.steps = 100;
    const DescentResult res = fit_gradient_descent_from(config, cov, opt);
    CHECK_FALSE(res.diverged);
    CHECK(refactored_loss(res.point, cov, N).gap <=
          refactored_loss(opt, cov, N).gap + 1e-12);
}

TEST_CASE("gradient descent: converges to Gamma inverse on identity covariance") {
    const CovarianceSpec cov = make_covariance(Eigen::MatrixXd::Identity(4, 4));
    const int N = 20;
    PretrainConfig config;
    config.N = N;
    config.steps = 5000;
    const DescentResult res = fit_gradient_descent(config, cov, RngSeed{77});
    CHECK_FALSE(res.diverged);
    const Eigen::MatrixXd target =
        compute_gamma(cov, N).gamma.inverse();
    const Eigen::MatrixXd product = res.point.u * res.point.U;
    CHECK((product - target).norm() / target.norm() <= 1e-2);
}

TEST_CASE("gradient descent: same seed, same trajectory") {
    CounterRng rng(19);
    const CovarianceSpec cov = random_psd(3, rng);
    PretrainConfig config;
    config.N = 8;
    config.steps = 50;
    const DescentResult a = fit_gradient_descent(config, cov, RngSeed{5});
    const DescentResult b = fit_gradient_descent(config, cov, RngSeed{5});
    CHECK(a.point.U == b.point.U);
    CHECK(a.point.u == b.point.u);
    CHECK(a.final_loss == b.final_loss);
}

TEST_CASE("parameter round trip through the reparameterized point") {
    CounterRng rng(20);
    const CovarianceSpec cov = random_psd(3, rng);
    const auto [params, point] = optimal_params(cov, 5, 2, 3);
    const LsaParams rebuilt = params_from_reparam(point, 2);
    CHECK((params.w_pv - rebuilt.w_pv).norm() == 0.0);
    CHECK((params.w_kq - rebuilt.w_kq).norm() == 0.0);
}

TEST_CASE("gradient descent: a forced oversized step reports divergence") {
    const CovarianceSpec cov = make_covariance(10.0 * Eigen::MatrixXd::Identity(4, 4));
    PretrainConfig config;
    config.N = 4;
    config.steps = 50;
    config.step_size = 10.0;  // far above the stable range
    const DescentResult res = fit_gradient_descent(config, cov, RngSeed{1});
    CHECK(res.diverged);
    CHECK(res.final_loss >= res.initial_loss);
}

TEST_CASE("parameter and point JSON round trips") {
    CounterRng rng(21);
    const CovarianceSpec cov = random_psd(3, rng);
    const auto [params, point] = optimal_params(cov, 7, 2, 2);

    const LsaParams p2 = params_from_json(params_to_json(params));
    CHECK(p2.d == params.d);
    CHECK(p2.K == params.K);
    CHECK((p2.w_pv - params.w_pv).norm() == 0.0);
    CHECK((p2.w_kq - params.w_kq).norm() == 0.0);

    const ReparamPoint r2 = reparam_from_json(reparam_to_json(point));
    CHECK((r2.U - point.U).norm() == 0.0);
    CHECK(r2.u == point.u);
    CHECK(r2.rank_budget == point.rank_budget);
}
