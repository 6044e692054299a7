#include "complab/gaussian_model.hpp"

#include <algorithm>
#include <stdexcept>

namespace complab {

namespace {

constexpr double kPsdClamp = 1e-12;

Eigen::MatrixXd gaussian_matrix(int rows, int cols, CounterRng& rng) {
    Eigen::MatrixXd m(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i) m(i, j) = rng.normal();
    return m;
}

/// Orthogonal matrix from the QR of a Gaussian draw, sign-fixed.
Eigen::MatrixXd random_orthogonal(int n, CounterRng& rng) {
    Eigen::MatrixXd g = gaussian_matrix(n, n, rng);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
    Eigen::MatrixXd q = qr.householderQ();
    Eigen::VectorXd r_diag = qr.matrixQR().diagonal();
    for (int i = 0; i < n; ++i)
        if (r_diag(i) < 0) q.col(i) = -q.col(i);
    return q;
}

/// Rotated diagonal block; constant spectra short-circuit to an exact c*I.
Eigen::MatrixXd spectrum_block(const std::vector<double>& spectrum, CounterRng& rng) {
    const int n = static_cast<int>(spectrum.size());
    bool constant = true;
    for (double v : spectrum) {
        if (v < 0.0) throw std::invalid_argument("make_block_covariance: negative eigenvalue");
        if (v != spectrum.front()) constant = false;
    }
    if (constant) return spectrum.front() * Eigen::MatrixXd::Identity(n, n);
    Eigen::MatrixXd q = random_orthogonal(n, rng);
    Eigen::VectorXd d(n);
    for (int i = 0; i < n; ++i) d(i) = spectrum[i];
    Eigen::MatrixXd block = q * d.asDiagonal() * q.transpose();
    return 0.5 * (block + block.transpose());
}

}  // namespace

void TaskSpace::validate() const {
    if (d < 1 || K < 1) throw std::invalid_argument("TaskSpace: d and K must be positive");
    if (static_cast<int>(active_sets.size()) != K)
        throw std::invalid_argument("TaskSpace: need one active set per task");
    std::vector<char> seen(d, 0);
    for (const auto& set : active_sets) {
        if (set.empty()) throw std::invalid_argument("TaskSpace: empty active set");
        for (int idx : set) {
            if (idx < 0 || idx >= d) throw std::invalid_argument("TaskSpace: index out of range");
            if (seen[idx]) throw std::invalid_argument("TaskSpace: active sets overlap");
            seen[idx] = 1;
        }
    }
}

Eigen::MatrixXd CovarianceSpec::sqrt_psd() const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(lambda);
    if (eig.info() != Eigen::Success)
        throw std::runtime_error("CovarianceSpec: eigendecomposition failed");
    Eigen::VectorXd vals = eig.eigenvalues();
    for (int i = 0; i < vals.size(); ++i) vals(i) = vals(i) < kPsdClamp ? 0.0 : std::sqrt(vals(i));
    return eig.eigenvectors() * vals.asDiagonal() * eig.eigenvectors().transpose();
}

void CovarianceSpec::validate() const {
    if (lambda.rows() != lambda.cols())
        throw std::invalid_argument("CovarianceSpec: matrix not square");
    if ((lambda - lambda.transpose()).norm() != 0.0)
        throw std::invalid_argument("CovarianceSpec: matrix not symmetric");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(lambda, Eigen::EigenvaluesOnly);
    const double min_eig = eig.eigenvalues().minCoeff();
    if (min_eig < -kPsdClamp)
        throw std::invalid_argument("CovarianceSpec: matrix not positive semidefinite");
    const double norm = eig.eigenvalues().cwiseAbs().maxCoeff();
    if (norm < spectral_min || norm > spectral_max)
        throw std::invalid_argument("CovarianceSpec: spectral norm outside declared bounds");
    if (epsilon < 0.0) throw std::invalid_argument("CovarianceSpec: negative epsilon");
}

CovarianceSpec make_covariance(Eigen::MatrixXd lambda, double epsilon) {
    CovarianceSpec cov;
    cov.lambda = 0.5 * (lambda + lambda.transpose());
    cov.epsilon = epsilon;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(cov.lambda, Eigen::EigenvaluesOnly);
    const double norm = eig.eigenvalues().cwiseAbs().maxCoeff();
    cov.spectral_min = norm;
    cov.spectral_max = norm;
    cov.validate();
    return cov;
}

CovarianceSpec make_block_covariance(int d1, int d2, const std::vector<double>& spectrum1,
                                     const std::vector<double>& spectrum2, double epsilon,
                                     RngSeed seed) {
    if (d1 < 1 || d2 < 1) throw std::invalid_argument("make_block_covariance: dimensions >= 1");
    if (static_cast<int>(spectrum1.size()) != d1 || static_cast<int>(spectrum2.size()) != d2)
        throw std::invalid_argument("make_block_covariance: spectrum length mismatch");
    if (epsilon < 0.0) throw std::invalid_argument("make_block_covariance: negative epsilon");
    const double top1 = *std::max_element(spectrum1.begin(), spectrum1.end());
    const double top2 = *std::max_element(spectrum2.begin(), spectrum2.end());
    if (epsilon > 0.0 && epsilon * epsilon > top1 * top2)
        throw std::invalid_argument(
            "make_block_covariance: epsilon too large for a PSD cross block");

    CounterRng rng(seed);
    Eigen::MatrixXd b1 = spectrum_block(spectrum1, rng);
    Eigen::MatrixXd b2 = spectrum_block(spectrum2, rng);

    const int d = d1 + d2;
    Eigen::MatrixXd lambda = Eigen::MatrixXd::Zero(d, d);
    lambda.topLeftCorner(d1, d1) = b1;
    lambda.bottomRightCorner(d2, d2) = b2;

    if (epsilon > 0.0) {
        // Cross block B1^{1/2} R B2^{1/2} with ||R|| <= 1 keeps the assembled
        // matrix PSD (Schur complement); scale R so the block hits epsilon.
        Eigen::MatrixXd r = gaussian_matrix(d1, d2, rng);
        Eigen::JacobiSVD<Eigen::MatrixXd> svd_r(r);
        const double top = svd_r.singularValues()(0);
        if (top > 0.0) {
            CovarianceSpec c1{b1}, c2{b2};
            Eigen::MatrixXd cross = c1.sqrt_psd() * (r / top) * c2.sqrt_psd();
            Eigen::JacobiSVD<Eigen::MatrixXd> svd_c(cross);
            const double cross_top = svd_c.singularValues()(0);
            if (cross_top > epsilon) cross *= epsilon / cross_top;
            lambda.topRightCorner(d1, d2) = cross;
            lambda.bottomLeftCorner(d2, d1) = cross.transpose();
        }
    }

    lambda = 0.5 * (lambda + lambda.transpose()).eval();
    CovarianceSpec cov = make_covariance(std::move(lambda), epsilon);
    return cov;
}

Prompt sample_prompt(const CovarianceSpec& cov, const TaskWeights& weights, int N,
                     CounterRng rng) {
    if (N < 1) throw std::invalid_argument("sample_prompt: N >= 1");
    cov.validate();
    if (weights.dim() != cov.dim())
        throw std::invalid_argument("sample_prompt: weight/covariance dimension mismatch");
    const int d = cov.dim();
    const Eigen::MatrixXd root = cov.sqrt_psd();

    Prompt p;
    p.xs = root * gaussian_matrix(d, N, rng);
    p.ys = weights.W * p.xs;
    p.query = root * gaussian_matrix(d, 1, rng);
    p.truth = weights.W * p.query;
    return p;
}

Prompt sample_prompt(const CovarianceSpec& cov, const TaskWeights& weights, int N,
                     RngSeed seed) {
    return sample_prompt(cov, weights, N, CounterRng(seed));
}

PromptEmbedding build_embedding(const Prompt& p) {
    if (p.ys.cols() != p.xs.cols() || p.query.size() != p.xs.rows() ||
        p.truth.size() != p.ys.rows())
        throw std::invalid_argument("build_embedding: inconsistent prompt dimensions");
    const int d = p.dim(), K = p.tasks(), N = p.examples();
    PromptEmbedding emb;
    emb.d = d;
    emb.K = K;
    emb.E = Eigen::MatrixXd::Zero(d + K, N + 1);
    emb.E.topLeftCorner(d, N) = p.xs;
    emb.E.bottomLeftCorner(K, N) = p.ys;
    emb.E.col(N).head(d) = p.query;
    return emb;
}

PromptEmbedding embed_examples(const LabeledSet& set, const Eigen::VectorXd& query, int tasks) {
    Prompt p;
    p.xs = set.xs;
    p.ys = set.ys;
    p.query = query;
    p.truth = Eigen::VectorXd::Zero(tasks);
    return build_embedding(p);
}

TaskWeights sample_confined_weights(const TaskSpace& space, double delta, CounterRng& rng) {
    space.validate();
    if (delta < 0.0) throw std::invalid_argument("sample_confined_weights: negative delta");
    TaskWeights tw;
    tw.delta = delta;
    tw.W = Eigen::MatrixXd::Zero(space.K, space.d);
    for (int k = 0; k < space.K; ++k) {
        std::vector<char> active(space.d, 0);
        for (int idx : space.active_sets[k]) active[idx] = 1;
        for (int j = 0; j < space.d; ++j)
            tw.W(k, j) = active[j] ? rng.normal()
                                   : (delta > 0.0 ? delta * rng.truncated_normal_unit() : 0.0);
    }
    return tw;
}

LabeledSet make_confined_dataset(const TaskSpace& space, int task, const CovarianceSpec& cov,
                                 const TaskWeights& weights, double delta, int N,
                                 CounterRng rng) {
    space.validate();
    if (task < 0 || task >= space.K)
        throw std::invalid_argument("make_confined_dataset: task index out of range");
    if (delta < 0.0) throw std::invalid_argument("make_confined_dataset: negative delta");
    if (N < 1) throw std::invalid_argument("make_confined_dataset: N >= 1");
    if (cov.dim() != space.d || weights.dim() != space.d)
        throw std::invalid_argument("make_confined_dataset: dimension mismatch");
    const auto& active = space.active_sets[task];
    if (active.empty()) throw std::invalid_argument("make_confined_dataset: empty active set");

    const int da = static_cast<int>(active.size());
    Eigen::MatrixXd block(da, da);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < da; ++j) block(i, j) = cov.lambda(active[i], active[j]);
    const Eigen::MatrixXd root = CovarianceSpec{block}.sqrt_psd();

    LabeledSet out;
    out.xs = Eigen::MatrixXd::Zero(space.d, N);
    for (int n = 0; n < N; ++n) {
        Eigen::VectorXd a = root * gaussian_matrix(da, 1, rng);
        for (int i = 0; i < da; ++i) out.xs(active[i], n) = a(i);
        if (delta > 0.0) {
            std::vector<char> on(space.d, 0);
            for (int idx : active) on[idx] = 1;
            for (int j = 0; j < space.d; ++j)
                if (!on[j]) out.xs(j, n) = delta * rng.truncated_normal_unit();
        }
    }
    out.ys = weights.W * out.xs;
    return out;
}

LabeledSet make_confined_dataset(const TaskSpace& space, int task, const CovarianceSpec& cov,
                                 const TaskWeights& weights, double delta, int N,
                                 RngSeed seed) {
    return make_confined_dataset(space, task, cov, weights, delta, N, CounterRng(seed));
}

double max_cross_singular_value(const CovarianceSpec& cov, const std::vector<int>& a,
                                const std::vector<int>& b) {
    Eigen::MatrixXd cross(a.size(), b.size());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) cross(i, j) = cov.lambda(a[i], b[j]);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(cross);
    return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

void validate_cross_blocks(const CovarianceSpec& cov, const TaskSpace& space) {
    space.validate();
    for (int k = 0; k < space.K; ++k)
        for (int g = k + 1; g < space.K; ++g) {
            const double top =
                max_cross_singular_value(cov, space.active_sets[k], space.active_sets[g]);
            if (top > cov.epsilon + 1e-12)
                throw std::invalid_argument("cross block exceeds declared epsilon");
        }
}

}  // namespace complab
