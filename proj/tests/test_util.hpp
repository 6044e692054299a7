#pragma once

#include <Eigen/Dense>

#include "complab/gaussian_model.hpp"
#include "complab/rng.hpp"

namespace complab::testutil {

inline Eigen::MatrixXd random_gaussian(int rows, int cols, CounterRng& rng) {
    Eigen::MatrixXd m(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i) m(i, j) = rng.normal();
    return m;
}

/// Random PSD matrix A A^T / d with a strictly positive trace.
inline CovarianceSpec random_psd(int d, CounterRng& rng) {
    Eigen::MatrixXd a = random_gaussian(d, d, rng);
    return make_covariance(a * a.transpose() / d);
}

/// Random PSD with the given (distinct, positive) eigenvalues under a
/// random orthogonal basis.
inline CovarianceSpec psd_with_spectrum(const std::vector<double>& spectrum, CounterRng& rng) {
    const int d = static_cast<int>(spectrum.size());
    Eigen::MatrixXd g = random_gaussian(d, d, rng);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
    Eigen::MatrixXd q = qr.householderQ();
    Eigen::VectorXd vals(d);
    for (int i = 0; i < d; ++i) vals(i) = spectrum[i];
    return make_covariance(q * vals.asDiagonal() * q.transpose());
}

}  // namespace complab::testutil
