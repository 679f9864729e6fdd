// SPDX-License-Identifier: Apache-2.0
//
// chanprobe: toolkit for probing generative wireless channel models

#include "chanprobe/linalg.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "chanprobe/errors.hpp"

namespace chanprobe {

namespace {

// Semidefinite-tolerant complex Cholesky: a zero pivot zeroes out its column
// instead of failing, so PSD matrices with null directions factor cleanly.
// Returns false on a clearly negative pivot.
bool try_cholesky_lower(const Eigen::MatrixXcd& a, Eigen::MatrixXcd& lower) {
    const Eigen::Index n = a.rows();
    lower.setZero(n, n);

    double max_diag = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) max_diag = std::max(max_diag, std::abs(a(j, j).real()));
    const double pivot_tol =
        static_cast<double>(n) * std::numeric_limits<double>::epsilon() * max_diag;

    for (Eigen::Index j = 0; j < n; ++j) {
        const double d = a(j, j).real() - lower.row(j).head(j).squaredNorm();
        if (d <= pivot_tol) {
            if (d < -pivot_tol) return false;
            continue;  // null direction: column stays zero
        }
        const double ljj = std::sqrt(d);
        lower(j, j) = ljj;
        for (Eigen::Index i = j + 1; i < n; ++i) {
            const std::complex<double> s =
                lower.row(j).head(j).dot(lower.row(i).head(j));  // sum L(i,k) conj(L(j,k))
            lower(i, j) = (a(i, j) - s) / ljj;
        }
    }
    return true;
}

}  // namespace

double hermitian_asymmetry(const Eigen::MatrixXcd& c) {
    const double norm = c.norm();
    if (norm == 0.0) return 0.0;
    return (c - c.adjoint()).norm() / norm;
}

Eigen::MatrixXcd cholesky_psd(const Eigen::MatrixXcd& c, double base_loading,
                              const std::string& name, double* applied_loading) {
    if (c.rows() != c.cols()) throw InvalidArgument(name + ": matrix must be square");
    if (base_loading < 0.0) throw InvalidArgument(name + ": loading must be >= 0");
    if (hermitian_asymmetry(c) > 1e-10)
        throw InvalidArgument(name + ": matrix is not Hermitian within 1e-10");

    const Eigen::Index n = c.rows();
    const double trace_per_dim = c.trace().real() / static_cast<double>(n);
    const std::array<double, 4> ladder = {0.0, 1e-10, 1e-8, 1e-6};

    const Eigen::MatrixXcd herm = 0.5 * (c + c.adjoint());
    Eigen::MatrixXcd lower;

    for (double rung : ladder) {
        const double loading = base_loading + rung * trace_per_dim;
        Eigen::MatrixXcd target = herm;
        target.diagonal().array() += loading;

        if (!try_cholesky_lower(target, lower)) continue;

        const double target_norm = target.norm();
        const double err = (lower * lower.adjoint() - target).norm();
        if (err <= 1e-8 * std::max(target_norm, 1e-300)) {
            if (applied_loading) *applied_loading = loading;
            return lower;
        }
    }
    throw NotPositiveSemidefinite(name + ": not positive semidefinite at maximum diagonal loading");
}

}  // namespace chanprobe
