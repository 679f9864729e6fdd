// SPDX-License-Identifier: Apache-2.0
//
// chanprobe: toolkit for probing generative wireless channel models

#pragma once

#include <Eigen/Dense>
#include <string>

namespace chanprobe {

/// Relative Frobenius asymmetry ||c - c^H|| / ||c|| (0 for the zero matrix).
double hermitian_asymmetry(const Eigen::MatrixXcd& c);

/// Lower-triangular L with L L^H = c + loading * I for a Hermitian PSD c.
/// On top of `base_loading`, the smallest loading from the ladder
/// {0, 1e-10, 1e-8, 1e-6} * trace(c)/N that yields a factor reconstructing to
/// 1e-8 relative Frobenius error is applied. Semidefinite inputs (zero
/// eigenvalues) are handled without loading.
///
/// Throws InvalidArgument when c is not Hermitian within 1e-10 relative
/// asymmetry, NotPositiveSemidefinite (naming `name`) when every ladder rung
/// fails.
Eigen::MatrixXcd cholesky_psd(const Eigen::MatrixXcd& c, double base_loading = 0.0,
                              const std::string& name = "matrix",
                              double* applied_loading = nullptr);

}  // namespace chanprobe
