// SPDX-License-Identifier: Apache-2.0
//
// chanprobe: toolkit for probing generative wireless channel models

#pragma once

#include <string>
#include <vector>

#include "chanprobe/gmm.hpp"
#include "chanprobe/types.hpp"

namespace chanprobe::genmod {

/// Forward-process noise schedule: alpha_t = 1 - beta_t with beta linear in t,
/// alpha_bar_t the running product, and reverse-process variances
/// sigma_t^2 = (1 - alpha_t)(1 - alpha_bar_{t-1}) / (1 - alpha_bar_t), sigma_1^2 = 0.
struct DiffusionSchedule {
    Eigen::VectorXd alphas;      // t = 1..T at index t-1
    Eigen::VectorXd alpha_bars;
    Eigen::VectorXd sigmas_sq;
    double beta_start = 1e-4;
    double beta_end = 0.02;

    int n_steps() const { return static_cast<int>(alphas.size()); }

    std::string to_json() const;
    static DiffusionSchedule from_json(const std::string& text);
};

DiffusionSchedule make_schedule(int t_steps, double beta_start = 1e-4, double beta_end = 0.02);

/// Real-stacked image of a complex GMM: means [Re mu; Im mu], covariances
/// 0.5 * [[Re C, -Im C], [Im C, Re C]]. Eigendecompositions are precomputed
/// for the posterior-mean oracle.
struct RealGmm {
    Eigen::VectorXd weights;                    // K
    Eigen::MatrixXd means;                      // 2N x K
    std::vector<Eigen::MatrixXd> covariances;   // 2N x 2N symmetric PSD
    std::vector<Eigen::MatrixXd> basis;         // eigenvectors U_k
    std::vector<Eigen::VectorXd> eigenvalues;   // clamped >= 0

    Eigen::Index dim() const { return means.rows(); }
    int n_components() const { return static_cast<int>(weights.size()); }
};

RealGmm real_gmm_from_complex(const GmmModel& model);

/// Rebuilds the complex second-order statistics from the real-stacked model
/// (exact inverse of real_gmm_from_complex).
GmmModel complex_gmm_from_real(const RealGmm& rgmm);

/// Exact conditional expectation E[h_0 | h_t] for a GMM target under the
/// forward process h_t = sqrt(alpha_bar_t) h_0 + sqrt(1 - alpha_bar_t) eps.
/// Component posterior weights are computed in the log domain.
Eigen::VectorXd analytic_posterior_mean(const RealGmm& rgmm, const Eigen::VectorXd& h_t, int t,
                                        const DiffusionSchedule& sched);

/// Ancestral reverse-chain sampling driven by the analytic posterior mean:
/// h_T ~ N(0, I); for t = T..2, h_{t-1} = mu(h_t, t) + sigma_t eps with
///   mu(h_t, t) = [sqrt(alpha_t)(1 - abar_{t-1}) h_t
///                 + sqrt(abar_{t-1})(1 - alpha_t) E[h_0|h_t]] / (1 - abar_t);
/// the final step outputs E[h_0|h_1], then real vectors unstack to C^N.
ChannelDataset sample_diffusion(const RealGmm& rgmm, const DiffusionSchedule& sched,
                                Eigen::Index m, RngStream rng);

}  // namespace chanprobe::genmod
