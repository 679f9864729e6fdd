// SPDX-License-Identifier: Apache-2.0
//
// chanprobe: toolkit for probing generative wireless channel models

#pragma once

#include <vector>

#include "chanprobe/types.hpp"

namespace chanprobe::genmod {

/// Single complex Gaussian fitted by sample mean and sample covariance.
struct ScovModel {
    Eigen::VectorXcd mean;
    Eigen::MatrixXcd covariance;
};

/// Mixture of K circularly-symmetric complex Gaussians.
struct GmmModel {
    Eigen::VectorXd weights;                    // K, on the simplex
    Eigen::MatrixXcd means;                     // N x K
    std::vector<Eigen::MatrixXcd> covariances;  // K Hermitian PSD N x N
    std::vector<double> fit_log;                // per-iteration mean log-likelihood

    int n_components() const { return static_cast<int>(weights.size()); }
    Eigen::Index dim() const { return means.rows(); }
    void validate() const;
};

struct EmOptions {
    double tol = 1e-5;  // relative change of the mean log-likelihood
    int max_iter = 50;
    Eigen::Index kmeans_subset = 10000;
};

ScovModel fit_scov(const ChannelDataset& ds);

GmmModel gmm_from_scov(const ScovModel& scov);

/// EM fit of a K-component complex GMM. Means are seeded with k-means++ on a
/// subset, covariances start at the sample covariance, weights uniform.
/// Components that collapse are re-seeded at the lowest-likelihood sample (at
/// most 3 times, then frozen at scov statistics).
GmmModel fit_gmm(const ChannelDataset& ds, int k, const EmOptions& opts, RngStream rng);

/// Posterior component probabilities p(k|h), computed in the log domain.
Eigen::VectorXd gmm_responsibility(const GmmModel& model, const ChannelVector& h);

/// Mean log-likelihood of a dataset under the mixture.
double gmm_mean_log_likelihood(const GmmModel& model, const ChannelDataset& ds);

/// Ancestral sampling: categorical component draw, then mu_k + chol(C_k) eps.
ChannelDataset sample_gmm(const GmmModel& model, Eigen::Index m, RngStream rng);

/// Log-density rows of every component for a batch of channels; log N_C uses
/// the circular convention pi^-N det(C)^-1 exp(-(h-mu)^H C^-1 (h-mu)).
/// Factorizations are cached internally.
class GmmDensity {
  public:
    explicit GmmDensity(const GmmModel& model, double extra_diag = 0.0);

    /// K x M matrix of log(pi_k) + log N_C(h_i; mu_k, C_k + extra_diag I).
    Eigen::MatrixXd weighted_log_densities(const Eigen::MatrixXcd& samples) const;

    const Eigen::MatrixXcd& cholesky(int k) const { return lowers_[k]; }
    double log_normalizer(int k) const { return log_norms_[k]; }

  private:
    const GmmModel& model_;
    std::vector<Eigen::MatrixXcd> lowers_;
    std::vector<double> log_norms_;
};

}  // namespace chanprobe::genmod
