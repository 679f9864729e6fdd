// SPDX-License-Identifier: Apache-2.0
//
// chanprobe: toolkit for probing generative wireless channel models

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>

#include "chanprobe/rng.hpp"

namespace chanprobe {

/// One channel realization h in C^N.
using ChannelVector = Eigen::VectorXcd;

/// Uniform rectangular array, N = n_vertical * n_horizontal elements.
struct UraGeometry {
    int n_vertical = 4;
    int n_horizontal = 16;
    double spacing_vertical = 1.0;   // in wavelengths
    double spacing_horizontal = 0.5; // in wavelengths

    int n_antennas() const { return n_vertical * n_horizontal; }
    void validate() const;
};

/// Additive-noise level; SNR is defined as 1/sigma_sq.
struct NoiseConfig {
    double sigma_sq = 1.0;

    static NoiseConfig from_snr_db(double snr_db);
    double snr_db() const;
    void validate() const;
};

/// Provenance carried alongside a dataset (JSON sidecar on disk).
struct DatasetMeta {
    std::uint64_t seed = 0;
    std::string scenario_id;
    std::string generator_id;
    double norm_scale = 1.0;
};

/// Ordered collection of channel vectors of common dimension N, stored as the
/// columns of an N x M complex matrix.
struct ChannelDataset {
    Eigen::MatrixXcd samples;  // N x M, one channel per column
    double norm_target = 0.0;  // expected mean squared norm once normalized
    bool normalized = false;
    DatasetMeta meta;

    Eigen::Index n_antennas() const { return samples.rows(); }
    Eigen::Index n_samples() const { return samples.cols(); }
    double mean_squared_norm() const;

    /// Checks dimension/finiteness invariants and, when flagged normalized,
    /// the mean-squared-norm invariant. Throws on violation.
    void validate() const;
};

/// ε ~ N_C(0, I): independent real/imaginary parts N(0, 1/2) per entry, so
/// E[|ε_i|^2] = 1.
ChannelVector sample_complex_standard_normal(RngSequence& rng, Eigen::Index n);
ChannelVector sample_complex_standard_normal(RngStream stream, Eigen::Index n);

/// Rescales all samples by the single global scalar that makes the mean
/// squared norm equal norm_target (default N). Directions are unchanged.
ChannelDataset normalize_dataset(const ChannelDataset& ds);

}  // namespace chanprobe
