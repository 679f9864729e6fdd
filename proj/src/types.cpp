// SPDX-License-Identifier: Apache-2.0
//
// chanprobe: toolkit for probing generative wireless channel models

#include "chanprobe/types.hpp"

#include <cmath>

#include "chanprobe/errors.hpp"

namespace chanprobe {

void UraGeometry::validate() const {
    if (n_vertical < 1 || n_horizontal < 1)
        throw ConfigError("URA dimensions must be positive");
    if (!(spacing_vertical > 0.0) || !(spacing_horizontal > 0.0))
        throw ConfigError("antenna spacings must be strictly positive");
}

NoiseConfig NoiseConfig::from_snr_db(double snr_db) {
    return NoiseConfig{std::pow(10.0, -snr_db / 10.0)};
}

double NoiseConfig::snr_db() const {
    return -10.0 * std::log10(sigma_sq);
}

void NoiseConfig::validate() const {
    if (!(sigma_sq > 0.0) || !std::isfinite(sigma_sq))
        throw ConfigError("noise variance must be finite and > 0");
}

double ChannelDataset::mean_squared_norm() const {
    if (n_samples() == 0) return 0.0;
    return samples.squaredNorm() / static_cast<double>(n_samples());
}

void ChannelDataset::validate() const {
    if (n_antennas() < 1) throw InvalidArgument("dataset has N = 0 antennas");
    if (!samples.allFinite())
        throw InvalidArgument("dataset contains non-finite channel entries");
    if (normalized) {
        if (!(norm_target > 0.0))
            throw InvalidArgument("normalized dataset must declare norm_target > 0");
        const double msn = mean_squared_norm();
        if (std::abs(msn - norm_target) / norm_target > 1e-6)
            throw InvalidArgument("dataset flagged normalized but mean squared norm is off target");
    }
}

ChannelVector sample_complex_standard_normal(RngSequence& rng, Eigen::Index n) {
    if (n < 1) throw InvalidArgument("sample_complex_standard_normal: n must be >= 1");
    ChannelVector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = rng.next_complex_standard();
    return v;
}

ChannelVector sample_complex_standard_normal(RngStream stream, Eigen::Index n) {
    RngSequence rng(stream);
    return sample_complex_standard_normal(rng, n);
}

ChannelDataset normalize_dataset(const ChannelDataset& ds) {
    const Eigen::Index n = ds.n_antennas();
    const Eigen::Index m = ds.n_samples();
    if (n < 1 || m < 1) throw InvalidArgument("normalize_dataset: empty dataset");

    const double target = ds.norm_target > 0.0 ? ds.norm_target : static_cast<double>(n);
    const double total = ds.samples.squaredNorm();
    if (total <= 0.0) throw DegenerateInput("normalize_dataset: all-zero dataset");

    const double scale = std::sqrt(target * static_cast<double>(m) / total);

    ChannelDataset out = ds;
    out.samples *= scale;
    out.norm_target = target;
    out.normalized = true;
    out.meta.norm_scale = ds.meta.norm_scale * scale;
    return out;
}

}  // namespace chanprobe
