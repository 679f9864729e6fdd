// SPDX-License-Identifier: Apache-2.0
//
// chanprobe: toolkit for probing generative wireless channel models

#pragma once

#include <string>
#include <vector>

#include "chanprobe/types.hpp"

namespace chanprobe::synth {

/// One angular region of the street-canyon scene. Angles in radians;
/// elevation is measured from the array's vertical axis (broadside = pi/2).
struct AngleSector {
    double azimuth_center = 1.5707963267948966;
    double azimuth_spread = 0.05;
    double elevation_center = 1.5707963267948966;
    double elevation_spread = 0.05;
};

/// Synthetic radio-propagation-environment scenario. Defaults give a
/// multimodal mix of LOS and NLOS users seen by a 4x16 URA.
struct ScenarioConfig {
    UraGeometry geometry{4, 16, 1.0, 0.5};
    int min_clusters = 1;
    int max_clusters = 5;
    double los_probability = 0.4;
    double rician_k_db = 8.0;
    std::vector<AngleSector> angle_sectors = default_sectors();
    double per_path_gain_decay = 0.5;
    std::uint64_t seed = 0;

    static std::vector<AngleSector> default_sectors();
    void validate() const;

    std::string to_json() const;
    static ScenarioConfig from_json(const std::string& text);
    static ScenarioConfig from_json_file(const std::string& path);

    /// Short content hash identifying the scenario in dataset provenance.
    std::string id() const;
};

/// URA array response a(azimuth, elevation) = a_v kron a_h with
///   a_v[k] = exp(j 2 pi d_v k cos(el)),            k = 0..N_v-1
///   a_h[l] = exp(j 2 pi d_h l sin(el) cos(az)),    l = 0..N_h-1
/// All entries unit modulus, so ||a||^2 = N.
ChannelVector steering_vector(const UraGeometry& geometry, double azimuth, double elevation);

/// Draws n_samples independent users from the scenario's sector mixture and
/// returns the globally normalized dataset (E||h||^2 = N).
ChannelDataset generate_rpe(const ScenarioConfig& config, Eigen::Index n_samples);

}  // namespace chanprobe::synth
