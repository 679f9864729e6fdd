// SPDX-License-Identifier: Apache-2.0
//
// chanprobe: toolkit for probing generative wireless channel models

#include "chanprobe/synth.hpp"

#include <cmath>
#include <fstream>
#include <numbers>

#include <json.hpp>

#include "chanprobe/errors.hpp"
#include "chanprobe/manifest.hpp"
#include "chanprobe/parallel.hpp"

namespace chanprobe::synth {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

std::vector<AngleSector> ScenarioConfig::default_sectors() {
    // Three disjoint street-canyon sectors near the horizon, all mapping to
    // the low-index half of the default 4x16 Kronecker DFT codebook.
    return {
        {1.10, 0.06, 1.50, 0.04},
        {1.45, 0.05, 1.57, 0.03},
        {0.80, 0.07, 1.42, 0.05},
    };
}

void ScenarioConfig::validate() const {
    geometry.validate();
    if (min_clusters < 1 || max_clusters < min_clusters)
        throw ConfigError("cluster range must satisfy 1 <= min <= max");
    if (!(los_probability >= 0.0 && los_probability <= 1.0))
        throw ConfigError("los_probability must lie in [0, 1]");
    if (angle_sectors.empty()) throw ConfigError("at least one angle sector is required");
    for (const auto& s : angle_sectors) {
        if (!(s.azimuth_spread > 0.0) || !(s.elevation_spread > 0.0))
            throw ConfigError("sector spreads must be strictly positive");
        if (!std::isfinite(s.azimuth_center) || !std::isfinite(s.elevation_center))
            throw ConfigError("sector centers must be finite");
    }
    if (!(per_path_gain_decay >= 0.0)) throw ConfigError("per_path_gain_decay must be >= 0");
}

std::string ScenarioConfig::to_json() const {
    nlohmann::json sectors = nlohmann::json::array();
    for (const auto& s : angle_sectors)
        sectors.push_back({{"azimuth_center", s.azimuth_center},
                           {"azimuth_spread", s.azimuth_spread},
                           {"elevation_center", s.elevation_center},
                           {"elevation_spread", s.elevation_spread}});
    nlohmann::json j = {
        {"geometry",
         {{"n_vertical", geometry.n_vertical},
          {"n_horizontal", geometry.n_horizontal},
          {"spacing_vertical", geometry.spacing_vertical},
          {"spacing_horizontal", geometry.spacing_horizontal}}},
        {"n_clusters_range", {min_clusters, max_clusters}},
        {"los_probability", los_probability},
        {"rician_k_db", rician_k_db},
        {"angle_sectors", sectors},
        {"per_path_gain_profile", per_path_gain_decay},
        {"seed", seed},
    };
    return j.dump(2);
}

ScenarioConfig ScenarioConfig::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ConfigError("scenario: invalid JSON");

    ScenarioConfig cfg;
    try {
        if (j.contains("geometry")) {
            const auto& g = j["geometry"];
            cfg.geometry.n_vertical = g.value("n_vertical", cfg.geometry.n_vertical);
            cfg.geometry.n_horizontal = g.value("n_horizontal", cfg.geometry.n_horizontal);
            cfg.geometry.spacing_vertical = g.value("spacing_vertical", cfg.geometry.spacing_vertical);
            cfg.geometry.spacing_horizontal =
                g.value("spacing_horizontal", cfg.geometry.spacing_horizontal);
        }
        if (j.contains("n_clusters_range")) {
            cfg.min_clusters = j["n_clusters_range"].at(0).get<int>();
            cfg.max_clusters = j["n_clusters_range"].at(1).get<int>();
        }
        cfg.los_probability = j.value("los_probability", cfg.los_probability);
        cfg.rician_k_db = j.value("rician_k_db", cfg.rician_k_db);
        cfg.per_path_gain_decay = j.value("per_path_gain_profile", cfg.per_path_gain_decay);
        cfg.seed = j.value("seed", cfg.seed);
        if (j.contains("angle_sectors")) {
            cfg.angle_sectors.clear();
            for (const auto& s : j["angle_sectors"])
                cfg.angle_sectors.push_back({s.at("azimuth_center").get<double>(),
                                             s.at("azimuth_spread").get<double>(),
                                             s.at("elevation_center").get<double>(),
                                             s.at("elevation_spread").get<double>()});
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("scenario: ") + e.what());
    }
    cfg.validate();
    return cfg;
}

ScenarioConfig ScenarioConfig::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open scenario file " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return from_json(text);
}

std::string ScenarioConfig::id() const {
    return "rpe-" + hash_hex(fnv1a64(to_json())).substr(8);
}

ChannelVector steering_vector(const UraGeometry& geometry, double azimuth, double elevation) {
    geometry.validate();
    if (!std::isfinite(azimuth) || !std::isfinite(elevation))
        throw InvalidArgument("steering_vector: angles must be finite");

    const double freq_v = geometry.spacing_vertical * std::cos(elevation);
    const double freq_h = geometry.spacing_horizontal * std::sin(elevation) * std::cos(azimuth);

    const int nv = geometry.n_vertical;
    const int nh = geometry.n_horizontal;
    ChannelVector a(static_cast<Eigen::Index>(nv) * nh);
    for (int k = 0; k < nv; ++k) {
        const double phase_v = kTwoPi * freq_v * k;
        for (int l = 0; l < nh; ++l) {
            const double phase = phase_v + kTwoPi * freq_h * l;
            a[static_cast<Eigen::Index>(k) * nh + l] = {std::cos(phase), std::sin(phase)};
        }
    }
    return a;
}

ChannelDataset generate_rpe(const ScenarioConfig& config, Eigen::Index n_samples) {
    config.validate();
    if (n_samples < 1) throw InvalidArgument("generate_rpe: n_samples must be >= 1");

    const Eigen::Index n = config.geometry.n_antennas();
    const double rician_k = std::pow(10.0, config.rician_k_db / 10.0);
    const RngStream root{config.seed, 0};

    ChannelDataset ds;
    ds.samples.resize(n, n_samples);
    ds.norm_target = static_cast<double>(n);

    parallel_blocks(n_samples, 1024, [&](std::size_t, std::int64_t begin, std::int64_t end) {
        for (std::int64_t i = begin; i < end; ++i) {
            RngSequence rng(root.substream(static_cast<std::uint64_t>(i)));

            const auto& sector =
                config.angle_sectors[rng.next_below(config.angle_sectors.size())];
            const int n_clusters =
                config.min_clusters +
                static_cast<int>(rng.next_below(
                    static_cast<std::uint64_t>(config.max_clusters - config.min_clusters + 1)));
            const bool los = rng.next_double() < config.los_probability;

            // Exponentially decaying cluster powers, normalized to unit total.
            Eigen::VectorXd powers(n_clusters);
            for (int p = 0; p < n_clusters; ++p)
                powers[p] = std::exp(-config.per_path_gain_decay * p);
            powers /= powers.sum();

            ChannelVector h = ChannelVector::Zero(n);
            for (int p = 0; p < n_clusters; ++p) {
                double daz, del;
                rng.next_gaussian_pair(daz, del);
                const double az = sector.azimuth_center + sector.azimuth_spread * daz;
                const double el = sector.elevation_center + sector.elevation_spread * del;
                const std::complex<double> gain =
                    std::sqrt(powers[p]) * rng.next_complex_standard();
                h += gain * steering_vector(config.geometry, az, el);
            }

            if (los) {
                double daz, del;
                rng.next_gaussian_pair(daz, del);
                const double az = sector.azimuth_center + sector.azimuth_spread * daz;
                const double el = sector.elevation_center + sector.elevation_spread * del;
                const double psi = kTwoPi * rng.next_double();
                const std::complex<double> phase{std::cos(psi), std::sin(psi)};
                // Rician mixing keeps the expected power at 1 before normalization.
                h = std::sqrt(rician_k / (1.0 + rician_k)) * phase *
                        steering_vector(config.geometry, az, el) +
                    std::sqrt(1.0 / (1.0 + rician_k)) * h;
            }

            ds.samples.col(i) = h;
        }
    });

    ds.meta.seed = config.seed;
    ds.meta.scenario_id = config.id();
    ds.meta.generator_id = "rpe";
    return normalize_dataset(ds);
}

}  // namespace chanprobe::synth
