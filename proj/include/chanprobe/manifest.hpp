// SPDX-License-Identifier: Apache-2.0
//
// chanprobe: toolkit for probing generative wireless channel models

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace chanprobe {

/// FNV-1a 64-bit hash, used for artifact fingerprints in run manifests.
std::uint64_t fnv1a64(std::string_view bytes);
std::uint64_t fnv1a64_file(const std::filesystem::path& path);
std::string hash_hex(std::uint64_t h);

/// Record of one CLI run: command line, resolved configuration, inputs and
/// outputs with content hashes, and wall-clock timings. Re-running the same
/// command yields identical artifact hashes.
class RunManifest {
  public:
    RunManifest(std::string command, std::vector<std::string> argv);

    void set_config(std::string resolved_config_json);
    void set_seed(std::uint64_t seed);
    void add_input(const std::filesystem::path& path);
    void add_output(const std::filesystem::path& path);
    void add_timing(const std::string& stage, double milliseconds);

    /// Serializes to <prefix>.manifest.json.
    void write(const std::filesystem::path& prefix) const;
    std::string to_json() const;

  private:
    std::string command_;
    std::vector<std::string> argv_;
    std::string config_json_;
    std::uint64_t seed_ = 0;
    std::vector<std::pair<std::string, std::uint64_t>> inputs_;
    std::vector<std::pair<std::string, std::uint64_t>> outputs_;
    std::vector<std::pair<std::string, double>> timings_;
};

}  // namespace chanprobe
