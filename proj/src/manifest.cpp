// SPDX-License-Identifier: Apache-2.0
//
// chanprobe: toolkit for probing generative wireless channel models

#include "chanprobe/manifest.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "chanprobe/errors.hpp"

namespace chanprobe {

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t fnv1a64_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot hash missing file " + path.string());
    std::string buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return fnv1a64(buf);
}

std::string hash_hex(std::uint64_t h) {
    std::ostringstream out;
    out << std::hex;
    out.width(16);
    out.fill('0');
    out << h;
    return out.str();
}

RunManifest::RunManifest(std::string command, std::vector<std::string> argv)
    : command_(std::move(command)), argv_(std::move(argv)) {}

void RunManifest::set_config(std::string resolved_config_json) {
    config_json_ = std::move(resolved_config_json);
}

void RunManifest::set_seed(std::uint64_t seed) {
    seed_ = seed;
}

void RunManifest::add_input(const std::filesystem::path& path) {
    inputs_.emplace_back(path.string(), fnv1a64_file(path));
}

void RunManifest::add_output(const std::filesystem::path& path) {
    outputs_.emplace_back(path.string(), fnv1a64_file(path));
}

void RunManifest::add_timing(const std::string& stage, double milliseconds) {
    timings_.emplace_back(stage, milliseconds);
}

std::string RunManifest::to_json() const {
    nlohmann::json j;
    j["command"] = command_;
    j["argv"] = argv_;
    j["seed"] = seed_;
    if (!config_json_.empty()) {
        j["config"] = nlohmann::json::parse(config_json_, nullptr, false);
        if (j["config"].is_discarded()) j["config"] = config_json_;
    }
    auto files = [](const std::vector<std::pair<std::string, std::uint64_t>>& v) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& [p, h] : v) arr.push_back({{"path", p}, {"fnv1a64", hash_hex(h)}});
        return arr;
    };
    j["inputs"] = files(inputs_);
    j["outputs"] = files(outputs_);
    nlohmann::json t = nlohmann::json::array();
    for (const auto& [stage, ms] : timings_) t.push_back({{"stage", stage}, {"ms", ms}});
    j["timings"] = t;
    return j.dump(2);
}

void RunManifest::write(const std::filesystem::path& prefix) const {
    std::filesystem::path p = prefix;
    p += ".manifest.json";
    std::ofstream out(p, std::ios::trunc);
    if (!out) throw IoError("cannot write manifest " + p.string());
    out << to_json() << "\n";
}

}  // namespace chanprobe
