// SPDX-License-Identifier: Apache-2.0
//
// chanprobe: toolkit for probing generative wireless channel models

#include "chanprobe/dataset_io.hpp"

#include <array>
#include <cstring>
#include <fstream>
#include <vector>

#include <json.hpp>

#include "chanprobe/errors.hpp"

namespace chanprobe {

namespace {

constexpr std::array<char, 4> kMagic = {'C', 'H', 'D', '1'};
constexpr std::uint16_t kVersion = 1;

template <class T>
void put(std::string& buf, T value) {
    char raw[sizeof(T)];
    std::memcpy(raw, &value, sizeof(T));
    buf.append(raw, sizeof(T));
}

template <class T>
T take(const std::string& buf, std::size_t& off) {
    if (off + sizeof(T) > buf.size())
        throw DecodeError(DecodeError::Kind::Truncated, "dataset header truncated");
    T value;
    std::memcpy(&value, buf.data() + off, sizeof(T));
    off += sizeof(T);
    return value;
}

}  // namespace

std::filesystem::path sidecar_path(const std::filesystem::path& dataset_path) {
    std::filesystem::path p = dataset_path;
    p += ".meta.json";
    return p;
}

void write_dataset(const ChannelDataset& ds, const std::filesystem::path& path) {
    ds.validate();
    const std::uint32_t n = static_cast<std::uint32_t>(ds.n_antennas());
    const std::uint64_t m = static_cast<std::uint64_t>(ds.n_samples());

    std::string buf;
    buf.reserve(20 + static_cast<std::size_t>(n) * m * 8);
    buf.append(kMagic.data(), kMagic.size());
    put<std::uint16_t>(buf, kVersion);
    put<std::uint16_t>(buf, ds.normalized ? 1 : 0);
    put<std::uint32_t>(buf, n);
    put<std::uint64_t>(buf, m);

    for (std::uint64_t j = 0; j < m; ++j)
        for (std::uint32_t i = 0; i < n; ++i) {
            const auto& z = ds.samples(i, static_cast<Eigen::Index>(j));
            put<float>(buf, static_cast<float>(z.real()));
            put<float>(buf, static_cast<float>(z.imag()));
        }

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (!out) throw IoError("failed writing " + path.string());
    out.close();

    nlohmann::json meta = {
        {"seed", ds.meta.seed},
        {"scenario", ds.meta.scenario_id},
        {"generator", ds.meta.generator_id},
        {"norm_scale", ds.meta.norm_scale},
        {"normalized", ds.normalized},
        {"norm_target", ds.norm_target},
        {"n_antennas", n},
        {"n_samples", m},
    };
    std::ofstream side(sidecar_path(path), std::ios::trunc);
    if (!side) throw IoError("cannot write sidecar for " + path.string());
    side << meta.dump(2) << "\n";
}

ChannelDataset read_dataset(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::string buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

    std::size_t off = 0;
    if (buf.size() < 4 || std::memcmp(buf.data(), kMagic.data(), 4) != 0)
        throw DecodeError(DecodeError::Kind::BadMagic, path.string() + ": bad magic");
    off = 4;

    const auto version = take<std::uint16_t>(buf, off);
    if (version != kVersion)
        throw DecodeError(DecodeError::Kind::BadVersion,
                          path.string() + ": unsupported version " + std::to_string(version));
    const auto flags = take<std::uint16_t>(buf, off);
    const auto n = take<std::uint32_t>(buf, off);
    const auto m = take<std::uint64_t>(buf, off);
    if (n == 0)
        throw DecodeError(DecodeError::Kind::BadHeader, path.string() + ": header declares N = 0");

    const std::size_t body = static_cast<std::size_t>(n) * m * 8;
    if (buf.size() - off < body)
        throw DecodeError(DecodeError::Kind::Truncated,
                          path.string() + ": body holds fewer samples than the header claims");
    if (buf.size() - off > body)
        throw DecodeError(DecodeError::Kind::Truncated,
                          path.string() + ": trailing bytes after declared body");

    ChannelDataset ds;
    ds.samples.resize(n, static_cast<Eigen::Index>(m));
    for (std::uint64_t j = 0; j < m; ++j)
        for (std::uint32_t i = 0; i < n; ++i) {
            const float re = take<float>(buf, off);
            const float im = take<float>(buf, off);
            ds.samples(i, static_cast<Eigen::Index>(j)) = {re, im};
        }
    ds.normalized = (flags & 1u) != 0;
    ds.norm_target = static_cast<double>(n);

    const auto side = sidecar_path(path);
    if (std::filesystem::exists(side)) {
        std::ifstream sin(side);
        nlohmann::json meta;
        try {
            sin >> meta;
        } catch (const nlohmann::json::exception& e) {
            throw DecodeError(DecodeError::Kind::BadHeader,
                              side.string() + ": invalid sidecar JSON: " + e.what());
        }
        ds.meta.seed = meta.value("seed", std::uint64_t{0});
        ds.meta.scenario_id = meta.value("scenario", std::string{});
        ds.meta.generator_id = meta.value("generator", std::string{});
        ds.meta.norm_scale = meta.value("norm_scale", 1.0);
        ds.norm_target = meta.value("norm_target", ds.norm_target);
    }

    ds.validate();
    return ds;
}

}  // namespace chanprobe
