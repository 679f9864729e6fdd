// SPDX-License-Identifier: Apache-2.0
//
// chanprobe: toolkit for probing generative wireless channel models

#pragma once

#include <filesystem>

#include "chanprobe/types.hpp"

namespace chanprobe {

/// CHD1 binary dataset format (little-endian):
///   bytes 0-3  magic "CHD1"
///   u16        version (= 1)
///   u16        flags   (bit 0 = normalized)
///   u32        N antennas
///   u64        M samples
///   f32 pairs  (re, im) per entry, sample-major
/// A JSON sidecar <file>.meta.json carries provenance (seed, scenario,
/// generator id, norm scale).
void write_dataset(const ChannelDataset& ds, const std::filesystem::path& path);
ChannelDataset read_dataset(const std::filesystem::path& path);

std::filesystem::path sidecar_path(const std::filesystem::path& dataset_path);

}  // namespace chanprobe
