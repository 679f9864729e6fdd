// SPDX-License-Identifier: Apache-2.0
//
// chanprobe: toolkit for probing generative wireless channel models

#include "chanprobe/rng.hpp"

#include <cmath>

namespace chanprobe {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

// splitmix64 finalizer (Steele, Lea, Flood 2014)
std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

RngStream RngStream::substream(std::uint64_t idx) const {
    return RngStream{seed, mix64(stream + kGolden * (idx + 1))};
}

RngSequence::RngSequence(RngStream key)
    : state_(mix64(mix64(key.seed + kGolden) ^ (key.stream + 0xd1b54a32d192ed03ULL))) {}

std::uint64_t RngSequence::next_u64() {
    return mix64(state_ += kGolden);
}

double RngSequence::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

void RngSequence::next_gaussian_pair(double& z0, double& z1) {
    // u1 in (0, 1] so the log is finite
    const double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    const double u2 = next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    z0 = r * std::cos(a);
    z1 = r * std::sin(a);
}

double RngSequence::next_gaussian() {
    double z0, z1;
    next_gaussian_pair(z0, z1);
    return z0;
}

std::complex<double> RngSequence::next_complex_standard() {
    double z0, z1;
    next_gaussian_pair(z0, z1);
    constexpr double inv_sqrt2 = 0.70710678118654752440084436210485;
    return {z0 * inv_sqrt2, z1 * inv_sqrt2};
}

std::uint64_t RngSequence::next_below(std::uint64_t n) {
    // Lemire-style multiply-shift; bias is negligible for the n used here.
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
}

}  // namespace chanprobe
