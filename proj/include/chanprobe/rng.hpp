// SPDX-License-Identifier: Apache-2.0
//
// chanprobe: toolkit for probing generative wireless channel models

#pragma once

#include <complex>
#include <cstdint>

namespace chanprobe {

/// Key of a reproducible random substream. Equal (seed, stream) keys always
/// replay the same sequence; distinct streams are statistically independent.
struct RngStream {
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;

    /// Derive the idx-th child stream (per-sample / per-purpose substreams).
    RngStream substream(std::uint64_t idx) const;
};

/// Counter-based generator over an RngStream key: the n-th output is a pure
/// function of (seed, stream, n), so serial and parallel consumers agree.
class RngSequence {
  public:
    explicit RngSequence(RngStream key);

    std::uint64_t next_u64();

    /// Uniform double in [0, 1), 53-bit resolution.
    double next_double();

    /// Standard normal via Box-Muller; consumes exactly two u64 draws per pair.
    void next_gaussian_pair(double& z0, double& z1);
    double next_gaussian();

    /// Circularly-symmetric complex normal with E[|z|^2] = 1
    /// (real and imaginary parts each N(0, 1/2)).
    std::complex<double> next_complex_standard();

    /// Uniform integer in [0, n).
    std::uint64_t next_below(std::uint64_t n);

  private:
    std::uint64_t state_;
};

}  // namespace chanprobe
