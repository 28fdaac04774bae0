// sixdma - aerial movable-IRS ISAC simulation toolkit
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>

namespace sixdma {

/// Deterministic uniform generator. All stochastic components draw from one
/// of these so that a run is fully reproduced by its seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1), 53-bit resolution.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

std::uint64_t fnv1a64(std::string_view s);

/// Child-seed derivation: absorb each token into the master seed through
/// splitmix64. Used to give every sweep cell its own independent stream.
std::uint64_t derive_seed(std::uint64_t master,
                          std::span<const std::uint64_t> tokens);

}  // namespace sixdma
