#pragma once

#include <cstdint>
#include <random>

namespace nilsol {

/// Deterministic sub-generator for multistart index k under a run seed.
/// seed_seq and mt19937_64 are fully specified by the standard, so streams
/// are reproducible across platforms.
inline std::mt19937_64 start_rng(std::uint64_t seed, std::uint64_t k) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(k >> 32)};
  return std::mt19937_64(seq);
}

/// Uniform in [0,1) by explicit bit manipulation; std::uniform_real_distribution
/// is implementation-defined and would break byte-identical reproducibility.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

}  // namespace nilsol
