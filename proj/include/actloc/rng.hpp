#pragma once

#include <cstdint>
#include <random>

namespace actloc {

/// All randomness in the library flows through one of these, owned by the
/// caller, so episodes are bit-reproducible from a seed.
using Rng = std::mt19937_64;

inline std::uint64_t split_mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Independent per-stream seed (episode index, evaluation slot, ...).
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  return split_mix64(base + 0x9e3779b97f4a7c15ULL * (stream + 1));
}

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

inline double sample_gaussian(Rng& rng, double sigma) {
  return std::normal_distribution<double>(0.0, sigma)(rng);
}

inline double sample_uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace actloc
