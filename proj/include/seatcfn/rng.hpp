#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace seatcfn {

// SplitMix64 step, used to spread (seed, stream) pairs into uncorrelated
// engine seeds so that consecutive replicate seeds give independent streams.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream = 0) {
  std::uint64_t s = seed + 0xd1b54a32d192ed03ULL * (stream + 1);
  const std::uint64_t a = splitmix64(s);
  const std::uint64_t b = splitmix64(s);
  return std::mt19937_64(a ^ (b << 1) ^ (b >> 63));
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, n), n >= 1. Rejection loop keeps it exactly uniform
// and independent of the standard library's distribution implementations.
inline int uniform_below(std::mt19937_64& rng, int n) {
  const auto un = static_cast<std::uint64_t>(n);
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % un;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<int>(x % un);
}

}  // namespace seatcfn
