#pragma once

#include <cstdint>
#include <random>

namespace chaoslab {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Independent stream for item `index` of a run seeded with `seed`; the
// result does not depend on which worker draws it.
inline std::mt19937_64 stream_for(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(splitmix64(seed ^ splitmix64(index)));
}

// Uniform integer in [0, bound]. Rejection sampling on the raw engine output
// so results are identical across standard libraries.
inline std::uint64_t uniform_upto(std::mt19937_64& gen, std::uint64_t bound) {
  if (bound == UINT64_MAX) return gen();
  const std::uint64_t range = bound + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
  std::uint64_t v;
  do {
    v = gen();
  } while (v >= limit);
  return v % range;
}

inline std::uint64_t uniform_in(std::mt19937_64& gen, std::uint64_t lo, std::uint64_t hi) {
  return lo + uniform_upto(gen, hi - lo);
}

}  // namespace chaoslab
