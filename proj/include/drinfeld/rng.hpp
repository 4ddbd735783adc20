#pragma once

// Deterministic random streams.
//
// Every sampled check derives its own stream from (seed, check name, sample
// index).  Because a sample's randomness depends only on that triple and not
// on scheduling, parallel and serial execution of a suite produce bit
// identical reports.

#include <cstdint>
#include <string_view>

#include "drinfeld/types.hpp"

namespace drinfeld {

// SplitMix64: tiny, high-quality 64-bit generator, convenient because any
// 64-bit value is a valid state.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [-1, 1).
  double next_sym() {
    return 2.0 * (static_cast<double>(next_u64() >> 11) * 0x1.0p-53) - 1.0;
  }

  RVec next_vec(int n) {
    RVec v(n);
    for (int i = 0; i < n; ++i) v[i] = next_sym();
    return v;
  }

 private:
  std::uint64_t state_;
};

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

// Stream for sample `index` of check `name` under master `seed`.
inline SplitMix64 sample_stream(std::uint64_t seed, std::string_view name,
                                std::uint64_t index) {
  SplitMix64 mix(seed ^ fnv1a(name));
  std::uint64_t base = mix.next_u64();
  return SplitMix64(base + 0x9e3779b97f4a7c15ull * (index + 1));
}

}  // namespace drinfeld
