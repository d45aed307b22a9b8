#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace sftlab {

// SplitMix64 stream. Fixed algorithm so seeded runs reproduce byte-identically
// across platforms; std:: distributions do not guarantee that.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1)
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform01() < p; }

  // index sampled from an unnormalized weight vector
  int categorical(const std::vector<double>& weights) {
    double total = 0.0;
    for (double w : weights) total += w;
    double u = uniform01() * total;
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
      acc += weights[i];
      if (u < acc) return static_cast<int>(i);
    }
    return static_cast<int>(weights.size()) - 1;
  }
};

// Derives an independent stream key from (seed, experiment name, replicate).
// FNV-1a over the parts, then one splitmix scramble.
inline std::uint64_t stream_key(std::uint64_t seed, std::string_view experiment,
                                std::uint64_t replicate = 0) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix_byte = [&h](std::uint8_t b) {
    h ^= b;
    h *= 0x100000001b3ULL;
  };
  for (int i = 0; i < 8; ++i) mix_byte(static_cast<std::uint8_t>(seed >> (8 * i)));
  for (char c : experiment) mix_byte(static_cast<std::uint8_t>(c));
  for (int i = 0; i < 8; ++i) mix_byte(static_cast<std::uint8_t>(replicate >> (8 * i)));
  return SplitMix64(h).next();
}

}  // namespace sftlab
