#pragma once

#include <cstdint>

namespace nbwalk {

// SplitMix64 finalizer. Bijective on 64-bit words, good avalanche.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Counter-based generator built on the SplitMix64 finalizer.
//
// Draw number i of stream s under base seed b is
//     mix64(base + i * GOLDEN)   with   base = mix64(b + GOLDEN) + mix64(s + FLEA)
// so any (seed, stream) pair names an independent sequence that does not
// depend on how many draws other streams made. Callers that need per-trial
// reproducibility derive one stream (or one seed) per trial and never share
// a CounterRng between logical experiments.
class CounterRng {
 public:
  static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
  static constexpr std::uint64_t kFlea = 0x6a09e667f3bcc909ULL;

  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : base_(mix64(seed + kGolden) + mix64(stream + kFlea)) {}

  std::uint64_t next() { return mix64(base_ + kGolden * ++counter_); }

  // Uniform in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in [0, bound), exact via rejection. bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  std::uint64_t draws_made() const { return counter_; }

 private:
  std::uint64_t base_;
  std::uint64_t counter_ = 0;
};

}  // namespace nbwalk
