#pragma once

#include <array>
#include <cstdint>

namespace benford {

// Deterministic pseudorandom stream keyed by (seed, index).
//
// Two streams built from the same pair produce bitwise-identical output on
// every platform, no matter how many other streams exist. Distinct indices
// give statistically independent sequences, so a batch of runs can assign
// stream index = run index and stay reproducible under any scheduling.
//
// Generator: xoshiro256++ (Blackman & Vigna, public domain), state expanded
// from (seed, index) with splitmix64 finalizer rounds.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t index) : seed_(seed), index_(index) {
    std::uint64_t h = 0x853c49e6748fea9bULL;
    h = mix(h ^ seed);
    h = mix(h ^ index);
    for (auto& word : state_) {
      h += 0x9e3779b97f4a7c15ULL;
      word = mix(h);
    }
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform on [0, 1), 53-bit resolution.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform on (0, 1]; safe to feed into log().
  double next_open() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

  // Uniform integer on [lo, hi], inclusive, unbiased (rejection sampling).
  std::int64_t next_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(next_u64());  // full 64-bit range
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
  }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t index() const { return index_; }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
  }

  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  std::array<std::uint64_t, 4> state_{};
  std::uint64_t seed_ = 0;
  std::uint64_t index_ = 0;
};

}  // namespace benford
