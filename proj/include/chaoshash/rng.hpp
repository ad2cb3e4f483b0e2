#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "chaoshash/bitstring.hpp"
#include "chaoshash/error.hpp"

namespace chaoshash {

/// splitmix64: tiny, fast, well-mixed 64-bit generator.  Used for all
/// experiment randomness so that runs are reproducible from a single
/// seed across platforms and thread counts.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform value in [0, bound).  `bound` must be positive.  Uses
  /// rejection sampling, so there is no modulo bias.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw PreconditionError("SplitMix64::below: bound must be positive");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    for (;;) {
      const std::uint64_t v = next();
      if (v < limit) return v % bound;
    }
  }

 private:
  std::uint64_t state_;
};

/// Derives an independent stream seed from a master seed and a stream
/// index (one splitmix64 scramble of the pair).  Lets each experiment
/// trial own a private generator, which keeps results identical no
/// matter how trials are scheduled over threads.
inline std::uint64_t mix64(std::uint64_t seed, std::uint64_t stream) noexcept {
  std::uint64_t z = seed ^ (stream + 0x9E3779B97F4A7C15ull + (seed << 6) + (seed >> 2));
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// `count` random bits.
inline BitString random_bits(SplitMix64& rng, std::size_t count) {
  std::vector<std::uint8_t> bits;
  bits.reserve(count);
  std::uint64_t word = 0;
  for (std::size_t i = 0; i < count; ++i) {
    if (i % 64 == 0) word = rng.next();
    bits.push_back(static_cast<std::uint8_t>(word & 1));
    word >>= 1;
  }
  return BitString(std::move(bits));
}

/// `count` random bytes.
inline std::vector<std::uint8_t> random_bytes(SplitMix64& rng, std::size_t count) {
  std::vector<std::uint8_t> bytes;
  bytes.reserve(count);
  std::uint64_t word = 0;
  for (std::size_t i = 0; i < count; ++i) {
    if (i % 8 == 0) word = rng.next();
    bytes.push_back(static_cast<std::uint8_t>(word & 0xFF));
    word >>= 8;
  }
  return bytes;
}

}  // namespace chaoshash
