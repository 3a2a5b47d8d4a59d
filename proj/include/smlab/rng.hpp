#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace smlab {

/// All randomized operations take an explicit generator so that runs are
/// reproducible given a seed.  mt19937_64 is used directly (not
/// std::uniform_int_distribution, whose output is implementation-defined)
/// so the same seed yields the same samples on every platform.
using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32)};
  return Rng(seq);
}

/// Independent stream derived from (seed, a, b).  The density harness gives
/// each sample its own stream keyed by (master seed, word length, sample
/// index) so results do not depend on scheduling or evaluation order.
inline Rng derive_rng(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(a),
                    static_cast<std::uint32_t>(a >> 32),
                    static_cast<std::uint32_t>(b),
                    static_cast<std::uint32_t>(b >> 32)};
  return Rng(seq);
}

/// Unbiased draw from [0, n) by rejection sampling.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("uniform_below: n must be positive");
  const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % n;
  }
}

inline std::size_t uniform_index(Rng& rng, std::size_t n) {
  return static_cast<std::size_t>(uniform_below(rng, n));
}

inline bool uniform_bool(Rng& rng) { return (rng() & 1) != 0; }

}  // namespace smlab
