#pragma once

#include <bit>
#include <cstdint>
#include <random>

namespace bctkit {

using Rng = std::mt19937_64;

/// Uniform integer in [0, bound) by masked rejection. Unlike
/// std::uniform_int_distribution the output sequence is fixed across
/// standard library implementations, so seeded runs are bit-reproducible.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(bound - 1);
  for (;;) {
    const std::uint64_t v = rng() & mask;
    if (v < bound) return v;
  }
}

/// Uniform integer in [lo, hi].
inline std::uint64_t uniform_between(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return lo + uniform_below(rng, hi - lo + 1);
}

}  // namespace bctkit
