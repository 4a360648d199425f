#pragma once

#include <cstdint>
#include <random>

namespace hornlearn {

/// Uniform integer in [0, bound) from raw engine output. Unlike
/// std::uniform_int_distribution the sequence is the same on every standard
/// library, which keeps seeded runs reproducible across platforms.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % bound;
}

}  // namespace hornlearn
