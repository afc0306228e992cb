#pragma once

#include <cstdint>
#include <random>

namespace qnf {

// Uniform integer in [0, n), n > 0. Rejection sampling on the raw 64-bit
// output so that draws are identical on every standard library.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % n;
}

}  // namespace qnf
