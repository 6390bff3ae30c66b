#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <utility>

#include "permpat/permutation.hpp"

namespace permpat {

/// Unbiased draw from [0, bound) using raw engine output. Unlike
/// std::uniform_int_distribution this is reproducible across standard
/// library implementations, which seeded reports depend on.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) {
    throw std::invalid_argument("uniform_below needs bound >= 1");
  }
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

/// Uniformly random permutation of {1..n} via Fisher-Yates.
inline Permutation random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<Value> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Value>(i) + 1;
  for (std::size_t i = n; i > 1; --i) {
    const auto j = static_cast<std::size_t>(uniform_below(rng, i));
    std::swap(v[i - 1], v[j]);
  }
  return Permutation(std::move(v));
}

}  // namespace permpat
