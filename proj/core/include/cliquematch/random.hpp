#pragma once

#include <cstdint>

namespace cliquematch {

/// SplitMix64 finalizer. Used to derive well-mixed sub-seeds and per-pair
/// coin flips that do not depend on enumeration order.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed for Monte Carlo trial `index` of a run seeded with `seed`.
constexpr std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return mix64(seed ^ index);
}

/// Deterministic uniform draw in [0, 1) attached to an unordered id pair.
constexpr double pair_uniform(std::uint64_t seed, std::int64_t a, std::int64_t b) noexcept {
  if (a > b) {
    const auto t = a;
    a = b;
    b = t;
  }
  std::uint64_t h = mix64(seed);
  h = mix64(h ^ static_cast<std::uint64_t>(a));
  h = mix64(h ^ static_cast<std::uint64_t>(b));
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

}  // namespace cliquematch
