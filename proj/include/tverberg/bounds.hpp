#pragma once

#include <cstdint>
#include <stdexcept>

// Depth guarantees of the algorithms, in exact integer arithmetic.

namespace tverberg::bounds {

constexpr std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return b == 0 ? 0 : (a + b - 1) / b; }

constexpr std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

/// ceil(n / (d+1)): the depth Tverberg's theorem promises.
constexpr std::uint64_t tverberg(std::uint64_t n, unsigned d) { return ceil_div(n, d + 1); }

/// ceil(n / 2^d): the lifting recursion.
constexpr std::uint64_t simple(std::uint64_t n, unsigned d) {
  return d >= 63 ? (n > 0 ? 1 : 0) : ceil_div(n, ipow(2, d));
}

/// ceil(n / 2(d+1)^2): Radon doubling, and collection followed by brute force.
constexpr std::uint64_t miller_sheehy(std::uint64_t n, unsigned d) { return ceil_div(n, 2 * ipow(d + 1, 2)); }

/// ceil(n / 4(d+1)^3): collection followed by Radon doubling, and the bootstrap.
constexpr std::uint64_t bootstrap(std::uint64_t n, unsigned d) { return ceil_div(n, 4 * ipow(d + 1, 3)); }

}  // namespace tverberg::bounds
