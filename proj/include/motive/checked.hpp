#pragma once

#include <algorithm>
#include <cstdint>
#include <string>

#include "motive/errors.hpp"

namespace motive {

// Overflow-checked 64-bit arithmetic. Silent wraparound would corrupt exact
// class computations, so every arithmetic path funnels through these.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("integer overflow: " + std::to_string(a) + " + " + std::to_string(b));
  }
  return out;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) {
    throw OverflowError("integer overflow: " + std::to_string(a) + " - " + std::to_string(b));
  }
  return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError("integer overflow: " + std::to_string(a) + " * " + std::to_string(b));
  }
  return out;
}

inline std::int64_t checked_pow(std::int64_t base, int exp) {
  if (exp < 0) throw DomainError("checked_pow: negative exponent");
  std::int64_t out = 1;
  for (int k = 0; k < exp; ++k) out = checked_mul(out, base);
  return out;
}

inline std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t out = 1;
  for (int i = 1; i <= k; ++i) {
    // out is C(n-k+i-1, i-1) here, so the division is exact.
    out = checked_mul(out, n - k + i) / i;
  }
  return out;
}

}  // namespace motive
