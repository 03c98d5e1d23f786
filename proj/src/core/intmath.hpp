#pragma once

#include <cmath>
#include <cstdint>

namespace vdl::detail {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(u128{a} * b % m);
}

inline u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Exact floor(sqrt(n)) over the full 64-bit range; the float estimate is
// corrected so r*r <= n < (r+1)*(r+1) always holds.
inline u64 isqrt(u64 n) {
  if (n == 0) return 0;
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && (u128{r} * r > n)) --r;
  while (u128{r + 1} * (r + 1) <= n) ++r;
  return r;
}

// a*b if it stays within cap, 0 otherwise (0 never a valid product here).
inline u64 checked_mul(u64 a, u64 b, u64 cap) {
  if (b != 0 && a > cap / b) return 0;
  return a * b;
}

}  // namespace vdl::detail
