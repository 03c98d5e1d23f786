#include "core/divisors.hpp"

#include "core/intmath.hpp"

namespace vdl {

using detail::u64;

std::uint64_t count_divisors(Natural n) {
  u64 count = 1;
  for (const auto& [prime, exponent] : factorize(n).factors) {
    count *= exponent + 1;  // d(n) stays tiny; no overflow below 2^63
  }
  return count;
}

std::vector<std::uint64_t> enumerate_divisors(Natural n) {
  const u64 value = n.value();
  const u64 root = detail::isqrt(value);
  std::vector<u64> low, high;
  for (u64 d = 1; d <= root; ++d) {
    if (value % d != 0) continue;
    low.push_back(d);
    if (d != value / d) high.push_back(value / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

DivisorPairing pair_divisors(Natural n) {
  const u64 value = n.value();
  const u64 root = detail::isqrt(value);
  DivisorPairing pairing{value, {}, std::nullopt};
  for (u64 d = 1; d <= root; ++d) {
    if (value % d != 0) continue;
    if (d == value / d)
      pairing.self_pair = d;
    else
      pairing.strict_pairs.push_back({d, value / d});
  }
  return pairing;
}

std::uint64_t pair_count(Natural n) { return count_divisors(n) / 2; }

std::uint64_t largest_minor_divisor(Natural n) {
  const u64 value = n.value();
  if (value == 1)
    throw NoSuchDivisorError("1 has no divisor strictly below its companion");
  for (u64 d = detail::isqrt(value); d >= 1; --d) {
    if (value % d == 0 && d < value / d) return d;
  }
  throw InternalError("nu scan fell through for " + std::to_string(value));
}

std::vector<std::uint64_t> non_divisors_up_to_nu(Natural n) {
  const u64 nu = largest_minor_divisor(n);
  std::vector<u64> out;
  for (u64 m = 1; m <= nu; ++m) {
    if (n.value() % m != 0) out.push_back(m);
  }
  return out;
}

}  // namespace vdl
