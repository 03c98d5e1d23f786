#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "core/arith.hpp"

namespace vdl {

struct DivisorPair {
  std::uint64_t minor;      // the smaller divisor
  std::uint64_t companion;  // n / minor, always strictly larger

  friend bool operator==(const DivisorPair&, const DivisorPair&) = default;
};

// Every divisor of n, grouped the way the texts count them: unordered pairs
// {d, n/d} with d < n/d, plus the square root on its own when n is a square.
struct DivisorPairing {
  std::uint64_t n;
  std::vector<DivisorPair> strict_pairs;  // ascending by minor
  std::optional<std::uint64_t> self_pair;

  friend bool operator==(const DivisorPairing&, const DivisorPairing&) = default;
};

// d(n) via the factorization formula: product of (exponent + 1).
std::uint64_t count_divisors(Natural n);

// All divisors ascending, by trial scan to sqrt(n).
std::vector<std::uint64_t> enumerate_divisors(Natural n);

DivisorPairing pair_divisors(Natural n);

// floor(d(n) / 2); equals d(n)/2 exactly whenever n is not a perfect square.
std::uint64_t pair_count(Natural n);

// nu(n): the largest divisor strictly smaller than its companion.
// NoSuchDivisorError for n = 1, which has no strict pair.
std::uint64_t largest_minor_divisor(Natural n);

// Every m in [1, nu(n)] that does not divide n, ascending.
std::vector<std::uint64_t> non_divisors_up_to_nu(Natural n);

}  // namespace vdl
