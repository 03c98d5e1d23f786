#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "core/error.hpp"

namespace vdl {

// A positive integer in the supported domain [1, 2^63 - 1]. Construction
// outside the domain throws DomainError; every value that exists is valid.
class Natural {
 public:
  static constexpr std::uint64_t kMax = (std::uint64_t{1} << 63) - 1;

  explicit Natural(std::uint64_t value) : value_(value) {
    if (value == 0 || value > kMax)
      throw DomainError("natural out of domain [1, 2^63 - 1]: " +
                        std::to_string(value));
  }

  std::uint64_t value() const noexcept { return value_; }
  operator std::uint64_t() const noexcept { return value_; }

 private:
  std::uint64_t value_;
};

struct PrimePower {
  std::uint64_t prime;
  std::uint32_t exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Canonical decomposition: primes strictly ascending, exponents >= 1,
// empty exactly for 1.
struct Factorization {
  std::vector<PrimePower> factors;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

// Deterministic over the whole domain: Miller-Rabin with the fixed witness
// set {2,3,5,7,11,13,17,19,23,29,31,37}, exhaustive below 3.3e24.
bool is_prime(Natural n);

// Trial division by primes up to 1e6, then Brent-cycle Pollard rho on the
// remaining cofactors. Deterministic; the rho parameters are fixed.
Factorization factorize(Natural n);

// Product of the prime powers; RangeError if it leaves the domain.
Natural reconstruct(const Factorization& f);

// True iff the factorization satisfies every canonical-form invariant.
bool is_canonical(const Factorization& f);

std::string to_string(const Factorization& f);

}  // namespace vdl
