#pragma once

#include <cstdint>
#include <string>

#include "core/error.hpp"

namespace vdl {

// A reduced non-negative fraction. Numerator and denominator are capped at
// 2^63 - 1 so every comparison against sqrt(2) can be decided exactly in
// 128-bit integer arithmetic; no floating point exists in this module.
class Rational {
 public:
  Rational(std::uint64_t numerator, std::uint64_t denominator);

  std::uint64_t numerator() const noexcept { return num_; }
  std::uint64_t denominator() const noexcept { return den_; }

  Rational plus(const Rational& other) const;
  // DomainError if the result would be negative.
  Rational minus(const Rational& other) const;

  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;

 private:
  std::uint64_t num_;
  std::uint64_t den_;
};

enum class Sqrt2Side { below, above };

// Partial sum of the four-term series 1 + 1/3 + 1/(3*4) - 1/(3*4*34).
// DomainError unless 1 <= terms <= 4.
Rational sulba_sqrt2_partial(int terms);

// Largest d >= 0 with |r - sqrt(2)| < 10^-d, decided by integer
// cross-multiplication; 0 when even d = 0 fails. Requires r > 0.
int decimal_accuracy(const Rational& r);

// Which side of sqrt(2) the rational falls on (equality is impossible for a
// rational; hitting it signals a corrupted value). Requires r > 0.
Sqrt2Side compare_to_sqrt2(const Rational& r);

// Orders two positive rationals by distance from sqrt(2): negative when a is
// strictly closer, positive when b is, 0 only when a == b.
int compare_distance_to_sqrt2(const Rational& a, const Rational& b);

}  // namespace vdl
