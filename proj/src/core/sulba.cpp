#include "core/sulba.hpp"

#include <numeric>

#include "core/intmath.hpp"

namespace vdl {
namespace {

using detail::u128;
using detail::u64;

constexpr u64 kMax = (u64{1} << 63) - 1;

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u128 pow10_128(int d) {
  u128 t = 1;
  for (int i = 0; i < d; ++i) t *= 10;
  return t;
}

Rational reduced_from_128(u128 num, u128 den) {
  if (num == 0) return Rational(0, 1);
  const u128 g = gcd128(num, den);
  num /= g;
  den /= g;
  if (num > kMax || den > kMax)
    throw RangeError("rational arithmetic exceeds the supported magnitude");
  return Rational(static_cast<u64>(num), static_cast<u64>(den));
}

// |r - 10^-d| window test: r - eps < sqrt(2) < r + eps, cross-multiplied so
// every quantity squared stays inside 128 bits.
bool within_eps(const Rational& r, int d) {
  const u128 t = pow10_128(d);
  const u128 p = r.numerator();
  const u128 q = r.denominator();
  constexpr u128 kU64Max = ~u128{0} >> 64;
  if (p > (~u128{0}) / t || q > (~u128{0}) / t)
    throw RangeError("decimal accuracy scaling overflows");
  const u128 pt = p * t;
  const u128 qt = q * t;
  if (pt > kU64Max - q || qt > u128{13043817825332782211ull})
    throw RangeError("decimal accuracy comparison exceeds 128-bit squares");

  const u128 upper = pt + q;                    // (r + eps) numerator * t
  const u128 two_qt2 = 2 * qt * qt;
  if (!(upper * upper > two_qt2)) return false; // needs sqrt(2) < r + eps
  if (pt <= q) return true;                     // r <= eps: lower bound free
  const u128 lower = pt - q;
  return lower * lower < two_qt2;               // needs r - eps < sqrt(2)
}

}  // namespace

Rational::Rational(std::uint64_t numerator, std::uint64_t denominator)
    : num_(numerator), den_(denominator) {
  if (den_ == 0) throw DomainError("rational denominator must be positive");
  if (num_ > kMax || den_ > kMax)
    throw RangeError("rational component exceeds 2^63 - 1");
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  const u64 g = std::gcd(num_, den_);
  num_ /= g;
  den_ /= g;
}

Rational Rational::plus(const Rational& other) const {
  const u128 num = u128{num_} * other.den_ + u128{other.num_} * den_;
  return reduced_from_128(num, u128{den_} * other.den_);
}

Rational Rational::minus(const Rational& other) const {
  const u128 left = u128{num_} * other.den_;
  const u128 right = u128{other.num_} * den_;
  if (left < right)
    throw DomainError("rational subtraction would go negative");
  return reduced_from_128(left - right, u128{den_} * other.den_);
}

std::string Rational::to_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational sulba_sqrt2_partial(int terms) {
  if (terms < 1 || terms > 4)
    throw DomainError("series term count outside 1..4: " +
                      std::to_string(terms));
  Rational sum(1, 1);
  if (terms >= 2) sum = sum.plus(Rational(1, 3));
  if (terms >= 3) sum = sum.plus(Rational(1, 12));
  if (terms == 4) sum = sum.minus(Rational(1, 408));
  return sum;
}

int decimal_accuracy(const Rational& r) {
  if (r.numerator() == 0)
    throw DomainError("decimal accuracy requires a positive rational");
  if (!within_eps(r, 0)) return 0;
  int d = 0;
  while (d < 38 && within_eps(r, d + 1)) ++d;
  return d;
}

Sqrt2Side compare_to_sqrt2(const Rational& r) {
  if (r.numerator() == 0)
    throw DomainError("sqrt(2) comparison requires a positive rational");
  const u128 p2 = u128{r.numerator()} * r.numerator();
  const u128 q2x2 = 2 * u128{r.denominator()} * r.denominator();
  if (p2 == q2x2)
    throw InternalError("rational equal to sqrt(2): corrupted value");
  return p2 < q2x2 ? Sqrt2Side::below : Sqrt2Side::above;
}

int compare_distance_to_sqrt2(const Rational& a, const Rational& b) {
  if (a == b) return 0;
  const Sqrt2Side side_a = compare_to_sqrt2(a);
  const Sqrt2Side side_b = compare_to_sqrt2(b);
  const u128 cross_a = u128{a.numerator()} * b.denominator();
  const u128 cross_b = u128{b.numerator()} * a.denominator();
  if (side_a == side_b) {
    if (cross_a == cross_b) return 0;
    const bool a_smaller = cross_a < cross_b;
    if (side_a == Sqrt2Side::above) return a_smaller ? -1 : 1;
    return a_smaller ? 1 : -1;
  }
  // Opposite sides: compare a + b against 2*sqrt(2).
  const u128 sum_num = cross_a + cross_b;
  const u128 den = u128{a.denominator()} * b.denominator();
  constexpr u128 kU64Max = ~u128{0} >> 64;
  if (sum_num > kU64Max || den > u128{6521908912666391105ull})
    throw RangeError("distance comparison exceeds 128-bit squares");
  const u128 lhs = sum_num * sum_num;
  const u128 rhs = 8 * den * den;
  if (lhs == rhs)
    throw InternalError("rational midpoint equal to sqrt(2): corrupted value");
  const bool above_closer = lhs < rhs;  // a + b < 2*sqrt(2)
  if (side_a == Sqrt2Side::above) return above_closer ? -1 : 1;
  return above_closer ? 1 : -1;
}

}  // namespace vdl
