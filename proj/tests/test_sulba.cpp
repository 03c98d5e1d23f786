#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "core/sulba.hpp"
#include "oracles.hpp"

using vdl::Rational;
using vdl::Sqrt2Side;

TEST_CASE("rationals are stored reduced") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(577, 408).numerator() == 577);
  CHECK(Rational(577, 408).denominator() == 408);
  CHECK(Rational(0, 5) == Rational(0, 1));
  CHECK(Rational(0, 5).denominator() == 1);
  CHECK_THROWS_AS(Rational(1, 0), vdl::DomainError);
  CHECK_THROWS_AS(Rational(std::uint64_t{1} << 63, 1), vdl::RangeError);
}

TEST_CASE("rational arithmetic") {
  CHECK(Rational(1, 3).plus(Rational(1, 12)) == Rational(5, 12));
  CHECK(Rational(17, 12).minus(Rational(1, 408)) == Rational(577, 408));
  CHECK_THROWS_AS(Rational(1, 3).minus(Rational(1, 2)), vdl::DomainError);
  const std::uint64_t big = (std::uint64_t{1} << 63) - 1;
  CHECK_THROWS_AS(Rational(big, 1).plus(Rational(big, 1)), vdl::RangeError);
}

TEST_CASE("series partial sums") {
  CHECK(vdl::sulba_sqrt2_partial(1) == Rational(1, 1));
  CHECK(vdl::sulba_sqrt2_partial(2) == Rational(4, 3));
  CHECK(vdl::sulba_sqrt2_partial(3) == Rational(17, 12));
  CHECK(vdl::sulba_sqrt2_partial(4) == Rational(577, 408));
  for (int k = 1; k <= 4; ++k) {
    const Rational r = vdl::sulba_sqrt2_partial(k);
    CHECK(std::gcd(r.numerator(), r.denominator()) == 1);
  }
  CHECK_THROWS_AS(vdl::sulba_sqrt2_partial(0), vdl::DomainError);
  CHECK_THROWS_AS(vdl::sulba_sqrt2_partial(5), vdl::DomainError);
}

TEST_CASE("decimal accuracy of the partial sums") {
  CHECK(vdl::decimal_accuracy(vdl::sulba_sqrt2_partial(1)) == 0);
  CHECK(vdl::decimal_accuracy(vdl::sulba_sqrt2_partial(2)) == 1);
  CHECK(vdl::decimal_accuracy(vdl::sulba_sqrt2_partial(3)) == 2);
  CHECK(vdl::decimal_accuracy(vdl::sulba_sqrt2_partial(4)) == 5);
}

TEST_CASE("decimal accuracy agrees with the scaled-sqrt oracle") {
  // Pell-style convergents and a few off-track rationals.
  const std::pair<std::uint64_t, std::uint64_t> samples[] = {
      {1, 1},   {3, 2},   {7, 5},     {17, 12},   {41, 29},
      {99, 70}, {239, 169}, {577, 408}, {1393, 985}, {3, 1},
      {14, 10}, {141, 100}, {1414, 1000}, {14142, 10000}};
  for (const auto& [p, q] : samples) {
    CAPTURE(p);
    CAPTURE(q);
    CHECK(vdl::decimal_accuracy(Rational(p, q)) == oracles::sqrt2_digits(p, q));
  }
}

TEST_CASE("decimal accuracy requires a positive rational") {
  CHECK_THROWS_AS(vdl::decimal_accuracy(Rational(0, 1)), vdl::DomainError);
}

TEST_CASE("side of sqrt(2)") {
  CHECK(vdl::compare_to_sqrt2(Rational(1, 1)) == Sqrt2Side::below);
  CHECK(vdl::compare_to_sqrt2(Rational(4, 3)) == Sqrt2Side::below);
  CHECK(vdl::compare_to_sqrt2(Rational(17, 12)) == Sqrt2Side::above);
  CHECK(vdl::compare_to_sqrt2(Rational(577, 408)) == Sqrt2Side::above);
  CHECK_THROWS_AS(vdl::compare_to_sqrt2(Rational(0, 3)), vdl::DomainError);
}

TEST_CASE("overshoot is the minimal possible margin") {
  // 577^2 - 2 * 408^2 = 1
  CHECK(std::uint64_t{577} * 577 - 2 * std::uint64_t{408} * 408 == 1);
}

TEST_CASE("error strictly decreases along the series") {
  for (int k = 1; k < 4; ++k) {
    const Rational current = vdl::sulba_sqrt2_partial(k);
    const Rational next = vdl::sulba_sqrt2_partial(k + 1);
    CAPTURE(k);
    CHECK(vdl::compare_distance_to_sqrt2(next, current) < 0);
    CHECK(vdl::compare_distance_to_sqrt2(current, next) > 0);
  }
  CHECK(vdl::compare_distance_to_sqrt2(Rational(17, 12), Rational(17, 12)) ==
        0);
}

TEST_CASE("distance comparison crosses sides correctly") {
  // 17/12 sits above sqrt(2) and closer than 4/3 below it.
  CHECK(vdl::compare_distance_to_sqrt2(Rational(17, 12), Rational(4, 3)) < 0);
  CHECK(vdl::compare_distance_to_sqrt2(Rational(4, 3), Rational(17, 12)) > 0);
  // 7/5 = 1.4 sits below and closer than 3/2 above.
  CHECK(vdl::compare_distance_to_sqrt2(Rational(7, 5), Rational(3, 2)) < 0);
}
