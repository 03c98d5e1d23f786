#include "core/arith.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#include "core/intmath.hpp"

namespace vdl {
namespace {

using detail::u64;

constexpr std::array<u64, 12> kWitnesses = {2,  3,  5,  7,  11, 13,
                                            17, 19, 23, 29, 31, 37};

constexpr u64 kTrialLimit = 1'000'000;

// One Miller-Rabin round; n odd, n > 2, d odd with n - 1 = d * 2^s.
bool witness_passes(u64 n, u64 a, u64 d, int s) {
  a %= n;
  if (a == 0) return true;
  u64 x = detail::powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = detail::mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

bool miller_rabin(u64 n) {
  if (n < 2) return false;
  for (u64 p : {u64{2}, u64{3}, u64{5}, u64{7}}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : kWitnesses) {
    if (!witness_passes(n, a, d, s)) return false;
  }
  return true;
}

const std::vector<u64>& trial_primes() {
  static const std::vector<u64> primes = [] {
    std::vector<bool> composite(kTrialLimit + 1, false);
    std::vector<u64> out;
    for (u64 i = 2; i <= kTrialLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (u64 j = i * i; j <= kTrialLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

// Brent-cycle rho. Only reached for odd composites with every prime factor
// above kTrialLimit. The polynomial x^2 + c starts at x = 2 and c advances
// on failure, so the factor found is a deterministic function of n.
u64 pollard_brent(u64 n) {
  for (u64 c = 1;; ++c) {
    auto step = [n, c](u64 v) {
      u64 s = detail::mulmod(v, v, n) + c;
      return s >= n ? s - n : s;
    };
    constexpr u64 kBatch = 128;
    u64 x = 2, y = 2, ys = 2, q = 1, g = 1;
    for (u64 r = 1; g == 1; r <<= 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = step(y);
      for (u64 k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        const u64 steps = std::min(kBatch, r - k);
        for (u64 i = 0; i < steps; ++i) {
          y = step(y);
          q = detail::mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
    }
    if (g == n) {
      // The batched gcd swallowed the factor; replay one step at a time.
      g = 1;
      while (g == 1) {
        ys = step(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      }
    }
    if (g != n) return g;
  }
}

void split(u64 n, std::map<u64, std::uint32_t>& counts) {
  if (n == 1) return;
  if (miller_rabin(n)) {
    ++counts[n];
    return;
  }
  u64 d = pollard_brent(n);
  split(d, counts);
  split(n / d, counts);
}

}  // namespace

bool is_prime(Natural n) { return miller_rabin(n.value()); }

Factorization factorize(Natural n) {
  u64 rest = n.value();
  std::map<u64, std::uint32_t> counts;
  for (u64 p : trial_primes()) {
    if (p * p > rest) break;
    while (rest % p == 0) {
      rest /= p;
      ++counts[p];
    }
  }
  if (rest > 1) split(rest, counts);

  Factorization f;
  f.factors.reserve(counts.size());
  for (auto [p, e] : counts) f.factors.push_back({p, e});
  return f;
}

Natural reconstruct(const Factorization& f) {
  u64 product = 1;
  for (const auto& [prime, exponent] : f.factors) {
    for (std::uint32_t i = 0; i < exponent; ++i) {
      product = detail::checked_mul(product, prime, Natural::kMax);
      if (product == 0)
        throw RangeError("reconstructed product exceeds 2^63 - 1");
    }
  }
  return Natural(product);
}

bool is_canonical(const Factorization& f) {
  u64 previous = 0;
  for (const auto& [prime, exponent] : f.factors) {
    if (prime <= previous || exponent == 0) return false;
    if (prime > Natural::kMax || !is_prime(Natural(prime))) return false;
    previous = prime;
  }
  return true;
}

std::string to_string(const Factorization& f) {
  if (f.factors.empty()) return "1";
  std::string out;
  for (const auto& [prime, exponent] : f.factors) {
    if (!out.empty()) out += " * ";
    out += std::to_string(prime);
    if (exponent > 1) out += "^" + std::to_string(exponent);
  }
  return out;
}

}  // namespace vdl
