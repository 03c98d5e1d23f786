#include "core/search.hpp"

#include <algorithm>
#include <array>

#include "core/divisors.hpp"
#include "core/intmath.hpp"

namespace vdl {
namespace {

using detail::u128;
using detail::u64;

constexpr u64 kHcnLimit = 1'000'000'000ull;
constexpr u64 kSievePathThreshold = 1'000'000ull;

// Enough primes that their product exceeds any permitted HCN limit.
constexpr std::array<u64, 12> kRecordPrimes = {2,  3,  5,  7,  11, 13,
                                               17, 19, 23, 29, 31, 37};

// Every divisor-count record has non-increasing exponents along consecutive
// smallest primes, so enumerating exactly those shapes and keeping records
// is both complete and cheap.
void generate_candidates(std::size_t index, u64 value, u64 divisor_count,
                         std::uint32_t max_exponent, u64 limit,
                         std::vector<std::pair<u64, u64>>& out) {
  out.emplace_back(value, divisor_count);
  if (index == kRecordPrimes.size()) return;
  u64 v = value;
  for (std::uint32_t e = 1; e <= max_exponent; ++e) {
    if (v > limit / kRecordPrimes[index]) break;
    v *= kRecordPrimes[index];
    generate_candidates(index + 1, v, divisor_count * (e + 1), e, limit, out);
  }
}

u64 first_candidate(u64 lo, u64 multiple_of) {
  if (multiple_of <= 1) return lo;
  const u64 rem = lo % multiple_of;
  return rem == 0 ? lo : lo + (multiple_of - rem);
}

}  // namespace

namespace detail {

std::vector<u64> scan_by_pair_count(u64 lo, u64 hi, u64 target,
                                    u64 multiple_of) {
  std::vector<u64> matches;
  const u64 step = multiple_of <= 1 ? 1 : multiple_of;
  for (u64 n = first_candidate(lo, multiple_of); n <= hi; n += step) {
    if (pair_count(Natural(n)) == target) matches.push_back(n);
  }
  return matches;
}

std::vector<u64> sieve_by_pair_count(u64 lo, u64 hi, u64 target,
                                     u64 multiple_of) {
  constexpr u64 kBlock = u64{1} << 23;
  std::vector<u64> matches;
  std::vector<std::uint32_t> tau;
  for (u64 block_lo = lo; block_lo <= hi;) {
    const u64 block_hi = std::min(hi, block_lo + kBlock - 1);
    const std::size_t width = static_cast<std::size_t>(block_hi - block_lo + 1);
    tau.assign(width, 0);
    const u64 root = isqrt(block_hi);
    for (u64 d = 1; d <= root; ++d) {
      // Count each divisor pair (d, m/d) once, at m >= d*d.
      u64 m = std::max(d * d, (block_lo + d - 1) / d * d);
      for (; m <= block_hi; m += d) {
        tau[static_cast<std::size_t>(m - block_lo)] += (m == d * d) ? 1 : 2;
      }
    }
    const u64 step = multiple_of <= 1 ? 1 : multiple_of;
    for (u64 n = first_candidate(block_lo, multiple_of); n <= block_hi;
         n += step) {
      if (tau[static_cast<std::size_t>(n - block_lo)] / 2 == target)
        matches.push_back(n);
    }
    if (block_hi == hi) break;
    block_lo = block_hi + 1;
  }
  return matches;
}

std::vector<std::pair<u64, u64>> divisor_count_records(u64 limit) {
  std::vector<std::pair<u64, u64>> candidates;
  generate_candidates(0, 1, 1, 63, limit, candidates);
  std::sort(candidates.begin(), candidates.end());
  std::vector<std::pair<u64, u64>> records;
  u64 best = 0;
  for (const auto& [n, d] : candidates) {
    if (d > best) {
      records.emplace_back(n, d);
      best = d;
    }
  }
  return records;
}

}  // namespace detail

std::vector<std::uint64_t> find_by_pair_count(const SearchQuery& query,
                                              const SearchLimits& limits) {
  const u64 lo = query.lo.value();
  const u64 hi = query.hi.value();
  if (lo > hi)
    throw DomainError("search range is inverted: lo " + std::to_string(lo) +
                      " > hi " + std::to_string(hi));
  if (hi - lo > limits.max_range)
    throw ResourceLimitError("search range wider than " +
                             std::to_string(limits.max_range) +
                             "; narrow the range or raise the limit");
  const u64 multiple_of =
      query.multiple_of ? query.multiple_of->value() : u64{1};
  const u64 candidates = (hi - lo) / multiple_of + 1;
  if (candidates > kSievePathThreshold)
    return detail::sieve_by_pair_count(lo, hi, query.target_pairs.value(),
                                       multiple_of);
  return detail::scan_by_pair_count(lo, hi, query.target_pairs.value(),
                                    multiple_of);
}

std::vector<std::uint64_t> highly_composite_up_to(Natural limit) {
  if (limit.value() > kHcnLimit)
    throw ResourceLimitError("highly composite search capped at " +
                             std::to_string(kHcnLimit));
  const auto records = detail::divisor_count_records(limit.value());
  std::vector<u64> out;
  out.reserve(records.size());
  for (const auto& [n, d] : records) out.push_back(n);
  return out;
}

bool is_highly_composite(Natural n) {
  const auto records = highly_composite_up_to(n);
  return !records.empty() && records.back() == n.value();
}

std::uint64_t highly_composite_limit() noexcept { return kHcnLimit; }

}  // namespace vdl
