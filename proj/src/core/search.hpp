#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "core/arith.hpp"

namespace vdl {

struct SearchQuery {
  Natural lo;
  Natural hi;
  Natural target_pairs;
  std::optional<Natural> multiple_of;
};

struct SearchLimits {
  // Widest [lo, hi] span a single query may scan; the CLI lets the
  // environment raise it.
  std::uint64_t max_range = 1'000'000'000ull;
};

// All n in [lo, hi] (restricted to multiples of multiple_of when given) with
// pair_count(n) == target_pairs, ascending. ResourceLimitError when
// hi - lo exceeds the limit. DomainError when lo > hi.
std::vector<std::uint64_t> find_by_pair_count(const SearchQuery& query,
                                              const SearchLimits& limits = {});

// Divisor-count records: every n <= limit with d(n) > d(m) for all m < n.
// ResourceLimitError above 1e9.
std::vector<std::uint64_t> highly_composite_up_to(Natural limit);

bool is_highly_composite(Natural n);

std::uint64_t highly_composite_limit() noexcept;

namespace detail {

// The two scan strategies behind find_by_pair_count; both produce identical
// results. The sieved path takes over once a query has more than 1e6
// candidates.
std::vector<std::uint64_t> scan_by_pair_count(std::uint64_t lo,
                                              std::uint64_t hi,
                                              std::uint64_t target,
                                              std::uint64_t multiple_of);
std::vector<std::uint64_t> sieve_by_pair_count(std::uint64_t lo,
                                               std::uint64_t hi,
                                               std::uint64_t target,
                                               std::uint64_t multiple_of);

// (n, d(n)) for every divisor-count record up to limit.
std::vector<std::pair<std::uint64_t, std::uint64_t>> divisor_count_records(
    std::uint64_t limit);

}  // namespace detail

}  // namespace vdl
