#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "core/arith.hpp"
#include "core/sulba.hpp"

namespace vdl {

// The closed set of check kinds. Every catalogued assertion is one of these;
// there is deliberately no expression interpreter beyond sums of products.
enum class CheckKind {
  equality_of_expression,
  primality,
  factorization,
  pair_count,
  divisor_list,
  nu_value,
  non_divisor_list,
  decimal_accuracy,
  hcn_membership,
};

const char* check_kind_name(CheckKind kind) noexcept;
std::optional<CheckKind> check_kind_from_name(std::string_view name) noexcept;

// Sum of products of naturals equals the stated value.
struct EqualityCheck {
  std::vector<std::vector<std::uint64_t>> terms;
  std::uint64_t expected;
};

struct PrimalityCheck {
  std::uint64_t n;
  bool expected;
};

struct FactorizationCheck {
  std::uint64_t n;
  std::vector<PrimePower> expected;
};

// Checks delta(n); optionally also the full divisor count d(n).
struct PairCountCheck {
  std::uint64_t n;
  std::uint64_t expected_pairs;
  std::optional<std::uint64_t> expected_divisor_count;
};

// Compares the minor list of the pairing, the list the texts enumerate.
struct DivisorListCheck {
  std::uint64_t n;
  std::vector<std::uint64_t> expected_minors;
};

struct NuValueCheck {
  std::uint64_t n;
  std::uint64_t expected;
};

struct NonDivisorListCheck {
  std::uint64_t n;
  std::vector<std::uint64_t> expected;
};

// series_terms in 1..4 evaluates the sqrt(2) series prefix; series_terms == 0
// means an explicit rational was supplied instead.
struct DecimalAccuracyCheck {
  std::uint32_t series_terms = 0;
  std::optional<Rational> value;
  std::uint32_t expected_digits = 0;
  std::optional<Rational> expected_value;
};

// No expected value makes the check informational: the status is reported
// but never drives a verdict.
struct HcnMembershipCheck {
  std::uint64_t n;
  std::optional<bool> expected;
};

using CheckBody =
    std::variant<EqualityCheck, PrimalityCheck, FactorizationCheck,
                 PairCountCheck, DivisorListCheck, NuValueCheck,
                 NonDivisorListCheck, DecimalAccuracyCheck, HcnMembershipCheck>;

struct Check {
  CheckBody body;
  // Known-loose: a mismatch downgrades the claim to discrepancy
  // instead of fail. Reserved for stated values that disagree with their own
  // defining arithmetic.
  bool discrepancy_allowed = false;
};

CheckKind check_kind(const Check& check) noexcept;

struct Claim {
  std::string id;
  std::string locus;
  std::string description;
  std::vector<Check> checks;
};

enum class Verdict { pass, fail, discrepancy };
enum class CheckOutcome { match, mismatch, discrepancy, info };

const char* verdict_name(Verdict v) noexcept;
const char* check_outcome_name(CheckOutcome o) noexcept;

struct CheckResult {
  CheckKind kind;
  std::string computed;
  std::string expected;
  CheckOutcome outcome;
};

struct ClaimReport {
  std::string id;
  Verdict verdict;
  double elapsed_ms;
  std::vector<CheckResult> checks;
};

struct VerifySummary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t discrepancies = 0;
};

struct VerifyRun {
  std::vector<ClaimReport> reports;
  VerifySummary summary;
};

// The fixed catalog of numeric assertions from the Vedic sources.
const std::vector<Claim>& builtin_claims();

// ValidationError naming the offending field when the claim is malformed.
void validate_claim(const Claim& claim);

// Recomputes everything from the claim inputs via the engine modules; the
// stored expected values are compared against, never returned.
ClaimReport evaluate_claim(const Claim& claim);

// ValidationError on duplicate ids; reports come back in registry order.
VerifyRun verify_all(const std::vector<Claim>& registry);

// Parses the external claim-file JSON document (see README for the schema).
// All integers are decimal strings. ValidationError names the bad field.
std::vector<Claim> parse_claims_json(std::string_view text);

}  // namespace vdl
