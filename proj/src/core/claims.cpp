#include "core/claims.hpp"

#include <chrono>
#include <limits>
#include <unordered_set>

#include "json.hpp"

#include "core/divisors.hpp"
#include "core/intmath.hpp"
#include "core/search.hpp"

namespace vdl {
namespace {

using detail::u64;
using json = nlohmann::json;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string format_list(const std::vector<u64>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(values[i]);
  }
  return out + "]";
}

u64 checked_sum_of_products(const std::vector<std::vector<u64>>& terms) {
  u64 sum = 0;
  for (const auto& term : terms) {
    u64 product = 1;
    for (u64 factor : term) {
      product = detail::checked_mul(product, factor, Natural::kMax);
      if (product == 0)
        throw RangeError("expression product exceeds 2^63 - 1");
    }
    if (sum > Natural::kMax - product)
      throw RangeError("expression sum exceeds 2^63 - 1");
    sum += product;
  }
  return sum;
}

struct Evaluation {
  std::string computed;
  std::string expected;
  bool match;
  bool informational = false;
};

Evaluation evaluate_body(const CheckBody& body) {
  return std::visit(
      overloaded{
          [](const EqualityCheck& c) -> Evaluation {
            const u64 sum = checked_sum_of_products(c.terms);
            return {std::to_string(sum), std::to_string(c.expected),
                    sum == c.expected};
          },
          [](const PrimalityCheck& c) -> Evaluation {
            const bool prime = is_prime(Natural(c.n));
            auto word = [](bool p) {
              return std::string(p ? "prime" : "composite");
            };
            return {word(prime), word(c.expected), prime == c.expected};
          },
          [](const FactorizationCheck& c) -> Evaluation {
            const Factorization computed = factorize(Natural(c.n));
            const Factorization expected{c.expected};
            return {to_string(computed), to_string(expected),
                    computed == expected};
          },
          [](const PairCountCheck& c) -> Evaluation {
            const u64 pairs = pair_count(Natural(c.n));
            auto render = [&](u64 p, std::optional<u64> d) {
              std::string s = std::to_string(p) + " pairs";
              if (d) s += ", " + std::to_string(*d) + " divisors";
              return s;
            };
            if (!c.expected_divisor_count)
              return {render(pairs, std::nullopt),
                      render(c.expected_pairs, std::nullopt),
                      pairs == c.expected_pairs};
            const u64 divisors = count_divisors(Natural(c.n));
            return {render(pairs, divisors),
                    render(c.expected_pairs, c.expected_divisor_count),
                    pairs == c.expected_pairs &&
                        divisors == *c.expected_divisor_count};
          },
          [](const DivisorListCheck& c) -> Evaluation {
            const DivisorPairing pairing = pair_divisors(Natural(c.n));
            std::vector<u64> minors;
            minors.reserve(pairing.strict_pairs.size());
            for (const auto& pair : pairing.strict_pairs)
              minors.push_back(pair.minor);
            return {format_list(minors), format_list(c.expected_minors),
                    minors == c.expected_minors};
          },
          [](const NuValueCheck& c) -> Evaluation {
            const u64 nu = largest_minor_divisor(Natural(c.n));
            return {std::to_string(nu), std::to_string(c.expected),
                    nu == c.expected};
          },
          [](const NonDivisorListCheck& c) -> Evaluation {
            const auto computed = non_divisors_up_to_nu(Natural(c.n));
            return {format_list(computed), format_list(c.expected),
                    computed == c.expected};
          },
          [](const DecimalAccuracyCheck& c) -> Evaluation {
            const Rational r = c.series_terms > 0
                                   ? sulba_sqrt2_partial(
                                         static_cast<int>(c.series_terms))
                                   : *c.value;
            const int digits = decimal_accuracy(r);
            auto render = [](const std::string& value, u64 d) {
              return value + ", " + std::to_string(d) + " decimal places";
            };
            const std::string computed =
                render(r.to_string(), static_cast<u64>(digits));
            if (c.expected_value) {
              return {computed,
                      render(c.expected_value->to_string(), c.expected_digits),
                      static_cast<u64>(digits) == c.expected_digits &&
                          r == *c.expected_value};
            }
            return {computed,
                    std::to_string(c.expected_digits) + " decimal places",
                    static_cast<u64>(digits) == c.expected_digits};
          },
          [](const HcnMembershipCheck& c) -> Evaluation {
            const bool member = is_highly_composite(Natural(c.n));
            auto word = [](bool m) {
              return std::string(m ? "highly composite" : "not highly composite");
            };
            if (!c.expected)
              return {word(member), "(informational)", true, true};
            return {word(member), word(*c.expected), member == *c.expected};
          },
      },
      body);
}

void require(bool ok, const std::string& field, const std::string& what) {
  if (!ok) throw ValidationError(field + ": " + what);
}

void validate_natural(u64 value, const std::string& field) {
  require(value >= 1 && value <= Natural::kMax, field,
          "value out of domain [1, 2^63 - 1]");
}

void validate_check(const Check& check, const std::string& field) {
  std::visit(
      overloaded{
          [&](const EqualityCheck& c) {
            require(!c.terms.empty(), field + ".inputs", "no terms");
            for (const auto& term : c.terms) {
              require(!term.empty(), field + ".inputs", "empty product term");
              for (u64 factor : term)
                validate_natural(factor, field + ".inputs");
            }
            validate_natural(c.expected, field + ".expected");
          },
          [&](const PrimalityCheck& c) {
            validate_natural(c.n, field + ".inputs");
          },
          [&](const FactorizationCheck& c) {
            validate_natural(c.n, field + ".inputs");
            require(!c.expected.empty() || c.n == 1, field + ".expected",
                    "empty factorization for n > 1");
            for (const auto& pp : c.expected) {
              validate_natural(pp.prime, field + ".expected");
              require(pp.exponent >= 1, field + ".expected", "zero exponent");
            }
          },
          [&](const PairCountCheck& c) {
            validate_natural(c.n, field + ".inputs");
          },
          [&](const DivisorListCheck& c) {
            validate_natural(c.n, field + ".inputs");
            for (u64 m : c.expected_minors)
              validate_natural(m, field + ".expected");
          },
          [&](const NuValueCheck& c) {
            validate_natural(c.n, field + ".inputs");
            validate_natural(c.expected, field + ".expected");
          },
          [&](const NonDivisorListCheck& c) {
            validate_natural(c.n, field + ".inputs");
          },
          [&](const DecimalAccuracyCheck& c) {
            require(c.series_terms <= 4, field + ".inputs",
                    "series term count outside 1..4");
            require((c.series_terms >= 1) != c.value.has_value(),
                    field + ".inputs",
                    "exactly one of series terms or explicit value required");
            require(c.expected_digits <= 38, field + ".expected",
                    "decimal accuracy beyond supported precision");
          },
          [&](const HcnMembershipCheck& c) {
            validate_natural(c.n, field + ".inputs");
            require(c.n <= highly_composite_limit(), field + ".inputs",
                    "above the highly-composite resource bound");
          },
      },
      check.body);
}

// ---------------------------------------------------------------------------
// Builtin registry
// ---------------------------------------------------------------------------

std::vector<Claim> make_builtin_claims() {
  std::vector<Claim> claims;
  auto add = [&claims](std::string id, std::string locus,
                       std::string description,
                       std::vector<Check> checks) {
    claims.push_back({std::move(id), std::move(locus), std::move(description),
                      std::move(checks)});
  };

  add("rv_words", "Saunaka, Rgveda Anukramani",
      "The indexed word count 153,826 is twice 76,913, and 76,913 is prime.",
      {{EqualityCheck{{{2, 76913}}, 153826}},
       {PrimalityCheck{76913, true}}});

  add("rv_verses", "Saunaka, Rgveda Anukramani",
      "The verse count 10,522 is twice 5,261, and 5,261 is prime.",
      {{EqualityCheck{{{2, 5261}}, 10522}}, {PrimalityCheck{5261, true}}});

  add("days_pairs", "Satapatha Brahmana 10.4.2.1-18",
      "720, the days and nights of the year, splits into 15 divisor pairs "
      "whose minors are enumerated one arrangement at a time.",
      {{PairCountCheck{720, 15, std::nullopt}},
       {DivisorListCheck{
           720, {1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 15, 16, 18, 20, 24}}}});

  add("non_divisors_720", "Satapatha Brahmana 10.4.2.1-18",
      "The non-dividing counts up to 24 are called out explicitly: "
      "7, 11, 13, 14, 17, 19, 21, 22, 23.",
      {{NonDivisorListCheck{720, {7, 11, 13, 14, 17, 19, 21, 22, 23}}}});

  add("nu_720", "Satapatha Brahmana 10.4.2.1-18",
      "The largest minor divisor of 720 is 24, the half-months of the year; "
      "15 x 24 restates 360.",
      {{NuValueCheck{720, 24}}, {EqualityCheck{{{15, 24}}, 360}}});

  add("delta_360", "Satapatha Brahmana 10.4.2 (360-brick altar)",
      "360 has 12 divisor pairs and its largest minor divisor is 18, "
      "which matches no salient count of the year.",
      {{PairCountCheck{360, 12, std::nullopt}}, {NuValueCheck{360, 18}}});

  add("d_10800", "Satapatha Brahmana 10.4.2.36",
      "The 10,800 muhurtas of the year admit 30 arrangements: "
      "d(10800) = 60 divisors in 30 pairs.",
      {{PairCountCheck{10800, 30, 60}}});

  add("sadaha_60", "Vedic calendar, the sadaha six-day week",
      "The 60 days-and-nights of the month have minors 1..6, "
      "the counts below their companions; hence a six-day week.",
      {{DivisorListCheck{60, {1, 2, 3, 4, 5, 6}}},
       {PairCountCheck{60, 6, std::nullopt}}});

  add("nadi_total", "Prasna Upanisad 3.6",
      "101 chief nadis, each with 100 branches, each branch with 72,000 "
      "tributaries; the catalogued total 727,210,101 disagrees with its own "
      "defining sum, which reaches 727,210,201.",
      {{EqualityCheck{{{101}, {101, 100}, {101, 100, 72000}}, 727210101},
        true}});

  add("nadi_factors", "Prasna Upanisad 3.6",
      "The recomputed nadi total 727,210,201 factors as 101 x 7,200,101, "
      "both prime.",
      {{FactorizationCheck{727210201, {{101, 1}, {7200101, 1}}}},
       {PrimalityCheck{101, true}},
       {PrimalityCheck{7200101, true}}});

  add("yantra_137", "Svetasvatara Upanisad 1.4",
      "The wheel-of-Brahman parts 1+1+16+50+20+48+1 total 137, a prime.",
      {{EqualityCheck{{{1}, {1}, {16}, {50}, {20}, {48}, {1}}, 137}},
       {PrimalityCheck{137, true}}});

  add("sri_yantra_43", "Sri Yantra, nine interlocked triangles",
      "The nine juxtaposed triangles produce 43 smaller triangles; "
      "43 is prime.",
      {{PrimalityCheck{43, true}}});

  add("marma_107", "Ayurvedic physiology, marma count",
      "The 108 links from feet to crown have 107 joints; 107 is prime.",
      {{PrimalityCheck{107, true}}});

  add("nakshatra_324", "Naksatra year reckoning",
      "The naksatra year holds 324 days: 12 months of 27 lunar days, "
      "also 3 x 108.",
      {{EqualityCheck{{{12, 27}}, 324}}, {EqualityCheck{{{3, 108}}, 324}}});

  add("syllables_432000", "Satapatha Brahmana 10.4.2 (Rgveda syllables)",
      "432,000 syllables equal the muhurtas in 40 years of 10,800 each.",
      {{EqualityCheck{{{40, 10800}}, 432000}}});

  add("year_parts", "Satapatha Brahmana 12.3.2",
      "Successive divisions of the year amount to 10,800 x 15^6 parts.",
      {{EqualityCheck{{{10800, 15, 15, 15, 15, 15, 15}}, 123018750000}}});

  add("manu_55", "Maitrayani Samhita 1.5.8",
      "Manu's sons number 1+2+...+10 = 55; five sticks of value ten raise "
      "the five to 55, beating the 50.",
      {{EqualityCheck{
          {{1}, {2}, {3}, {4}, {5}, {6}, {7}, {8}, {9}, {10}}, 55}}});

  add("sqrt2_577_408", "Baudhayana Sulbasutra, sqrt(2) rule",
      "1 + 1/3 + 1/12 - 1/408 = 577/408, accurate to five decimal places; "
      "the stated three-place validity of the three-term prefix computes "
      "to two places under the strict-window convention.",
      {{DecimalAccuracyCheck{4, std::nullopt, 5, Rational(577, 408)}},
       {DecimalAccuracyCheck{3, std::nullopt, 3, std::nullopt}, true}});

  add("cosmic_cycle", "Cosmic cycle reckoning, 720 x 432,000",
      "The longest cycle multiplies 720 by 432,000 to 311,040,000; its "
      "divisor-record status is reported for information.",
      {{EqualityCheck{{{720, 432000}}, 311040000}},
       {HcnMembershipCheck{311040000, std::nullopt}}});

  add("stars_1e7", "Star count 1.08 x 10^7",
      "The stated star count decomposes as 10,800 x 1,000 = 10,800,000.",
      {{EqualityCheck{{{10800, 1000}}, 10800000}}});

  return claims;
}

// ---------------------------------------------------------------------------
// Claim-file JSON
// ---------------------------------------------------------------------------

u64 parse_decimal_field(const json& node, const std::string& field) {
  if (node.is_number_unsigned()) return node.get<u64>();
  if (!node.is_string())
    throw ValidationError(field + ": expected a decimal string");
  const std::string& text = node.get_ref<const std::string&>();
  if (text.empty()) throw ValidationError(field + ": empty number");
  u64 value = 0;
  for (char ch : text) {
    if (ch < '0' || ch > '9')
      throw ValidationError(field + ": non-decimal character in \"" + text +
                            "\"");
    if (value > (std::numeric_limits<u64>::max() - (ch - '0')) / 10)
      throw ValidationError(field + ": number too large");
    value = value * 10 + static_cast<u64>(ch - '0');
  }
  return value;
}

std::uint32_t parse_u32_field(const json& node, const std::string& field) {
  const u64 value = parse_decimal_field(node, field);
  if (value > std::numeric_limits<std::uint32_t>::max())
    throw ValidationError(field + ": number too large");
  return static_cast<std::uint32_t>(value);
}

std::vector<u64> parse_decimal_array(const json& node,
                                     const std::string& field) {
  if (!node.is_array())
    throw ValidationError(field + ": expected an array");
  std::vector<u64> out;
  out.reserve(node.size());
  for (std::size_t i = 0; i < node.size(); ++i)
    out.push_back(
        parse_decimal_field(node[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

const json& required_field(const json& object, const char* name,
                           const std::string& where) {
  auto it = object.find(name);
  if (it == object.end())
    throw ValidationError(where + "." + name + ": missing");
  return *it;
}

CheckBody parse_check_body(CheckKind kind, const json& inputs,
                           const json& expected, const std::string& where) {
  const std::string in_field = where + ".inputs";
  const std::string ex_field = where + ".expected";
  switch (kind) {
    case CheckKind::equality_of_expression: {
      if (!inputs.is_array() || inputs.empty())
        throw ValidationError(in_field + ": expected an array of terms");
      EqualityCheck check;
      for (std::size_t i = 0; i < inputs.size(); ++i)
        check.terms.push_back(parse_decimal_array(
            inputs[i], in_field + "[" + std::to_string(i) + "]"));
      check.expected = parse_decimal_field(expected, ex_field);
      return check;
    }
    case CheckKind::primality: {
      const auto nats = parse_decimal_array(inputs, in_field);
      if (nats.size() != 1)
        throw ValidationError(in_field + ": primality takes one input");
      if (!expected.is_boolean())
        throw ValidationError(ex_field + ": expected true or false");
      return PrimalityCheck{nats[0], expected.get<bool>()};
    }
    case CheckKind::factorization: {
      const auto nats = parse_decimal_array(inputs, in_field);
      if (nats.size() != 1)
        throw ValidationError(in_field + ": factorization takes one input");
      if (!expected.is_array())
        throw ValidationError(ex_field +
                              ": expected an array of [prime, exponent]");
      FactorizationCheck check{nats[0], {}};
      for (std::size_t i = 0; i < expected.size(); ++i) {
        const std::string entry = ex_field + "[" + std::to_string(i) + "]";
        if (!expected[i].is_array() || expected[i].size() != 2)
          throw ValidationError(entry + ": expected [prime, exponent]");
        check.expected.push_back(
            {parse_decimal_field(expected[i][0], entry),
             parse_u32_field(expected[i][1], entry)});
      }
      return check;
    }
    case CheckKind::pair_count: {
      const auto nats = parse_decimal_array(inputs, in_field);
      if (nats.size() != 1)
        throw ValidationError(in_field + ": pair-count takes one input");
      PairCountCheck check{nats[0], 0, std::nullopt};
      if (expected.is_object()) {
        check.expected_pairs = parse_decimal_field(
            required_field(expected, "pairs", ex_field), ex_field + ".pairs");
        if (auto it = expected.find("divisors"); it != expected.end())
          check.expected_divisor_count =
              parse_decimal_field(*it, ex_field + ".divisors");
      } else {
        check.expected_pairs = parse_decimal_field(expected, ex_field);
      }
      return check;
    }
    case CheckKind::divisor_list: {
      const auto nats = parse_decimal_array(inputs, in_field);
      if (nats.size() != 1)
        throw ValidationError(in_field + ": divisor-list takes one input");
      return DivisorListCheck{nats[0], parse_decimal_array(expected, ex_field)};
    }
    case CheckKind::nu_value: {
      const auto nats = parse_decimal_array(inputs, in_field);
      if (nats.size() != 1)
        throw ValidationError(in_field + ": nu-value takes one input");
      return NuValueCheck{nats[0], parse_decimal_field(expected, ex_field)};
    }
    case CheckKind::non_divisor_list: {
      const auto nats = parse_decimal_array(inputs, in_field);
      if (nats.size() != 1)
        throw ValidationError(in_field + ": non-divisor-list takes one input");
      return NonDivisorListCheck{nats[0],
                                 parse_decimal_array(expected, ex_field)};
    }
    case CheckKind::decimal_accuracy: {
      const auto nats = parse_decimal_array(inputs, in_field);
      DecimalAccuracyCheck check;
      if (nats.size() == 1) {
        if (nats[0] < 1 || nats[0] > 4)
          throw ValidationError(in_field +
                                ": single input must be a series term count "
                                "in 1..4");
        check.series_terms = static_cast<std::uint32_t>(nats[0]);
      } else if (nats.size() == 2) {
        check.value = Rational(nats[0], nats[1]);
      } else {
        throw ValidationError(in_field +
                              ": expected [terms] or [numerator, denominator]");
      }
      if (expected.is_object()) {
        check.expected_digits = parse_u32_field(
            required_field(expected, "digits", ex_field), ex_field + ".digits");
        if (auto it = expected.find("value"); it != expected.end()) {
          const auto pair = parse_decimal_array(*it, ex_field + ".value");
          if (pair.size() != 2)
            throw ValidationError(ex_field +
                                  ".value: expected [numerator, denominator]");
          check.expected_value = Rational(pair[0], pair[1]);
        }
      } else {
        check.expected_digits = parse_u32_field(expected, ex_field);
      }
      return check;
    }
    case CheckKind::hcn_membership: {
      const auto nats = parse_decimal_array(inputs, in_field);
      if (nats.size() != 1)
        throw ValidationError(in_field + ": hcn-membership takes one input");
      HcnMembershipCheck check{nats[0], std::nullopt};
      if (!expected.is_null()) {
        if (!expected.is_boolean())
          throw ValidationError(ex_field +
                                ": expected true, false, or null");
        check.expected = expected.get<bool>();
      }
      return check;
    }
  }
  throw ValidationError(where + ".check: unknown kind");
}

}  // namespace

const char* check_kind_name(CheckKind kind) noexcept {
  switch (kind) {
    case CheckKind::equality_of_expression: return "equality-of-expression";
    case CheckKind::primality: return "primality";
    case CheckKind::factorization: return "factorization";
    case CheckKind::pair_count: return "pair-count";
    case CheckKind::divisor_list: return "divisor-list";
    case CheckKind::nu_value: return "nu-value";
    case CheckKind::non_divisor_list: return "non-divisor-list";
    case CheckKind::decimal_accuracy: return "decimal-accuracy";
    case CheckKind::hcn_membership: return "hcn-membership";
  }
  return "unknown";
}

std::optional<CheckKind> check_kind_from_name(std::string_view name) noexcept {
  for (int k = 0; k <= static_cast<int>(CheckKind::hcn_membership); ++k) {
    const auto kind = static_cast<CheckKind>(k);
    if (name == check_kind_name(kind)) return kind;
  }
  return std::nullopt;
}

CheckKind check_kind(const Check& check) noexcept {
  return static_cast<CheckKind>(check.body.index());
}

const char* verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::discrepancy: return "discrepancy";
  }
  return "fail";
}

const char* check_outcome_name(CheckOutcome o) noexcept {
  switch (o) {
    case CheckOutcome::match: return "match";
    case CheckOutcome::mismatch: return "mismatch";
    case CheckOutcome::discrepancy: return "discrepancy";
    case CheckOutcome::info: return "info";
  }
  return "mismatch";
}

const std::vector<Claim>& builtin_claims() {
  static const std::vector<Claim> claims = make_builtin_claims();
  return claims;
}

void validate_claim(const Claim& claim) {
  require(!claim.id.empty(), "claim.id", "empty");
  require(!claim.checks.empty(), "claim \"" + claim.id + "\"",
          "has no checks");
  for (std::size_t i = 0; i < claim.checks.size(); ++i) {
    validate_check(claim.checks[i],
                   "claim \"" + claim.id + "\" checks[" + std::to_string(i) +
                       "]");
  }
}

ClaimReport evaluate_claim(const Claim& claim) {
  validate_claim(claim);
  const auto start = std::chrono::steady_clock::now();
  ClaimReport report{claim.id, Verdict::pass, 0.0, {}};
  bool any_mismatch = false;
  bool any_discrepancy = false;
  for (const Check& check : claim.checks) {
    Evaluation eval;
    try {
      eval = evaluate_body(check.body);
    } catch (const Error& e) {
      // A well-formed claim whose computation cannot complete (nu of 1, a
      // rational beyond the precision envelope) fails with the error text
      // instead of aborting the whole run.
      eval = {std::string("error: ") + e.what(), "(not evaluated)", false,
              false};
    }
    CheckOutcome outcome;
    if (eval.informational) {
      outcome = CheckOutcome::info;
    } else if (eval.match) {
      outcome = CheckOutcome::match;
    } else if (check.discrepancy_allowed) {
      outcome = CheckOutcome::discrepancy;
      any_discrepancy = true;
    } else {
      outcome = CheckOutcome::mismatch;
      any_mismatch = true;
    }
    report.checks.push_back({check_kind(check), std::move(eval.computed),
                             std::move(eval.expected), outcome});
  }
  if (any_mismatch)
    report.verdict = Verdict::fail;
  else if (any_discrepancy)
    report.verdict = Verdict::discrepancy;
  const auto stop = std::chrono::steady_clock::now();
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(stop - start).count();
  return report;
}

VerifyRun verify_all(const std::vector<Claim>& registry) {
  std::unordered_set<std::string> seen;
  for (const Claim& claim : registry) {
    if (!seen.insert(claim.id).second)
      throw ValidationError("duplicate claim id: " + claim.id);
  }
  VerifyRun run;
  run.reports.reserve(registry.size());
  for (const Claim& claim : registry) {
    run.reports.push_back(evaluate_claim(claim));
    switch (run.reports.back().verdict) {
      case Verdict::pass: ++run.summary.passed; break;
      case Verdict::fail: ++run.summary.failed; break;
      case Verdict::discrepancy: ++run.summary.discrepancies; break;
    }
  }
  run.summary.total = registry.size();
  return run;
}

std::vector<Claim> parse_claims_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("claims file: ") + e.what());
  }
  if (!doc.is_object())
    throw ValidationError("claims file: top level must be an object");
  const json& list = required_field(doc, "claims", "claims file");
  if (!list.is_array())
    throw ValidationError("claims file.claims: expected an array");

  std::vector<Claim> claims;
  claims.reserve(list.size());
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = "claims[" + std::to_string(i) + "]";
    const json& node = list[i];
    if (!node.is_object())
      throw ValidationError(where + ": expected an object");
    Claim claim;
    const json& id = required_field(node, "id", where);
    if (!id.is_string() || id.get_ref<const std::string&>().empty())
      throw ValidationError(where + ".id: expected a non-empty string");
    claim.id = id.get<std::string>();
    if (auto it = node.find("locus"); it != node.end() && it->is_string())
      claim.locus = it->get<std::string>();
    if (auto it = node.find("description");
        it != node.end() && it->is_string())
      claim.description = it->get<std::string>();

    const json& kind_node = required_field(node, "check", where);
    if (!kind_node.is_string())
      throw ValidationError(where + ".check: expected a string");
    const auto kind = check_kind_from_name(kind_node.get<std::string>());
    if (!kind)
      throw ValidationError(where + ".check: unknown kind \"" +
                            kind_node.get<std::string>() + "\"");

    const json& inputs = required_field(node, "inputs", where);
    const json& expected = kind == CheckKind::hcn_membership &&
                                   node.find("expected") == node.end()
                               ? json(nullptr)
                               : required_field(node, "expected", where);
    Check check{parse_check_body(*kind, inputs, expected, where), false};
    if (auto it = node.find("allow_discrepancy"); it != node.end()) {
      if (!it->is_boolean())
        throw ValidationError(where +
                              ".allow_discrepancy: expected true or false");
      check.discrepancy_allowed = it->get<bool>();
    }
    claim.checks.push_back(std::move(check));
    validate_claim(claim);
    claims.push_back(std::move(claim));
  }
  return claims;
}

}  // namespace vdl
