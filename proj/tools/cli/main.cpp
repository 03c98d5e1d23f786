// vdl command-line front end. Everything goes through the C API in
// vdl/vdl.h; with --json the primary stream carries exactly one output
// envelope and human text moves to the diagnostic stream.
//
// Exit codes: 0 success; 1 verify found failing claims; 2 usage, domain, or
// validation problem; 3 resource limit.

#include <vdl/vdl.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceLimit = 3;

struct Context {
  bool json = false;
  bool no_timing = false;
  std::string command;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Decimal digits with optional single underscores between digit groups,
// e.g. 720_000.
uint64_t parse_natural_text(const std::string& text) {
  if (text.empty()) throw UsageError("empty number");
  bool last_was_digit = false;
  for (char ch : text) {
    if (ch == '_') {
      if (!last_was_digit)
        throw UsageError("misplaced underscore in number \"" + text + "\"");
      last_was_digit = false;
    } else if (ch >= '0' && ch <= '9') {
      last_was_digit = true;
    } else {
      throw UsageError("not a decimal number: \"" + text + "\"");
    }
  }
  if (!last_was_digit)
    throw UsageError("misplaced underscore in number \"" + text + "\"");
  uint64_t value = 0;
  for (char ch : text) {
    if (ch == '_') continue;
    const uint64_t digit = static_cast<uint64_t>(ch - '0');
    if (value > (UINT64_MAX - digit) / 10)
      throw UsageError("number too large: \"" + text + "\"");
    value = value * 10 + digit;
  }
  return value;
}

std::string dec(uint64_t value) { return std::to_string(value); }

int exit_code_for(vdl_status status) {
  return status == VDL_ERR_RESOURCE_LIMIT ? kExitResourceLimit : kExitUsage;
}

int emit_ok(const Context& ctx, const ordered_json& payload,
            const std::string& human) {
  if (ctx.json) {
    ordered_json envelope;
    envelope["command"] = ctx.command;
    envelope["status"] = "ok";
    envelope["payload"] = payload;
    std::cout << envelope.dump(2) << "\n";
    if (!human.empty()) std::cerr << human << "\n";
  } else {
    std::cout << human << "\n";
  }
  return kExitOk;
}

int emit_error(const Context& ctx, const std::string& code,
               const std::string& message, int exit_code) {
  if (ctx.json) {
    ordered_json envelope;
    envelope["command"] = ctx.command;
    envelope["status"] = "error";
    envelope["error"] = {{"code", code}, {"message", message}};
    std::cout << envelope.dump(2) << "\n";
    std::cerr << "error: " << message << "\n";
  } else {
    std::cerr << "error: " << message << "\n";
  }
  return exit_code;
}

int emit_status_error(const Context& ctx, vdl_status status) {
  return emit_error(ctx, vdl_status_name(status), vdl_last_error(),
                    exit_code_for(status));
}

struct ListDeleter {
  void operator()(vdl_u64_list* p) const { vdl_u64_list_free(p); }
};
using ListPtr = std::unique_ptr<vdl_u64_list, ListDeleter>;

std::vector<uint64_t> to_vector(const vdl_u64_list* list) {
  std::vector<uint64_t> out(vdl_u64_list_size(list));
  for (size_t i = 0; i < out.size(); ++i) out[i] = vdl_u64_list_get(list, i);
  return out;
}

ordered_json string_array(const std::vector<uint64_t>& values) {
  ordered_json arr = ordered_json::array();
  for (uint64_t v : values) arr.push_back(dec(v));
  return arr;
}

std::string joined(const std::vector<uint64_t>& values) {
  std::string out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += " ";
    out += dec(values[i]);
  }
  return out;
}

// ------------------------------------------------------------------
// Subcommand handlers
// ------------------------------------------------------------------

int run_factor(const Context& ctx, const std::string& n_text) {
  const uint64_t n = parse_natural_text(n_text);
  vdl_factorization* raw = nullptr;
  if (const vdl_status status = vdl_factorize(n, &raw); status != VDL_OK)
    return emit_status_error(ctx, status);
  std::unique_ptr<vdl_factorization, decltype(&vdl_factorization_free)> f(
      raw, &vdl_factorization_free);

  std::string human = dec(n) + " = ";
  ordered_json factors = ordered_json::array();
  const size_t count = vdl_factorization_size(f.get());
  if (count == 0) human += "1";
  for (size_t i = 0; i < count; ++i) {
    const uint64_t prime = vdl_factorization_prime(f.get(), i);
    const uint32_t exponent = vdl_factorization_exponent(f.get(), i);
    if (i > 0) human += " · ";
    human += dec(prime);
    if (exponent > 1) human += "^" + std::to_string(exponent);
    factors.push_back({{"prime", dec(prime)}, {"exponent", exponent}});
  }
  ordered_json payload{{"n", dec(n)}, {"factors", factors}};
  return emit_ok(ctx, payload, human);
}

int run_divisors(const Context& ctx, const std::string& n_text, bool pairs) {
  const uint64_t n = parse_natural_text(n_text);
  if (!pairs) {
    vdl_u64_list* raw = nullptr;
    if (const vdl_status status = vdl_enumerate_divisors(n, &raw);
        status != VDL_OK)
      return emit_status_error(ctx, status);
    ListPtr list(raw);
    const auto divisors = to_vector(list.get());
    ordered_json payload{{"n", dec(n)},
                         {"count", divisors.size()},
                         {"divisors", string_array(divisors)}};
    std::string human = dec(n) + " has " + std::to_string(divisors.size()) +
                        (divisors.size() == 1 ? " divisor: " : " divisors: ") +
                        joined(divisors);
    return emit_ok(ctx, payload, human);
  }

  vdl_pairing* raw = nullptr;
  if (const vdl_status status = vdl_pair_divisors(n, &raw); status != VDL_OK)
    return emit_status_error(ctx, status);
  std::unique_ptr<vdl_pairing, decltype(&vdl_pairing_free)> pairing(
      raw, &vdl_pairing_free);

  ordered_json pair_rows = ordered_json::array();
  std::ostringstream human;
  const size_t strict = vdl_pairing_strict_count(pairing.get());
  human << dec(n) << " has " << strict << " divisor pair"
        << (strict == 1 ? "" : "s");
  if (vdl_pairing_has_self_pair(pairing.get()))
    human << " and a self-paired square root";
  for (size_t i = 0; i < strict; ++i) {
    const uint64_t minor = vdl_pairing_minor(pairing.get(), i);
    const uint64_t companion = vdl_pairing_companion(pairing.get(), i);
    pair_rows.push_back({dec(minor), dec(companion)});
    human << "\n" << dec(minor) << " x " << dec(companion);
  }
  ordered_json payload{{"n", dec(n)}, {"strict_pairs", pair_rows}};
  if (vdl_pairing_has_self_pair(pairing.get())) {
    const uint64_t self = vdl_pairing_self_pair(pairing.get());
    payload["self_pair"] = dec(self);
    human << "\nself: " << dec(self) << " x " << dec(self);
  } else {
    payload["self_pair"] = nullptr;
  }
  return emit_ok(ctx, payload, human.str());
}

int run_count(const Context& ctx, const std::string& n_text) {
  const uint64_t n = parse_natural_text(n_text);
  uint64_t divisor_count = 0;
  if (const vdl_status status = vdl_count_divisors(n, &divisor_count);
      status != VDL_OK)
    return emit_status_error(ctx, status);
  uint64_t pairs = 0;
  if (const vdl_status status = vdl_pair_count(n, &pairs); status != VDL_OK)
    return emit_status_error(ctx, status);

  ordered_json payload{{"n", dec(n)},
                       {"divisor_count", divisor_count},
                       {"pair_count", pairs}};
  std::string human = "d(" + dec(n) + ") = " + dec(divisor_count) +
                      ", pairs = " + dec(pairs);
  if (divisor_count % 2 == 1) {
    vdl_pairing* raw = nullptr;
    if (const vdl_status status = vdl_pair_divisors(n, &raw);
        status != VDL_OK)
      return emit_status_error(ctx, status);
    std::unique_ptr<vdl_pairing, decltype(&vdl_pairing_free)> pairing(
        raw, &vdl_pairing_free);
    const uint64_t self = vdl_pairing_self_pair(pairing.get());
    payload["self_pair"] = dec(self);
    human += ", self-paired " + dec(self);
  } else {
    payload["self_pair"] = nullptr;
  }
  return emit_ok(ctx, payload, human);
}

int run_nu(const Context& ctx, const std::string& n_text) {
  const uint64_t n = parse_natural_text(n_text);
  uint64_t nu = 0;
  if (const vdl_status status = vdl_largest_minor_divisor(n, &nu);
      status != VDL_OK)
    return emit_status_error(ctx, status);
  ordered_json payload{{"n", dec(n)}, {"nu", dec(nu)}};
  return emit_ok(ctx, payload, "nu(" + dec(n) + ") = " + dec(nu));
}

int run_nondiv(const Context& ctx, const std::string& n_text) {
  const uint64_t n = parse_natural_text(n_text);
  uint64_t nu = 0;
  if (const vdl_status status = vdl_largest_minor_divisor(n, &nu);
      status != VDL_OK)
    return emit_status_error(ctx, status);
  vdl_u64_list* raw = nullptr;
  if (const vdl_status status = vdl_non_divisors_up_to_nu(n, &raw);
      status != VDL_OK)
    return emit_status_error(ctx, status);
  ListPtr list(raw);
  const auto values = to_vector(list.get());
  ordered_json payload{{"n", dec(n)},
                       {"nu", dec(nu)},
                       {"non_divisors", string_array(values)}};
  std::string human = "non-divisors of " + dec(n) + " up to nu = " + dec(nu) +
                      ": " + (values.empty() ? "none" : joined(values));
  return emit_ok(ctx, payload, human);
}

int run_search(const Context& ctx, const std::string& pairs_text,
               const std::string& min_text, const std::string& max_text,
               const std::optional<std::string>& multiple_text) {
  const uint64_t target = parse_natural_text(pairs_text);
  const uint64_t lo = parse_natural_text(min_text);
  const uint64_t hi = parse_natural_text(max_text);
  const uint64_t multiple =
      multiple_text ? parse_natural_text(*multiple_text) : 0;
  uint64_t max_range = 0;
  if (const char* env = std::getenv("VDL_MAX_RANGE")) {
    try {
      max_range = parse_natural_text(env);
    } catch (const UsageError& e) {
      throw UsageError(std::string("VDL_MAX_RANGE: ") + e.what());
    }
  }

  vdl_u64_list* raw = nullptr;
  if (const vdl_status status =
          vdl_find_by_pair_count(lo, hi, target, multiple, max_range, &raw);
      status != VDL_OK)
    return emit_status_error(ctx, status);
  ListPtr list(raw);
  const auto matches = to_vector(list.get());

  ordered_json payload{{"lo", dec(lo)},
                       {"hi", dec(hi)},
                       {"target_pairs", dec(target)},
                       {"multiple_of",
                        multiple == 0 ? ordered_json(nullptr)
                                      : ordered_json(dec(multiple))},
                       {"matches", string_array(matches)}};
  std::ostringstream human;
  human << matches.size() << " match" << (matches.size() == 1 ? "" : "es")
        << " with " << dec(target) << " divisor pairs in [" << dec(lo) << ", "
        << dec(hi) << "]";
  if (multiple != 0) human << " among multiples of " << dec(multiple);
  for (uint64_t m : matches) human << "\n" << dec(m);
  return emit_ok(ctx, payload, human.str());
}

int run_hcn(const Context& ctx, const std::string& limit_text) {
  const uint64_t limit = parse_natural_text(limit_text);
  vdl_u64_list* raw = nullptr;
  if (const vdl_status status = vdl_highly_composite_up_to(limit, &raw);
      status != VDL_OK)
    return emit_status_error(ctx, status);
  ListPtr list(raw);
  const auto records = to_vector(list.get());

  ordered_json rows = ordered_json::array();
  std::ostringstream human;
  human << records.size() << " divisor-count records up to " << dec(limit);
  for (uint64_t n : records) {
    uint64_t d = 0;
    if (const vdl_status status = vdl_count_divisors(n, &d); status != VDL_OK)
      return emit_status_error(ctx, status);
    rows.push_back({{"n", dec(n)}, {"divisor_count", d}});
    human << "\n" << dec(n) << " (" << d << (d == 1 ? " divisor)" : " divisors)");
  }
  ordered_json payload{{"limit", dec(limit)}, {"records", rows}};
  return emit_ok(ctx, payload, human.str());
}

int run_sqrt2(const Context& ctx, const std::string& terms_text) {
  const uint64_t terms = parse_natural_text(terms_text);
  if (terms > UINT32_MAX) throw UsageError("--terms out of range");
  uint64_t num = 0, den = 0;
  if (const vdl_status status = vdl_sulba_sqrt2_partial(
          static_cast<uint32_t>(terms), &num, &den);
      status != VDL_OK)
    return emit_status_error(ctx, status);
  uint32_t digits = 0;
  if (const vdl_status status = vdl_decimal_accuracy(num, den, &digits);
      status != VDL_OK)
    return emit_status_error(ctx, status);
  int side = 0;
  if (const vdl_status status = vdl_compare_to_sqrt2(num, den, &side);
      status != VDL_OK)
    return emit_status_error(ctx, status);

  const std::string side_text = side < 0 ? "below" : "above";
  ordered_json payload{{"terms", terms},
                       {"numerator", dec(num)},
                       {"denominator", dec(den)},
                       {"decimal_accuracy", digits},
                       {"side", side_text}};
  std::string human = "sum of " + dec(terms) + " term" +
                      (terms == 1 ? "" : "s") + " = " + dec(num) + "/" +
                      dec(den) + ", " + side_text + " sqrt(2), accurate to " +
                      std::to_string(digits) + " decimal place" +
                      (digits == 1 ? "" : "s");
  return emit_ok(ctx, payload, human);
}

// ------------------------------------------------------------------
// verify
// ------------------------------------------------------------------

struct ClaimsDeleter {
  void operator()(vdl_claims* p) const { vdl_claims_free(p); }
};
using ClaimsPtr = std::unique_ptr<vdl_claims, ClaimsDeleter>;

std::string xml_escape(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char ch : text) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

bool write_junit(const std::string& path, const vdl_verify_result* result,
                 bool no_timing) {
  std::ofstream out(path);
  if (!out) return false;
  const size_t count = vdl_verify_count(result);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<testsuite name=\"vdl.verify\" tests=\"" << count << "\" failures=\""
      << vdl_verify_failed(result) << "\" skipped=\""
      << vdl_verify_discrepancies(result) << "\">\n";
  for (size_t i = 0; i < count; ++i) {
    out << "  <testcase classname=\"claims\" name=\""
        << xml_escape(vdl_verify_claim_id(result, i)) << "\"";
    if (!no_timing)
      out << " time=\"" << vdl_verify_elapsed_ms(result, i) / 1000.0 << "\"";
    const vdl_verdict verdict = vdl_verify_verdict(result, i);
    if (verdict == VDL_VERDICT_PASS) {
      out << "/>\n";
      continue;
    }
    out << ">\n";
    for (size_t c = 0; c < vdl_verify_check_count(result, i); ++c) {
      const vdl_check_outcome outcome = vdl_verify_check_outcome(result, i, c);
      if (outcome == VDL_OUTCOME_MATCH || outcome == VDL_OUTCOME_INFO)
        continue;
      const std::string detail =
          std::string(vdl_verify_check_kind(result, i, c)) + ": computed " +
          vdl_verify_check_computed(result, i, c) + ", stated " +
          vdl_verify_check_expected(result, i, c);
      if (verdict == VDL_VERDICT_FAIL)
        out << "    <failure message=\"" << xml_escape(detail) << "\"/>\n";
      else
        out << "    <skipped message=\"" << xml_escape(detail) << "\"/>\n";
    }
    out << "  </testcase>\n";
  }
  out << "</testsuite>\n";
  return static_cast<bool>(out);
}

int run_verify(const Context& ctx, const std::optional<std::string>& claim_id,
               const std::optional<std::string>& file_path,
               const std::optional<std::string>& junit_path) {
  vdl_claims* raw = nullptr;
  if (const vdl_status status = vdl_claims_builtin(&raw); status != VDL_OK)
    return emit_status_error(ctx, status);
  ClaimsPtr registry(raw);

  if (file_path) {
    std::ifstream in(*file_path);
    if (!in)
      return emit_error(ctx, "validation",
                        "cannot read claims file: " + *file_path, kExitUsage);
    std::ostringstream text;
    text << in.rdbuf();
    vdl_claims* file_raw = nullptr;
    if (const vdl_status status =
            vdl_claims_parse_json(text.str().c_str(), &file_raw);
        status != VDL_OK)
      return emit_status_error(ctx, status);
    ClaimsPtr file_claims(file_raw);
    vdl_claims* combined = nullptr;
    if (const vdl_status status =
            vdl_claims_concat(registry.get(), file_claims.get(), &combined);
        status != VDL_OK)
      return emit_status_error(ctx, status);
    registry.reset(combined);
  }

  if (claim_id) {
    vdl_claims* selected = nullptr;
    if (const vdl_status status =
            vdl_claims_select(registry.get(), claim_id->c_str(), &selected);
        status != VDL_OK)
      return emit_status_error(ctx, status);
    registry.reset(selected);
  }

  vdl_verify_result* result_raw = nullptr;
  if (const vdl_status status = vdl_verify_run(registry.get(), &result_raw);
      status != VDL_OK)
    return emit_status_error(ctx, status);
  std::unique_ptr<vdl_verify_result, decltype(&vdl_verify_result_free)> result(
      result_raw, &vdl_verify_result_free);

  if (junit_path && !write_junit(*junit_path, result.get(), ctx.no_timing))
    return emit_error(ctx, "validation",
                      "cannot write JUnit report: " + *junit_path, kExitUsage);

  const size_t count = vdl_verify_count(result.get());
  ordered_json claims_json = ordered_json::array();
  std::ostringstream human;
  for (size_t i = 0; i < count; ++i) {
    const vdl_verdict verdict = vdl_verify_verdict(result.get(), i);
    const char* id = vdl_verify_claim_id(result.get(), i);
    ordered_json checks = ordered_json::array();
    for (size_t c = 0; c < vdl_verify_check_count(result.get(), i); ++c) {
      checks.push_back(
          {{"kind", vdl_verify_check_kind(result.get(), i, c)},
           {"computed", vdl_verify_check_computed(result.get(), i, c)},
           {"expected", vdl_verify_check_expected(result.get(), i, c)},
           {"outcome", vdl_check_outcome_name(
                           vdl_verify_check_outcome(result.get(), i, c))}});
    }
    ordered_json claim{{"id", id},
                       {"locus", vdl_claims_locus(registry.get(), i)},
                       {"description",
                        vdl_claims_description(registry.get(), i)},
                       {"verdict", vdl_verdict_name(verdict)}};
    if (!ctx.no_timing)
      claim["elapsed_ms"] = vdl_verify_elapsed_ms(result.get(), i);
    claim["checks"] = checks;
    claims_json.push_back(claim);

    char tag[16];
    std::snprintf(tag, sizeof tag, "%-12s", vdl_verdict_name(verdict));
    human << tag << " " << id;
    if (!ctx.no_timing) {
      std::ostringstream ms;
      ms.precision(2);
      ms << std::fixed << vdl_verify_elapsed_ms(result.get(), i);
      human << "  (" << ms.str() << " ms)";
    }
    human << "\n";
    if (verdict != VDL_VERDICT_PASS) {
      for (size_t c = 0; c < vdl_verify_check_count(result.get(), i); ++c) {
        const vdl_check_outcome outcome =
            vdl_verify_check_outcome(result.get(), i, c);
        if (outcome == VDL_OUTCOME_MATCH || outcome == VDL_OUTCOME_INFO)
          continue;
        human << "             " << vdl_verify_check_kind(result.get(), i, c)
              << ": computed " << vdl_verify_check_computed(result.get(), i, c)
              << ", stated " << vdl_verify_check_expected(result.get(), i, c)
              << "\n";
      }
    }
  }

  const size_t passed = vdl_verify_passed(result.get());
  const size_t failed = vdl_verify_failed(result.get());
  const size_t discrepancies = vdl_verify_discrepancies(result.get());
  human << count << " claims: " << passed << " passed, " << failed
        << " failed, " << discrepancies << " discrepanc"
        << (discrepancies == 1 ? "y" : "ies");

  ordered_json payload{{"claims", claims_json},
                       {"summary",
                        {{"total", count},
                         {"passed", passed},
                         {"failed", failed},
                         {"discrepancies", discrepancies}}}};
  const int code = emit_ok(ctx, payload, human.str());
  if (code != kExitOk) return code;
  return failed > 0 ? kExitVerifyFailed : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  Context ctx;

  CLI::App app{"divisor counting, primality, factorization, exact sqrt(2) "
               "rationals, and verification of catalogued numeric claims"};
  app.require_subcommand(1);
  app.add_flag("--json", ctx.json, "emit one JSON envelope on stdout");
  app.add_flag("--no-timing", ctx.no_timing,
               "omit timing fields from output");

  std::string factor_n, divisors_n, count_n, nu_n, nondiv_n;
  bool divisors_pairs = false;
  std::string search_pairs, search_min, search_max;
  std::string search_multiple, hcn_limit, sqrt2_terms;
  std::string verify_claim, verify_file, verify_junit;

  auto add_global_flags = [&ctx](CLI::App* sub) {
    sub->add_flag("--json", ctx.json, "emit one JSON envelope on stdout");
    sub->add_flag("--no-timing", ctx.no_timing,
                  "omit timing fields from output");
  };

  CLI::App* factor = app.add_subcommand("factor", "prime factorization of N");
  factor->add_option("n", factor_n, "the number to factor")->required();
  add_global_flags(factor);

  CLI::App* divisors =
      app.add_subcommand("divisors", "list the divisors of N");
  divisors->add_option("n", divisors_n, "the number to enumerate")->required();
  divisors->add_flag("--pairs", divisors_pairs,
                     "group divisors into minor/companion pairs");
  add_global_flags(divisors);

  CLI::App* count =
      app.add_subcommand("count", "divisor count and pair count of N");
  count->add_option("n", count_n, "the number to count")->required();
  add_global_flags(count);

  CLI::App* nu = app.add_subcommand(
      "nu", "largest divisor of N strictly below its companion");
  nu->add_option("n", nu_n, "the number to inspect")->required();
  add_global_flags(nu);

  CLI::App* nondiv = app.add_subcommand(
      "nondiv", "numbers up to nu(N) that do not divide N");
  nondiv->add_option("n", nondiv_n, "the number to inspect")->required();
  add_global_flags(nondiv);

  CLI::App* search = app.add_subcommand(
      "search", "find numbers with a prescribed divisor-pair count");
  search->add_option("--pairs", search_pairs, "required pair count")
      ->required();
  search->add_option("--min", search_min, "range lower bound")->required();
  search->add_option("--max", search_max, "range upper bound")->required();
  search->add_option("--multiple-of", search_multiple,
                     "restrict to multiples of this base");
  add_global_flags(search);

  CLI::App* hcn = app.add_subcommand(
      "hcn", "divisor-count record holders (highly composite numbers)");
  hcn->add_option("--limit", hcn_limit, "inclusive upper bound")->required();
  add_global_flags(hcn);

  CLI::App* sqrt2 = app.add_subcommand(
      "sqrt2", "partial sums of the sqrt(2) cord rule");
  sqrt2->add_option("--terms", sqrt2_terms, "number of series terms (1..4)")
      ->required();
  add_global_flags(sqrt2);

  CLI::App* verify = app.add_subcommand(
      "verify", "recompute the catalogued numeric claims");
  verify->add_option("--claim", verify_claim, "verify a single claim by id");
  verify->add_option("--file", verify_file,
                     "also verify claims from a JSON file");
  verify->add_option("--junit", verify_junit,
                     "write a JUnit XML report to this path");
  add_global_flags(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cerr << "run with --help for usage\n";
    return kExitUsage;
  }

  auto opt = [](const std::string& s) {
    return s.empty() ? std::optional<std::string>() : std::optional(s);
  };

  try {
    if (factor->parsed()) {
      ctx.command = "factor";
      return run_factor(ctx, factor_n);
    }
    if (divisors->parsed()) {
      ctx.command = "divisors";
      return run_divisors(ctx, divisors_n, divisors_pairs);
    }
    if (count->parsed()) {
      ctx.command = "count";
      return run_count(ctx, count_n);
    }
    if (nu->parsed()) {
      ctx.command = "nu";
      return run_nu(ctx, nu_n);
    }
    if (nondiv->parsed()) {
      ctx.command = "nondiv";
      return run_nondiv(ctx, nondiv_n);
    }
    if (search->parsed()) {
      ctx.command = "search";
      return run_search(ctx, search_pairs, search_min, search_max,
                        opt(search_multiple));
    }
    if (hcn->parsed()) {
      ctx.command = "hcn";
      return run_hcn(ctx, hcn_limit);
    }
    if (sqrt2->parsed()) {
      ctx.command = "sqrt2";
      return run_sqrt2(ctx, sqrt2_terms);
    }
    if (verify->parsed()) {
      ctx.command = "verify";
      return run_verify(ctx, opt(verify_claim), opt(verify_file),
                        opt(verify_junit));
    }
  } catch (const UsageError& e) {
    return emit_error(ctx, "usage", e.what(), kExitUsage);
  } catch (const std::exception& e) {
    return emit_error(ctx, "internal", e.what(), kExitUsage);
  }
  std::cerr << "error: no subcommand\n";
  return kExitUsage;
}
