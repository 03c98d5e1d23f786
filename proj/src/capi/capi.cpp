#include "vdl/vdl.h"

#include <memory>
#include <string>
#include <vector>

#include "core/claims.hpp"
#include "core/divisors.hpp"
#include "core/search.hpp"
#include "core/sulba.hpp"

struct vdl_factorization {
  vdl::Factorization value;
};

struct vdl_u64_list {
  std::vector<std::uint64_t> values;
};

struct vdl_pairing {
  vdl::DivisorPairing value;
};

struct vdl_claims {
  std::vector<vdl::Claim> claims;
};

struct vdl_verify_result {
  vdl::VerifyRun run;
};

namespace {

thread_local std::string t_last_error;

vdl_status map_code(vdl::ErrorCode code) {
  switch (code) {
    case vdl::ErrorCode::domain: return VDL_ERR_DOMAIN;
    case vdl::ErrorCode::range: return VDL_ERR_RANGE;
    case vdl::ErrorCode::no_such_divisor: return VDL_ERR_NO_SUCH_DIVISOR;
    case vdl::ErrorCode::resource_limit: return VDL_ERR_RESOURCE_LIMIT;
    case vdl::ErrorCode::validation: return VDL_ERR_VALIDATION;
    case vdl::ErrorCode::internal: return VDL_ERR_INTERNAL;
  }
  return VDL_ERR_INTERNAL;
}

template <typename Fn>
vdl_status guarded(Fn&& fn) {
  try {
    fn();
  } catch (const vdl::Error& e) {
    t_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return VDL_ERR_INTERNAL;
  }
  t_last_error.clear();
  return VDL_OK;
}

vdl_status fail_null(const char* what) {
  t_last_error = std::string("null argument: ") + what;
  return VDL_ERR_VALIDATION;
}

}  // namespace

extern "C" {

const char* vdl_status_name(vdl_status status) {
  switch (status) {
    case VDL_OK: return "ok";
    case VDL_ERR_DOMAIN: return "domain";
    case VDL_ERR_RANGE: return "range";
    case VDL_ERR_NO_SUCH_DIVISOR: return "no-such-divisor";
    case VDL_ERR_RESOURCE_LIMIT: return "resource-limit";
    case VDL_ERR_VALIDATION: return "validation";
    case VDL_ERR_INTERNAL: return "internal";
  }
  return "internal";
}

const char* vdl_last_error(void) { return t_last_error.c_str(); }

const char* vdl_version(void) { return "1.0.0"; }

/* ------------------------------------------------------------------ */

vdl_status vdl_is_prime(uint64_t n, int* out_is_prime) {
  if (!out_is_prime) return fail_null("out_is_prime");
  return guarded(
      [&] { *out_is_prime = vdl::is_prime(vdl::Natural(n)) ? 1 : 0; });
}

vdl_status vdl_factorize(uint64_t n, vdl_factorization** out) {
  if (!out) return fail_null("out");
  return guarded(
      [&] { *out = new vdl_factorization{vdl::factorize(vdl::Natural(n))}; });
}

size_t vdl_factorization_size(const vdl_factorization* f) {
  return f ? f->value.factors.size() : 0;
}

uint64_t vdl_factorization_prime(const vdl_factorization* f, size_t index) {
  if (!f || index >= f->value.factors.size()) return 0;
  return f->value.factors[index].prime;
}

uint32_t vdl_factorization_exponent(const vdl_factorization* f, size_t index) {
  if (!f || index >= f->value.factors.size()) return 0;
  return f->value.factors[index].exponent;
}

void vdl_factorization_free(vdl_factorization* f) { delete f; }

vdl_status vdl_reconstruct(const uint64_t* primes, const uint32_t* exponents,
                           size_t count, uint64_t* out_value) {
  if (!out_value) return fail_null("out_value");
  if (count > 0 && (!primes || !exponents))
    return fail_null("primes/exponents");
  return guarded([&] {
    vdl::Factorization f;
    f.factors.reserve(count);
    for (size_t i = 0; i < count; ++i)
      f.factors.push_back({primes[i], exponents[i]});
    if (!vdl::is_canonical(f))
      throw vdl::ValidationError(
          "factors must be ascending primes with exponents >= 1");
    *out_value = vdl::reconstruct(f).value();
  });
}

/* ------------------------------------------------------------------ */

size_t vdl_u64_list_size(const vdl_u64_list* list) {
  return list ? list->values.size() : 0;
}

uint64_t vdl_u64_list_get(const vdl_u64_list* list, size_t index) {
  if (!list || index >= list->values.size()) return 0;
  return list->values[index];
}

void vdl_u64_list_free(vdl_u64_list* list) { delete list; }

vdl_status vdl_count_divisors(uint64_t n, uint64_t* out_count) {
  if (!out_count) return fail_null("out_count");
  return guarded(
      [&] { *out_count = vdl::count_divisors(vdl::Natural(n)); });
}

vdl_status vdl_enumerate_divisors(uint64_t n, vdl_u64_list** out) {
  if (!out) return fail_null("out");
  return guarded([&] {
    *out = new vdl_u64_list{vdl::enumerate_divisors(vdl::Natural(n))};
  });
}

vdl_status vdl_pair_divisors(uint64_t n, vdl_pairing** out) {
  if (!out) return fail_null("out");
  return guarded(
      [&] { *out = new vdl_pairing{vdl::pair_divisors(vdl::Natural(n))}; });
}

size_t vdl_pairing_strict_count(const vdl_pairing* p) {
  return p ? p->value.strict_pairs.size() : 0;
}

uint64_t vdl_pairing_minor(const vdl_pairing* p, size_t index) {
  if (!p || index >= p->value.strict_pairs.size()) return 0;
  return p->value.strict_pairs[index].minor;
}

uint64_t vdl_pairing_companion(const vdl_pairing* p, size_t index) {
  if (!p || index >= p->value.strict_pairs.size()) return 0;
  return p->value.strict_pairs[index].companion;
}

int vdl_pairing_has_self_pair(const vdl_pairing* p) {
  return p && p->value.self_pair ? 1 : 0;
}

uint64_t vdl_pairing_self_pair(const vdl_pairing* p) {
  return p && p->value.self_pair ? *p->value.self_pair : 0;
}

void vdl_pairing_free(vdl_pairing* p) { delete p; }

vdl_status vdl_pair_count(uint64_t n, uint64_t* out_pairs) {
  if (!out_pairs) return fail_null("out_pairs");
  return guarded([&] { *out_pairs = vdl::pair_count(vdl::Natural(n)); });
}

vdl_status vdl_largest_minor_divisor(uint64_t n, uint64_t* out_nu) {
  if (!out_nu) return fail_null("out_nu");
  return guarded(
      [&] { *out_nu = vdl::largest_minor_divisor(vdl::Natural(n)); });
}

vdl_status vdl_non_divisors_up_to_nu(uint64_t n, vdl_u64_list** out) {
  if (!out) return fail_null("out");
  return guarded([&] {
    *out = new vdl_u64_list{vdl::non_divisors_up_to_nu(vdl::Natural(n))};
  });
}

/* ------------------------------------------------------------------ */

vdl_status vdl_find_by_pair_count(uint64_t lo, uint64_t hi,
                                  uint64_t target_pairs, uint64_t multiple_of,
                                  uint64_t max_range, vdl_u64_list** out) {
  if (!out) return fail_null("out");
  return guarded([&] {
    vdl::SearchQuery query{vdl::Natural(lo), vdl::Natural(hi),
                           vdl::Natural(target_pairs), std::nullopt};
    if (multiple_of != 0) query.multiple_of = vdl::Natural(multiple_of);
    vdl::SearchLimits limits;
    if (max_range != 0) limits.max_range = max_range;
    *out = new vdl_u64_list{vdl::find_by_pair_count(query, limits)};
  });
}

vdl_status vdl_highly_composite_up_to(uint64_t limit, vdl_u64_list** out) {
  if (!out) return fail_null("out");
  return guarded([&] {
    *out = new vdl_u64_list{vdl::highly_composite_up_to(vdl::Natural(limit))};
  });
}

vdl_status vdl_is_highly_composite(uint64_t n, int* out_is_member) {
  if (!out_is_member) return fail_null("out_is_member");
  return guarded([&] {
    *out_is_member = vdl::is_highly_composite(vdl::Natural(n)) ? 1 : 0;
  });
}

/* ------------------------------------------------------------------ */

vdl_status vdl_sulba_sqrt2_partial(uint32_t terms, uint64_t* out_numerator,
                                   uint64_t* out_denominator) {
  if (!out_numerator || !out_denominator)
    return fail_null("out_numerator/out_denominator");
  return guarded([&] {
    const vdl::Rational r =
        vdl::sulba_sqrt2_partial(static_cast<int>(terms));
    *out_numerator = r.numerator();
    *out_denominator = r.denominator();
  });
}

vdl_status vdl_decimal_accuracy(uint64_t numerator, uint64_t denominator,
                                uint32_t* out_digits) {
  if (!out_digits) return fail_null("out_digits");
  return guarded([&] {
    *out_digits = static_cast<uint32_t>(
        vdl::decimal_accuracy(vdl::Rational(numerator, denominator)));
  });
}

vdl_status vdl_compare_to_sqrt2(uint64_t numerator, uint64_t denominator,
                                int* out_side) {
  if (!out_side) return fail_null("out_side");
  return guarded([&] {
    const auto side =
        vdl::compare_to_sqrt2(vdl::Rational(numerator, denominator));
    *out_side = side == vdl::Sqrt2Side::below ? -1 : 1;
  });
}

/* ------------------------------------------------------------------ */

vdl_status vdl_claims_builtin(vdl_claims** out) {
  if (!out) return fail_null("out");
  return guarded([&] { *out = new vdl_claims{vdl::builtin_claims()}; });
}

vdl_status vdl_claims_parse_json(const char* json_text, vdl_claims** out) {
  if (!out) return fail_null("out");
  if (!json_text) return fail_null("json_text");
  return guarded(
      [&] { *out = new vdl_claims{vdl::parse_claims_json(json_text)}; });
}

vdl_status vdl_claims_concat(const vdl_claims* first, const vdl_claims* second,
                             vdl_claims** out) {
  if (!out) return fail_null("out");
  return guarded([&] {
    auto combined = std::make_unique<vdl_claims>();
    if (first)
      combined->claims.insert(combined->claims.end(), first->claims.begin(),
                              first->claims.end());
    if (second)
      combined->claims.insert(combined->claims.end(), second->claims.begin(),
                              second->claims.end());
    *out = combined.release();
  });
}

vdl_status vdl_claims_select(const vdl_claims* claims, const char* id,
                             vdl_claims** out) {
  if (!out) return fail_null("out");
  if (!claims) return fail_null("claims");
  if (!id) return fail_null("id");
  return guarded([&] {
    for (const auto& claim : claims->claims) {
      if (claim.id == id) {
        *out = new vdl_claims{{claim}};
        return;
      }
    }
    throw vdl::ValidationError(std::string("no claim with id \"") + id +
                               "\"");
  });
}

size_t vdl_claims_count(const vdl_claims* claims) {
  return claims ? claims->claims.size() : 0;
}

const char* vdl_claims_id(const vdl_claims* claims, size_t index) {
  if (!claims || index >= claims->claims.size()) return "";
  return claims->claims[index].id.c_str();
}

const char* vdl_claims_locus(const vdl_claims* claims, size_t index) {
  if (!claims || index >= claims->claims.size()) return "";
  return claims->claims[index].locus.c_str();
}

const char* vdl_claims_description(const vdl_claims* claims, size_t index) {
  if (!claims || index >= claims->claims.size()) return "";
  return claims->claims[index].description.c_str();
}

void vdl_claims_free(vdl_claims* claims) { delete claims; }

const char* vdl_verdict_name(vdl_verdict verdict) {
  switch (verdict) {
    case VDL_VERDICT_PASS: return "pass";
    case VDL_VERDICT_FAIL: return "fail";
    case VDL_VERDICT_DISCREPANCY: return "discrepancy";
  }
  return "fail";
}

const char* vdl_check_outcome_name(vdl_check_outcome outcome) {
  switch (outcome) {
    case VDL_OUTCOME_MATCH: return "match";
    case VDL_OUTCOME_MISMATCH: return "mismatch";
    case VDL_OUTCOME_DISCREPANCY: return "discrepancy";
    case VDL_OUTCOME_INFO: return "info";
  }
  return "mismatch";
}

vdl_status vdl_verify_run(const vdl_claims* claims, vdl_verify_result** out) {
  if (!out) return fail_null("out");
  if (!claims) return fail_null("claims");
  return guarded(
      [&] { *out = new vdl_verify_result{vdl::verify_all(claims->claims)}; });
}

size_t vdl_verify_count(const vdl_verify_result* r) {
  return r ? r->run.reports.size() : 0;
}

const char* vdl_verify_claim_id(const vdl_verify_result* r, size_t index) {
  if (!r || index >= r->run.reports.size()) return "";
  return r->run.reports[index].id.c_str();
}

vdl_verdict vdl_verify_verdict(const vdl_verify_result* r, size_t index) {
  if (!r || index >= r->run.reports.size()) return VDL_VERDICT_FAIL;
  switch (r->run.reports[index].verdict) {
    case vdl::Verdict::pass: return VDL_VERDICT_PASS;
    case vdl::Verdict::fail: return VDL_VERDICT_FAIL;
    case vdl::Verdict::discrepancy: return VDL_VERDICT_DISCREPANCY;
  }
  return VDL_VERDICT_FAIL;
}

double vdl_verify_elapsed_ms(const vdl_verify_result* r, size_t index) {
  if (!r || index >= r->run.reports.size()) return 0.0;
  return r->run.reports[index].elapsed_ms;
}

size_t vdl_verify_check_count(const vdl_verify_result* r, size_t claim_index) {
  if (!r || claim_index >= r->run.reports.size()) return 0;
  return r->run.reports[claim_index].checks.size();
}

static const vdl::CheckResult* check_at(const vdl_verify_result* r,
                                        size_t claim_index,
                                        size_t check_index) {
  if (!r || claim_index >= r->run.reports.size()) return nullptr;
  const auto& checks = r->run.reports[claim_index].checks;
  if (check_index >= checks.size()) return nullptr;
  return &checks[check_index];
}

const char* vdl_verify_check_kind(const vdl_verify_result* r,
                                  size_t claim_index, size_t check_index) {
  const auto* check = check_at(r, claim_index, check_index);
  return check ? vdl::check_kind_name(check->kind) : "";
}

const char* vdl_verify_check_computed(const vdl_verify_result* r,
                                      size_t claim_index, size_t check_index) {
  const auto* check = check_at(r, claim_index, check_index);
  return check ? check->computed.c_str() : "";
}

const char* vdl_verify_check_expected(const vdl_verify_result* r,
                                      size_t claim_index, size_t check_index) {
  const auto* check = check_at(r, claim_index, check_index);
  return check ? check->expected.c_str() : "";
}

vdl_check_outcome vdl_verify_check_outcome(const vdl_verify_result* r,
                                           size_t claim_index,
                                           size_t check_index) {
  const auto* check = check_at(r, claim_index, check_index);
  if (!check) return VDL_OUTCOME_MISMATCH;
  switch (check->outcome) {
    case vdl::CheckOutcome::match: return VDL_OUTCOME_MATCH;
    case vdl::CheckOutcome::mismatch: return VDL_OUTCOME_MISMATCH;
    case vdl::CheckOutcome::discrepancy: return VDL_OUTCOME_DISCREPANCY;
    case vdl::CheckOutcome::info: return VDL_OUTCOME_INFO;
  }
  return VDL_OUTCOME_MISMATCH;
}

size_t vdl_verify_passed(const vdl_verify_result* r) {
  return r ? r->run.summary.passed : 0;
}

size_t vdl_verify_failed(const vdl_verify_result* r) {
  return r ? r->run.summary.failed : 0;
}

size_t vdl_verify_discrepancies(const vdl_verify_result* r) {
  return r ? r->run.summary.discrepancies : 0;
}

void vdl_verify_result_free(vdl_verify_result* r) { delete r; }

}  // extern "C"
