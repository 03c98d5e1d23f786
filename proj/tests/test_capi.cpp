// Exercises the shared-library surface exactly as an external C client
// would: only vdl/vdl.h, no core headers.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vdl/vdl.h>

#include <algorithm>
#include <cstring>
#include <string>
#include <vector>

namespace {

std::vector<uint64_t> drain(vdl_u64_list* list) {
  std::vector<uint64_t> out(vdl_u64_list_size(list));
  for (size_t i = 0; i < out.size(); ++i) out[i] = vdl_u64_list_get(list, i);
  vdl_u64_list_free(list);
  return out;
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(vdl_version() != nullptr);
  CHECK(std::string(vdl_status_name(VDL_OK)) == "ok");
  CHECK(std::string(vdl_status_name(VDL_ERR_RESOURCE_LIMIT)) ==
        "resource-limit");
}

TEST_CASE("primality through the C surface") {
  int result = -1;
  REQUIRE(vdl_is_prime(76913, &result) == VDL_OK);
  CHECK(result == 1);
  REQUIRE(vdl_is_prime(9, &result) == VDL_OK);
  CHECK(result == 0);
  CHECK(vdl_is_prime(0, &result) == VDL_ERR_DOMAIN);
  CHECK(std::strlen(vdl_last_error()) > 0);
  CHECK(vdl_is_prime(5, nullptr) == VDL_ERR_VALIDATION);
}

TEST_CASE("factorization handles") {
  vdl_factorization* f = nullptr;
  REQUIRE(vdl_factorize(10800, &f) == VDL_OK);
  REQUIRE(vdl_factorization_size(f) == 3);
  CHECK(vdl_factorization_prime(f, 0) == 2);
  CHECK(vdl_factorization_exponent(f, 0) == 4);
  CHECK(vdl_factorization_prime(f, 2) == 5);
  CHECK(vdl_factorization_exponent(f, 2) == 2);
  CHECK(vdl_factorization_prime(f, 99) == 0);  // out of range reads as 0
  vdl_factorization_free(f);

  REQUIRE(vdl_factorize(1, &f) == VDL_OK);
  CHECK(vdl_factorization_size(f) == 0);
  vdl_factorization_free(f);
  vdl_factorization_free(nullptr);  // no-op
}

TEST_CASE("reconstruct validates and computes") {
  const uint64_t primes[] = {2, 3, 5};
  const uint32_t exps[] = {4, 3, 2};
  uint64_t value = 0;
  REQUIRE(vdl_reconstruct(primes, exps, 3, &value) == VDL_OK);
  CHECK(value == 10800);
  REQUIRE(vdl_reconstruct(nullptr, nullptr, 0, &value) == VDL_OK);
  CHECK(value == 1);

  const uint64_t unsorted[] = {5, 2};
  const uint32_t ones[] = {1, 1};
  CHECK(vdl_reconstruct(unsorted, ones, 2, &value) == VDL_ERR_VALIDATION);

  const uint64_t two[] = {2};
  const uint32_t sixty_three[] = {63};
  CHECK(vdl_reconstruct(two, sixty_three, 1, &value) == VDL_ERR_RANGE);
}

TEST_CASE("divisor queries") {
  uint64_t count = 0;
  REQUIRE(vdl_count_divisors(720, &count) == VDL_OK);
  CHECK(count == 30);
  uint64_t pairs = 0;
  REQUIRE(vdl_pair_count(10800, &pairs) == VDL_OK);
  CHECK(pairs == 30);

  vdl_u64_list* list = nullptr;
  REQUIRE(vdl_enumerate_divisors(60, &list) == VDL_OK);
  CHECK(drain(list) == std::vector<uint64_t>{1, 2, 3, 4, 5, 6, 10, 12, 15, 20,
                                             30, 60});

  REQUIRE(vdl_non_divisors_up_to_nu(720, &list) == VDL_OK);
  CHECK(drain(list) == std::vector<uint64_t>{7, 11, 13, 14, 17, 19, 21, 22,
                                             23});

  uint64_t nu = 0;
  REQUIRE(vdl_largest_minor_divisor(720, &nu) == VDL_OK);
  CHECK(nu == 24);
  CHECK(vdl_largest_minor_divisor(1, &nu) == VDL_ERR_NO_SUCH_DIVISOR);
  CHECK(std::string(vdl_last_error()).find("companion") != std::string::npos);
}

TEST_CASE("pairing handles") {
  vdl_pairing* p = nullptr;
  REQUIRE(vdl_pair_divisors(36, &p) == VDL_OK);
  REQUIRE(vdl_pairing_strict_count(p) == 4);
  CHECK(vdl_pairing_minor(p, 3) == 4);
  CHECK(vdl_pairing_companion(p, 3) == 9);
  CHECK(vdl_pairing_has_self_pair(p) == 1);
  CHECK(vdl_pairing_self_pair(p) == 6);
  vdl_pairing_free(p);

  REQUIRE(vdl_pair_divisors(720, &p) == VDL_OK);
  CHECK(vdl_pairing_strict_count(p) == 15);
  CHECK(vdl_pairing_has_self_pair(p) == 0);
  CHECK(vdl_pairing_self_pair(p) == 0);
  vdl_pairing_free(p);
}

TEST_CASE("searches") {
  vdl_u64_list* list = nullptr;
  REQUIRE(vdl_find_by_pair_count(1, 20000, 30, 360, 0, &list) == VDL_OK);
  const auto matches = drain(list);
  CHECK(std::find(matches.begin(), matches.end(), 10800) != matches.end());

  CHECK(vdl_find_by_pair_count(1, 10, 1, 0, 5, &list) ==
        VDL_ERR_RESOURCE_LIMIT);
  CHECK(vdl_find_by_pair_count(10, 1, 1, 0, 0, &list) == VDL_ERR_DOMAIN);

  REQUIRE(vdl_highly_composite_up_to(10, &list) == VDL_OK);
  CHECK(drain(list) == std::vector<uint64_t>{1, 2, 4, 6});
  CHECK(vdl_highly_composite_up_to(1'000'000'001ull, &list) ==
        VDL_ERR_RESOURCE_LIMIT);

  int member = -1;
  REQUIRE(vdl_is_highly_composite(720, &member) == VDL_OK);
  CHECK(member == 1);
  REQUIRE(vdl_is_highly_composite(7, &member) == VDL_OK);
  CHECK(member == 0);
}

TEST_CASE("sqrt2 helpers") {
  uint64_t num = 0, den = 0;
  REQUIRE(vdl_sulba_sqrt2_partial(4, &num, &den) == VDL_OK);
  CHECK(num == 577);
  CHECK(den == 408);
  CHECK(vdl_sulba_sqrt2_partial(5, &num, &den) == VDL_ERR_DOMAIN);

  uint32_t digits = 0;
  REQUIRE(vdl_decimal_accuracy(577, 408, &digits) == VDL_OK);
  CHECK(digits == 5);
  CHECK(vdl_decimal_accuracy(1, 0, &digits) == VDL_ERR_DOMAIN);

  int side = 0;
  REQUIRE(vdl_compare_to_sqrt2(577, 408, &side) == VDL_OK);
  CHECK(side == 1);
  REQUIRE(vdl_compare_to_sqrt2(1, 1, &side) == VDL_OK);
  CHECK(side == -1);
}

TEST_CASE("claims registry through the C surface") {
  vdl_claims* builtin = nullptr;
  REQUIRE(vdl_claims_builtin(&builtin) == VDL_OK);
  REQUIRE(vdl_claims_count(builtin) == 20);
  CHECK(std::string(vdl_claims_id(builtin, 0)) == "rv_words");
  CHECK(std::strlen(vdl_claims_locus(builtin, 0)) > 0);
  CHECK(std::strlen(vdl_claims_description(builtin, 0)) > 0);

  vdl_claims* selected = nullptr;
  REQUIRE(vdl_claims_select(builtin, "d_10800", &selected) == VDL_OK);
  CHECK(vdl_claims_count(selected) == 1);
  CHECK(vdl_claims_select(builtin, "missing", &selected) ==
        VDL_ERR_VALIDATION);

  vdl_verify_result* result = nullptr;
  REQUIRE(vdl_verify_run(builtin, &result) == VDL_OK);
  CHECK(vdl_verify_count(result) == 20);
  CHECK(vdl_verify_failed(result) == 0);
  CHECK(vdl_verify_passed(result) == 18);
  CHECK(vdl_verify_discrepancies(result) == 2);
  bool saw_discrepancy_detail = false;
  for (size_t i = 0; i < vdl_verify_count(result); ++i) {
    if (std::string(vdl_verify_claim_id(result, i)) != "nadi_total") continue;
    CHECK(vdl_verify_verdict(result, i) == VDL_VERDICT_DISCREPANCY);
    REQUIRE(vdl_verify_check_count(result, i) == 1);
    CHECK(std::string(vdl_verify_check_computed(result, i, 0)) ==
          "727210201");
    CHECK(std::string(vdl_verify_check_expected(result, i, 0)) ==
          "727210101");
    CHECK(vdl_verify_check_outcome(result, i, 0) == VDL_OUTCOME_DISCREPANCY);
    saw_discrepancy_detail = true;
  }
  CHECK(saw_discrepancy_detail);
  vdl_verify_result_free(result);

  const char* doc = R"({"claims": [{"id": "x", "check": "primality",
                        "inputs": ["43"], "expected": true}]})";
  vdl_claims* parsed = nullptr;
  REQUIRE(vdl_claims_parse_json(doc, &parsed) == VDL_OK);
  vdl_claims* combined = nullptr;
  REQUIRE(vdl_claims_concat(builtin, parsed, &combined) == VDL_OK);
  CHECK(vdl_claims_count(combined) == 21);
  REQUIRE(vdl_verify_run(combined, &result) == VDL_OK);
  CHECK(vdl_verify_failed(result) == 0);
  vdl_verify_result_free(result);

  CHECK(vdl_claims_parse_json("{", &parsed) == VDL_ERR_VALIDATION);

  vdl_claims_free(combined);
  vdl_claims_free(parsed);
  vdl_claims_free(selected);
  vdl_claims_free(builtin);
  vdl_claims_free(nullptr);
}
