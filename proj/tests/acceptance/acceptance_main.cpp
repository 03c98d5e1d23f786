// End-to-end acceptance checks. Each criterion prints exactly one PASS/FAIL
// line; failures list what diverged. The optional argv[1] is the path to the
// vdl binary, used by the final criterion to check the process exit code.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "core/arith.hpp"
#include "core/claims.hpp"
#include "core/divisors.hpp"
#include "core/search.hpp"
#include "core/sulba.hpp"
#include "oracles.hpp"

using vdl::Natural;

namespace {

struct Recorder {
  std::vector<std::string> problems;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
  void note(const std::string& text) { notes.push_back(text); }
};

int g_failed = 0;
int g_total = 0;

void criterion(int number, const std::string& title,
               const std::function<void(Recorder&)>& body) {
  ++g_total;
  Recorder r;
  try {
    body(r);
  } catch (const std::exception& e) {
    r.problems.push_back(std::string("exception: ") + e.what());
  }
  std::printf("[%s] %2d. %s\n", r.problems.empty() ? "PASS" : "FAIL", number,
              title.c_str());
  for (const auto& problem : r.problems)
    std::printf("          - %s\n", problem.c_str());
  for (const auto& note : r.notes)
    std::printf("          (info) %s\n", note.c_str());
  if (!r.problems.empty()) ++g_failed;
}

std::vector<std::uint64_t> minors_of(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (const auto& pair : vdl::pair_divisors(Natural(n)).strict_pairs)
    out.push_back(pair.minor);
  return out;
}

std::string list_text(const std::vector<std::uint64_t>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(values[i]);
  }
  return out + "]";
}

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";

  criterion(1, "720 splits into 15 pairs with the enumerated minors",
            [](Recorder& r) {
    r.expect(vdl::pair_count(Natural(720)) == 15, "pair_count(720) != 15");
    const std::vector<std::uint64_t> expected = {1, 2,  3,  4,  5,  6,  8, 9,
                                                 10, 12, 15, 16, 18, 20, 24};
    const auto minors = minors_of(720);
    r.expect(minors == expected, "minors of 720 are " + list_text(minors));
  });

  criterion(2, "the explicit non-divisors of 720 up to nu", [](Recorder& r) {
    const std::vector<std::uint64_t> expected = {7,  11, 13, 14, 17,
                                                 19, 21, 22, 23};
    const auto computed = vdl::non_divisors_up_to_nu(Natural(720));
    r.expect(computed == expected,
             "non-divisors of 720 are " + list_text(computed));
  });

  criterion(3, "10800 has 60 divisors in 30 arrangements", [](Recorder& r) {
    r.expect(vdl::count_divisors(Natural(10800)) == 60,
             "count_divisors(10800) != 60");
    r.expect(vdl::pair_count(Natural(10800)) == 30,
             "pair_count(10800) != 30");
  });

  criterion(4, "nu and pair counts of 720, 360, 60", [](Recorder& r) {
    r.expect(vdl::largest_minor_divisor(Natural(720)) == 24, "nu(720) != 24");
    r.expect(vdl::largest_minor_divisor(Natural(360)) == 18, "nu(360) != 18");
    r.expect(vdl::pair_count(Natural(360)) == 12, "pair_count(360) != 12");
    r.expect(vdl::pair_count(Natural(60)) == 6, "pair_count(60) != 6");
    const std::vector<std::uint64_t> expected = {1, 2, 3, 4, 5, 6};
    const auto minors = minors_of(60);
    r.expect(minors == expected, "minors of 60 are " + list_text(minors));
  });

  criterion(5, "stated nadi-total factorization and the primality batch "
               "(under 1 s)",
            [](Recorder& r) {
    const auto start = std::chrono::steady_clock::now();
    const auto factors = vdl::factorize(Natural(727210101));
    const vdl::Factorization stated{{{101, 1}, {7200101, 1}}};
    r.expect(factors == stated, "factorize(727210101) = " +
                                    vdl::to_string(factors) +
                                    ", stated 101 * 7200101");
    for (std::uint64_t p : {101ull, 7200101ull, 76913ull, 5261ull, 137ull,
                            107ull, 43ull}) {
      r.expect(vdl::is_prime(Natural(p)),
               std::to_string(p) + " not reported prime");
    }
    const double elapsed = ms_since(start);
    r.expect(elapsed < 1000.0,
             "took " + std::to_string(elapsed) + " ms, budget 1000 ms");
    r.note("the defining sum 101 + 101*100 + 101*100*72000 = " +
           std::to_string(101ull + 101ull * 100 + 101ull * 100 * 72000) +
           ", and factorize(727210201) = " +
           vdl::to_string(vdl::factorize(Natural(727210201))));
  });

  criterion(6, "577/408 from the four-term rule, five decimal places, "
               "minimal overshoot",
            [](Recorder& r) {
    const vdl::Rational sum = vdl::sulba_sqrt2_partial(4);
    r.expect(sum.numerator() == 577 && sum.denominator() == 408,
             "partial sum is " + sum.to_string());
    r.expect(vdl::decimal_accuracy(sum) == 5,
             "decimal accuracy is " +
                 std::to_string(vdl::decimal_accuracy(sum)));
    r.expect(vdl::compare_to_sqrt2(sum) == vdl::Sqrt2Side::above,
             "577/408 not reported above sqrt(2)");
    r.expect(std::uint64_t{577} * 577 - 2 * std::uint64_t{408} * 408 == 1,
             "577^2 - 2*408^2 != 1");
  });

  criterion(7, "formula-vs-scan divisor counts and sieve-vs-Miller-Rabin "
               "agreement for every n up to 1e6 (under 60 s)",
            [](Recorder& r) {
    const auto start = std::chrono::steady_clock::now();
    const auto sieve = oracles::prime_sieve(1'000'000);
    std::uint64_t count_mismatches = 0;
    std::uint64_t prime_mismatches = 0;
    for (std::uint64_t n = 1; n <= 1'000'000; ++n) {
      if (vdl::count_divisors(Natural(n)) !=
          vdl::enumerate_divisors(Natural(n)).size())
        ++count_mismatches;
      if (vdl::is_prime(Natural(n)) != static_cast<bool>(sieve[n]))
        ++prime_mismatches;
    }
    r.expect(count_mismatches == 0,
             std::to_string(count_mismatches) + " divisor-count mismatches");
    r.expect(prime_mismatches == 0,
             std::to_string(prime_mismatches) + " primality mismatches");
    const double elapsed = ms_since(start);
    r.expect(elapsed < 60000.0,
             "took " + std::to_string(elapsed) + " ms, budget 60000 ms");
    r.note("swept 1e6 naturals in " + std::to_string(elapsed) + " ms");
  });

  criterion(8, "the 30-pair search over multiples of 360 matches a naive "
               "scan and contains 10800",
            [](Recorder& r) {
    vdl::SearchQuery query{Natural(1), Natural(20000), Natural(30),
                           Natural(360)};
    const auto matches = vdl::find_by_pair_count(query);
    std::vector<std::uint64_t> naive;
    for (std::uint64_t n = 360; n <= 20000; n += 360) {
      std::uint64_t divisors = 0;
      for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        divisors += (d == n / d) ? 1 : 2;
      }
      if (divisors / 2 == 30) naive.push_back(n);
    }
    r.expect(matches == naive, "search result " + list_text(matches) +
                                   " differs from naive scan " +
                                   list_text(naive));
    bool found = false;
    for (std::uint64_t m : matches) found = found || m == 10800;
    r.expect(found, "10800 missing from the search result");
  });

  criterion(9, "divisor-count records to 1000 contain 360 and 720 and are "
               "strictly increasing",
            [](Recorder& r) {
    const auto records = vdl::highly_composite_up_to(Natural(1000));
    r.expect(records == oracles::record_scan(1000),
             "records differ from the brute-force scan: " +
                 list_text(records));
    bool has_360 = false, has_720 = false;
    std::uint64_t previous_d = 0;
    bool increasing = true;
    for (std::uint64_t n : records) {
      has_360 = has_360 || n == 360;
      has_720 = has_720 || n == 720;
      const std::uint64_t d = vdl::count_divisors(Natural(n));
      increasing = increasing && d > previous_d;
      previous_d = d;
    }
    r.expect(has_360, "360 missing");
    r.expect(has_720, "720 missing");
    r.expect(increasing, "divisor counts along the records not increasing");
  });

  criterion(10, "builtin verification: zero fails, at most one discrepancy, "
                "exit code 0",
            [&cli](Recorder& r) {
    const auto run = vdl::verify_all(vdl::builtin_claims());
    r.expect(run.summary.failed == 0,
             std::to_string(run.summary.failed) + " fail verdicts");
    r.expect(run.summary.discrepancies <= 1,
             std::to_string(run.summary.discrepancies) +
                 " discrepancy verdicts, expected at most 1 (the three-term "
                 "sqrt2 sub-check)");
    for (const auto& report : run.reports) {
      if (report.verdict == vdl::Verdict::discrepancy)
        r.note("discrepancy on \"" + report.id + "\": computed " +
               report.checks.back().computed + ", stated " +
               report.checks.back().expected);
    }
    if (cli.empty()) {
      r.expect(false, "no CLI path supplied; cannot check the exit code");
    } else {
      const std::string command = cli + " verify > /dev/null 2>&1";
      const int status = std::system(command.c_str());
      const int exit_code = WEXITSTATUS(status);
      r.expect(exit_code == 0, "verify exited with " +
                                   std::to_string(exit_code) +
                                   ", expected 0");
    }
  });

  std::printf("acceptance: %d of %d criteria passed", g_total - g_failed,
              g_total);
  if (g_failed > 0) std::printf(", %d failed", g_failed);
  std::printf("\n");
  return g_failed == 0 ? 0 : 1;
}
