// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failures. Run via ctest or directly as tests/acceptance.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>

#include "figures.hpp"
#include "lct/cli.hpp"
#include "lct/counting.hpp"
#include "lct/enumerate.hpp"
#include "lct/involution.hpp"
#include "lct/record.hpp"

using namespace lct;
using namespace lct::testing;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int number, const std::string& name, bool ok,
            const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": "
            << name;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << std::endl;
  if (!ok) ++failures;
}

void criterion1_sequence() {
  auto start = Clock::now();
  std::ostringstream out, err;
  int code = run_cli({"seq", "10"}, out, err);
  double elapsed = seconds_since(start);
  const std::string expected =
      "1 1\n2 0\n3 1\n4 1\n5 13\n6 51\n7 601\n8 4803\n9 63673\n10 775351\n";
  bool ok = code == 0 && out.str() == expected && elapsed < 1.0;
  std::ostringstream detail;
  detail << elapsed << " s";
  report(1, "seq 10 reproduces the corrected sequence", ok, detail.str());
}

void criterion2_tree_oracle() {
  auto start = Clock::now();
  bool ok = true;
  std::string detail;
  for (int n = 1; n <= 9; ++n) {
    if (brute_force_count(n) != formula_count(n)) {
      ok = false;
      detail = "mismatch at n=" + std::to_string(n);
      break;
    }
  }
  double elapsed = seconds_since(start);
  if (elapsed >= 60.0) {
    ok = false;
    detail = "too slow";
  }
  std::ostringstream d;
  d << detail << (detail.empty() ? "" : "; ") << elapsed << " s";
  report(2, "brute-force tree counts match the formula for n = 1..9", ok,
         d.str());
}

void criterion3_config_oracle() {
  auto start = Clock::now();
  bool ok = true;
  std::string detail;
  for (int n = 1; n <= 8 && ok; ++n) {
    GConfigTally tally = tally_gconfigs(n);
    if (BigInt(tally.signed_total) != formula_count(n)) {
      ok = false;
      detail = "signed total mismatch at n=" + std::to_string(n);
      break;
    }
    for (int k = 1; k <= n; ++k) {
      BigInt enumerated =
          tally.count_by_k.count(k) ? tally.count_by_k.at(k) : 0;
      if (enumerated != gconfig_count_by_k(n, k)) {
        ok = false;
        detail = "per-k mismatch at n=" + std::to_string(n) +
                 ", k=" + std::to_string(k);
        break;
      }
    }
  }
  double elapsed = seconds_since(start);
  if (elapsed >= 120.0) {
    ok = false;
    detail = "too slow";
  }
  std::ostringstream d;
  d << detail << (detail.empty() ? "" : "; ") << elapsed << " s";
  report(3, "signed configuration totals and per-k counts for n = 1..8", ok,
         d.str());
}

void criterion4_involution() {
  bool ok = true;
  std::string detail;
  for (int n = 1; n <= 7; ++n) {
    InvolutionReport r = verify_involution(n);
    if (!r.clean()) {
      ok = false;
      detail = "n=" + std::to_string(n) + ": " + r.first_counterexample;
      break;
    }
    if (BigInt(r.fixed_count) != formula_count(n)) {
      ok = false;
      detail = "fixed count mismatch at n=" + std::to_string(n);
      break;
    }
  }
  report(4, "involution suite clean for n = 1..7", ok, detail);
}

void criterion5_golden_figures() {
  bool ok = true;
  std::string detail;

  auto check_pair = [&](const GConfiguration& a, const GConfiguration& b,
                        const char* name) {
    auto forward = apply(a);
    auto backward = apply(b);
    if (!std::holds_alternative<GConfiguration>(forward) ||
        !(std::get<GConfiguration>(forward) == b) ||
        !std::holds_alternative<GConfiguration>(backward) ||
        !(std::get<GConfiguration>(backward) == a)) {
      ok = false;
      detail = name;
    }
  };
  check_pair(figure2a_left(), figure2a_right(), "figure 2a");
  check_pair(figure2b_left(), figure2b_right(), "figure 2b");

  auto fig1 = figure1();
  if (!validate(fig1).empty() || fig1.tree.size() != 7 || weight(fig1) != -1) {
    ok = false;
    detail = "figure 1";
  }
  report(5, "golden figures map exactly as drawn", ok, detail);
}

void criterion6_identities() {
  auto start = Clock::now();
  bool ok = true;
  std::string detail;
  for (int n = 1; n <= 300 && ok; ++n) {
    BigInt sum = 0;
    for (int k = 1; k <= n; ++k) sum += formula_term(n, k);
    if (sum % n != 0) {
      ok = false;
      detail = "divisibility fails at n=" + std::to_string(n);
    }
  }
  for (int n = 1; n <= 50 && ok; ++n)
    for (int k = 1; k <= n; ++k)
      if (n * gconfig_count_by_k(n, k) !=
          binomial(n, k) * int_pow(k, k - 1) * range_product(k, n - 1)) {
        ok = false;
        detail = "rooted-count identity fails at n=" + std::to_string(n) +
                 ", k=" + std::to_string(k);
        break;
      }
  double elapsed = seconds_since(start);
  if (elapsed >= 10.0) {
    ok = false;
    detail = "too slow";
  }
  std::ostringstream d;
  d << detail << (detail.empty() ? "" : "; ") << elapsed << " s";
  report(6, "divisibility (n <= 300) and rooted-count identity (n <= 50)", ok,
         d.str());
}

void criterion7_round_trips() {
  bool ok = true;
  std::string detail;

  for (int n = 1; n <= 6 && ok; ++n) {
    int len = n >= 2 ? n - 2 : 0;
    std::vector<Vertex> seq(len, 1);
    while (true) {
      auto tree = prufer_decode(seq, n, 1);
      if (prufer_encode(tree) != seq) {
        ok = false;
        detail = "prufer round trip at n=" + std::to_string(n);
        break;
      }
      int i = len - 1;
      while (i >= 0 && seq[i] == n) seq[i--] = 1;
      if (i < 0) break;
      seq[i]++;
    }
  }

  for (int n = 1; n <= 5 && ok; ++n) {
    TreeEnumerator en(n);
    while (auto t = en.next()) {
      if (!(from_planted(to_planted(*t)) == *t)) {
        ok = false;
        detail = "planted round trip at n=" + std::to_string(n);
        break;
      }
    }
  }

  if (ok) {
    GConfigEnumerator en(3);
    while (auto c = en.next()) {
      if (!(record_parse(record_serialize(*c)) == *c)) {
        ok = false;
        detail = "record round trip";
        break;
      }
    }
  }
  report(7, "prufer, planted and record round trips", ok, detail);
}

}  // namespace

int main() {
  criterion1_sequence();
  criterion2_tree_oracle();
  criterion3_config_oracle();
  criterion4_involution();
  criterion5_golden_figures();
  criterion6_identities();
  criterion7_round_trips();
  std::cout << (failures == 0 ? "ALL CRITERIA PASSED"
                              : std::to_string(failures) + " CRITERIA FAILED")
            << std::endl;
  return failures;
}
