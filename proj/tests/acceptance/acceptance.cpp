// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. All checks are exact; the only numeric thresholds are the
// wall-clock limits.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "oracles.hpp"
#include "sylvsum/double_sum.hpp"
#include "sylvsum/json_io.hpp"
#include "sylvsum/subres.hpp"
#include "sylvsum/verify.hpp"

using namespace sylvsum;

namespace {

constexpr double kBatteryLimitSeconds = 1.0;
constexpr double kSweepLimitSeconds = 60.0;
constexpr std::uint64_t kSeed = 20240601;
constexpr int kTrials = 3;

struct Outcome {
  bool ok = true;
  std::string detail;
};

class Checker {
 public:
  void expect(bool condition, const std::string& what) {
    if (!condition) {
      ok_ = false;
      if (failures_.size() < 10) {
        failures_.push_back(what);
      }
    }
  }
  void absorb(const std::vector<CheckReport>& reports) {
    for (const auto& r : reports) {
      if (r.status == Status::pass) {
        ++passed_;
      } else if (r.status == Status::fail) {
        expect(false, to_json(r).dump());
      }
    }
  }
  [[nodiscard]] std::size_t passed() const { return passed_; }
  [[nodiscard]] Outcome outcome(std::string detail) const {
    for (const auto& f : failures_) {
      detail += "\n      " + f;
    }
    return {ok_, std::move(detail)};
  }

 private:
  bool ok_ = true;
  std::size_t passed_ = 0;
  std::vector<std::string> failures_;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Poly P(std::vector<Rational> coeffs) { return Poly(std::move(coeffs)); }
RootList L(std::vector<Rational> values) { return RootList(std::move(values)); }

Outcome worked_example_battery() {
  const auto start = std::chrono::steady_clock::now();
  Checker c;
  const RootList a = L({1, 2});
  const RootList b = L({3, 4, 5});
  const Poly f = P({2, -3, 1});
  const Poly g = P({-60, 47, -12, 1});
  c.expect(poly_from_roots(a.view()) == f && poly_from_roots(b.view()) == g, "f, g from roots");
  c.expect(resultant(f, g) == Rational(144), "Res = 144");
  c.expect(subresultant(f, g, 1) == P({-42, 18}), "Sres_1 = 18x - 42");
  c.expect(cofactor_poly(f, g, 1, Cofactor::F) == P({9, -1}), "F_1 = -x + 9");
  c.expect(cofactor_poly(f, g, 1, Cofactor::G) == Poly::constant(1), "G_1 = 1");
  c.expect(subresultant(f, g, 2) == f, "Sres_2 = f");
  c.expect(cofactor_poly(f, g, 2, Cofactor::F) == Poly::constant(1), "F_2 = 1");
  c.expect(cofactor_poly(f, g, 2, Cofactor::G).is_zero(), "G_2 = 0");
  c.expect(sylvester_double_sum(a, b, 0, 1) == P({-42, 18}), "Sylv^{0,1} = 18x - 42");
  c.expect(sylvester_double_sum(a, b, 1, 1) == P({4, -6, 2}), "Sylv^{1,1} = 2x^2 - 6x + 4");
  c.expect(sylvester_double_sum(a, b, 2, 3) == f * g * Rational(144), "Sylv^{2,3} = 144 f g");
  const double elapsed = seconds_since(start);
  c.expect(elapsed < kBatteryLimitSeconds, "runtime " + std::to_string(elapsed) + " s >= 1 s");
  return c.outcome("11 exact values, " + std::to_string(elapsed) + " s");
}

Outcome theorem_end_to_end() {
  const auto start = std::chrono::steady_clock::now();
  Checker c;
  SweepOptions options;
  options.workers = 0;
  std::size_t expected_checks = 0;
  std::size_t zero_band_checks = 0;
  std::size_t square_checks = 0;
  for (int m = 1; m <= 5; ++m) {
    for (int n = m; n <= 5; ++n) {
      const auto reports = verify_theorem_sweep(m, n, kSeed, kTrials, options);
      expected_checks += static_cast<std::size_t>((m + 1) * (n + 1) * kTrials);
      c.expect(reports.size() == static_cast<std::size_t>((m + 1) * (n + 1) * kTrials),
               "report count for (" + std::to_string(m) + "," + std::to_string(n) + ")");
      c.absorb(reports);
      for (const auto& r : reports) {
        const auto tag = classify_case(SylvParams::make(m, n, r.p, r.q));
        if (tag == CaseTag::zero_band && r.status == Status::pass) {
          ++zero_band_checks;
        }
        if (m == n && r.status == Status::pass) {
          ++square_checks;
        }
      }
    }
  }
  const double elapsed = seconds_since(start);
  c.expect(c.passed() == expected_checks, "every (p,q,trial) check passed");
  // Cells with m + 1 <= p + q <= n - 2, counted directly.
  std::size_t band_cells = 0;
  for (int m = 1; m <= 5; ++m) {
    for (int n = m; n <= 5; ++n) {
      for (int p = 0; p <= m; ++p) {
        for (int q = 0; q <= n; ++q) {
          band_cells += (p + q >= m + 1 && p + q <= n - 2) ? 1 : 0;
        }
      }
    }
  }
  c.expect(band_cells == 9 && zero_band_checks == band_cells * kTrials, "zero band coverage");
  c.expect(square_checks > 0, "m = n branch coverage");
  c.expect(elapsed < kSweepLimitSeconds, "runtime " + std::to_string(elapsed) + " s >= 60 s");
  return c.outcome(std::to_string(c.passed()) + "/" + std::to_string(expected_checks) + " checks, " +
                   std::to_string(zero_band_checks) + " zero-band, " + std::to_string(elapsed) + " s");
}

Outcome specialization_suites() {
  const auto start = std::chrono::steady_clock::now();
  Checker c;
  std::map<std::string, std::size_t> passes;
  for (int m = 2; m <= 5; ++m) {
    for (int n = m; n <= 5; ++n) {
      for (int trial = 0; trial < kTrials; ++trial) {
        const auto [a, b] = random_rootlists(m, n, trial_seed(kSeed, trial), 20);
        std::vector<CheckReport> reports;
        for (int p = 0; p <= m; ++p) {
          for (int q = 0; q <= n; ++q) {
            auto more = verify_lemma_specializations(a, b, p, q);
            reports.insert(reports.end(), more.begin(), more.end());
          }
        }
        for (int k = 0; k < m; ++k) {
          auto more = verify_cofactor_specializations(a, b, k);
          reports.insert(reports.end(), more.begin(), more.end());
        }
        c.absorb(reports);
        for (const auto& r : reports) {
          if (r.status == Status::pass) {
            ++passes[r.identity.substr(0, r.identity.find('@'))];
          }
        }
      }
    }
  }
  for (const char* name : {"sylv_root_specialization", "cofactor_f_at_root", "cofactor_g_at_root", "sres_at_root",
                           "principal_coeff_bridge"}) {
    c.expect(passes[name] > 0, std::string("no passing ") + name + " checks");
  }

  // Hand-derived instance: f = (x-1)(x-2), g = (x-3)(x-4)(x-5), beta = 3.
  const Poly f = P({2, -3, 1});
  const Poly g = P({-60, 47, -12, 1});
  const Poly g_reduced = g.div_linear(3);
  c.expect(g_reduced == P({20, -9, 1}), "g / (x - 3)");
  c.expect(cofactor_poly(f, g, 1, Cofactor::F)(3) == Rational(6), "F_1(f,g)(3) = 6");
  c.expect(-cofactor_poly(f, g_reduced, 0, Cofactor::F).coeff(1) == Rational(6), "-coeff_1 F_0(f, g/(x-3)) = 6");
  c.expect(subresultant(f, g, 1)(3) == Rational(12), "Sres_1(f,g)(3) = 12");
  c.expect(-(subresultant(f, g_reduced, 1).coeff(1) * f(3)) == Rational(12), "specialized Sres_1 side = 12");
  c.absorb(verify_cofactor_specializations(L({1, 2}), L({3, 4, 5}), 1));

  const double elapsed = seconds_since(start);
  c.expect(elapsed < kSweepLimitSeconds, "runtime " + std::to_string(elapsed) + " s >= 60 s");
  return c.outcome(std::to_string(c.passed()) + " checks, " + std::to_string(elapsed) + " s");
}

Outcome named_identity_suite() {
  const auto start = std::chrono::steady_clock::now();
  Checker c;
  std::map<std::string, std::size_t> passes;
  for (int m = 1; m <= 5; ++m) {
    for (int n = m; n <= 5; ++n) {
      for (int trial = 0; trial < kTrials; ++trial) {
        const auto [a, b] = random_rootlists(m, n, trial_seed(kSeed, trial), 20);
        const auto reports = verify_corollaries(a, b);
        c.absorb(reports);
        for (const auto& r : reports) {
          if (r.status == Status::pass) {
            ++passes[r.identity.substr(0, r.identity.find('@'))];
          }
        }
        // Covered twice: both branches at k = m = n - 1, checked directly.
        if (n == m + 1) {
          const Poly f = poly_from_roots(a.view());
          const Poly g = poly_from_roots(b.view());
          for (int p = 0; p <= m; ++p) {
            const auto params = SylvParams::make(m, n, p, m - p);
            c.expect(closed_form::small_k(f, g, params) == closed_form::big_k(f, g, params), "covered twice");
          }
        }
      }
    }
  }
  for (const char* name :
       {"boundary_f_at_min", "boundary_g_at_min", "boundary_swapped_f_at_min", "boundary_swapped_g_at_min",
        "boundary_g_below_min", "boundary_swapped_f_below_min", "sres_exchange_symmetry", "sylv_exchange_symmetry",
        "expected_exchange_symmetry", "cofactor_exchange_at_root", "diagonal_m_eq_n", "near_diagonal_m_eq_n_minus_2",
        "k_eq_m_lt_n", "edge_row_q_eq_n", "edge_row_p_eq_m", "big_k_via_g", "big_k_via_f",
        "overlap_k_eq_m_eq_n_minus_1", "zero_band", "small_k_closed_form", "small_k_uniform", "big_k_closed_form",
        "corner_mn", "resultant_product_over_a", "resultant_product_over_b"}) {
    c.expect(passes[name] > 0, std::string("no passing ") + name + " checks");
  }
  const double elapsed = seconds_since(start);
  return c.outcome(std::to_string(c.passed()) + " checks across " + std::to_string(passes.size()) +
                   " identities, " + std::to_string(elapsed) + " s");
}

Outcome oracle_independence() {
  Checker c;
  std::mt19937_64 rng(kSeed);
  for (int i = 0; i < 100; ++i) {
    const auto size = static_cast<std::size_t>(1 + i % 5);
    const auto m = oracle::random_matrix(rng, size);
    c.expect(fraction_free_det(m) == oracle::naive_det(m), "Bareiss vs cofactor expansion, matrix " + std::to_string(i));
  }
  std::size_t common = 0;
  for (int m = 1; m <= 5; ++m) {
    for (int n = 1; n <= 5; ++n) {
      auto a = oracle::distinct_rationals(rng, m);
      auto b = oracle::distinct_rationals(rng, n);
      b[static_cast<std::size_t>(n - 1)] = a[0];
      if (std::count(b.begin(), b.end(), a[0]) != 1) {
        continue;
      }
      const Poly f = poly_from_roots(a);
      const Poly g = poly_from_roots(b);
      c.expect(resultant(f, g).is_zero(), "common root forces Res = 0");
      c.expect(subresultant(f, g, 0).is_zero(), "common root forces Sres_0 = 0");
      ++common;
    }
  }
  return c.outcome("100 matrices, " + std::to_string(common) + " common-root pairs");
}

struct Process {
  int exit_code = -1;
  std::string out;
};

Process run_cli(const std::string& args) {
  const std::string command = std::string(SYLVSUM_CLI_PATH) + " " + args + " 2>/dev/null";
  Process result;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) {
    return result;
  }
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.out.append(buffer, got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string join(const RootList& roots) {
  std::string out;
  for (const auto& r : roots) {
    out += (out.empty() ? "" : ",") + r.to_string();
  }
  return out;
}

Outcome cli_contract() {
  Checker c;
  std::mt19937_64 rng(kSeed);
  for (int i = 0; i < 20; ++i) {
    const int m = 1 + static_cast<int>(rng() % 4);
    const int n = 1 + static_cast<int>(rng() % 4);
    const RootList a(oracle::distinct_rationals(rng, m));
    const RootList b(oracle::distinct_rationals(rng, n));
    const int p = static_cast<int>(rng() % static_cast<std::uint64_t>(m + 1));
    const int q = static_cast<int>(rng() % static_cast<std::uint64_t>(n + 1));
    const std::string args = "--A=" + join(a) + " --B=" + join(b) + " --p " + std::to_string(p) + " --q " +
                             std::to_string(q);
    const auto sylv = run_cli("sylv " + args);
    const auto expected = run_cli("expected " + args);
    c.expect(sylv.exit_code == 0 && expected.exit_code == 0, "exit 0 for " + args);
    c.expect(!sylv.out.empty() && sylv.out == expected.out, "byte-identical output for " + args);
  }
  c.expect(run_cli("sylv --A 1,2 --B 3,4,5 --p 0 --q 1").exit_code == 0, "exit 0");
  c.expect(run_cli("sylv --A 1,2 --B 3,4,5 --p 0 --q 1 --expect=-42,17").exit_code == 1, "exit 1");
  c.expect(run_cli("sylv --A 1,2 --B 3,4,5 --p 0 --bogus").exit_code == 2, "exit 2");
  c.expect(run_cli("subres --A 1,2 --B 3,4,5 --k 7").exit_code == 3, "exit 3");
  const auto selftest = run_cli("selftest");
  c.expect(selftest.exit_code == 0, "selftest exit 0");
  return c.outcome("20 sylv/expected pairs, exit codes 0/1/2/3, selftest");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1 worked-example battery", worked_example_battery},
      {"AC2 closed form equals double sum, 1 <= m <= n <= 5", theorem_end_to_end},
      {"AC3 root specialization suites, 2 <= m <= n <= 5", specialization_suites},
      {"AC4 named identities and boundary cofactors", named_identity_suite},
      {"AC5 determinant oracle independence and common roots", oracle_independence},
      {"AC6 CLI contract", cli_contract},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome outcome;
    try {
      outcome = run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (outcome.ok ? "[PASS] " : "[FAIL] ") << name << " (" << outcome.detail << ")" << std::endl;
    failed += outcome.ok ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all acceptance criteria passed" : std::to_string(failed) + " criteria failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
