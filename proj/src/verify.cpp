#include "sylvsum/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <tuple>

#include "sylvsum/errors.hpp"
#include "sylvsum/subres.hpp"

namespace sylvsum {

BigInt binomial(long n, long k) {
  if (n < 0) {
    throw NegativeN("binomial with negative n=" + std::to_string(n));
  }
  if (k < 0 || k > n) {
    return 0;
  }
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::small_k:
      return "SMALL_K";
    case CaseTag::zero_band:
      return "ZERO_BAND";
    case CaseTag::big_k:
      return "BIG_K";
    case CaseTag::corner_mn:
      return "CORNER_MN";
  }
  return "?";
}

CaseTag classify_case(const SylvParams& params) {
  const auto [m, n, p, q] = params;
  if (m > n) {
    throw Unordered("case classification needs m <= n, got m=" + std::to_string(m) + " n=" + std::to_string(n));
  }
  if (m < 1) {
    throw IndexOutOfRange("case classification needs m >= 1");
  }
  SylvParams::make(m, n, p, q);
  const int k = params.k();
  if (p == m && q == n) {
    return CaseTag::corner_mn;
  }
  if (m < n) {
    if (k <= m) {
      return CaseTag::small_k;
    }
    if (k <= n - 2) {
      return CaseTag::zero_band;
    }
    return CaseTag::big_k;
  }
  return k <= m - 1 ? CaseTag::small_k : CaseTag::big_k;
}

namespace {

Rational to_rational(const BigInt& value) { return Rational(value); }

Rational signed_binomial(long sign_exponent, long n, long k) {
  Rational out = to_rational(binomial(n, k));
  return sign_power(sign_exponent) > 0 ? out : -out;
}

}  // namespace

namespace closed_form {

Poly small_k(const Poly& f, const Poly& g, const SylvParams& params) {
  const int k = params.k();
  return subresultant(f, g, k) * signed_binomial(static_cast<long>(params.p) * (params.m - k), k, params.p);
}

Poly small_k_uniform(const Poly& f, const Poly& g, const SylvParams& params) {
  const int k = params.k();
  const auto [F, G] = cofactors(f, g, k);
  const long sign = static_cast<long>(params.p) * (params.m - k);
  return F * f * signed_binomial(sign, k, params.p) + G * g * signed_binomial(sign, k, params.q);
}

Poly big_k(const Poly& f, const Poly& g, const SylvParams& params) {
  const int kb = params.k_bar();
  const auto [F, G] = cofactors(f, g, kb);
  const long c = params.c();
  return F * f * signed_binomial(c, kb, params.p_bar()) - G * g * signed_binomial(c, kb, params.q_bar());
}

Poly big_k_via_g(const Poly& f, const Poly& g, const SylvParams& params) {
  const int kb = params.k_bar();
  const auto [F, G] = cofactors(f, g, kb);
  const Poly sres = F * f + G * g;
  const long c = params.c();
  return sres * signed_binomial(c, kb, params.p_bar()) - G * g * signed_binomial(c, kb + 1, params.q_bar());
}

Poly big_k_via_f(const Poly& f, const Poly& g, const SylvParams& params) {
  const int kb = params.k_bar();
  const auto [F, G] = cofactors(f, g, kb);
  const Poly sres = F * f + G * g;
  const long c = params.c();
  return F * f * signed_binomial(c, kb + 1, params.p_bar()) - sres * signed_binomial(c, kb, params.q_bar());
}

Poly corner(const Poly& f, const Poly& g) { return f * g * resultant(f, g); }

}  // namespace closed_form

Poly expected_sylv(const RootList& a, const RootList& b, int p, int q) {
  const int m = static_cast<int>(a.size());
  const int n = static_cast<int>(b.size());
  const auto params = SylvParams::make(m, n, p, q);
  if (m == 0 || n == 0) {
    throw IndexOutOfRange("closed forms need non-empty root lists");
  }
  if (m > n) {
    const long exponent = static_cast<long>(p) * q + static_cast<long>(params.p_bar()) * params.q_bar();
    const Poly swapped = expected_sylv(b, a, q, p);
    return sign_power(exponent) > 0 ? swapped : -swapped;
  }
  const Poly f = poly_from_roots(a.view());
  const Poly g = poly_from_roots(b.view());
  switch (classify_case(params)) {
    case CaseTag::small_k:
      return closed_form::small_k(f, g, params);
    case CaseTag::zero_band:
      return {};
    case CaseTag::big_k:
      return closed_form::big_k(f, g, params);
    case CaseTag::corner_mn:
      return closed_form::corner(f, g);
  }
  return {};
}

std::string_view to_string(Status status) {
  switch (status) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::skip:
      return "skip";
  }
  return "?";
}

void sort_reports(std::vector<CheckReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(), [](const CheckReport& x, const CheckReport& y) {
    return std::tie(x.trial, x.p, x.q, x.identity, x.k) < std::tie(y.trial, y.p, y.q, y.identity, y.k);
  });
}

bool any_failed(const std::vector<CheckReport>& reports) {
  return std::any_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.status == Status::fail; });
}

std::pair<RootList, RootList> random_rootlists(int m, int n, std::uint64_t seed, int bound) {
  if (m < 1 || n < 1) {
    throw IndexOutOfRange("random root lists need m, n >= 1");
  }
  if (bound < m + n) {
    throw BoundTooSmall("bound " + std::to_string(bound) + " is below m + n = " + std::to_string(m + n));
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-bound, bound);
  auto draw = [&](int count) {
    std::vector<Rational> values;
    while (static_cast<int>(values.size()) < count) {
      const Rational candidate(dist(rng));
      if (std::find(values.begin(), values.end(), candidate) == values.end()) {
        values.push_back(candidate);
      }
    }
    return RootList(std::move(values));
  };
  RootList a = draw(m);
  RootList b = draw(n);
  return {std::move(a), std::move(b)};
}

std::uint64_t trial_seed(std::uint64_t seed, int trial) {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(trial) + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::pair<RootList, RootList> structured_rootlists(int m, int n, int index) {
  if (m < 1 || n < 1 || index < 0) {
    throw IndexOutOfRange("structured root lists need m, n >= 1 and index >= 0");
  }
  std::vector<Rational> a;
  std::vector<Rational> b;
  for (int i = 0; i < m; ++i) {
    a.emplace_back(2L * i + 1 + index, index + 1L);
  }
  for (int j = 0; j < n; ++j) {
    b.emplace_back(static_cast<long>(index) - 3L * j - 2, index + 2L);
  }
  return {RootList(std::move(a)), RootList(std::move(b))};
}

namespace {

CheckReport compare(std::string identity, int m, int n, int p, int q, int k, const Poly& lhs, const Poly& rhs,
                    const RootList& a, const RootList& b) {
  CheckReport report{std::move(identity), m, n, p, q, k, 0, Status::pass, std::nullopt};
  if (lhs != rhs) {
    report.status = Status::fail;
    report.witness = Witness{lhs, rhs, a, b};
  }
  return report;
}

CheckReport compare(std::string identity, int m, int n, int p, int q, int k, const Rational& lhs,
                    const Rational& rhs, const RootList& a, const RootList& b) {
  return compare(std::move(identity), m, n, p, q, k, Poly::constant(lhs), Poly::constant(rhs), a, b);
}

CheckReport skipped(std::string identity, int m, int n, int p, int q, int k) {
  return {std::move(identity), m, n, p, q, k, 0, Status::skip, std::nullopt};
}

std::string at_root(std::string_view name, RootSide side, std::size_t index) {
  return std::string(name) + (side == RootSide::a ? "@a" : "@b") + std::to_string(index);
}

Rational negate_if(long exponent, const Rational& value) { return sign_power(exponent) > 0 ? value : -value; }
Poly negate_if(long exponent, const Poly& value) { return sign_power(exponent) > 0 ? value : -value; }

// Runs `count` independent jobs on up to `workers` threads and concatenates
// their reports in job order.
std::vector<CheckReport> run_jobs(std::size_t count, unsigned workers,
                                  const std::function<std::vector<CheckReport>(std::size_t)>& job) {
  std::vector<std::vector<CheckReport>> slots(count);
  if (workers == 0) {
    workers = std::max(1U, std::thread::hardware_concurrency());
  }
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      slots[i] = job(i);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          try {
            for (std::size_t i = next++; i < count; i = next++) {
              slots[i] = job(i);
            }
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
    }
    for (const auto& error : errors) {
      if (error) {
        std::rethrow_exception(error);
      }
    }
  }
  std::vector<CheckReport> out;
  for (auto& slot : slots) {
    std::move(slot.begin(), slot.end(), std::back_inserter(out));
  }
  return out;
}

std::pair<RootList, RootList> configuration(int m, int n, std::uint64_t seed, int trial, const SweepOptions& options) {
  if (options.deterministic) {
    return structured_rootlists(m, n, trial);
  }
  return random_rootlists(m, n, trial_seed(seed, trial), options.bound);
}

int trial_count(int m, int n, int trials, const SweepOptions& options) {
  return options.deterministic ? std::max(trials, m + n + 1) : trials;
}

void check_sweep_args(int m, int n, int trials) {
  if (m < 1) {
    throw IndexOutOfRange("sweep needs m >= 1");
  }
  if (m > n) {
    throw Unordered("sweep needs m <= n");
  }
  if (trials < 1) {
    throw IndexOutOfRange("sweep needs trials >= 1");
  }
}

}  // namespace

std::vector<CheckReport> verify_theorem_sweep(int m, int n, std::uint64_t seed, int trials,
                                              const SweepOptions& options) {
  check_sweep_args(m, n, trials);
  const int count = trial_count(m, n, trials, options);
  std::vector<std::pair<RootList, RootList>> configs;
  for (int t = 0; t < count; ++t) {
    configs.push_back(configuration(m, n, seed, t, options));
  }
  const std::size_t per_trial = static_cast<std::size_t>(m + 1) * static_cast<std::size_t>(n + 1);
  auto reports = run_jobs(per_trial * configs.size(), options.workers, [&](std::size_t job) {
    const int trial = static_cast<int>(job / per_trial);
    const int p = static_cast<int>((job % per_trial) / static_cast<std::size_t>(n + 1));
    const int q = static_cast<int>(job % static_cast<std::size_t>(n + 1));
    const auto& [a, b] = configs[static_cast<std::size_t>(trial)];
    auto report = compare("sylv_closed_form", m, n, p, q, p + q, sylvester_double_sum(a, b, p, q),
                          expected_sylv(a, b, p, q), a, b);
    report.trial = trial;
    return std::vector<CheckReport>{std::move(report)};
  });
  sort_reports(reports);
  return reports;
}

std::vector<CheckReport> verify_lemma_specializations(const RootList& a, const RootList& b, int p, int q,
                                                      RootSide side) {
  const int m = static_cast<int>(a.size());
  const int n = static_cast<int>(b.size());
  const int k = p + q;
  if (side == RootSide::a ? !(p >= 0 && p < m && q >= 0 && q <= n) : !(p >= 0 && p <= m && q >= 0 && q < n)) {
    throw IndexOutOfRange("root specialization at " + std::string(side == RootSide::a ? "A needs p < m" : "B needs q < n") +
                          ", got (m, n, p, q) = (" + std::to_string(m) + ", " + std::to_string(n) + ", " +
                          std::to_string(p) + ", " + std::to_string(q) + ")");
  }
  const Poly full = sylvester_double_sum(a, b, p, q);
  std::vector<CheckReport> out;
  if (side == RootSide::a) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      const Rational& alpha = a[i];
      const Poly reduced = sylvester_double_sum(a.without(i), b, p, q);
      const Rational rhs = negate_if(p, reduced.coeff(k) * r_product(std::span(&alpha, 1), b.view()));
      out.push_back(compare(at_root("sylv_root_specialization", side, i), m, n, p, q, k, full(alpha), rhs, a, b));
    }
  } else {
    for (std::size_t j = 0; j < b.size(); ++j) {
      const Rational& beta = b[j];
      const Poly reduced = sylvester_double_sum(a, b.without(j), p, q);
      const Rational rhs = negate_if(q + (m - p), reduced.coeff(k) * r_product(std::span(&beta, 1), a.view()));
      out.push_back(compare(at_root("sylv_root_specialization", side, j), m, n, p, q, k, full(beta), rhs, a, b));
    }
  }
  return out;
}

std::vector<CheckReport> verify_lemma_specializations(const RootList& a, const RootList& b, int p, int q) {
  const int m = static_cast<int>(a.size());
  const int n = static_cast<int>(b.size());
  std::vector<CheckReport> out;
  if (p < m) {
    out = verify_lemma_specializations(a, b, p, q, RootSide::a);
  } else {
    out.push_back(skipped("sylv_root_specialization@a", m, n, p, q, p + q));
  }
  if (q < n) {
    auto more = verify_lemma_specializations(a, b, p, q, RootSide::b);
    std::move(more.begin(), more.end(), std::back_inserter(out));
  } else {
    out.push_back(skipped("sylv_root_specialization@b", m, n, p, q, p + q));
  }
  return out;
}

std::vector<CheckReport> verify_cofactor_specializations(const RootList& a, const RootList& b, int k) {
  const int m = static_cast<int>(a.size());
  const int n = static_cast<int>(b.size());
  if (k < 0 || k >= std::min(m, n)) {
    throw IndexOutOfRange("cofactor specialization needs 0 <= k < min(m, n), got k=" + std::to_string(k));
  }
  const Poly f = poly_from_roots(a.view());
  const Poly g = poly_from_roots(b.view());
  const auto [F, G] = cofactors(f, g, k);
  const Poly sres = F * f + G * g;
  std::vector<CheckReport> out;
  auto report = [&](std::string name, const Rational& lhs, const Rational& rhs) {
    out.push_back(compare(std::move(name), m, n, -1, -1, k, lhs, rhs, a, b));
  };
  auto skip = [&](std::string name) { out.push_back(skipped(std::move(name), m, n, -1, -1, k)); };

  for (std::size_t j = 0; j < b.size(); ++j) {
    const Rational& beta = b[j];
    if (n < 2) {
      skip(at_root("cofactor_f_at_root", RootSide::b, j));
      skip(at_root("principal_coeff_bridge", RootSide::b, j));
      skip(at_root("sres_at_root", RootSide::b, j));
      continue;
    }
    const Poly g_reduced = g.div_linear(beta);
    const Rational reduced_principal = subresultant(f, g_reduced, k).coeff(k);
    if (k >= 1) {
      const Rational top = cofactor_poly(f, g_reduced, k - 1, Cofactor::F).coeff(n - k - 1);
      report(at_root("cofactor_f_at_root", RootSide::b, j), F(beta), -top);
      report(at_root("principal_coeff_bridge", RootSide::b, j), top, negate_if(m - k - 1, reduced_principal));
    } else {
      skip(at_root("cofactor_f_at_root", RootSide::b, j));
      skip(at_root("principal_coeff_bridge", RootSide::b, j));
    }
    report(at_root("sres_at_root", RootSide::b, j), sres(beta), negate_if(m - k, reduced_principal * f(beta)));
  }

  for (std::size_t i = 0; i < a.size(); ++i) {
    const Rational& alpha = a[i];
    if (m < 2) {
      skip(at_root("cofactor_g_at_root", RootSide::a, i));
      skip(at_root("sres_at_root", RootSide::a, i));
      continue;
    }
    const Poly f_reduced = f.div_linear(alpha);
    if (k >= 1) {
      const Rational top = cofactor_poly(f_reduced, g, k - 1, Cofactor::G).coeff(m - k - 1);
      report(at_root("cofactor_g_at_root", RootSide::a, i), G(alpha), negate_if(m - k - 1, top));
    } else {
      skip(at_root("cofactor_g_at_root", RootSide::a, i));
    }
    report(at_root("sres_at_root", RootSide::a, i), sres(alpha),
           subresultant(f_reduced, g, k).coeff(k) * g(alpha));
  }
  return out;
}

std::vector<CheckReport> verify_corollaries(const RootList& a, const RootList& b) {
  const int m = static_cast<int>(a.size());
  const int n = static_cast<int>(b.size());
  std::vector<CheckReport> out;
  if (m < 1 || m > n) {
    out.push_back(skipped("named_identities", m, n, -1, -1, -1));
    return out;
  }
  const Poly f = poly_from_roots(a.view());
  const Poly g = poly_from_roots(b.view());

  for (int p = 0; p <= m; ++p) {
    for (int q = 0; q <= n; ++q) {
      const auto params = SylvParams::make(m, n, p, q);
      const int k = params.k();
      const Poly sylv = sylvester_double_sum(a, b, p, q);
      auto check = [&](std::string name, bool applicable, const std::function<Poly()>& lhs,
                       const std::function<Poly()>& rhs) {
        if (!applicable) {
          out.push_back(skipped(std::move(name), m, n, p, q, k));
          return;
        }
        out.push_back(compare(std::move(name), m, n, p, q, k, lhs(), rhs(), a, b));
      };
      const auto double_sum = [&] { return sylv; };
      const bool corner = p == m && q == n;
      const bool small_range = m < n ? k <= m : k <= m - 1;
      const bool big_range = (m < n ? k >= n - 1 : k >= m) && !corner;

      check("small_k_closed_form", small_range, double_sum, [&] { return closed_form::small_k(f, g, params); });
      check("small_k_uniform", small_range, double_sum, [&] { return closed_form::small_k_uniform(f, g, params); });
      check("zero_band", m <= n - 3 && k >= m + 1 && k <= n - 2, double_sum, [] { return Poly(); });
      check("big_k_closed_form", big_range, double_sum, [&] { return closed_form::big_k(f, g, params); });
      check("big_k_via_g", big_range, [&] { return closed_form::big_k(f, g, params); },
            [&] { return closed_form::big_k_via_g(f, g, params); });
      check("big_k_via_f", big_range, [&] { return closed_form::big_k(f, g, params); },
            [&] { return closed_form::big_k_via_f(f, g, params); });
      check("overlap_k_eq_m_eq_n_minus_1", m == n - 1 && k == m,
            [&] { return closed_form::small_k(f, g, params); }, [&] { return closed_form::big_k(f, g, params); });
      check("corner_mn", corner, double_sum, [&] { return closed_form::corner(f, g); });
      check("edge_row_q_eq_n", q == n && p <= m - 1, double_sum, [&] {
        return negate_if(p, cofactor_poly(f, g, params.p_bar() - 1, Cofactor::G) * g);
      });
      check("edge_row_p_eq_m", p == m && (m < n ? (q >= n - m - 1 && q <= n - 1) : q <= m - 1), double_sum, [&] {
        return negate_if(n - m - 1 + static_cast<long>(n) * q, cofactor_poly(f, g, params.q_bar() - 1, Cofactor::F) * f);
      });
      check("diagonal_m_eq_n", m == n && k == m, double_sum, [&] {
        return f * to_rational(binomial(m - 1, q)) + g * to_rational(binomial(m - 1, p));
      });
      check("near_diagonal_m_eq_n_minus_2", m == n - 2 && k == n - 1, double_sum,
            [&] { return f * signed_binomial(p + 1, m, p); });
      check("k_eq_m_lt_n", m < n && k == m && k >= 1, double_sum, [&] { return f * to_rational(binomial(m, p)); });
      const long exchange = static_cast<long>(p) * q + static_cast<long>(params.p_bar()) * params.q_bar();
      check("sylv_exchange_symmetry", true, double_sum,
            [&] { return negate_if(exchange, sylvester_double_sum(b, a, q, p)); });
      check("expected_exchange_symmetry", true, [&] { return expected_sylv(a, b, p, q); },
            [&] { return negate_if(exchange, expected_sylv(b, a, q, p)); });
    }
  }

  // Identities indexed by k alone.
  auto check_k = [&](std::string name, int k, bool applicable, const std::function<Poly()>& lhs,
                     const std::function<Poly()>& rhs) {
    if (!applicable) {
      out.push_back(skipped(std::move(name), m, n, -1, -1, k));
      return;
    }
    out.push_back(compare(std::move(name), m, n, -1, -1, k, lhs(), rhs(), a, b));
  };
  const int top_k = m < n ? m : m - 1;
  for (int k = 0; k <= top_k; ++k) {
    check_k("sres_exchange_symmetry", k, true, [&] { return subresultant(g, f, k); },
            [&] { return negate_if(static_cast<long>(m - k) * (n - k), subresultant(f, g, k)); });
    if (k < m) {
      const Poly G = cofactor_poly(f, g, k, Cofactor::G);
      const Poly F_swapped = cofactor_poly(g, f, k, Cofactor::F);
      for (std::size_t i = 0; i < a.size(); ++i) {
        check_k(at_root("cofactor_exchange_at_root", RootSide::a, i), k, true,
                [&] { return Poly::constant(G(a[i])); },
                [&] { return Poly::constant(negate_if(static_cast<long>(n - k) * (m - k), F_swapped(a[i]))); });
      }
    }
  }

  check_k("resultant_product_over_a", 0, true, [&] { return Poly::constant(resultant(f, g)); }, [&] {
    Rational prod(1);
    for (const auto& alpha : a) {
      prod *= g(alpha);
    }
    return Poly::constant(prod);
  });
  check_k("resultant_product_over_b", 0, true, [&] { return Poly::constant(resultant(f, g)); }, [&] {
    Rational prod(1);
    for (const auto& beta : b) {
      prod *= f(beta);
    }
    return Poly::constant(negate_if(static_cast<long>(m) * n, prod));
  });

  const Poly one = Poly::constant(Rational(1));
  check_k("boundary_f_at_min", m, m < n, [&] { return cofactor_poly(f, g, m, Cofactor::F); }, [&] { return one; });
  check_k("boundary_g_at_min", m, m < n, [&] { return cofactor_poly(f, g, m, Cofactor::G); }, [] { return Poly(); });
  check_k("boundary_swapped_f_at_min", m, m < n, [&] { return cofactor_poly(g, f, m, Cofactor::F); },
          [] { return Poly(); });
  check_k("boundary_swapped_g_at_min", m, m < n, [&] { return cofactor_poly(g, f, m, Cofactor::G); },
          [&] { return one; });
  check_k("boundary_g_below_min", m - 1, true, [&] { return cofactor_poly(f, g, m - 1, Cofactor::G); },
          [&] { return one; });
  check_k("boundary_swapped_f_below_min", m - 1, true, [&] { return cofactor_poly(g, f, m - 1, Cofactor::F); },
          [&] { return negate_if(n - m + 1, one); });
  return out;
}

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "theorem") {
    return Suite::theorem;
  }
  if (name == "specializations") {
    return Suite::specializations;
  }
  if (name == "corollaries") {
    return Suite::corollaries;
  }
  if (name == "all") {
    return Suite::all;
  }
  return std::nullopt;
}

std::vector<CheckReport> verify_suite(Suite suite, int m, int n, std::uint64_t seed, int trials,
                                      const SweepOptions& options) {
  check_sweep_args(m, n, trials);
  std::vector<CheckReport> out;
  if (suite == Suite::theorem || suite == Suite::all) {
    out = verify_theorem_sweep(m, n, seed, trials, options);
  }
  const bool specializations = suite == Suite::specializations || suite == Suite::all;
  const bool corollaries = suite == Suite::corollaries || suite == Suite::all;
  if (specializations || corollaries) {
    const int count = trial_count(m, n, trials, options);
    auto more = run_jobs(static_cast<std::size_t>(count), options.workers, [&](std::size_t job) {
      const int trial = static_cast<int>(job);
      const auto [a, b] = configuration(m, n, seed, trial, options);
      std::vector<CheckReport> reports;
      auto append = [&](std::vector<CheckReport> batch) {
        std::move(batch.begin(), batch.end(), std::back_inserter(reports));
      };
      if (specializations) {
        for (int p = 0; p <= m; ++p) {
          for (int q = 0; q <= n; ++q) {
            append(verify_lemma_specializations(a, b, p, q));
          }
        }
        for (int k = 0; k < std::min(m, n); ++k) {
          append(verify_cofactor_specializations(a, b, k));
        }
      }
      if (corollaries) {
        append(verify_corollaries(a, b));
      }
      for (auto& r : reports) {
        r.trial = trial;
      }
      return reports;
    });
    std::move(more.begin(), more.end(), std::back_inserter(out));
  }
  sort_reports(out);
  return out;
}

}  // namespace sylvsum
