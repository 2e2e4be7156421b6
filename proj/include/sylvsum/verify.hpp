#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sylvsum/double_sum.hpp"
#include "sylvsum/poly.hpp"

namespace sylvsum {

/// C(n, k), zero when k < 0 or k > n. Throws NegativeN for n < 0.
BigInt binomial(long n, long k);

/// Which closed form describes Sylv^{p,q}(A, B) for 1 <= m <= n.
enum class CaseTag { small_k, zero_band, big_k, corner_mn };

std::string_view to_string(CaseTag tag);

/// Throws Unordered if m > n, IndexOutOfRange if m < 1 or p, q are out of
/// range. k = m = n - 1 lies in both the small-k and big-k ranges and is
/// reported as small_k.
CaseTag classify_case(const SylvParams& params);

/// Closed forms for Sylv^{p,q}(A, B) in terms of f = R(x, A), g = R(x, B).
/// Each throws IndexOutOfRange when the subresultant or cofactor it needs is
/// not defined for the given indices.
namespace closed_form {

/// (-1)^{p(m-k)} C(k, p) Sres_k(f, g).
Poly small_k(const Poly& f, const Poly& g, const SylvParams& params);
/// (-1)^{p(m-k)} (C(k, p) F_k f + C(k, q) G_k g).
Poly small_k_uniform(const Poly& f, const Poly& g, const SylvParams& params);
/// (-1)^c (C(kb, pb) F_kb f - C(kb, qb) G_kb g), with kb = k_bar.
Poly big_k(const Poly& f, const Poly& g, const SylvParams& params);
/// (-1)^c (C(kb, pb) Sres_kb - C(kb + 1, qb) G_kb g).
Poly big_k_via_g(const Poly& f, const Poly& g, const SylvParams& params);
/// (-1)^c (C(kb + 1, pb) F_kb f - C(kb, qb) Sres_kb).
Poly big_k_via_f(const Poly& f, const Poly& g, const SylvParams& params);
/// Res(f, g) f g.
Poly corner(const Poly& f, const Poly& g);

}  // namespace closed_form

/// Closed-form value of Sylv^{p,q}(A, B) built from subresultants and
/// cofactors of f = R(x, A) and g = R(x, B). Lists with |A| > |B| are
/// reduced through the exchange symmetry
/// Sylv^{p,q}(A, B) = (-1)^{pq + pb qb} Sylv^{q,p}(B, A).
/// Throws IndexOutOfRange if either list is empty or p, q are out of range.
Poly expected_sylv(const RootList& a, const RootList& b, int p, int q);

enum class Status { pass, fail, skip };

std::string_view to_string(Status status);

struct Witness {
  Poly lhs;
  Poly rhs;
  RootList a;
  RootList b;
};

/// Outcome of one exact identity check. p and q are -1 for identities
/// indexed by k alone. The witness is populated only on failure.
struct CheckReport {
  std::string identity;
  int m = 0;
  int n = 0;
  int p = 0;
  int q = 0;
  int k = 0;
  int trial = 0;
  Status status = Status::skip;
  std::optional<Witness> witness;
};

/// Orders reports by (trial, p, q, identity), then k.
void sort_reports(std::vector<CheckReport>& reports);
[[nodiscard]] bool any_failed(const std::vector<CheckReport>& reports);

/// Deterministic per seed: m distinct integers for A and n distinct
/// integers for B, all in [-bound, bound]. A and B may share values.
/// Throws BoundTooSmall when bound < m + n.
std::pair<RootList, RootList> random_rootlists(int m, int n, std::uint64_t seed, int bound);

/// Seed used for trial `trial` of a sweep started from `seed`.
std::uint64_t trial_seed(std::uint64_t seed, int trial);

/// Fixed rational configuration number `index` for deterministic sweeps.
std::pair<RootList, RootList> structured_rootlists(int m, int n, int index);

struct SweepOptions {
  int bound = 20;
  /// Replace random draws by structured configurations; the sweep then runs
  /// max(trials, m + n + 1) configurations.
  bool deterministic = false;
  /// 0 selects std::thread::hardware_concurrency().
  unsigned workers = 1;
};

/// Compares sylvester_double_sum with expected_sylv on every (p, q) in
/// [0, m] x [0, n] for each trial. Requires 1 <= m <= n and trials >= 1.
std::vector<CheckReport> verify_theorem_sweep(int m, int n, std::uint64_t seed, int trials,
                                              const SweepOptions& options = {});

enum class RootSide { a, b };

/// Evaluates Sylv^{p,q}(A, B) at each root of the chosen side and compares
/// with the leading coefficient of the double sum over the shortened list:
///   at alpha in A:  (-1)^p   coeff_{p+q}(Sylv^{p,q}(A - alpha, B)) R(alpha, B),  p < m
///   at beta  in B:  (-1)^{q+pb} coeff_{p+q}(Sylv^{p,q}(A, B - beta)) R(beta, A),  q < n
/// Throws IndexOutOfRange when the side's bound fails.
std::vector<CheckReport> verify_lemma_specializations(const RootList& a, const RootList& b, int p, int q,
                                                      RootSide side);
/// Both sides, with skip reports for a side whose bound fails.
std::vector<CheckReport> verify_lemma_specializations(const RootList& a, const RootList& b, int p, int q);

/// Root specializations of F_k, G_k and Sres_k, and the principal
/// coefficient bridge between F_{k-1} and Sres_k. Requires
/// 0 <= k < min(m, n); cofactor checks need k >= 1 and are skipped at k = 0.
std::vector<CheckReport> verify_cofactor_specializations(const RootList& a, const RootList& b, int k);

/// Every named consequence of the closed forms that applies to (|A|, |B|),
/// plus boundary cofactors and exchange symmetries. Inapplicable identities
/// produce skip reports. Requires |A| <= |B|; otherwise a single skip.
std::vector<CheckReport> verify_corollaries(const RootList& a, const RootList& b);

enum class Suite { theorem, specializations, corollaries, all };

std::optional<Suite> parse_suite(std::string_view name);

/// Runs the chosen suite over `trials` configurations of sizes (m, n).
std::vector<CheckReport> verify_suite(Suite suite, int m, int n, std::uint64_t seed, int trials,
                                      const SweepOptions& options = {});

}  // namespace sylvsum
