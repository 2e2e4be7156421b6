#pragma once

#include <span>
#include <vector>

#include "sylvsum/poly.hpp"
#include "sylvsum/rational.hpp"

namespace sylvsum {

/// Ordered list of pairwise-distinct rationals. Order is preserved as given.
class RootList {
 public:
  RootList() = default;
  /// Throws DuplicateRoots if two entries are equal.
  explicit RootList(std::vector<Rational> roots);

  [[nodiscard]] std::size_t size() const { return roots_.size(); }
  [[nodiscard]] bool empty() const { return roots_.empty(); }
  [[nodiscard]] const Rational& operator[](std::size_t i) const { return roots_[i]; }
  [[nodiscard]] auto begin() const { return roots_.begin(); }
  [[nodiscard]] auto end() const { return roots_.end(); }
  [[nodiscard]] std::span<const Rational> view() const { return roots_; }
  [[nodiscard]] const std::vector<Rational>& values() const { return roots_; }

  /// The list with the element at `index` removed.
  [[nodiscard]] RootList without(std::size_t index) const;

  friend bool operator==(const RootList&, const RootList&) = default;

 private:
  std::vector<Rational> roots_;
};

/// Index bundle (m, n, p, q) with the derived quantities used by the
/// closed forms. Derived values are computed on demand.
struct SylvParams {
  int m = 0;
  int n = 0;
  int p = 0;
  int q = 0;

  /// Throws IndexOutOfRange unless 0 <= p <= m and 0 <= q <= n.
  static SylvParams make(int m, int n, int p, int q);

  [[nodiscard]] int k() const { return p + q; }
  [[nodiscard]] int p_bar() const { return m - p; }
  [[nodiscard]] int q_bar() const { return n - q; }
  /// m + n - k - 1, equivalently p_bar + q_bar - 1.
  [[nodiscard]] int k_bar() const { return p_bar() + q_bar() - 1; }
  /// Sign exponent of the large-k closed form.
  [[nodiscard]] long c() const {
    return static_cast<long>(p_bar()) * q_bar() + n - p - 1 + static_cast<long>(n) * q;
  }

  friend bool operator==(const SylvParams&, const SylvParams&) = default;
};

/// prod_{y in Y, z in Z} (y - z); 1 if either side is empty.
Rational r_product(std::span<const Rational> ys, std::span<const Rational> zs);

struct SubsetSplit {
  std::vector<Rational> chosen;
  std::vector<Rational> rest;

  friend bool operator==(const SubsetSplit&, const SubsetSplit&) = default;
};

/// All C(|items|, size) ways to choose `size` elements, in lexicographic
/// order of the chosen index tuples. Both halves keep the input order.
/// Throws IndexOutOfRange for size outside [0, |items|].
std::vector<SubsetSplit> subsets(std::span<const Rational> items, int size);

enum class SumOrder { lexicographic, reversed };

/// Sylvester's double sum Sylv^{p,q}(A, B), evaluated term by term over all
/// pairs of a p-subset of A and a q-subset of B. Throws IndexOutOfRange
/// when p or q is out of range.
Poly sylvester_double_sum(const RootList& a, const RootList& b, int p, int q,
                          SumOrder order = SumOrder::lexicographic);

}  // namespace sylvsum
