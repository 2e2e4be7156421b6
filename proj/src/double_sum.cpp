#include "sylvsum/double_sum.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "sylvsum/errors.hpp"

namespace sylvsum {

RootList::RootList(std::vector<Rational> roots) : roots_(std::move(roots)) {
  std::vector<Rational> sorted = roots_;
  std::sort(sorted.begin(), sorted.end());
  const auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) {
    throw DuplicateRoots("root list contains " + dup->to_string() + " more than once");
  }
}

RootList RootList::without(std::size_t index) const {
  RootList out;
  out.roots_ = roots_;
  out.roots_.erase(out.roots_.begin() + static_cast<std::ptrdiff_t>(index));
  return out;
}

SylvParams SylvParams::make(int m, int n, int p, int q) {
  if (m < 0 || n < 0 || p < 0 || p > m || q < 0 || q > n) {
    throw IndexOutOfRange("need 0 <= p <= m and 0 <= q <= n, got (m, n, p, q) = (" + std::to_string(m) +
                          ", " + std::to_string(n) + ", " + std::to_string(p) + ", " + std::to_string(q) + ")");
  }
  return {m, n, p, q};
}

Rational r_product(std::span<const Rational> ys, std::span<const Rational> zs) {
  Rational out(1);
  for (const Rational& y : ys) {
    for (const Rational& z : zs) {
      out *= y - z;
    }
  }
  return out;
}

std::vector<SubsetSplit> subsets(std::span<const Rational> items, int size) {
  const int total = static_cast<int>(items.size());
  if (size < 0 || size > total) {
    throw IndexOutOfRange("subset size " + std::to_string(size) + " outside [0, " + std::to_string(total) + "]");
  }
  std::vector<SubsetSplit> out;
  std::vector<int> index(static_cast<std::size_t>(size));
  std::iota(index.begin(), index.end(), 0);
  std::vector<bool> taken(items.size());
  while (true) {
    std::fill(taken.begin(), taken.end(), false);
    SubsetSplit split;
    for (const int i : index) {
      taken[static_cast<std::size_t>(i)] = true;
      split.chosen.push_back(items[static_cast<std::size_t>(i)]);
    }
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (!taken[i]) {
        split.rest.push_back(items[i]);
      }
    }
    out.push_back(std::move(split));

    // Advance to the next index tuple in lexicographic order.
    int pos = size - 1;
    while (pos >= 0 && index[static_cast<std::size_t>(pos)] == total - size + pos) {
      --pos;
    }
    if (pos < 0) {
      break;
    }
    ++index[static_cast<std::size_t>(pos)];
    for (int j = pos + 1; j < size; ++j) {
      index[static_cast<std::size_t>(j)] = index[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

namespace {

struct SplitFactors {
  SubsetSplit split;
  Poly vanishing;      // R(x, chosen)
  Rational internal;   // R(chosen, rest)
};

std::vector<SplitFactors> prepare(std::span<const Rational> items, int size) {
  std::vector<SplitFactors> out;
  for (auto& split : subsets(items, size)) {
    Poly vanishing = poly_from_roots(split.chosen);
    Rational internal = r_product(split.chosen, split.rest);
    out.push_back({std::move(split), std::move(vanishing), std::move(internal)});
  }
  return out;
}

}  // namespace

Poly sylvester_double_sum(const RootList& a, const RootList& b, int p, int q, SumOrder order) {
  SylvParams::make(static_cast<int>(a.size()), static_cast<int>(b.size()), p, q);
  auto a_splits = prepare(a.view(), p);
  auto b_splits = prepare(b.view(), q);
  if (order == SumOrder::reversed) {
    std::reverse(a_splits.begin(), a_splits.end());
    std::reverse(b_splits.begin(), b_splits.end());
  }

  Poly sum;
  for (const auto& sa : a_splits) {
    for (const auto& sb : b_splits) {
      Rational scalar = r_product(sa.split.chosen, sb.split.chosen) * r_product(sa.split.rest, sb.split.rest);
      if (scalar.is_zero()) {
        continue;
      }
      scalar /= sa.internal * sb.internal;
      sum += (sa.vanishing * sb.vanishing) * scalar;
    }
  }
  return sum;
}

}  // namespace sylvsum
