#pragma once

// Finite complex multisets: canonical ordering, tolerance-aware matching,
// realness, and the list classes used to pick realizing constructions.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "niep/core.hpp"

namespace niep {

/// A finite multiset of complex scalars.
///
/// Entries are kept in the order they were supplied; constructions that
/// depend on a labelling (d-companion pivots, the diagonal of a Hadamard
/// similarity) use that order. `canonical()` gives the order-independent
/// representative: descending real part, then descending imaginary part.
class SpectrumList {
 public:
  SpectrumList() = default;
  SpectrumList(std::initializer_list<Complex> entries) : entries_(entries) {}
  explicit SpectrumList(std::vector<Complex> entries)
      : entries_(std::move(entries)) {}

  static SpectrumList from_real(std::span<const double> values) {
    return SpectrumList(std::vector<Complex>(values.begin(), values.end()));
  }

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const Complex& operator[](std::size_t i) const { return entries_[i]; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }
  const std::vector<Complex>& entries() const noexcept { return entries_; }

  SpectrumList canonical() const {
    std::vector<Complex> sorted = entries_;
    std::sort(sorted.begin(), sorted.end(), canonical_before);
    return SpectrumList(std::move(sorted));
  }

  SpectrumList conjugate() const {
    std::vector<Complex> out;
    out.reserve(entries_.size());
    for (const auto& z : entries_) out.push_back(std::conj(z));
    return SpectrumList(std::move(out));
  }

  double max_modulus() const noexcept {
    double r = 0.0;
    for (const auto& z : entries_) r = std::max(r, std::abs(z));
    return r;
  }

  Complex sum() const noexcept {
    Complex s{};
    for (const auto& z : entries_) s += z;
    return s;
  }

  bool is_real(double tol) const noexcept {
    return std::all_of(entries_.begin(), entries_.end(),
                       [tol](const Complex& z) { return std::abs(z.imag()) <= tol; });
  }

  /// Real parts sorted descending. Throws if any |Im| exceeds `tol`.
  std::vector<double> real_descending(double tol) const {
    if (!is_real(tol)) throw DomainError("spectrum list is not real within tolerance");
    std::vector<double> out;
    out.reserve(entries_.size());
    for (const auto& z : entries_) out.push_back(z.real());
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
  }

  static bool canonical_before(const Complex& a, const Complex& b) noexcept {
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
  }

 private:
  std::vector<Complex> entries_;
};

namespace detail {

// Kuhn's augmenting-path matching on the bipartite graph {(i, j) : |a_i - b_j| <= tol}.
inline bool perfect_matching_within(const std::vector<Complex>& a,
                                    const std::vector<Complex>& b, double tol) {
  const std::size_t n = a.size();
  std::vector<int> match_of_b(n, -1);
  std::vector<char> seen(n);

  auto augment = [&](auto&& self, std::size_t i) -> bool {
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[j] || std::abs(a[i] - b[j]) > tol) continue;
      seen[j] = 1;
      if (match_of_b[j] < 0 || self(self, static_cast<std::size_t>(match_of_b[j]))) {
        match_of_b[j] = static_cast<int>(i);
        return true;
      }
    }
    return false;
  };

  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    if (!augment(augment, i)) return false;
  }
  return true;
}

inline bool greedy_matching_within(const std::vector<Complex>& a,
                                   const std::vector<Complex>& b, double tol) {
  std::vector<char> used(b.size(), 0);
  for (const auto& x : a) {
    std::size_t best = b.size();
    double best_d = 0.0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(x - b[j]);
      if (best == b.size() || d < best_d) {
        best = j;
        best_d = d;
      }
    }
    if (best == b.size() || best_d > tol) return false;
    used[best] = 1;
  }
  return true;
}

}  // namespace detail

/// True iff the two multisets have equal size and admit a perfect matching
/// whose pairs are all within `tol`. Greedy nearest-neighbour first; exact
/// bipartite matching when greedy fails.
inline bool multiset_equal(const SpectrumList& lhs, const SpectrumList& rhs, double tol) {
  if (lhs.size() != rhs.size()) return false;
  if (tol < 0.0) return false;
  if (detail::greedy_matching_within(lhs.entries(), rhs.entries(), tol)) return true;
  return detail::perfect_matching_within(lhs.entries(), rhs.entries(), tol);
}

/// Bottleneck distance: the smallest `tol` at which `multiset_equal` holds.
/// Infinite when sizes differ.
inline double matching_distance(const SpectrumList& lhs, const SpectrumList& rhs) {
  if (lhs.size() != rhs.size()) return std::numeric_limits<double>::infinity();
  if (lhs.empty()) return 0.0;
  std::vector<double> candidates;
  candidates.reserve(lhs.size() * rhs.size());
  for (const auto& x : lhs) {
    for (const auto& y : rhs) candidates.push_back(std::abs(x - y));
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  std::size_t lo = 0;
  std::size_t hi = candidates.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (detail::perfect_matching_within(lhs.entries(), rhs.entries(), candidates[mid])) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return candidates[lo];
}

/// Distance between a list and its conjugate list; zero for a self-conjugate list.
inline double conjugate_pairing_residual(const SpectrumList& list) {
  return matching_distance(list, list.conjugate());
}

struct Classification {
  bool suleimanova = false;
  bool generalized_suleimanova = false;
  bool ciarlet = false;
  bool dcomp_inequality = false;
  double trace = 0.0;
};

/// Entries with value >= -tol count as nonnegative.
inline Classification classify(const SpectrumList& list, double tol) {
  if (list.size() < 2) throw DomainError("classify requires at least two entries");
  Classification c;
  const Complex s1 = list.sum();
  c.trace = s1.real();
  const bool trace_ok = s1.real() >= -tol;

  const auto nonneg_real_parts = std::count_if(
      list.begin(), list.end(), [tol](const Complex& z) { return z.real() >= -tol; });
  c.generalized_suleimanova = trace_ok && nonneg_real_parts == 1;

  if (list.is_real(tol)) {
    const auto values = list.real_descending(tol);
    const double n = static_cast<double>(values.size());
    const double top = values.front();
    const double bottom = values.back();
    c.suleimanova = trace_ok && nonneg_real_parts == 1;
    c.ciarlet = n * bottom + top >= -tol;
    c.dcomp_inequality = (n - 1.0) * bottom + top >= -tol;
  }
  return c;
}

/// Both lists real; |critical| = |roots| - 1. Sorted descending, checks
/// roots[i] >= critical[i] - tol and critical[i] >= roots[i+1] - tol.
inline bool interlaces(const SpectrumList& roots, const SpectrumList& critical, double tol) {
  if (critical.size() + 1 != roots.size()) {
    throw DomainError("interlacing needs |M| = |Lambda| - 1");
  }
  const auto lam = roots.real_descending(tol);
  const auto mu = critical.real_descending(tol);
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (lam[i] < mu[i] - tol) return false;
    if (mu[i] < lam[i + 1] - tol) return false;
  }
  return true;
}

}  // namespace niep
