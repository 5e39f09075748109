#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

#include "niep/core.hpp"
#include "niep/spectrum.hpp"

namespace niep {

/// Monic polynomial t^n + a_{n-1} t^{n-1} + ... + a_0, stored as a_0..a_{n-1}.
class MonicPolynomial {
 public:
  explicit MonicPolynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw DomainError("monic polynomial must have degree >= 1");
  }

  /// t^n.
  static MonicPolynomial monomial(std::size_t degree) {
    return MonicPolynomial(std::vector<Complex>(degree, Complex{}));
  }

  std::size_t degree() const noexcept { return coeffs_.size(); }

  /// a_k for 0 <= k < n; a_n = 1.
  Complex coeff(std::size_t k) const { return k == coeffs_.size() ? Complex{1.0} : coeffs_.at(k); }
  const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }

  double max_abs_coeff() const noexcept {
    double m = 0.0;
    for (const auto& a : coeffs_) m = std::max(m, std::abs(a));
    return m;
  }

  bool is_real(double tol) const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [tol](const Complex& a) {
      return std::abs(a.imag()) <= tol * (1.0 + std::abs(a));
    });
  }

 private:
  std::vector<Complex> coeffs_;
};

namespace detail {

struct HornerResult {
  Complex value;
  Complex derivative;
  double magnitude_bound;  // sum |c_i| |z|^i, the rounding scale of `value`
};

// `full` holds c_0..c_n including the leading coefficient.
inline HornerResult horner(const std::vector<Complex>& full, Complex z) {
  const std::size_t n = full.size() - 1;
  Complex p = full[n];
  Complex dp{};
  double bound = std::abs(full[n]);
  const double az = std::abs(z);
  for (std::size_t i = n; i-- > 0;) {
    dp = dp * z + p;
    p = p * z + full[i];
    bound = bound * az + std::abs(full[i]);
  }
  return {p, dp, bound};
}

inline std::vector<Complex> full_coefficients(const MonicPolynomial& p) {
  std::vector<Complex> full = p.coeffs();
  full.push_back(Complex{1.0});
  return full;
}

inline std::vector<Complex> differentiate(const std::vector<Complex>& full) {
  if (full.size() <= 1) return {Complex{}};
  std::vector<Complex> out(full.size() - 1);
  for (std::size_t i = 1; i < full.size(); ++i) out[i - 1] = full[i] * static_cast<double>(i);
  return out;
}

// Newton on `full` starting from z; keeps the best iterate by |value|.
inline Complex newton_polish(const std::vector<Complex>& full, Complex z, int steps) {
  auto h = horner(full, z);
  for (int s = 0; s < steps; ++s) {
    if (h.derivative == Complex{}) break;
    const Complex next = z - h.value / h.derivative;
    const auto hn = horner(full, next);
    if (!(std::abs(hn.value) < std::abs(h.value))) break;
    z = next;
    h = hn;
  }
  return z;
}

// Near-coincident roots produced at a multiple root scatter like eps^(1/m).
// A group is replaced by its centroid refined on p^(m-1) when the refined
// point is a root of p at rounding level; otherwise the group is kept.
inline void merge_clusters(const std::vector<Complex>& full, std::vector<Complex>& z) {
  const std::size_t n = z.size();
  if (n < 2) return;
  std::vector<std::size_t> label(n);
  for (std::size_t i = 0; i < n; ++i) label[i] = i;
  auto find = [&](std::size_t i) {
    while (label[i] != i) i = label[i] = label[label[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double scale = 1.0 + std::max(std::abs(z[i]), std::abs(z[j]));
      if (std::abs(z[i] - z[j]) <= 1e-3 * scale) label[find(i)] = find(j);
    }
  }
  std::vector<std::vector<std::size_t>> groups(n);
  for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);

  const double degree = static_cast<double>(full.size() - 1);
  for (const auto& g : groups) {
    if (g.size() < 2) continue;
    Complex centre{};
    for (auto i : g) centre += z[i];
    centre /= static_cast<double>(g.size());

    std::vector<Complex> q = full;
    for (std::size_t d = 1; d < g.size(); ++d) q = differentiate(q);
    centre = newton_polish(q, centre, 12);

    const auto h = horner(full, centre);
    if (std::abs(h.value) <= 4.0 * degree * kEps * h.magnitude_bound) {
      for (auto i : g) z[i] = centre;
    }
  }
}

// Real coefficients: make near-real roots real and conjugate partners exact
// conjugates, keeping each change only if |p| stays below the old residual
// or the rounding floor.
inline void symmetrize_real(const std::vector<Complex>& full, std::vector<Complex>& z) {
  const double floor_scale = 16.0 * static_cast<double>(full.size()) * kEps;
  auto acceptable = [&](Complex before, Complex after) {
    const auto hb = horner(full, before);
    const auto ha = horner(full, after);
    return std::abs(ha.value) <= std::max(std::abs(hb.value), floor_scale * ha.magnitude_bound);
  };
  std::vector<char> used(z.size(), 0);
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (used[i]) continue;
    used[i] = 1;
    const Complex target = std::conj(z[i]);
    std::size_t best = z.size();
    double best_d = std::abs(z[i] - target);
    for (std::size_t j = 0; j < z.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(z[j] - target);
      if (d < best_d) {
        best = j;
        best_d = d;
      }
    }
    if (best == z.size()) {
      const Complex real{z[i].real(), 0.0};
      if (std::abs(z[i].imag()) <= 1e-7 * (1.0 + std::abs(z[i])) && acceptable(z[i], real)) z[i] = real;
      continue;
    }
    const Complex mid = 0.5 * (z[i] + std::conj(z[best]));
    if (acceptable(z[i], mid) && acceptable(z[best], std::conj(mid))) {
      z[i] = mid;
      z[best] = std::conj(mid);
    }
    used[best] = 1;
  }
}

}  // namespace detail

/// Polynomial whose roots are the entries of `roots`, built by multiplying
/// in one linear factor at a time. A self-conjugate input gets its
/// coefficients' rounding-level imaginary parts zeroed.
inline MonicPolynomial from_roots(const SpectrumList& roots) {
  if (roots.empty()) throw DomainError("from_roots needs a nonempty root list");
  // full[i] is the coefficient of t^i.
  std::vector<Complex> full{Complex{1.0}};
  for (const auto& r : roots) {
    full.push_back(Complex{});
    for (std::size_t i = full.size() - 1; i > 0; --i) full[i] = full[i - 1] - r * full[i];
    full[0] = -r * full[0];
  }
  full.pop_back();

  const double pairing_tol = 1e-9 * (1.0 + roots.max_modulus());
  if (conjugate_pairing_residual(roots) <= pairing_tol) {
    for (auto& a : full) {
      if (std::abs(a.imag()) <= 1e-12 * (1.0 + std::abs(a))) a = Complex{a.real(), 0.0};
    }
  }
  return MonicPolynomial(std::move(full));
}

inline Complex evaluate(const MonicPolynomial& p, Complex z) {
  return detail::horner(detail::full_coefficients(p), z).value;
}

/// p'/n: monic of degree n-1 with the critical points of p as roots.
inline MonicPolynomial derivative_monic(const MonicPolynomial& p) {
  const std::size_t n = p.degree();
  if (n < 2) throw DomainError("a linear polynomial has no critical points");
  std::vector<Complex> out(n - 1);
  const double inv_n = 1.0 / static_cast<double>(n);
  for (std::size_t k = 1; k < n; ++k) out[k - 1] = p.coeff(k) * (static_cast<double>(k) * inv_n);
  return MonicPolynomial(std::move(out));
}

/// (n+1)P where P' = p and P(0) = c. (n+1)P is monic; its constant term is (n+1)c.
inline MonicPolynomial antiderivative_monic(const MonicPolynomial& p, double c = 0.0) {
  const std::size_t n = p.degree();
  const double lead = static_cast<double>(n + 1);
  std::vector<Complex> out(n + 1);
  out[0] = Complex{lead * c};
  for (std::size_t k = 0; k < n; ++k) out[k + 1] = p.coeff(k) * (lead / static_cast<double>(k + 1));
  return MonicPolynomial(std::move(out));
}

struct RootOptions {
  double residual_tol = 1e-10;
  int max_sweeps = 500;
};

/// All n roots with multiplicity, by Aberth-Ehrlich simultaneous iteration
/// from a perturbed circle of radius 1 + max|a_k|, then Newton polishing.
///
/// Each returned root satisfies |p(r)| <= residual_tol * (1 + max|a_k|), or
/// sits at the rounding floor of evaluating p; otherwise `NumericError`.
inline SpectrumList roots(const MonicPolynomial& p, const RootOptions& options = {}) {
  std::vector<Complex> full = detail::full_coefficients(p);
  std::vector<Complex> found;
  found.reserve(p.degree());

  // Exact zero roots come off without iteration.
  while (full.size() > 1 && full[0] == Complex{}) {
    found.push_back(Complex{});
    full.erase(full.begin());
  }
  const std::size_t n = full.size() - 1;
  if (n == 1) found.push_back(-full[0]);

  if (n >= 2) {
    double radius = 1.0;
    for (std::size_t i = 0; i < n; ++i) radius = std::max(radius, 1.0 + std::abs(full[i]));
    std::vector<Complex> z(n);
    for (std::size_t k = 0; k < n; ++k) {
      const double theta =
          2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.4;
      z[k] = std::polar(radius, theta);
    }

    std::vector<char> done(n, 0);
    std::size_t remaining = n;
    for (int sweep = 0; sweep < options.max_sweeps && remaining > 0; ++sweep) {
      for (std::size_t k = 0; k < n; ++k) {
        if (done[k]) continue;
        const auto h = detail::horner(full, z[k]);
        if (std::abs(h.value) <= 4.0 * kEps * h.magnitude_bound) {
          done[k] = 1;
          --remaining;
          continue;
        }
        Complex repulsion{};
        for (std::size_t j = 0; j < n; ++j) {
          if (j != k) repulsion += 1.0 / (z[k] - z[j]);
        }
        Complex step;
        if (h.derivative == Complex{}) {
          step = Complex{kEps * (1.0 + std::abs(z[k])), 0.0};
        } else {
          const Complex newton = h.value / h.derivative;
          step = newton / (1.0 - newton * repulsion);
        }
        z[k] -= step;
        if (std::abs(step) <= 2.0 * kEps * std::abs(z[k])) {
          done[k] = 1;
          --remaining;
        }
      }
    }

    for (auto& r : z) r = detail::newton_polish(full, r, 3);
    detail::merge_clusters(full, z);
    found.insert(found.end(), z.begin(), z.end());
  }

  const std::vector<Complex> original = detail::full_coefficients(p);
  if (p.is_real(0.0)) detail::symmetrize_real(original, found);
  const double target = options.residual_tol * (1.0 + p.max_abs_coeff());
  double worst = 0.0;
  for (const auto& r : found) {
    const auto h = detail::horner(original, r);
    const double res = std::abs(h.value);
    if (res > target && res > 16.0 * static_cast<double>(original.size()) * kEps * h.magnitude_bound) {
      worst = std::max(worst, res);
    }
  }
  if (worst > 0.0) {
    throw NumericError("root finder did not converge within the sweep cap", worst);
  }
  return SpectrumList(std::move(found));
}

/// Roots of p' for p with root multiset `list`; always |list| - 1 entries.
inline SpectrumList critical_points(const SpectrumList& list) {
  if (list.size() < 2) throw DomainError("critical points need at least two entries");
  return roots(derivative_monic(from_roots(list)));
}

}  // namespace niep
