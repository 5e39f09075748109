#pragma once

// Power sums of a list, Monov's determinant formula for the power sums of
// its critical points, and the classical necessary conditions for a list
// to be the spectrum of an entrywise nonnegative matrix.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "niep/core.hpp"
#include "niep/spectrum.hpp"

namespace niep {

/// s_1..s_K by direct summation of powers.
inline std::vector<Complex> power_sums(const SpectrumList& list, std::size_t max_k) {
  std::vector<Complex> sums(max_k, Complex{});
  for (const auto& z : list) {
    Complex power{1.0};
    for (std::size_t k = 0; k < max_k; ++k) {
      power *= z;
      sums[k] += power;
    }
  }
  return sums;
}

namespace detail {

// Determinant by Gaussian elimination with partial pivoting; `a` is row-major k x k.
inline Complex determinant(std::vector<Complex> a, std::size_t k) {
  Complex det{1.0};
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < k; ++r) {
      if (std::abs(a[r * k + col]) > std::abs(a[pivot * k + col])) pivot = r;
    }
    if (a[pivot * k + col] == Complex{}) return Complex{};
    if (pivot != col) {
      for (std::size_t c = 0; c < k; ++c) std::swap(a[pivot * k + c], a[col * k + c]);
      det = -det;
    }
    const Complex diag = a[col * k + col];
    det *= diag;
    for (std::size_t r = col + 1; r < k; ++r) {
      const Complex factor = a[r * k + col] / diag;
      if (factor == Complex{}) continue;
      for (std::size_t c = col; c < k; ++c) a[r * k + c] -= factor * a[col * k + c];
    }
  }
  return det;
}

}  // namespace detail

/// d_k: the k x k determinant with first column (s_1, 2 s_2, ..., k s_k),
/// n on the superdiagonal, and s_{i-j+1} on and below the diagonal of the
/// remaining columns.
inline Complex monov_det(const SpectrumList& list, std::size_t k) {
  if (k == 0) throw DomainError("monov_det needs k >= 1");
  const auto s = power_sums(list, k);
  const double n = static_cast<double>(list.size());
  std::vector<Complex> m(k * k, Complex{});
  for (std::size_t i = 0; i < k; ++i) {
    m[i * k] = static_cast<double>(i + 1) * s[i];
    for (std::size_t j = 1; j < k; ++j) {
      if (j == i + 1) {
        m[i * k + j] = Complex{n};
      } else if (j <= i) {
        m[i * k + j] = s[i - j];
      }
    }
  }
  return detail::determinant(std::move(m), k);
}

/// s_k of the critical points, from the moments of the list alone:
/// s_k(L') = s_k(L) + (-1/n)^k d_k(L).
inline Complex critical_moment(const SpectrumList& list, std::size_t k) {
  if (list.size() < 2) throw DomainError("critical_moment needs at least two entries");
  if (k == 0) throw DomainError("critical_moment needs k >= 1");
  const double n = static_cast<double>(list.size());
  const Complex sk = power_sums(list, k)[k - 1];
  return sk + std::pow(-1.0 / n, static_cast<double>(k)) * monov_det(list, k);
}

struct MomentCheck {
  std::size_t k = 0;
  Complex value;
  bool pass = false;
};

struct JllCheck {
  std::size_t k = 0;
  std::size_t m = 0;
  double lhs = 0.0;  // s_k^m
  double rhs = 0.0;  // n^(m-1) s_km
  bool pass = false;
};

struct ConditionReport {
  bool self_conjugate = false;
  double pairing_residual = 0.0;
  bool spectral_radius_in_list = false;
  double spectral_radius = 0.0;
  double radius_margin = 0.0;  // distance from rho to the nearest entry
  std::vector<MomentCheck> moment_checks;
  std::vector<JllCheck> jll_checks;
  std::size_t moment_depth = 0;  // s_k checked for k <= moment_depth
  std::size_t jll_depth = 0;
  double tol = 0.0;
  bool overall = false;
};

struct ConditionOptions {
  std::size_t moment_depth = 0;  // 0 selects 4n
  std::size_t jll_depth = 8;
  double tol = 1e-9;
};

/// Self-conjugacy, spectral radius membership, moment nonnegativity and
/// J-LL, each to finite depth.
///
/// Tolerances scale with (1 + rho)^k so that a check of s_k is relative to
/// the size the k-th powers can reach. Comparisons are carried out on the
/// power sums of L / (1 + rho), which keeps J-LL products in range at any
/// depth; the reported raw values may overflow to infinity.
inline ConditionReport check_necessary_conditions(const SpectrumList& list,
                                                  const ConditionOptions& options = {}) {
  if (list.empty()) throw DomainError("condition checks need a nonempty list");
  ConditionReport r;
  const std::size_t n = list.size();
  const double nd = static_cast<double>(n);
  r.tol = options.tol;
  r.moment_depth = options.moment_depth == 0 ? 4 * n : options.moment_depth;
  r.jll_depth = options.jll_depth;
  if (r.jll_depth == 0) throw DomainError("J-LL depth must be >= 1");

  const double rho = list.max_modulus();
  const double scale = 1.0 + rho;
  r.spectral_radius = rho;

  r.pairing_residual = conjugate_pairing_residual(list);
  r.self_conjugate = r.pairing_residual <= options.tol * scale;

  r.radius_margin = std::numeric_limits<double>::infinity();
  for (const auto& z : list) r.radius_margin = std::min(r.radius_margin, std::abs(z - Complex{rho}));
  r.spectral_radius_in_list = r.radius_margin <= options.tol * scale;

  const std::size_t depth = std::max(r.moment_depth, r.jll_depth * r.jll_depth);
  std::vector<Complex> scaled_entries;
  scaled_entries.reserve(n);
  for (const auto& z : list) scaled_entries.push_back(z / scale);
  const auto scaled = power_sums(SpectrumList(std::move(scaled_entries)), depth);

  bool ok = r.self_conjugate && r.spectral_radius_in_list;
  const double log_scale = std::log(scale);
  for (std::size_t k = 1; k <= r.moment_depth; ++k) {
    const Complex sk = scaled[k - 1];
    MomentCheck m;
    m.k = k;
    m.value = sk * std::exp(static_cast<double>(k) * log_scale);
    m.pass = sk.real() >= -options.tol && std::abs(sk.imag()) <= options.tol;
    ok = ok && m.pass;
    r.moment_checks.push_back(m);
  }

  for (std::size_t k = 1; k <= r.jll_depth; ++k) {
    for (std::size_t m = 1; m <= r.jll_depth; ++m) {
      const double md = static_cast<double>(m);
      const double lhs_scaled = std::pow(scaled[k - 1].real(), md) / std::pow(nd, md - 1.0);
      const double rhs_scaled = scaled[k * m - 1].real();
      JllCheck c;
      c.k = k;
      c.m = m;
      const double back = std::exp(static_cast<double>(k * m) * log_scale) * std::pow(nd, md - 1.0);
      c.lhs = lhs_scaled * back;
      c.rhs = rhs_scaled * back;
      c.pass = lhs_scaled <= rhs_scaled + options.tol;
      ok = ok && c.pass;
      r.jll_checks.push_back(c);
    }
  }
  r.overall = ok;
  return r;
}

/// Truth values of s_1^2 <= n s_2 on the list and of
/// s_1^2 <= (n-1) s_2 on its critical points, the latter via `critical_moment`.
/// Compared on real parts with tolerance tol * n * (1 + rho)^2.
inline std::pair<bool, bool> jll_pair_equivalence(const SpectrumList& list, double tol = 1e-9) {
  if (list.size() < 2) throw DomainError("jll_pair_equivalence needs at least two entries");
  const double n = static_cast<double>(list.size());
  const double slack = tol * n * std::pow(1.0 + list.max_modulus(), 2.0);
  const auto s = power_sums(list, 2);
  const bool on_list = (n * s[1] - s[0] * s[0]).real() >= -slack;
  const Complex c1 = critical_moment(list, 1);
  const Complex c2 = critical_moment(list, 2);
  const bool on_critical = ((n - 1.0) * c2 - c1 * c1).real() >= -slack;
  return {on_list, on_critical};
}

}  // namespace niep
