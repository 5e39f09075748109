#pragma once

// Explicit matrix constructions whose spectra are a list or its critical
// points, and the matrix utilities needed to certify them.
//
// Indices that name an element of a list or a row/column of a matrix at the
// operation level (pivots, deleted rows) are 1-based.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "niep/core.hpp"
#include "niep/matrix.hpp"
#include "niep/polynomial.hpp"
#include "niep/spectrum.hpp"

namespace niep {

inline constexpr std::size_t kMaxCharpolyOrder = 32;

/// C(p): subdiagonal identity, last column -a_0..-a_{n-1}.
inline DenseMatrix companion(const MonicPolynomial& p) {
  const std::size_t n = p.degree();
  DenseMatrix c(n);
  for (std::size_t i = 1; i < n; ++i) c(i, i - 1) = Complex{1.0};
  for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = -p.coeff(i);
  return c;
}

/// 1-based index of the entry with the largest real part; ties go to the
/// larger modulus, then to the earlier entry.
inline std::size_t default_pivot(const SpectrumList& list) {
  if (list.empty()) throw DomainError("empty list has no pivot");
  std::size_t best = 0;
  for (std::size_t i = 1; i < list.size(); ++i) {
    const Complex& z = list[i];
    const Complex& b = list[best];
    if (z.real() > b.real() || (z.real() == b.real() && std::abs(z) > std::abs(b))) best = i;
  }
  return best + 1;
}

/// The (n-1) x (n-1) d-companion matrix D(I - J/n) + (l_1/n) J with the
/// pivot entry as l_1 and D the diagonal of the remaining entries in input
/// order. Its spectrum is the critical-point multiset of the list.
inline DenseMatrix d_companion(const SpectrumList& list, std::size_t pivot) {
  const std::size_t n = list.size();
  if (n < 2) throw DomainError("d-companion needs at least two entries");
  if (pivot < 1 || pivot > n) throw DomainError("d-companion pivot out of range");
  const Complex lead = list[pivot - 1];
  std::vector<Complex> rest;
  rest.reserve(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (i + 1 != pivot) rest.push_back(list[i]);
  }
  const double nd = static_cast<double>(n);
  DenseMatrix a(n - 1);
  for (std::size_t i = 0; i < n - 1; ++i) {
    for (std::size_t j = 0; j < n - 1; ++j) {
      a(i, j) = (i == j) ? ((nd - 1.0) * rest[i] + lead) / nd : (lead - rest[i]) / nd;
    }
  }
  return a;
}

inline DenseMatrix d_companion(const SpectrumList& list) {
  return d_companion(list, default_pivot(list));
}

/// The labelling used by `real_d_companion`: the largest real entry first,
/// the other real entries in input order, then each conjugate pair as
/// (mu, conj(mu)) with Im mu > 0, pairs by descending Im mu.
inline SpectrumList real_d_companion_order(const SpectrumList& list, double tol = 1e-9) {
  const double t = tol * (1.0 + list.max_modulus());
  std::vector<Complex> reals;
  std::vector<Complex> upper;
  std::vector<Complex> lower;
  for (const auto& z : list) {
    if (std::abs(z.imag()) <= t) {
      reals.push_back(Complex{z.real(), 0.0});
    } else if (z.imag() > 0.0) {
      upper.push_back(z);
    } else {
      lower.push_back(z);
    }
  }
  if (reals.empty()) throw DomainError("real d-companion needs a real entry to serve as pivot");
  if (upper.size() != lower.size()) throw DomainError("list is not self-conjugate");
  std::stable_sort(upper.begin(), upper.end(),
                   [](const Complex& a, const Complex& b) { return a.imag() > b.imag(); });
  std::vector<char> used(lower.size(), 0);
  std::vector<Complex> ordered;
  const auto top = std::max_element(reals.begin(), reals.end(), [](const Complex& a, const Complex& b) {
    return a.real() < b.real();
  });
  ordered.push_back(*top);
  for (auto it = reals.begin(); it != reals.end(); ++it) {
    if (it != top) ordered.push_back(*it);
  }
  for (const auto& mu : upper) {
    std::size_t best = lower.size();
    for (std::size_t j = 0; j < lower.size(); ++j) {
      if (used[j]) continue;
      if (best == lower.size() || std::abs(lower[j] - std::conj(mu)) < std::abs(lower[best] - std::conj(mu))) {
        best = j;
      }
    }
    if (std::abs(lower[best] - std::conj(mu)) > t) throw DomainError("list is not self-conjugate");
    used[best] = 1;
    ordered.push_back(mu);
    ordered.push_back(std::conj(mu));
  }
  return SpectrumList(std::move(ordered));
}

/// Real matrix B(I - K/N) + (l_1/N) K with the critical points of a
/// self-conjugate list as spectrum. B is the direct sum of the non-pivot
/// real entries and [[Re mu, Im mu], [-Im mu, Re mu]] per pair; K = u u^T
/// with u = (1, ..., 1, sqrt2, 0, ..., sqrt2, 0).
inline DenseMatrix real_d_companion(const SpectrumList& list, double tol = 1e-9) {
  if (list.size() < 2) throw DomainError("d-companion needs at least two entries");
  const SpectrumList ordered = real_d_companion_order(list, tol);
  const std::size_t total = ordered.size();
  const double nd = static_cast<double>(total);
  const double lead = ordered[0].real();

  std::size_t reals = 1;
  while (reals < total && ordered[reals].imag() == 0.0) ++reals;

  const std::size_t order = total - 1;
  std::vector<double> b(order * order, 0.0);
  std::vector<double> u(order, 1.0);
  for (std::size_t i = 1; i < reals; ++i) b[(i - 1) * order + (i - 1)] = ordered[i].real();
  for (std::size_t k = reals; k < total; k += 2) {
    const std::size_t r = k - 1;
    const Complex mu = ordered[k];
    b[r * order + r] = mu.real();
    b[r * order + r + 1] = mu.imag();
    b[(r + 1) * order + r] = -mu.imag();
    b[(r + 1) * order + r + 1] = mu.real();
    u[r] = std::numbers::sqrt2;
    u[r + 1] = 0.0;
  }

  DenseMatrix out(order);
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; j < order; ++j) {
      // (B K)_ij = (B u)_i u_j
      double bu = 0.0;
      for (std::size_t l = 0; l < order; ++l) bu += b[i * order + l] * u[l];
      const double k_ij = u[i] * u[j];
      out(i, j) = Complex{b[i * order + j] - bu * u[j] / nd + lead * k_ij / nd, 0.0};
    }
  }
  return out;
}

namespace detail {

// exp(-2 pi i m / n) with m reduced mod n first. Quarter turns are exact.
inline Complex root_of_unity_power(std::size_t m, std::size_t n) {
  const std::size_t r = m % n;
  if ((4 * r) % n == 0) {
    constexpr Complex quarter[] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
    return quarter[4 * r / n];
  }
  const double angle = -2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n);
  return std::polar(1.0, angle);
}

}  // namespace detail

/// F_n with (j, k) entry w^{jk}, w = exp(-2 pi i / n), 0-based j, k.
inline DenseMatrix dft_matrix(std::size_t n) {
  if (n == 0) throw DomainError("DFT order must be >= 1");
  DenseMatrix f(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) f(j, k) = detail::root_of_unity_power(j * k, n);
  }
  return f;
}

/// Names the first violated complex-Hadamard condition: unimodular entries
/// within 1e-9 and ||HH* - nI||_F <= 1e-8 n.
inline std::optional<std::string> hadamard_violation(const DenseMatrix& h) {
  const std::size_t n = h.order();
  if (n == 0) return "Hadamard matrix must have order >= 1";
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (std::abs(std::abs(h(r, c)) - 1.0) > 1e-9) {
        return "entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ") is not unimodular";
      }
    }
  }
  DenseMatrix gram = h * h.adjoint();
  gram -= DenseMatrix::identity(n) * Complex{static_cast<double>(n)};
  if (gram.frobenius_norm() > 1e-8 * static_cast<double>(n)) return "HH* differs from nI";
  return std::nullopt;
}

/// U D U* with U = H / sqrt(n) and D = diag(list) in list order.
inline DenseMatrix hadamard_similarity(const SpectrumList& list, const DenseMatrix& h) {
  if (h.order() != list.size()) throw DomainError("Hadamard order does not match list size");
  if (auto bad = hadamard_violation(h)) throw DomainError("not a complex Hadamard matrix: " + *bad);
  const std::size_t n = list.size();
  const double inv_n = 1.0 / static_cast<double>(n);
  DenseMatrix a(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = 0; s < n; ++s) {
      Complex acc{};
      for (std::size_t k = 0; k < n; ++k) acc += h(r, k) * list[k] * std::conj(h(s, k));
      a(r, s) = acc * inv_n;
    }
  }
  return a;
}

/// Rows are successive right cyclic shifts of the first row: C(i, j) = c[(j - i) mod n].
inline DenseMatrix circulant(std::span<const Complex> first_row) {
  const std::size_t n = first_row.size();
  if (n == 0) throw DomainError("circulant needs a nonempty first row");
  DenseMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) c(i, j) = first_row[(j + n - i) % n];
  }
  return c;
}

/// Eigenvalues of circulant(c) in DFT order: l_k = sum_j c_j w^{jk}.
inline SpectrumList circulant_eigenvalues(std::span<const Complex> first_row) {
  const std::size_t n = first_row.size();
  std::vector<Complex> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    Complex acc{};
    for (std::size_t j = 0; j < n; ++j) acc += first_row[j] * detail::root_of_unity_power(j * k, n);
    out[k] = acc;
  }
  return SpectrumList(std::move(out));
}

/// First row of the circulant (F/sqrt n) diag(l) (F/sqrt n)*: c_j = (1/n) sum_k l_k w^{-jk}.
inline std::vector<Complex> circulant_first_row(const SpectrumList& eigenvalues) {
  const std::size_t n = eigenvalues.size();
  if (n == 0) throw DomainError("circulant needs a nonempty spectrum");
  std::vector<Complex> row(n);
  for (std::size_t j = 0; j < n; ++j) {
    Complex acc{};
    for (std::size_t k = 0; k < n; ++k) {
      acc += eigenvalues[k] * std::conj(detail::root_of_unity_power(j * k, n));
    }
    row[j] = acc / static_cast<double>(n);
  }
  return row;
}

/// Reorders a list so that positions j and n-j hold (near-)conjugate or
/// equal entries, which makes the DFT similarity real whenever the list
/// allows it. Position 0, and n/2 for even n, take real values of odd
/// multiplicity, larger real part first.
inline SpectrumList conjugate_symmetric_arrangement(const SpectrumList& list, double tol = 1e-9) {
  const std::size_t n = list.size();
  if (n == 0) return list;
  const double t = tol * (1.0 + list.max_modulus());
  std::vector<Complex> pool = list.canonical().entries();
  auto is_real = [t](const Complex& z) { return std::abs(z.imag()) <= t; };

  // One representative per real value, in canonical (descending) order.
  std::vector<Complex> odd_values;
  std::vector<Complex> real_values;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (!is_real(pool[i])) continue;
    const bool seen = std::any_of(real_values.begin(), real_values.end(),
                                  [&](const Complex& v) { return std::abs(v - pool[i]) <= t; });
    if (seen) continue;
    real_values.push_back(pool[i]);
    const auto mult = std::count_if(pool.begin(), pool.end(),
                                    [&](const Complex& z) { return is_real(z) && std::abs(z - pool[i]) <= t; });
    if (mult % 2 == 1) odd_values.push_back(pool[i]);
  }

  const std::size_t slots = n % 2 == 1 ? 1 : 2;
  std::vector<Complex> singles(odd_values.begin(), odd_values.begin() + std::min(slots, odd_values.size()));
  if (singles.size() < slots && !real_values.empty()) {
    // Even n with every real value of even multiplicity: both slots get the top value.
    while (singles.size() < slots) singles.push_back(real_values.front());
  }
  while (singles.size() < slots) singles.push_back(pool.front());

  std::vector<Complex> out(n);
  auto take_nearest = [&pool](Complex target) {
    auto it = std::min_element(pool.begin(), pool.end(), [&](const Complex& a, const Complex& b) {
      return std::abs(a - target) < std::abs(b - target);
    });
    const Complex z = *it;
    pool.erase(it);
    return z;
  };
  out[0] = take_nearest(singles[0]);
  if (slots == 2) out[n / 2] = take_nearest(singles[1]);

  for (std::size_t j = 1; 2 * j < n; ++j) {
    auto first = std::max_element(pool.begin(), pool.end(), [](const Complex& a, const Complex& b) {
      return a.imag() < b.imag();
    });
    const Complex x = *first;
    pool.erase(first);
    out[j] = x;
    out[n - j] = take_nearest(std::conj(x));
  }
  return SpectrumList(std::move(out));
}

/// M with row i and column i deleted (1-based i).
inline DenseMatrix principal_submatrix(const DenseMatrix& m, std::size_t i) {
  const std::size_t n = m.order();
  if (n < 2) throw DomainError("principal submatrix needs order >= 2");
  if (i < 1 || i > n) throw DomainError("principal submatrix index out of range");
  DenseMatrix out(n - 1);
  const std::size_t skip = i - 1;
  for (std::size_t r = 0, rr = 0; r < n; ++r) {
    if (r == skip) continue;
    for (std::size_t c = 0, cc = 0; c < n; ++c) {
      if (c == skip) continue;
      out(rr, cc++) = m(r, c);
    }
    ++rr;
  }
  return out;
}

/// Characteristic polynomial by the Faddeev-LeVerrier trace recursion.
inline MonicPolynomial charpoly(const DenseMatrix& m) {
  const std::size_t n = m.order();
  if (n == 0) throw DomainError("characteristic polynomial of an empty matrix");
  if (n > kMaxCharpolyOrder) throw DomainError("characteristic polynomial guarded to order <= 32");
  std::vector<Complex> coeffs(n);
  // M_k = A M_{k-1} + c_{n-k+1} I and c_{n-k} = -tr(A M_k) / k, with M_1 = I.
  DenseMatrix mk = DenseMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    DenseMatrix amk = m * mk;
    const Complex c = -amk.trace() / static_cast<double>(k);
    coeffs[n - k] = c;
    if (k < n) {
      for (std::size_t i = 0; i < n; ++i) amk(i, i) += c;
      mk = std::move(amk);
    }
  }
  return MonicPolynomial(std::move(coeffs));
}

inline SpectrumList spectrum(const DenseMatrix& m) { return roots(charpoly(m)); }

enum class SignClass { nonnegative, metzler, neither };

inline std::string_view to_string(SignClass c) {
  switch (c) {
    case SignClass::nonnegative: return "nonnegative";
    case SignClass::metzler: return "metzler";
    case SignClass::neither: return "neither";
  }
  return "neither";
}

inline SignClass matrix_sign_class(const DenseMatrix& m, double tol) {
  if (m.max_abs_imag() > tol) throw DomainError("sign class needs a real matrix");
  bool off_diagonal_ok = true;
  bool diagonal_ok = true;
  for (std::size_t r = 0; r < m.order(); ++r) {
    for (std::size_t c = 0; c < m.order(); ++c) {
      const bool ok = m(r, c).real() >= -tol;
      if (r == c) {
        diagonal_ok = diagonal_ok && ok;
      } else {
        off_diagonal_ok = off_diagonal_ok && ok;
      }
    }
  }
  if (!off_diagonal_ok) return SignClass::neither;
  return diagonal_ok ? SignClass::nonnegative : SignClass::metzler;
}

}  // namespace niep
