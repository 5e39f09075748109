#pragma once

// Trace vectors, compressions onto the orthogonal complement of a unit
// vector, and the differentiator test p_B = p_A' / n.

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "niep/core.hpp"
#include "niep/matrix.hpp"
#include "niep/polynomial.hpp"
#include "niep/realizers.hpp"

namespace niep {

class UnitVector {
 public:
  /// Throws unless the Euclidean norm is 1 within 1e-12.
  explicit UnitVector(std::vector<Complex> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw DomainError("unit vector must be nonempty");
    if (std::abs(norm(entries_) - 1.0) > 1e-12) throw DomainError("vector does not have unit norm");
  }

  static UnitVector normalized(std::vector<Complex> entries) {
    const double len = norm(entries);
    if (len == 0.0) throw DomainError("cannot normalize the zero vector");
    for (auto& z : entries) z /= len;
    return UnitVector(std::move(entries));
  }

  /// e_i, 1-based.
  static UnitVector basis(std::size_t n, std::size_t i) {
    if (i < 1 || i > n) throw DomainError("basis index out of range");
    std::vector<Complex> e(n);
    e[i - 1] = Complex{1.0};
    return UnitVector(std::move(e));
  }

  /// All entries 1/sqrt(n).
  static UnitVector flat(std::size_t n) {
    return UnitVector(std::vector<Complex>(n, Complex{1.0 / std::sqrt(static_cast<double>(n))}));
  }

  std::size_t size() const noexcept { return entries_.size(); }
  const Complex& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Complex> entries() const noexcept { return entries_; }

  UnitVector scaled(Complex unimodular) const {
    std::vector<Complex> out = entries_;
    for (auto& z : out) z *= unimodular;
    return UnitVector::normalized(std::move(out));
  }

 private:
  static double norm(const std::vector<Complex>& v) {
    double s = 0.0;
    for (const auto& z : v) s += std::norm(z);
    return std::sqrt(s);
  }

  std::vector<Complex> entries_;
};

namespace detail {

inline Complex inner(std::span<const Complex> x, std::span<const Complex> y) {
  Complex acc{};
  for (std::size_t i = 0; i < x.size(); ++i) acc += std::conj(x[i]) * y[i];
  return acc;
}

// Orthonormal basis of the complement of z: modified Gram-Schmidt with one
// re-orthogonalization pass over e_1, ..., e_n, skipping the dependent column.
inline std::vector<std::vector<Complex>> complement_basis(const UnitVector& z) {
  const std::size_t n = z.size();
  std::vector<std::vector<Complex>> basis;
  basis.emplace_back(z.entries().begin(), z.entries().end());
  for (std::size_t j = 0; j < n && basis.size() < n; ++j) {
    std::vector<Complex> v(n);
    v[j] = Complex{1.0};
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : basis) {
        const Complex c = inner(q, v);
        for (std::size_t i = 0; i < n; ++i) v[i] -= c * q[i];
      }
    }
    double len = 0.0;
    for (const auto& x : v) len += std::norm(x);
    len = std::sqrt(len);
    if (len < 1e-6) continue;
    for (auto& x : v) x /= len;
    basis.push_back(std::move(v));
  }
  basis.erase(basis.begin());
  return basis;
}

inline double binomial(std::size_t n, std::size_t k) {
  double b = 1.0;
  for (std::size_t i = 1; i <= k; ++i) b = b * static_cast<double>(n - k + i) / static_cast<double>(i);
  return b;
}

}  // namespace detail

/// z* A^k z = tr(A^k)/n for k = 0..n-1, each within tol (1 + ||A||_F)^k.
/// By Cayley-Hamilton A^n is a combination of lower powers, so this covers every k.
inline bool is_trace_vector(const DenseMatrix& a, const UnitVector& z, double tol) {
  const std::size_t n = a.order();
  if (z.size() != n) throw DomainError("trace vector length does not match matrix order");
  const double growth = 1.0 + a.frobenius_norm();
  DenseMatrix power = DenseMatrix::identity(n);
  double bound = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    const auto v = power.apply(z.entries());
    const Complex lhs = detail::inner(z.entries(), v);
    const Complex rhs = power.trace() / static_cast<double>(n);
    if (std::abs(lhs - rhs) > tol * bound) return false;
    power = power * a;
    bound *= growth;
  }
  return true;
}

/// Q* A Q with Q an orthonormal basis of the orthogonal complement of z;
/// defined up to unitary similarity, so compare by characteristic polynomial.
inline DenseMatrix compression(const DenseMatrix& a, const UnitVector& z) {
  const std::size_t n = a.order();
  if (z.size() != n) throw DomainError("vector length does not match matrix order");
  if (n < 2) throw DomainError("compression needs order >= 2");
  const auto q = detail::complement_basis(z);
  std::vector<std::vector<Complex>> aq;
  aq.reserve(q.size());
  for (const auto& col : q) aq.push_back(a.apply(col));
  DenseMatrix b(n - 1);
  for (std::size_t r = 0; r < n - 1; ++r) {
    for (std::size_t c = 0; c < n - 1; ++c) b(r, c) = detail::inner(q[r], aq[c]);
  }
  return b;
}

/// charpoly(compression(A, z)) == charpoly(A)' / n, coefficient t^{n-1-k}
/// compared within tol * C(n, k) * (1 + ||A||_F)^k.
inline bool is_differentiator(const DenseMatrix& a, const UnitVector& z, double tol) {
  const std::size_t n = a.order();
  if (n < 2) throw DomainError("differentiator test needs order >= 2");
  const MonicPolynomial lhs = charpoly(compression(a, z));
  const MonicPolynomial rhs = derivative_monic(charpoly(a));
  const double growth = 1.0 + a.frobenius_norm();
  for (std::size_t idx = 0; idx + 1 < n; ++idx) {
    const std::size_t k = (n - 1) - idx;
    const double bound = tol * detail::binomial(n, k) * std::pow(growth, static_cast<double>(k));
    if (std::abs(lhs.coeff(idx) - rhs.coeff(idx)) > bound) return false;
  }
  return true;
}

}  // namespace niep
