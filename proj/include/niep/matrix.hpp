#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "niep/core.hpp"

namespace niep {

/// Square dense complex matrix, row-major. Element access is 0-based.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t order) : order_(order), data_(order * order) {}
  DenseMatrix(std::size_t order, std::vector<Complex> row_major)
      : order_(order), data_(std::move(row_major)) {
    if (data_.size() != order_ * order_) throw DomainError("matrix data is not order x order");
  }

  static DenseMatrix identity(std::size_t order) {
    DenseMatrix m(order);
    for (std::size_t i = 0; i < order; ++i) m(i, i) = Complex{1.0};
    return m;
  }

  static DenseMatrix diagonal(std::span<const Complex> values) {
    DenseMatrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
  }

  std::size_t order() const noexcept { return order_; }
  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * order_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * order_ + c]; }
  std::span<const Complex> data() const noexcept { return data_; }

  DenseMatrix adjoint() const {
    DenseMatrix out(order_);
    for (std::size_t r = 0; r < order_; ++r) {
      for (std::size_t c = 0; c < order_; ++c) out(c, r) = std::conj((*this)(r, c));
    }
    return out;
  }

  Complex trace() const noexcept {
    Complex t{};
    for (std::size_t i = 0; i < order_; ++i) t += (*this)(i, i);
    return t;
  }

  double frobenius_norm() const noexcept {
    double s = 0.0;
    for (const auto& z : data_) s += std::norm(z);
    return std::sqrt(s);
  }

  double max_abs() const noexcept {
    double m = 0.0;
    for (const auto& z : data_) m = std::max(m, std::abs(z));
    return m;
  }

  double max_abs_imag() const noexcept {
    double m = 0.0;
    for (const auto& z : data_) m = std::max(m, std::abs(z.imag()));
    return m;
  }

  // Drops imaginary parts; callers check realness first.
  DenseMatrix real_part() const {
    DenseMatrix out(order_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = Complex{data_[i].real(), 0.0};
    return out;
  }

  DenseMatrix& operator+=(const DenseMatrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }

  DenseMatrix& operator-=(const DenseMatrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }

  DenseMatrix& operator*=(Complex s) {
    for (auto& z : data_) z *= s;
    return *this;
  }

  friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
  friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
  friend DenseMatrix operator*(DenseMatrix a, Complex s) { return a *= s; }
  friend DenseMatrix operator*(Complex s, DenseMatrix a) { return a *= s; }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    a.check_same(b);
    const std::size_t n = a.order_;
    DenseMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        const Complex aik = a(i, k);
        if (aik == Complex{}) continue;
        for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
      }
    }
    return out;
  }

  std::vector<Complex> apply(std::span<const Complex> x) const {
    if (x.size() != order_) throw DomainError("vector length does not match matrix order");
    std::vector<Complex> y(order_);
    for (std::size_t r = 0; r < order_; ++r) {
      Complex acc{};
      for (std::size_t c = 0; c < order_; ++c) acc += (*this)(r, c) * x[c];
      y[r] = acc;
    }
    return y;
  }

 private:
  void check_same(const DenseMatrix& o) const {
    if (o.order_ != order_) throw DomainError("matrix orders differ");
  }

  std::size_t order_ = 0;
  std::vector<Complex> data_;
};

/// max |a_ij - b_ij|.
inline double max_entry_difference(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.order() != b.order()) throw DomainError("matrix orders differ");
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

}  // namespace niep
