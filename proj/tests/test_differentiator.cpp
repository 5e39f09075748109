#include <gtest/gtest.h>

#include "oracles.hpp"

using niep::Complex;
using niep::DenseMatrix;
using niep::SpectrumList;
using niep::UnitVector;

namespace {

DenseMatrix swap2() { return DenseMatrix(2, {Complex{0}, Complex{1}, Complex{1}, Complex{0}}); }

UnitVector flat_with_phases(niep::Rng& rng, std::size_t n) {
  std::vector<Complex> z(n);
  for (auto& x : z) x = rng.unimodular() / std::sqrt(static_cast<double>(n));
  return UnitVector::normalized(std::move(z));
}

UnitVector random_unit(niep::Rng& rng, std::size_t n) {
  std::vector<Complex> z(n);
  for (auto& x : z) x = rng.disk(1.0);
  return UnitVector::normalized(std::move(z));
}

DenseMatrix random_matrix(niep::Rng& rng, std::size_t n) {
  DenseMatrix a(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a(r, c) = rng.disk(1.0);
  }
  return a;
}

bool same_charpoly(const DenseMatrix& a, const DenseMatrix& b, double tol) {
  const auto pa = niep::charpoly(a);
  const auto pb = niep::charpoly(b);
  if (pa.degree() != pb.degree()) return false;
  for (std::size_t k = 0; k < pa.degree(); ++k) {
    if (std::abs(pa.coeff(k) - pb.coeff(k)) > tol) return false;
  }
  return true;
}

}  // namespace

TEST(UnitVector, Validation) {
  EXPECT_THROW(UnitVector({Complex{1}, Complex{1}}), niep::DomainError);
  EXPECT_THROW(UnitVector::normalized({Complex{}, Complex{}}), niep::DomainError);
  EXPECT_NO_THROW(UnitVector::basis(3, 2));
  EXPECT_THROW(UnitVector::basis(3, 4), niep::DomainError);
  EXPECT_NEAR(std::abs(UnitVector::flat(4)[2]), 0.5, 1e-16);
}

TEST(IsTraceVector, Examples) {
  niep::Rng rng(61);
  const auto d = DenseMatrix::diagonal(oracle::complex_list(rng, 5).entries());
  EXPECT_TRUE(niep::is_trace_vector(d, flat_with_phases(rng, 5), 1e-10));
  EXPECT_FALSE(niep::is_trace_vector(swap2(), UnitVector::flat(2), 1e-10));
  EXPECT_THROW(niep::is_trace_vector(swap2(), UnitVector::flat(3), 1e-10), niep::DomainError);
}

TEST(IsTraceVector, UnimodularMultiplesStayTraceVectors) {
  niep::Rng rng(62);
  const std::size_t n = 5;
  const auto list = oracle::complex_list(rng, n);
  const auto a = niep::hadamard_similarity(list, niep::dft_matrix(n));
  const auto z = UnitVector::basis(n, 3);
  ASSERT_TRUE(niep::is_trace_vector(a, z, 1e-10));
  for (int i = 0; i < 100; ++i) EXPECT_TRUE(niep::is_trace_vector(a, z.scaled(rng.unimodular()), 1e-10));
}

TEST(IsTraceVector, DiagonalFamilyForcesFlatModulus) {
  // A trace vector of every e_j e_j^T has |z_j|^2 = 1/n.
  niep::Rng rng(63);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + rng.index(7);
    const auto z = trial % 2 ? flat_with_phases(rng, n) : random_unit(rng, n);
    bool all = true;
    for (std::size_t j = 0; j < n; ++j) {
      DenseMatrix e(n);
      e(j, j) = Complex{1};
      all = all && niep::is_trace_vector(e, z, 1e-10);
    }
    if (all) {
      for (std::size_t j = 0; j < n; ++j) EXPECT_NEAR(std::abs(z[j]), 1.0 / std::sqrt(static_cast<double>(n)), 1e-9);
    }
    EXPECT_EQ(all, trial % 2 == 1);
  }
}

TEST(Compression, Examples) {
  niep::Rng rng(64);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + rng.index(6);
    const auto a = random_matrix(rng, n);
    for (std::size_t i = 1; i <= n; ++i) {
      EXPECT_TRUE(same_charpoly(niep::compression(a, UnitVector::basis(n, i)), niep::principal_submatrix(a, i), 1e-10));
    }
    const auto c = niep::compression(Complex{2.5} * DenseMatrix::identity(n), random_unit(rng, n));
    EXPECT_LE(niep::max_entry_difference(c, Complex{2.5} * DenseMatrix::identity(n - 1)), 1e-12);
  }
  const auto z = niep::compression(swap2(), UnitVector::basis(2, 1));
  EXPECT_NEAR(std::abs(z(0, 0)), 0.0, 1e-16);
}

TEST(IsDifferentiator, Examples) {
  niep::Rng rng(65);
  const std::size_t n = 6;
  const auto list = oracle::complex_list(rng, n);
  const auto a = niep::hadamard_similarity(list, niep::dft_matrix(n));
  for (std::size_t i = 1; i <= n; ++i) EXPECT_TRUE(niep::is_differentiator(a, UnitVector::basis(n, i), 1e-9));
  const auto d = DenseMatrix::diagonal(list.entries());
  EXPECT_TRUE(niep::is_differentiator(d, UnitVector::flat(n), 1e-9));
  EXPECT_FALSE(niep::is_differentiator(swap2(), UnitVector::flat(2), 1e-9));
  EXPECT_THROW(niep::is_differentiator(DenseMatrix::identity(1), UnitVector::flat(1), 1e-9), niep::DomainError);
}

TEST(Pereira, DifferentiatorIffTraceVector) {
  niep::Rng rng(66);
  int positives = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + rng.index(7);
    DenseMatrix a;
    UnitVector z = UnitVector::flat(n);
    switch (trial % 3) {
      case 0:  // random pair, almost never a trace vector
        a = random_matrix(rng, n);
        z = random_unit(rng, n);
        break;
      case 1: {  // normal matrix Q D Q*, z = Q w with flat w
        const auto q = oracle::random_unitary(rng, n);
        a = q * DenseMatrix::diagonal(oracle::complex_list(rng, n).entries()) * q.adjoint();
        const auto w = flat_with_phases(rng, n);
        z = UnitVector::normalized(q.apply(w.entries()));
        break;
      }
      default: {  // non-normal: S e_i trace vector for S A S^-1 with S unitary
        const auto q = oracle::random_unitary(rng, n);
        a = q * niep::hadamard_similarity(oracle::complex_list(rng, n), niep::dft_matrix(n)) * q.adjoint();
        z = UnitVector::normalized(q.apply(UnitVector::basis(n, 1 + rng.index(n)).entries()));
        break;
      }
    }
    const bool tv = niep::is_trace_vector(a, z, 1e-8);
    EXPECT_EQ(niep::is_differentiator(a, z, 1e-8), tv) << "trial " << trial;
    positives += tv ? 1 : 0;
  }
  EXPECT_GT(positives, 150);
}
