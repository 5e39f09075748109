#include <gtest/gtest.h>

#include "oracles.hpp"

using niep::Complex;
using niep::SpectrumList;

namespace {

SpectrumList real(std::initializer_list<double> xs) {
  std::vector<double> v(xs);
  return SpectrumList::from_real(v);
}

double moment_scale(const SpectrumList& list, std::size_t k) {
  double s = 0.0;
  for (const auto& z : list) s += std::pow(std::abs(z), static_cast<double>(k));
  return std::max(s, 1e-300);
}

}  // namespace

TEST(PowerSums, Examples) {
  const auto s = niep::power_sums(real({3, -1, -1}), 2);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0], Complex{1.0});
  EXPECT_EQ(s[1], Complex{11.0});
  for (const auto& v : niep::power_sums(real({0, 0, 0, 0}), 7)) EXPECT_EQ(v, Complex{});
  EXPECT_NEAR(std::abs(niep::power_sums(real({1, 1, -2.0 / 3, -2.0 / 3, -2.0 / 3}), 1)[0]), 0.0, 1e-15);
}

TEST(PowerSums, MatchDirectPowers) {
  niep::Rng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const auto list = oracle::complex_list(rng, 1 + rng.index(8));
    const auto s = niep::power_sums(list, 12);
    for (std::size_t k = 1; k <= 12; ++k) {
      EXPECT_LE(std::abs(s[k - 1] - oracle::power_sum(list, k)), 1e-12 * moment_scale(list, k));
    }
  }
}

TEST(MonovDet, Examples) {
  EXPECT_NEAR(std::abs(niep::monov_det(real({3, -1, -1}), 1) - 1.0), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(niep::monov_det(real({3, -1, -1}), 2) - (-65.0)), 0.0, 1e-12);
  for (std::size_t k = 1; k <= 6; ++k) EXPECT_EQ(niep::monov_det(real({0, 0, 0}), k), Complex{});
}

TEST(CriticalMoment, Examples) {
  EXPECT_NEAR(std::abs(niep::critical_moment(real({3, -1, -1}), 1) - 2.0 / 3), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(niep::critical_moment(real({3, -1, -1}), 2) - 34.0 / 9), 0.0, 1e-13);
}

TEST(CriticalMoment, ClosedFormsForFirstTwoMoments) {
  niep::Rng rng(22);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + rng.index(9);
    const double nd = static_cast<double>(n);
    const auto list = oracle::complex_list(rng, n);
    const Complex s1 = oracle::power_sum(list, 1);
    const Complex s2 = oracle::power_sum(list, 2);
    EXPECT_LE(std::abs(niep::critical_moment(list, 1) - (nd - 1) / nd * s1), 1e-12 * (1 + moment_scale(list, 1)));
    EXPECT_LE(std::abs(niep::critical_moment(list, 2) - ((nd - 2) / nd * s2 + s1 * s1 / (nd * nd))),
              1e-12 * (1 + moment_scale(list, 2)));
  }
}

TEST(CriticalMomentProperty, AgreesWithRootFinderOracle) {
  niep::Rng rng(23);
  for (int trial = 0; trial < 400; ++trial) {
    const auto list = oracle::self_conjugate(rng, 2 + rng.index(7));
    const auto crit = oracle::critical_points(list.entries());
    for (std::size_t k = 1; k <= 10; ++k) {
      const Complex direct = oracle::power_sum(crit, k);
      // Relative to the critical-point moments, with a rounding floor set by the list's own moments.
      EXPECT_LE(std::abs(niep::critical_moment(list, k) - direct), 1e-7 * moment_scale(crit, k) + 1e-14 * moment_scale(list, k))
          << "k=" << k;
    }
  }
}

TEST(CheckNecessaryConditions, Examples) {
  const auto ok = niep::check_necessary_conditions(real({3, -1, -1}));
  EXPECT_TRUE(ok.overall);
  EXPECT_EQ(ok.moment_depth, 12u);
  EXPECT_EQ(ok.jll_depth, 8u);

  const auto bad = niep::check_necessary_conditions(SpectrumList{Complex{1}, Complex{0, 1}});
  EXPECT_FALSE(bad.self_conjugate);
  EXPECT_FALSE(bad.overall);

  niep::ConditionOptions deep;
  deep.moment_depth = 20;
  deep.jll_depth = 8;
  const auto golden = niep::check_necessary_conditions(real({1, 1, -2.0 / 3, -2.0 / 3, -2.0 / 3}), deep);
  EXPECT_TRUE(golden.self_conjugate);
  EXPECT_TRUE(golden.spectral_radius_in_list);
  EXPECT_EQ(golden.moment_checks.size(), 20u);
  EXPECT_EQ(golden.jll_checks.size(), 64u);
  EXPECT_TRUE(golden.overall);
}

TEST(CheckNecessaryConditions, DetectsEachFailure) {
  // No element has the spectral radius.
  EXPECT_FALSE(niep::check_necessary_conditions(real({-2, 1})).spectral_radius_in_list);
  // Negative trace.
  const auto r = niep::check_necessary_conditions(real({2, -1.5, -1.5}));
  EXPECT_TRUE(r.spectral_radius_in_list);
  EXPECT_FALSE(r.moment_checks[0].pass);
  EXPECT_FALSE(r.overall);
  // s_2 = -1.5 < 0, so both the moment and the J-LL checks fail.
  const auto jll = niep::check_necessary_conditions(SpectrumList{Complex{3}, Complex{1, 2.5}, Complex{1, -2.5}});
  bool any_jll_fail = false;
  for (const auto& c : jll.jll_checks) any_jll_fail = any_jll_fail || !c.pass;
  EXPECT_TRUE(jll.spectral_radius_in_list);
  EXPECT_FALSE(jll.moment_checks[1].pass);
  EXPECT_TRUE(any_jll_fail);
}

TEST(CheckNecessaryConditionsProperty, OverallIsConjunction) {
  niep::Rng rng(24);
  for (int trial = 0; trial < 300; ++trial) {
    const auto list = trial % 3 == 0 ? oracle::complex_list(rng, 2 + rng.index(6))
                                     : oracle::self_conjugate(rng, 2 + rng.index(6));
    const auto r = niep::check_necessary_conditions(list);
    bool all = r.self_conjugate && r.spectral_radius_in_list;
    for (const auto& m : r.moment_checks) all = all && m.pass;
    for (const auto& c : r.jll_checks) all = all && c.pass;
    EXPECT_EQ(r.overall, all);
    if (r.self_conjugate) {
      for (const auto& m : r.moment_checks) {
        EXPECT_LE(std::abs(m.value.imag()), r.tol * std::pow(1 + r.spectral_radius, static_cast<double>(m.k)));
      }
    }
  }
}

TEST(CheckNecessaryConditionsProperty, RealizableSpectraPass) {
  niep::Rng rng(25);
  for (int trial = 0; trial < 200; ++trial) {
    const auto sample = niep::random_realizable(2 + rng.index(6), rng.index(1u << 30), niep::Ensemble::dense_uniform);
    EXPECT_TRUE(niep::check_necessary_conditions(sample.spectrum).overall);
  }
}

TEST(CheckNecessaryConditionsProperty, JllImpliesMomentLowerBound) {
  niep::Rng rng(26);
  for (int trial = 0; trial < 300; ++trial) {
    const auto list = oracle::self_conjugate(rng, 2 + rng.index(6));
    const auto r = niep::check_necessary_conditions(list);
    const Complex s1 = oracle::power_sum(list, 1);
    bool jll_ok = true;
    for (const auto& c : r.jll_checks) jll_ok = jll_ok && c.pass;
    if (s1.real() < 0 || !jll_ok) continue;
    const double n = static_cast<double>(list.size());
    for (std::size_t k = 1; k <= r.jll_depth; ++k) {
      const double sk = oracle::power_sum(list, k).real();
      const double bound = std::pow(s1.real(), static_cast<double>(k)) / std::pow(n, static_cast<double>(k) - 1);
      EXPECT_GE(sk, bound - 1e-9 * std::pow(1 + list.max_modulus(), static_cast<double>(k)) * n);
    }
  }
}

TEST(CheckNecessaryConditions, DeepChecksStayFinite) {
  niep::ConditionOptions opts;
  opts.moment_depth = 200;
  opts.jll_depth = 20;
  const auto r = niep::check_necessary_conditions(real({50, -20, -20, 10}), opts);
  EXPECT_TRUE(r.overall);
}

TEST(JllPairEquivalence, Examples) {
  EXPECT_EQ(niep::jll_pair_equivalence(real({3, -1, -1})), std::make_pair(true, true));
  EXPECT_EQ(niep::jll_pair_equivalence(real({1, 1})), std::make_pair(true, true));
  EXPECT_EQ(niep::jll_pair_equivalence(real({5, -1, -1, -1})), std::make_pair(true, true));
}

TEST(JllPairEquivalence, ConcordantForSelfConjugateListsAboveTwo) {
  niep::Rng rng(27);
  for (int trial = 0; trial < 500; ++trial) {
    const auto list = oracle::self_conjugate(rng, 3 + rng.index(6));
    const auto [lhs, rhs] = niep::jll_pair_equivalence(list);
    EXPECT_EQ(lhs, rhs);
  }
}

// With n = 2 the derived inequality always holds on the single critical
// point, while s_1^2 <= 2 s_2 fails for a conjugate pair on the imaginary axis.
TEST(JllPairEquivalence, PairOfConjugatesAtOrderTwoIsDiscordant) {
  const auto [lhs, rhs] = niep::jll_pair_equivalence(SpectrumList{Complex{0, 1}, Complex{0, -1}});
  EXPECT_FALSE(lhs);
  EXPECT_TRUE(rhs);
}
