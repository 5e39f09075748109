#pragma once

// Verification pipeline for the critical points of a list: condition
// battery, every sufficient construction in turn, seeded sampling of
// realizable spectra, and the counterexample hunt built on top of them.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "niep/core.hpp"
#include "niep/matrix.hpp"
#include "niep/moments.hpp"
#include "niep/polynomial.hpp"
#include "niep/random.hpp"
#include "niep/realizers.hpp"
#include "niep/spectrum.hpp"

namespace niep {

enum class Ensemble { dense_uniform, sparse_bernoulli, row_stochastic, circulant_nonnegative, suleimanova };

inline std::string_view to_string(Ensemble e) {
  switch (e) {
    case Ensemble::dense_uniform: return "dense-uniform";
    case Ensemble::sparse_bernoulli: return "sparse-bernoulli";
    case Ensemble::row_stochastic: return "row-stochastic";
    case Ensemble::circulant_nonnegative: return "circulant-nonnegative";
    case Ensemble::suleimanova: return "suleimanova";
  }
  return "dense-uniform";
}

inline Ensemble parse_ensemble(std::string_view name) {
  for (auto e : {Ensemble::dense_uniform, Ensemble::sparse_bernoulli, Ensemble::row_stochastic,
                 Ensemble::circulant_nonnegative, Ensemble::suleimanova}) {
    if (to_string(e) == name) return e;
  }
  throw DomainError("unknown ensemble '" + std::string(name) + "'");
}

struct RealizableSample {
  SpectrumList spectrum;
  DenseMatrix matrix;  // entrywise nonnegative, spectrum as above
};

/// A nonnegative matrix drawn from `ensemble` and its spectrum; the pair
/// certifies that the returned list is realizable.
inline RealizableSample random_realizable(std::size_t n, std::uint64_t seed, Ensemble ensemble) {
  if (n < 2) throw DomainError("random_realizable needs n >= 2");
  Rng rng(seed);
  DenseMatrix a(n);
  switch (ensemble) {
    case Ensemble::dense_uniform:
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) a(r, c) = Complex{rng.uniform()};
      return {spectrum(a), a};
    case Ensemble::sparse_bernoulli:
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) a(r, c) = Complex{rng.bernoulli(0.35) ? rng.uniform(0.05, 1.0) : 0.0};
      return {spectrum(a), a};
    case Ensemble::row_stochastic:
      for (std::size_t r = 0; r < n; ++r) {
        double total = 0.0;
        for (std::size_t c = 0; c < n; ++c) {
          const double x = rng.uniform(0.01, 1.0);
          a(r, c) = Complex{x};
          total += x;
        }
        for (std::size_t c = 0; c < n; ++c) a(r, c) /= total;
      }
      return {spectrum(a), a};
    case Ensemble::circulant_nonnegative: {
      std::vector<Complex> row(n);
      for (auto& x : row) x = Complex{rng.uniform()};
      return {circulant_eigenvalues(row), circulant(row)};
    }
    case Ensemble::suleimanova: {
      // One positive entry, negatives summing to a fraction of it; C(p) >= 0.
      const double top = rng.uniform(0.5, 3.0);
      const double budget = top * rng.uniform(0.05, 1.0);
      std::vector<double> w(n - 1);
      double total = 0.0;
      for (auto& x : w) total += (x = rng.uniform(0.05, 1.0));
      std::vector<Complex> list{Complex{top}};
      for (double x : w) list.push_back(Complex{-budget * x / total});
      SpectrumList s(std::move(list));
      return {s, companion(from_roots(s))};
    }
  }
  throw DomainError("unknown ensemble");
}

struct VerifyConfig {
  ConditionOptions conditions;       // moment_depth 0 selects 4 |L'|
  double tol = 1e-9;                 // realness and sign tolerance, scaled by 1 + max|entry|
  double certificate_tol = 1e-7;     // spectrum residual, scaled by 1 + rho(L')
  std::optional<DenseMatrix> hadamard;
  bool stop_at_first = false;
};

struct RouteRecord {
  std::string name;
  bool attempted = false;
  bool succeeded = false;
  std::optional<DenseMatrix> certificate;
  std::string detail;  // construction used, or why it failed
  double residual = std::numeric_limits<double>::quiet_NaN();              // spectrum vs L'
  double coefficient_residual = std::numeric_limits<double>::quiet_NaN();  // charpoly vs prod (t - mu)
};

namespace detail {
inline RouteRecord make_route(std::string name, bool attempted, std::string detail = {}) {
  RouteRecord r;
  r.name = std::move(name);
  r.attempted = attempted;
  r.detail = std::move(detail);
  return r;
}
}  // namespace detail

enum class Verdict { certified, conditions_hold_uncertified, condition_violation };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::certified: return "certified";
    case Verdict::conditions_hold_uncertified: return "conditions-hold-uncertified";
    case Verdict::condition_violation: return "condition-violation";
  }
  return "condition-violation";
}

struct RealizabilityReport {
  SpectrumList input;
  SpectrumList critical;
  ConditionReport conditions;  // on the critical points
  Classification input_class;
  std::optional<Classification> critical_class;  // absent when |L'| = 1
  std::vector<RouteRecord> routes;
  Verdict verdict = Verdict::conditions_hold_uncertified;
};

namespace detail {

// max_k |a_k - b_k| / (C(m, k) (1 + rho)^k) over the coefficients of t^(m-k).
inline double coefficient_distance(const MonicPolynomial& a, const MonicPolynomial& b, double rho) {
  if (a.degree() != b.degree()) return std::numeric_limits<double>::infinity();
  const std::size_t m = a.degree();
  double worst = 0.0;
  double binom = 1.0;
  double growth = 1.0;
  for (std::size_t k = 1; k <= m; ++k) {
    binom = binom * static_cast<double>(m - k + 1) / static_cast<double>(k);
    growth *= 1.0 + rho;
    worst = std::max(worst, std::abs(a.coeff(m - k) - b.coeff(m - k)) / (binom * growth));
  }
  return worst;
}

// Shared tail of every route: sign check, then spectrum residual against L'.
inline void certify(RouteRecord& route, const DenseMatrix& m, const SpectrumList& critical,
                    const VerifyConfig& cfg) {
  const double sign_tol = cfg.tol * (1.0 + m.max_abs());
  if (m.max_abs_imag() > sign_tol) {
    route.detail += "; matrix is not real";
    return;
  }
  const DenseMatrix real = m.real_part();
  const SignClass sign = matrix_sign_class(real, sign_tol);
  if (sign != SignClass::nonnegative) {
    route.detail += sign == SignClass::metzler ? "; Metzler but not nonnegative" : "; has a negative off-diagonal entry";
    return;
  }
  const MonicPolynomial cp = charpoly(real);
  route.residual = matching_distance(roots(cp), critical);
  route.coefficient_residual = coefficient_distance(cp, from_roots(critical), critical.max_modulus());
  // The coefficient test covers repeated critical points, whose computed
  // roots are only accurate to about eps^(1/multiplicity).
  route.succeeded = route.residual <= cfg.certificate_tol * (1.0 + critical.max_modulus()) ||
                    route.coefficient_residual <= cfg.certificate_tol;
  if (!route.succeeded) route.detail += "; spectrum residual above tolerance";
  route.certificate = real;
}

inline RouteRecord companion_route(const SpectrumList& list, const SpectrumList& critical,
                                   const VerifyConfig& cfg) {
  RouteRecord r = make_route("companion", true);
  r.detail = "C(p'/n)";
  certify(r, companion(derivative_monic(from_roots(list))), critical, cfg);
  return r;
}

inline RouteRecord d_companion_route(const SpectrumList& list, const SpectrumList& critical,
                                     const VerifyConfig& cfg) {
  RouteRecord r = make_route("d-companion", true);
  const double t = cfg.tol * (1.0 + list.max_modulus());
  if (list.is_real(t)) {
    std::vector<Complex> reals;
    for (const auto& z : list) reals.emplace_back(z.real(), 0.0);
    const SpectrumList real_list(std::move(reals));
    const std::size_t pivot = default_pivot(real_list);
    r.detail = "d-companion, pivot " + std::to_string(pivot);
    certify(r, d_companion(real_list, pivot), critical, cfg);
    return r;
  }
  try {
    const DenseMatrix m = real_d_companion(list, cfg.tol);
    r.detail = "real d-companion";
    certify(r, m, critical, cfg);
  } catch (const DomainError& e) {
    r.detail = std::string("no real d-companion: ") + e.what();
  }
  return r;
}

inline void similarity_attempt(RouteRecord& r, const SpectrumList& arranged, const DenseMatrix& h,
                               const SpectrumList& critical, const VerifyConfig& cfg) {
  const DenseMatrix a = hadamard_similarity(arranged, h);
  certify(r, principal_submatrix(a, 1), critical, cfg);
  if (r.succeeded) {
    // The certificate is A_(1); A itself must be nonnegative too.
    const double sign_tol = cfg.tol * (1.0 + a.max_abs());
    if (a.max_abs_imag() > sign_tol || matrix_sign_class(a.real_part(), sign_tol) != SignClass::nonnegative) {
      r.succeeded = false;
      r.certificate.reset();
      r.detail += "; full similarity is not nonnegative";
    }
  }
}

inline RouteRecord dft_route(const SpectrumList& list, const SpectrumList& critical, const VerifyConfig& cfg) {
  RouteRecord r = make_route("dft", true);
  const DenseMatrix f = dft_matrix(list.size());
  const SpectrumList arrangements[] = {conjugate_symmetric_arrangement(list, cfg.tol), list};
  const char* labels[] = {"conjugate-symmetric diagonal", "input-order diagonal"};
  std::string failures;
  for (std::size_t i = 0; i < 2; ++i) {
    RouteRecord attempt = make_route(r.name, true, labels[i]);
    similarity_attempt(attempt, arrangements[i], f, critical, cfg);
    if (attempt.succeeded) {
      attempt.detail += ", certificate A_(1)";
      return attempt;
    }
    failures += (failures.empty() ? "" : " | ") + attempt.detail;
  }
  r.detail = failures;
  return r;
}

inline RouteRecord hadamard_route(const SpectrumList& list, const SpectrumList& critical,
                                  const VerifyConfig& cfg) {
  RouteRecord r = make_route("hadamard", false);
  if (!cfg.hadamard) {
    r.detail = "no Hadamard matrix supplied";
    return r;
  }
  r.attempted = true;
  if (cfg.hadamard->order() != list.size()) {
    r.detail = "Hadamard order does not match list size";
    return r;
  }
  if (auto bad = hadamard_violation(*cfg.hadamard)) {
    r.detail = "not a complex Hadamard matrix: " + *bad;
    return r;
  }
  r.detail = "user Hadamard, input-order diagonal";
  similarity_attempt(r, list, *cfg.hadamard, critical, cfg);
  if (r.succeeded) r.detail += ", certificate A_(1)";
  return r;
}

}  // namespace detail

/// Computes L', checks the necessary conditions on it, and attempts each
/// sufficient construction: companion, d-companion, DFT similarity, and a
/// user-supplied Hadamard similarity.
inline RealizabilityReport verify_critical_realizability(const SpectrumList& list, const VerifyConfig& cfg = {}) {
  if (list.size() < 2) throw DomainError("verification needs at least two entries");
  RealizabilityReport rep;
  rep.input = list;
  rep.critical = critical_points(list);
  rep.conditions = check_necessary_conditions(rep.critical, cfg.conditions);
  rep.input_class = classify(list, cfg.tol);
  if (rep.critical.size() >= 2) rep.critical_class = classify(rep.critical, cfg.tol);

  using RouteFn = RouteRecord (*)(const SpectrumList&, const SpectrumList&, const VerifyConfig&);
  const std::pair<const char*, RouteFn> routes[] = {
      {"companion", detail::companion_route},
      {"d-companion", detail::d_companion_route},
      {"dft", detail::dft_route},
      {"hadamard", detail::hadamard_route},
  };
  bool any = false;
  for (const auto& [name, fn] : routes) {
    if (any && cfg.stop_at_first) {
      rep.routes.push_back(detail::make_route(name, false, "skipped after earlier certificate"));
      continue;
    }
    rep.routes.push_back(fn(list, rep.critical, cfg));
    any = any || rep.routes.back().succeeded;
  }

  if (!rep.conditions.overall) {
    rep.verdict = Verdict::condition_violation;
  } else {
    rep.verdict = any ? Verdict::certified : Verdict::conditions_hold_uncertified;
  }
  return rep;
}

/// Relative disagreement between the moment formula and direct power sums
/// of the computed critical points, measured against sum |mu|^k.
inline double monov_crosscheck_error(const SpectrumList& list, const SpectrumList& critical, std::size_t max_k) {
  const auto direct = power_sums(critical, max_k);
  std::vector<Complex> moduli;
  for (const auto& z : critical) moduli.emplace_back(std::abs(z), 0.0);
  const auto scale = power_sums(SpectrumList(std::move(moduli)), max_k);
  double worst = 0.0;
  for (std::size_t k = 1; k <= max_k; ++k) {
    const Complex formula = critical_moment(list, k);
    const double denom = std::max({std::abs(direct[k - 1]), scale[k - 1].real(), 1e-300});
    worst = std::max(worst, std::abs(formula - direct[k - 1]) / denom);
  }
  return worst;
}

/// Whether a condition violation on L' survives independent re-derivation:
/// moment and J-LL failures must also fail when s_k(L') comes from the
/// moment formula on L; self-conjugacy and spectral-radius failures must
/// exceed 100 times the tolerance.
inline bool alarm_confirmed(const RealizabilityReport& rep, const ConditionOptions& opts) {
  const auto& c = rep.conditions;
  const double scale = 1.0 + c.spectral_radius;
  const double tol = c.tol;
  if (!c.self_conjugate && c.pairing_residual > 100.0 * tol * scale) return true;
  if (!c.spectral_radius_in_list && c.radius_margin > 100.0 * tol * scale) return true;

  const double n = static_cast<double>(rep.critical.size());
  auto formula_scaled = [&](std::size_t k) {
    return critical_moment(rep.input, k) / std::pow(scale, static_cast<double>(k));
  };
  for (const auto& m : c.moment_checks) {
    if (m.pass) continue;
    const Complex s = formula_scaled(m.k);
    if (s.real() < -tol || std::abs(s.imag()) > tol) return true;
  }
  for (const auto& j : c.jll_checks) {
    if (j.pass) continue;
    const double md = static_cast<double>(j.m);
    const double lhs = std::pow(formula_scaled(j.k).real(), md) / std::pow(n, md - 1.0);
    const double rhs = formula_scaled(j.k * j.m).real();
    if (!(lhs <= rhs + tol)) return true;
  }
  (void)opts;
  return false;
}

struct HuntConfig {
  std::size_t n_min = 3;
  std::size_t n_max = 3;
  std::size_t samples = 1000;
  std::uint64_t seed = 42;
  Ensemble ensemble = Ensemble::dense_uniform;
  ConditionOptions conditions;
  double tol = 1e-9;
  std::size_t workers = 1;
};

struct HuntReport {
  std::uint64_t seed = 0;
  Ensemble ensemble = Ensemble::dense_uniform;
  std::size_t n_min = 0;
  std::size_t n_max = 0;
  std::size_t samples = 0;
  std::size_t certified = 0;
  std::size_t uncertified = 0;
  std::vector<RealizabilityReport> alarms;
  std::size_t unconfirmed_alarms = 0;  // violations that did not survive re-derivation
  std::size_t numeric_failures = 0;    // counted as uncertified
  std::vector<std::pair<std::string, std::size_t>> route_successes;
  double monov_max_error = 0.0;
  std::size_t monov_failures = 0;  // samples with cross-check error above 1e-6
  double wall_clock_seconds = 0.0;
};

namespace detail {

struct SampleOutcome {
  std::optional<RealizabilityReport> report;
  bool confirmed_alarm = false;
  bool unconfirmed_alarm = false;
  bool numeric_failure = false;
  double monov_error = 0.0;
};

inline SampleOutcome run_sample(const HuntConfig& cfg, std::size_t index) {
  SampleOutcome out;
  const std::uint64_t sub = derive_seed(cfg.seed, index);
  Rng pick(sub);
  const std::size_t n = cfg.n_min + pick.index(cfg.n_max - cfg.n_min + 1);
  VerifyConfig vc;
  vc.conditions = cfg.conditions;
  vc.conditions.tol = cfg.tol;
  vc.tol = cfg.tol;
  vc.stop_at_first = true;
  try {
    const auto sample = random_realizable(n, derive_seed(sub, 1), cfg.ensemble);
    auto rep = verify_critical_realizability(sample.spectrum, vc);
    const std::size_t depth = rep.conditions.moment_depth;
    out.monov_error = monov_crosscheck_error(rep.input, rep.critical, depth);
    if (rep.verdict == Verdict::condition_violation) {
      if (alarm_confirmed(rep, vc.conditions)) {
        out.confirmed_alarm = true;
      } else {
        out.unconfirmed_alarm = true;
      }
    }
    out.report = std::move(rep);
  } catch (const NumericError&) {
    out.numeric_failure = true;
  }
  return out;
}

}  // namespace detail

/// Seeded counterexample hunt. Sample i depends only on (seed, i), so the
/// report is identical for any worker count.
inline HuntReport hunt(const HuntConfig& cfg) {
  if (cfg.samples == 0) throw DomainError("hunt needs samples >= 1");
  if (cfg.n_min < 2 || cfg.n_max < cfg.n_min) throw DomainError("hunt needs 2 <= n_min <= n_max");
  const auto start = std::chrono::steady_clock::now();

  std::vector<detail::SampleOutcome> outcomes(cfg.samples);
  const std::size_t workers = std::clamp<std::size_t>(cfg.workers, 1, cfg.samples);
  if (workers == 1) {
    for (std::size_t i = 0; i < cfg.samples; ++i) outcomes[i] = detail::run_sample(cfg, i);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < cfg.samples; i += workers) outcomes[i] = detail::run_sample(cfg, i);
      });
    }
  }

  HuntReport rep;
  rep.seed = cfg.seed;
  rep.ensemble = cfg.ensemble;
  rep.n_min = cfg.n_min;
  rep.n_max = cfg.n_max;
  rep.samples = cfg.samples;
  const char* route_names[] = {"companion", "d-companion", "dft", "hadamard"};
  for (const char* name : route_names) rep.route_successes.emplace_back(name, 0);

  for (auto& o : outcomes) {
    if (o.numeric_failure) {
      ++rep.numeric_failures;
      ++rep.uncertified;
      continue;
    }
    rep.monov_max_error = std::max(rep.monov_max_error, o.monov_error);
    if (o.monov_error > 1e-6) ++rep.monov_failures;
    const auto& r = *o.report;
    bool any = false;
    for (std::size_t i = 0; i < r.routes.size(); ++i) {
      if (r.routes[i].succeeded) {
        ++rep.route_successes[i].second;
        any = true;
      }
    }
    if (o.confirmed_alarm) {
      rep.alarms.push_back(std::move(*o.report));
      continue;
    }
    if (o.unconfirmed_alarm) ++rep.unconfirmed_alarms;
    if (any) {
      ++rep.certified;
    } else {
      ++rep.uncertified;
    }
  }
  rep.wall_clock_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

struct ChainStep {
  double constant = 0.0;
  MonicPolynomial polynomial = MonicPolynomial::monomial(1);
  bool companion_nonnegative = false;
  SpectrumList roots;
};

struct ChainReport {
  MonicPolynomial start = MonicPolynomial::monomial(1);
  std::vector<ChainStep> steps;
  bool all_nonnegative = true;
};

/// Repeated (n+1)P antiderivatives. Requires C(p) >= 0; each step stays
/// companion-nonnegative exactly when every constant so far is <= 0.
inline ChainReport antiderivative_chain(const MonicPolynomial& p, const std::vector<double>& constants,
                                        double tol = 1e-9) {
  auto nonnegative = [tol](const MonicPolynomial& q) {
    const DenseMatrix c = companion(q);
    return matrix_sign_class(c, tol * (1.0 + c.max_abs())) == SignClass::nonnegative;
  };
  if (!nonnegative(p)) throw DomainError("antiderivative chain needs a nonnegative companion matrix");
  ChainReport rep;
  rep.start = p;
  MonicPolynomial current = p;
  for (double c : constants) {
    current = antiderivative_monic(current, c);
    ChainStep step;
    step.constant = c;
    step.polynomial = current;
    step.companion_nonnegative = nonnegative(current);
    step.roots = roots(current);
    rep.all_nonnegative = rep.all_nonnegative && step.companion_nonnegative;
    rep.steps.push_back(std::move(step));
  }
  return rep;
}

}  // namespace niep
