#pragma once

#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

namespace niep {

using Complex = std::complex<double>;

inline constexpr double kEps = std::numeric_limits<double>::epsilon();

/// Thrown when an operation's precondition on its input is violated
/// (empty list, wrong order, non-self-conjugate list, bad index, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown when an iterative numerical method fails to reach its target.
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, double best_residual)
      : std::runtime_error(what), best_residual_(best_residual) {}

  double best_residual() const noexcept { return best_residual_; }

 private:
  double best_residual_;
};

/// Malformed textual input; `token` is the offending fragment.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::string token)
      : std::invalid_argument(what), token_(std::move(token)) {}

  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

}  // namespace niep
