#pragma once

#include <cstddef>

namespace fracgrowth {

// Fractional derivative order, restricted to the memory regime (0, 1].
class FracOrder {
 public:
  explicit FracOrder(double value);
  double value() const noexcept { return value_; }

 private:
  double value_;
};

enum class MLBranch { series, asymptotic, exact_exp };

// Diagnostics for a single Mittag-Leffler evaluation.
struct MLEvalReport {
  double value = 0.0;
  std::size_t terms_used = 1;
  MLBranch branch = MLBranch::series;
  double est_abs_error = 0.0;
};

// One-parameter Mittag-Leffler function E_alpha(x).
// Relative error <= 1e-10 for x >= 0 (validated down to alpha = 0.1; below
// that the fixed series cap can force an early switch to the asymptotic
// branch near the crossover and accuracy degrades). Negative x is evaluated
// by the series alone, best effort. Throws std::domain_error for non-finite
// x and std::overflow_error when the value exceeds double range.
double ml_eval(FracOrder alpha, double x);

// Same evaluation, with branch and term-count diagnostics.
MLEvalReport ml_eval_report(FracOrder alpha, double x);

// Two-parameter variant E_{alpha,beta}(x) = sum_k x^k / Gamma(alpha k + beta),
// beta > 0.
double ml_eval2(FracOrder alpha, double beta, double x);

// d/dx E_alpha(x) = E_{alpha,alpha}(x) / alpha; strictly positive for x >= 0.
double ml_derivative(FracOrder alpha, double x);

// Inverse of E_alpha on the growth branch: the unique x >= 0 with
// E_alpha(x) = y, for y >= 1. Bracketing by doubling plus safeguarded Newton;
// residual |E_alpha(x) - y| / y <= 1e-10.
double ml_inverse(FracOrder alpha, double y);

}  // namespace fracgrowth
