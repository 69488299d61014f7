#include "fracgrowth/mittag_leffler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace fracgrowth {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
// ln(DBL_MAX), rounded down.
constexpr double kLnDblMax = 709.782712893384;
constexpr int kMaxSeriesTerms = 500;
constexpr int kMaxSeriesTermsNeg = 2000;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// 1/Gamma(y), finite for all real y, zero at the poles y = 0, -1, -2, ...
double rgamma(double y) {
  if (y > 0.0) return 1.0 / std::tgamma(y);
  if (y == std::nearbyint(y)) return 0.0;
  return std::tgamma(1.0 - y) * std::sin(kPi * y) / kPi;
}

struct CoreResult {
  MLEvalReport report;
  bool overflow = false;
};

// E_{alpha,beta}(x) with overflow reported instead of thrown, so the
// inversion can treat an overflowing probe as +inf while bracketing.
CoreResult ml_core(double alpha, double beta, double x) {
  CoreResult res;
  MLEvalReport& rep = res.report;

  if (alpha == 1.0 && beta == 1.0) {
    if (x > kLnDblMax) {
      res.overflow = true;
      return res;
    }
    rep.value = std::exp(x);
    rep.terms_used = 1;
    rep.branch = MLBranch::exact_exp;
    rep.est_abs_error = 4.0 * kEps * std::abs(rep.value);
    return res;
  }

  if (x == 0.0) {
    rep.value = 1.0 / std::tgamma(beta);
    rep.terms_used = 1;
    rep.branch = MLBranch::series;
    rep.est_abs_error = kEps * std::abs(rep.value);
    return res;
  }

  // Taylor series with log-space terms and compensated summation. Used for
  // all negative x and for positive x up to the branch switch point.
  const double x_switch = std::min(15.0, std::pow(35.0, alpha));
  if (x < 0.0 || x <= x_switch) {
    const int max_terms = x < 0.0 ? kMaxSeriesTermsNeg : kMaxSeriesTerms;
    const double ln_ax = std::log(std::abs(x));
    double s = 1.0 / std::tgamma(beta);
    double comp = 0.0;
    double term = s;
    int k = 1;
    bool converged = false;
    for (; k <= max_terms; ++k) {
      term = std::exp(k * ln_ax - std::lgamma(alpha * k + beta));
      if (x < 0.0 && (k & 1)) term = -term;
      const double y = term - comp;
      const double t = s + y;
      comp = (t - s) - y;
      s = t;
      if (std::abs(term) < 1e-16 * std::abs(s)) {
        converged = true;
        break;
      }
    }
    if (converged || x < 0.0) {
      rep.value = s;
      rep.terms_used = static_cast<std::size_t>(std::min(k, max_terms)) + 1;
      rep.branch = MLBranch::series;
      rep.est_abs_error = std::abs(term) + 4.0 * kEps * std::abs(s);
      return res;
    }
    // Term cap hit with x > 0: the asymptotic branch takes over.
  }

  // Exponential asymptotics for large positive x:
  //   E_{a,b}(x) ~ (1/a) u^{1-b} e^u - sum_{k>=1} x^{-k} / Gamma(b - a k),
  // u = x^{1/a}. The correction series is truncated at its smallest term.
  const double u = std::pow(x, 1.0 / alpha);
  const double lead_log =
      u + (1.0 - beta) * std::log(u) - std::log(alpha);
  if (lead_log > kLnDblMax) {
    res.overflow = true;
    return res;
  }
  double lead = std::pow(u, 1.0 - beta) * std::exp(u) / alpha;
  if (!std::isfinite(lead)) lead = std::exp(lead_log);

  double corr = 0.0;
  double prev = std::numeric_limits<double>::infinity();
  double last = 0.0;
  std::size_t used = 1;
  for (int k = 1; k < 200; ++k) {
    const double t = std::pow(x, -k) * rgamma(beta - alpha * k);
    if (std::abs(t) > prev && k > 3) break;  // divergent tail reached
    prev = std::abs(t);
    last = t;
    corr += t;
    ++used;
    if (std::abs(t) < 1e-17 * lead) break;
  }

  rep.value = lead - corr;
  rep.terms_used = used;
  rep.branch = MLBranch::asymptotic;
  rep.est_abs_error = std::abs(last) + 4.0 * kEps * lead;
  if (!std::isfinite(rep.value)) res.overflow = true;
  return res;
}

[[noreturn]] void throw_overflow(double alpha, double x) {
  throw std::overflow_error("mittag-leffler: E_" + std::to_string(alpha) +
                            "(" + std::to_string(x) +
                            ") exceeds double range");
}

void check_argument(double x) {
  if (!std::isfinite(x))
    throw std::domain_error("mittag-leffler: argument must be finite");
}

}  // namespace

FracOrder::FracOrder(double value) : value_(value) {
  if (!(value > 0.0) || !(value <= 1.0) || !std::isfinite(value))
    throw std::domain_error(
        "fractional order must lie in (0, 1], got " + std::to_string(value));
}

double ml_eval(FracOrder alpha, double x) {
  return ml_eval_report(alpha, x).value;
}

MLEvalReport ml_eval_report(FracOrder alpha, double x) {
  check_argument(x);
  CoreResult res = ml_core(alpha.value(), 1.0, x);
  if (res.overflow) throw_overflow(alpha.value(), x);
  return res.report;
}

double ml_eval2(FracOrder alpha, double beta, double x) {
  check_argument(x);
  if (!std::isfinite(beta) || beta <= 0.0)
    throw std::domain_error("mittag-leffler: beta must be positive");
  CoreResult res = ml_core(alpha.value(), beta, x);
  if (res.overflow) throw_overflow(alpha.value(), x);
  return res.report.value;
}

double ml_derivative(FracOrder alpha, double x) {
  check_argument(x);
  const double a = alpha.value();
  CoreResult res = ml_core(a, a, x);
  if (res.overflow) throw_overflow(a, x);
  const double d = res.report.value / a;
  if (!std::isfinite(d)) throw_overflow(a, x);
  return d;
}

double ml_inverse(FracOrder alpha, double y) {
  if (!std::isfinite(y))
    throw std::domain_error("ml_inverse: y must be finite");
  if (y < 1.0)
    throw std::domain_error(
        "ml_inverse: y is below the growth branch (need y >= 1)");
  if (y == 1.0) return 0.0;

  const double a = alpha.value();
  if (a == 1.0) return std::log(y);

  const double inf = std::numeric_limits<double>::infinity();
  // Overflowing probes act as +inf; E_alpha is increasing, so the bracket
  // logic stays valid right up to the representable range.
  auto eval = [a, inf](double x) {
    CoreResult res = ml_core(a, 1.0, x);
    return res.overflow ? inf : res.report.value;
  };
  auto slope = [a](double x) {
    CoreResult res = ml_core(a, a, x);
    if (res.overflow) return std::numeric_limits<double>::quiet_NaN();
    return res.report.value / a;
  };

  double lo = 0.0;
  double hi = 1.0;
  double f_hi = eval(hi);
  while (f_hi < y) {
    lo = hi;
    hi *= 2.0;
    f_hi = eval(hi);
  }

  // Newton from a crude seed, bisection whenever a step misbehaves.
  double x = 0.5 * (lo + hi);
  const double seed = std::pow(std::log(y), a);
  if (seed > lo && seed < hi) x = seed;

  for (int it = 0; it < 200; ++it) {
    const double fx = eval(x);
    const double r = fx - y;
    if (std::isfinite(fx) && std::abs(r) <= 1e-12 * y) return x;
    if (r > 0.0)
      hi = x;
    else
      lo = x;
    if (hi - lo <= 1e-14 * std::max(1.0, hi)) break;
    double next = std::numeric_limits<double>::quiet_NaN();
    if (std::isfinite(fx)) {
      const double d = slope(x);
      if (std::isfinite(d) && d > 0.0) next = x - r / d;
    }
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    x = next;
  }
  return 0.5 * (lo + hi);
}

}  // namespace fracgrowth
