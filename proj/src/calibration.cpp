#include "fracgrowth/calibration.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace fracgrowth {

namespace {

constexpr int kGridNodes = 25;
constexpr double kSimplexTol = 1e-6;
constexpr int kMaxSimplexIter = 500;

double pow_t(double t, double a) { return t == 0.0 ? 0.0 : std::pow(t, a); }

void check_bounds(const Bounds& b, bool is_alpha, const char* name) {
  if (!std::isfinite(b.lo) || !std::isfinite(b.hi) || !(b.lo < b.hi))
    throw std::domain_error(std::string(name) + " bounds are empty");
  if (!(b.lo > 0.0))
    throw std::domain_error(std::string(name) + " bounds must be positive");
  if (is_alpha && b.hi > 1.0)
    throw std::domain_error(std::string(name) + " bounds must stay within (0, 1]");
}

struct Objective {
  const std::vector<double>& t;
  const std::vector<double>& v;
  double x0;
  Bounds ab;
  Bounds bb;
  std::size_t n_evals = 0;

  // Sum of squared relative residuals; +inf outside the box or when the
  // model overflows at a sample point.
  double operator()(double alpha, double b) {
    ++n_evals;
    const double inf = std::numeric_limits<double>::infinity();
    if (!(alpha >= ab.lo && alpha <= ab.hi && b >= bb.lo && b <= bb.hi))
      return inf;
    double sse = 0.0;
    try {
      const FracOrder a(alpha);
      for (std::size_t j = 0; j < t.size(); ++j) {
        const double model = x0 * ml_eval(a, b * pow_t(t[j], alpha));
        const double r = (model - v[j]) / v[j];
        sse += r * r;
      }
    } catch (const std::overflow_error&) {
      return inf;
    }
    return sse;
  }
};

}  // namespace

FitResult fit_factor(const Trajectory& series, Bounds alpha_bounds,
                     Bounds b_bounds) {
  check_bounds(alpha_bounds, true, "fit: alpha");
  check_bounds(b_bounds, false, "fit: b");
  if (series.grid.t0() != 0.0)
    throw std::domain_error("fit: series must start at t = 0");
  if (series.values.size() < 5)
    throw std::domain_error("fit: series needs at least 5 points");
  for (double v : series.values)
    if (!(v > 0.0))
      throw std::domain_error("fit: observations must be strictly positive");

  const std::vector<double>& t = series.grid.points();
  const double x0 = series.values.front();
  Objective obj{t, series.values, x0, alpha_bounds, b_bounds, 0};

  const double a_span = alpha_bounds.hi - alpha_bounds.lo;
  const double b_span = b_bounds.hi - b_bounds.lo;
  auto to_alpha = [&](double u) { return alpha_bounds.lo + u * a_span; };
  auto to_b = [&](double u) { return b_bounds.lo + u * b_span; };
  auto eval_scaled = [&](const std::array<double, 2>& p) {
    if (p[0] < 0.0 || p[0] > 1.0 || p[1] < 0.0 || p[1] > 1.0) {
      ++obj.n_evals;
      return std::numeric_limits<double>::infinity();
    }
    return obj(to_alpha(p[0]), to_b(p[1]));
  };

  // Coarse scan over the closed box, endpoints included.
  double best = std::numeric_limits<double>::infinity();
  std::array<double, 2> best_p{0.0, 0.0};
  for (int i = 0; i < kGridNodes; ++i) {
    for (int j = 0; j < kGridNodes; ++j) {
      const std::array<double, 2> p{static_cast<double>(i) / (kGridNodes - 1),
                                    static_cast<double>(j) / (kGridNodes - 1)};
      const double f = eval_scaled(p);
      if (f < best) {
        best = f;
        best_p = p;
      }
    }
  }

  // Nelder-Mead from the best cell, one grid cell as the initial edge;
  // boundary cells step inward so the simplex starts nondegenerate.
  const double cell = 1.0 / (kGridNodes - 1);
  std::array<std::array<double, 2>, 3> pts;
  pts[0] = best_p;
  pts[1] = best_p;
  pts[1][0] += (best_p[0] + cell <= 1.0) ? cell : -cell;
  pts[2] = best_p;
  pts[2][1] += (best_p[1] + cell <= 1.0) ? cell : -cell;
  std::array<double, 3> fv{eval_scaled(pts[0]), eval_scaled(pts[1]),
                           eval_scaled(pts[2])};

  auto order = [&]() {
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (fv[j] < fv[i]) {
          std::swap(fv[i], fv[j]);
          std::swap(pts[i], pts[j]);
        }
  };
  auto diameter = [&]() {
    double d = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        d = std::max({d, std::abs(pts[i][0] - pts[j][0]),
                      std::abs(pts[i][1] - pts[j][1])});
    return d;
  };

  bool converged = false;
  for (int it = 0; it < kMaxSimplexIter; ++it) {
    order();
    if (diameter() < kSimplexTol) {
      converged = true;
      break;
    }
    const std::array<double, 2> centroid{(pts[0][0] + pts[1][0]) / 2.0,
                                         (pts[0][1] + pts[1][1]) / 2.0};
    auto blend = [&](double coef) {
      return std::array<double, 2>{centroid[0] + coef * (pts[2][0] - centroid[0]),
                                   centroid[1] + coef * (pts[2][1] - centroid[1])};
    };
    const std::array<double, 2> refl = blend(-1.0);
    const double f_refl = eval_scaled(refl);
    if (f_refl < fv[0]) {
      const std::array<double, 2> exp_p = blend(-2.0);
      const double f_exp = eval_scaled(exp_p);
      if (f_exp < f_refl) {
        pts[2] = exp_p;
        fv[2] = f_exp;
      } else {
        pts[2] = refl;
        fv[2] = f_refl;
      }
    } else if (f_refl < fv[1]) {
      pts[2] = refl;
      fv[2] = f_refl;
    } else {
      const std::array<double, 2> con =
          blend(f_refl < fv[2] ? -0.5 : 0.5);
      const double f_con = eval_scaled(con);
      if (f_con < std::min(fv[2], f_refl)) {
        pts[2] = con;
        fv[2] = f_con;
      } else {
        for (int i = 1; i < 3; ++i) {
          pts[i][0] = pts[0][0] + 0.5 * (pts[i][0] - pts[0][0]);
          pts[i][1] = pts[0][1] + 0.5 * (pts[i][1] - pts[0][1]);
          fv[i] = eval_scaled(pts[i]);
        }
      }
    }
  }
  order();

  const double alpha_hat = std::clamp(to_alpha(pts[0][0]), alpha_bounds.lo,
                                      alpha_bounds.hi);
  const double b_hat = std::clamp(to_b(pts[0][1]), b_bounds.lo, b_bounds.hi);
  return FitResult{GrowthFactor(x0, b_hat, FracOrder(alpha_hat)), fv[0],
                   obj.n_evals, converged};
}

EconomyFit fit_economy(const Trajectory& labor, const Trajectory& capital,
                       const Trajectory& output, Bounds alpha_bounds,
                       Bounds b_bounds) {
  FitResult fl = fit_factor(labor, alpha_bounds, b_bounds);
  FitResult fk = fit_factor(capital, alpha_bounds, b_bounds);
  FitResult fy = fit_factor(output, alpha_bounds, b_bounds);

  double theta = 0.5;
  bool defaulted = true;
  if (fl.factor.b != fk.factor.b) {
    const CrsTheta ct = crs_theta(fl.factor.b, fk.factor.b, fy.factor.b);
    if (ct.in_unit_interval) {
      theta = ct.value;
      defaulted = false;
    }
  }
  EconomySpec spec(fl.factor, fk.factor, fy.factor, theta);
  return EconomyFit{spec, fl, fk, fy, defaulted};
}

}  // namespace fracgrowth
