#pragma once

#include <cstddef>

#include "fracgrowth/caputo.hpp"
#include "fracgrowth/growth_model.hpp"
#include "fracgrowth/invariant_surface.hpp"

namespace fracgrowth {

// Closed search interval, lo < hi required.
struct Bounds {
  double lo;
  double hi;
};

struct FitResult {
  GrowthFactor factor;  // x0 pinned to the first observation
  double sse;           // sum of squared relative residuals
  std::size_t n_evals;
  bool converged;
};

// Least squares over (alpha, b) inside the given box. Deterministic:
// a 25x25 coarse grid scan, then Nelder-Mead from the best cell in
// box-scaled coordinates; converged means the simplex diameter fell
// below 1e-6 there. Objective evaluations that overflow or leave the
// box score +inf. The series needs at least 5 points, strictly positive
// values, and a grid starting at t = 0.
FitResult fit_factor(const Trajectory& series, Bounds alpha_bounds,
                     Bounds b_bounds);

struct EconomyFit {
  EconomySpec spec;
  FitResult labor;
  FitResult capital;
  FitResult output;
  // theta fell back to 0.5: fitted rates were degenerate (b1 == b2) or the
  // constant-returns weight landed outside (0, 1).
  bool theta_defaulted;
};

// Three independent fit_factor calls; theta comes from crs_theta on the
// fitted rates when that is well defined and inside (0, 1).
EconomyFit fit_economy(const Trajectory& labor, const Trajectory& capital,
                       const Trajectory& output, Bounds alpha_bounds,
                       Bounds b_bounds);

}  // namespace fracgrowth
