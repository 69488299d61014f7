#pragma once

#include "fracgrowth/caputo.hpp"
#include "fracgrowth/mittag_leffler.hpp"

namespace fracgrowth {

// One factor's dynamics: initial level x0 > 0, growth rate b > 0 (units
// time^-alpha) and memory order alpha.
struct GrowthFactor {
  GrowthFactor(double x0, double b, FracOrder alpha);
  double x0;
  double b;
  FracOrder alpha;
};

// x(t) = x0 * E_alpha(b t^alpha), t >= 0.
double level_at(const GrowthFactor& factor, double t);

// level_at over every grid point; requires grid.t0() >= 0.
Trajectory sample_trajectory(const GrowthFactor& factor, const TimeGrid& grid);

// Inverse of level_at: t = [Einv_alpha(x / x0) / b]^(1/alpha), x >= x0.
double time_from_level(const GrowthFactor& factor, double x);

// D(alpha,b,t,s) = E_alpha(b(t+s)^alpha) - E_alpha(bt^alpha) E_alpha(bs^alpha).
// Identically zero only for alpha = 1; its magnitude measures how far the
// fractional flow is from a semigroup.
double semigroup_defect(FracOrder alpha, double b, double t, double s);

}  // namespace fracgrowth
