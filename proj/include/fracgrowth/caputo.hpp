#pragma once

#include <cstddef>
#include <vector>

#include "fracgrowth/mittag_leffler.hpp"

namespace fracgrowth {

// Discrete time axis starting at t0. Uniform grids are the common case; an
// explicit point set (e.g. parsed from a CSV) is accepted too, but the Caputo
// operators below require uniformity.
class TimeGrid {
 public:
  TimeGrid(double t0, double t_end, std::size_t n_steps);
  static TimeGrid from_points(std::vector<double> points);

  double t0() const noexcept { return points_.front(); }
  double t_end() const noexcept { return points_.back(); }
  std::size_t n_steps() const noexcept { return points_.size() - 1; }
  const std::vector<double>& points() const noexcept { return points_; }
  bool uniform() const noexcept { return uniform_; }
  // Mean step; exact for uniform grids.
  double step() const noexcept;

 private:
  TimeGrid() = default;
  std::vector<double> points_;
  bool uniform_ = true;
};

// Levels sampled over a grid; values[i] belongs to grid.points()[i].
struct Trajectory {
  Trajectory(TimeGrid grid, std::vector<double> values);
  TimeGrid grid;
  std::vector<double> values;
};

// L1 approximation of the Caputo derivative of order alpha at grid node
// `index` (1 <= index <= n_steps). Exact on linear data by telescoping;
// order 2 - alpha on smooth data. At alpha = 1 it degenerates to the
// backward difference.
double caputo_l1(const Trajectory& traj, FracOrder alpha, std::size_t index);

// Adams-Bashforth-Moulton predictor-corrector for the scalar problem
// cD^alpha x = b x, x(0) = x0 > 0, b > 0, on a uniform grid with t0 = 0.
// The corrector is iterated to its fixed point, and the leading nodes carry
// correction weights so the low-order starting error of the plain scheme
// does not cap global accuracy below O(h^{1+alpha}).
Trajectory solve_fode_abm(double b, FracOrder alpha, double x0,
                          const TimeGrid& grid);

// Max over grid nodes with t >= 0.1 * t_end of the relative defect
// |L1[x](t) - b x(t)| / (b x(t)) for the closed-form trajectory
// x(t) = E_alpha(b t^alpha). Certifies the eigenfunction property.
double verify_eigenproperty(double b, FracOrder alpha, const TimeGrid& grid);

}  // namespace fracgrowth
