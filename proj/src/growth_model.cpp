#include "fracgrowth/growth_model.hpp"

#include <cmath>
#include <stdexcept>

namespace fracgrowth {

namespace {

double pow_t(double t, double a) { return t == 0.0 ? 0.0 : std::pow(t, a); }

void check_time(double t) {
  if (!std::isfinite(t) || t < 0.0)
    throw std::domain_error("time must be nonnegative and finite");
}

}  // namespace

GrowthFactor::GrowthFactor(double x0_in, double b_in, FracOrder alpha_in)
    : x0(x0_in), b(b_in), alpha(alpha_in) {
  if (!std::isfinite(x0) || x0 <= 0.0)
    throw std::domain_error("growth factor: x0 must be positive and finite");
  if (!std::isfinite(b) || b <= 0.0)
    throw std::domain_error("growth factor: b must be positive and finite");
}

double level_at(const GrowthFactor& factor, double t) {
  check_time(t);
  if (t == 0.0) return factor.x0;
  return factor.x0 *
         ml_eval(factor.alpha, factor.b * pow_t(t, factor.alpha.value()));
}

Trajectory sample_trajectory(const GrowthFactor& factor, const TimeGrid& grid) {
  if (grid.t0() < 0.0)
    throw std::domain_error("sample_trajectory: grid must start at t >= 0");
  std::vector<double> values;
  values.reserve(grid.points().size());
  for (double t : grid.points()) values.push_back(level_at(factor, t));
  return Trajectory(grid, std::move(values));
}

double time_from_level(const GrowthFactor& factor, double x) {
  if (!std::isfinite(x))
    throw std::domain_error("time_from_level: level must be finite");
  if (x < factor.x0)
    throw std::domain_error(
        "time_from_level: level is below the initial value x0");
  if (x == factor.x0) return 0.0;
  const double z = ml_inverse(factor.alpha, x / factor.x0) / factor.b;
  return std::pow(z, 1.0 / factor.alpha.value());
}

double semigroup_defect(FracOrder alpha, double b, double t, double s) {
  if (!std::isfinite(b) || b <= 0.0)
    throw std::domain_error("semigroup_defect: b must be positive and finite");
  check_time(t);
  check_time(s);
  const double a = alpha.value();
  const double joint = ml_eval(alpha, b * pow_t(t + s, a));
  const double split = ml_eval(alpha, b * pow_t(t, a)) *
                       ml_eval(alpha, b * pow_t(s, a));
  return joint - split;
}

}  // namespace fracgrowth
