#include "fracgrowth/invariant_surface.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fracgrowth {

namespace {

void check_positive_finite(double v, const char* name) {
  if (!std::isfinite(v) || v <= 0.0)
    throw std::domain_error(std::string(name) + " must be positive and finite");
}

// u_X = [Einv_aX(level / x0) / bX]^(a3 / aX); the exponent rescales the
// recovered power of time into the output clock.
double input_power(const GrowthFactor& f, double level, double a3,
                   const char* name) {
  if (!std::isfinite(level))
    throw std::domain_error(std::string(name) + " level must be finite");
  if (level < f.x0)
    throw std::domain_error(std::string(name) +
                            " level is below its initial value");
  const double z = ml_inverse(f.alpha, level / f.x0) / f.b;
  if (z == 0.0) return 0.0;
  return std::pow(z, a3 / f.alpha.value());
}

}  // namespace

EconomySpec::EconomySpec(GrowthFactor labor_in, GrowthFactor capital_in,
                         GrowthFactor output_in, double theta_in)
    : labor(labor_in),
      capital(capital_in),
      output(output_in),
      theta(theta_in) {
  if (!std::isfinite(theta) || theta <= 0.0 || theta >= 1.0)
    throw std::domain_error("economy: theta must lie in (0, 1)");
}

double y_from_labor(const EconomySpec& econ, double L) {
  const double a3 = econ.output.alpha.value();
  const double u = input_power(econ.labor, L, a3, "labor");
  return econ.output.x0 * ml_eval(econ.output.alpha, econ.output.b * u);
}

double y_from_capital(const EconomySpec& econ, double K) {
  const double a3 = econ.output.alpha.value();
  const double u = input_power(econ.capital, K, a3, "capital");
  return econ.output.x0 * ml_eval(econ.output.alpha, econ.output.b * u);
}

double y_composite(const EconomySpec& econ, double L, double K) {
  const double a3 = econ.output.alpha.value();
  const double ul = input_power(econ.labor, L, a3, "labor");
  const double uk = input_power(econ.capital, K, a3, "capital");
  const double arg =
      econ.theta * econ.output.b * ul + (1.0 - econ.theta) * econ.output.b * uk;
  return econ.output.x0 * ml_eval(econ.output.alpha, arg);
}

std::pair<double, double> invariant_residuals(const EconomySpec& econ,
                                              double t) {
  if (!std::isfinite(t) || t < 0.0)
    throw std::domain_error("invariant_residuals: t must be nonnegative");
  const double tl = time_from_level(econ.labor, level_at(econ.labor, t));
  const double tk = time_from_level(econ.capital, level_at(econ.capital, t));
  const double ty = time_from_level(econ.output, level_at(econ.output, t));
  return {tl - tk, tl - ty};
}

double classical_cd(double A, double beta_l, double beta_k, double L,
                    double K) {
  check_positive_finite(A, "classical_cd: A");
  check_positive_finite(L, "classical_cd: L");
  check_positive_finite(K, "classical_cd: K");
  if (!std::isfinite(beta_l) || !std::isfinite(beta_k))
    throw std::domain_error("classical_cd: exponents must be finite");
  return A * std::pow(L, beta_l) * std::pow(K, beta_k);
}

ClassicalParams classical_limit_params(const EconomySpec& econ) {
  const double bl = econ.theta * econ.output.b / econ.labor.b;
  const double bk = (1.0 - econ.theta) * econ.output.b / econ.capital.b;
  const double A = econ.output.x0 /
                   (std::pow(econ.labor.x0, bl) * std::pow(econ.capital.x0, bk));
  return {A, bl, bk};
}

CrsTheta crs_theta(double b1, double b2, double b3) {
  check_positive_finite(b1, "crs_theta: b1");
  check_positive_finite(b2, "crs_theta: b2");
  check_positive_finite(b3, "crs_theta: b3");
  if (b1 == b2)
    throw std::domain_error("crs_theta: degenerate rates (b1 == b2)");
  const double theta = b1 * (b2 - b3) / (b3 * (b2 - b1));
  return {theta, theta > 0.0 && theta < 1.0};
}

std::vector<double> limit_convergence_probe(const EconomySpec& econ_base,
                                            double L, double K,
                                            const std::vector<double>& eps_list) {
  if (eps_list.empty())
    throw std::domain_error("limit probe: eps list must be nonempty");
  for (std::size_t i = 0; i < eps_list.size(); ++i) {
    const double e = eps_list[i];
    if (!std::isfinite(e) || e < 0.0 || e >= 0.5)
      throw std::domain_error("limit probe: eps must lie in [0, 0.5)");
    if (i > 0 && !(e < eps_list[i - 1]))
      throw std::domain_error("limit probe: eps must be strictly decreasing");
  }

  const ClassicalParams p = classical_limit_params(econ_base);
  const double cd = classical_cd(p.A, p.beta_l, p.beta_k, L, K);

  std::vector<double> gaps;
  gaps.reserve(eps_list.size());
  for (double e : eps_list) {
    const FracOrder a(1.0 - e);
    const EconomySpec near_classical(
        GrowthFactor(econ_base.labor.x0, econ_base.labor.b, a),
        GrowthFactor(econ_base.capital.x0, econ_base.capital.b, a),
        GrowthFactor(econ_base.output.x0, econ_base.output.b, a),
        econ_base.theta);
    const double y = y_composite(near_classical, L, K);
    gaps.push_back(std::abs(y - cd) / cd);
  }
  return gaps;
}

std::vector<SurfacePoint> surface_sample(const EconomySpec& econ,
                                         const TimeGrid& grid) {
  if (grid.t0() < 0.0)
    throw std::domain_error("surface_sample: grid must start at t >= 0");
  std::vector<SurfacePoint> pts;
  pts.reserve(grid.points().size());
  for (double t : grid.points())
    pts.push_back({level_at(econ.labor, t), level_at(econ.capital, t),
                   level_at(econ.output, t)});
  return pts;
}

}  // namespace fracgrowth
