#pragma once

#include <utility>
#include <vector>

#include "fracgrowth/growth_model.hpp"

namespace fracgrowth {

// Labor, capital and output dynamics plus the blending weight theta in (0,1).
struct EconomySpec {
  EconomySpec(GrowthFactor labor, GrowthFactor capital, GrowthFactor output,
              double theta);
  GrowthFactor labor;
  GrowthFactor capital;
  GrowthFactor output;
  double theta;
};

struct SurfacePoint {
  double L;
  double K;
  double Y;
};

// Parameters of the classical Cobb-Douglas limit A L^beta_l K^beta_k.
struct ClassicalParams {
  double A;
  double beta_l;
  double beta_k;
};

// Result of crs_theta; the weight can fall outside (0,1) for admissible rate
// triples, and is then flagged rather than rejected.
struct CrsTheta {
  double value;
  bool in_unit_interval;
};

// Output level read off the single-input branches of the surface.
double y_from_labor(const EconomySpec& econ, double L);
double y_from_capital(const EconomySpec& econ, double K);

// Composite production function
//   Y = Y0 * E_a3(theta b3 u_L + (1-theta) b3 u_K),
//   u_X = [Einv_aX(X/X0) / bX]^(a3/aX).
// When L and K are sampled from their trajectories at a common time it
// collapses to the output trajectory for every theta.
double y_composite(const EconomySpec& econ, double L, double K);

// Differences of the times recovered from each trajectory at a common t:
// (tau_L - tau_K, tau_L - tau_Y). Both vanish up to inversion error.
std::pair<double, double> invariant_residuals(const EconomySpec& econ,
                                              double t);

// A * L^beta_l * K^beta_k.
double classical_cd(double A, double beta_l, double beta_k, double L,
                    double K);

// Parameters of the alpha -> 1 limit of the composite surface:
// beta_l = theta b3/b1, beta_k = (1-theta) b3/b2, A = Y0/(L0^bl K0^bk).
ClassicalParams classical_limit_params(const EconomySpec& econ);

// theta* = b1 (b2 - b3) / (b3 (b2 - b1)): the unique weight making the limit
// exponents sum to one. b1 == b2 makes the formula singular and is an error.
CrsTheta crs_theta(double b1, double b2, double b3);

// For each eps in [0, 0.5), given strictly decreasing, rebuild the economy
// with every order set to 1 - eps and return the relative gap
// |y_composite - classical_cd| / classical_cd at fixed (L, K).
std::vector<double> limit_convergence_probe(const EconomySpec& econ_base,
                                            double L, double K,
                                            const std::vector<double>& eps_list);

// (L(t), K(t), Y(t)) along the trajectories.
std::vector<SurfacePoint> surface_sample(const EconomySpec& econ,
                                         const TimeGrid& grid);

}  // namespace fracgrowth
