// Command line front end: evaluation, simulation, oracle checks, surface
// sampling, calibration and the classical-limit probe.
//
// Exit codes: 0 success, 1 verification failed, 2 usage or domain error,
// 3 output I/O failure.

#include <cmath>
#include <cstddef>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fracgrowth/calibration.hpp"
#include "fracgrowth/caputo.hpp"
#include "fracgrowth/growth_model.hpp"
#include "fracgrowth/invariant_surface.hpp"
#include "fracgrowth/io.hpp"
#include "fracgrowth/mittag_leffler.hpp"

namespace {

using namespace fracgrowth;

void emit(const std::string& out_path, const std::string& content) {
  if (out_path == "-")
    std::cout << content;
  else
    write_text_file(out_path, content);
}

int run_ml_eval(double alpha, double beta, double x) {
  double v;
  if (beta == 1.0)
    v = ml_eval(FracOrder(alpha), x);
  else
    v = ml_eval2(FracOrder(alpha), beta, x);
  std::cout << format_double(v) << "\n";
  return 0;
}

int run_simulate(const std::string& config, double t_end, std::size_t steps,
                 const std::string& out) {
  const EconomySpec econ = load_economy_config(config);
  const TimeGrid grid(0.0, t_end, steps);
  const std::vector<SurfacePoint> pts = surface_sample(econ, grid);

  std::vector<double> t, l, k, y;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    t.push_back(grid.points()[i]);
    l.push_back(pts[i].L);
    k.push_back(pts[i].K);
    y.push_back(pts[i].Y);
  }
  emit(out, to_csv({"t", "L", "K", "Y"}, {t, l, k, y}));
  return 0;
}

int run_verify_oracle(double alpha_in, double b, double t_end,
                      std::size_t steps) {
  const FracOrder alpha(alpha_in);
  const TimeGrid grid(0.0, t_end, steps);

  const double defect = verify_eigenproperty(b, alpha, grid);

  const Trajectory abm = solve_fode_abm(b, alpha, 1.0, grid);
  double abm_err = 0.0;
  for (std::size_t i = 0; i <= grid.n_steps(); ++i) {
    const double t = grid.points()[i];
    const double exact =
        ml_eval(alpha, b * (t == 0.0 ? 0.0 : std::pow(t, alpha.value())));
    abm_err = std::max(abm_err, std::abs(abm.values[i] - exact) / exact);
  }

  std::cout << "max relative defect: " << format_double(defect) << "\n";
  std::cout << "max abm relative error: " << format_double(abm_err) << "\n";

  const double defect_tol = (alpha.value() == 1.0) ? 1e-4 : 1e-2;
  return (defect <= defect_tol && abm_err <= 1e-3) ? 0 : 1;
}

int run_surface(const std::string& config, double t_end, std::size_t steps,
                bool residual, const std::string& out) {
  const EconomySpec econ = load_economy_config(config);
  const TimeGrid grid(0.0, t_end, steps);
  const std::vector<SurfacePoint> pts = surface_sample(econ, grid);

  std::vector<double> l, k, y, r;
  for (const SurfacePoint& p : pts) {
    l.push_back(p.L);
    k.push_back(p.K);
    y.push_back(p.Y);
    if (residual)
      r.push_back(std::abs(y_composite(econ, p.L, p.K) - p.Y) / p.Y);
  }
  if (residual)
    emit(out, to_csv({"L", "K", "Y", "residual"}, {l, k, y, r}));
  else
    emit(out, to_csv({"L", "K", "Y"}, {l, k, y}));
  return 0;
}

int run_fit(const std::string& input, const std::string& column,
            double alpha_lo, double alpha_hi, double b_lo, double b_hi,
            const std::string& out) {
  const Trajectory series = read_series_csv(input, column);
  const FitResult fit =
      fit_factor(series, Bounds{alpha_lo, alpha_hi}, Bounds{b_lo, b_hi});

  std::string json = "{\"alpha\": " + format_double(fit.factor.alpha.value()) +
                     ", \"b\": " + format_double(fit.factor.b) +
                     ", \"x0\": " + format_double(fit.factor.x0) +
                     ", \"sse\": " + format_double(fit.sse) +
                     ", \"converged\": " +
                     (fit.converged ? "true" : "false") + "}\n";
  emit(out, json);
  return 0;
}

int run_limit_check(const std::string& config, double L, double K,
                    const std::vector<double>& eps) {
  const EconomySpec econ = load_economy_config(config);
  const std::vector<double> gaps = limit_convergence_probe(econ, L, K, eps);

  std::cout << "eps,rel_error\n";
  for (std::size_t i = 0; i < gaps.size(); ++i)
    std::cout << format_double(eps[i]) << "," << format_double(gaps[i])
              << "\n";

  bool ok = gaps.back() <= 1e-10;
  for (std::size_t i = 1; i < gaps.size(); ++i)
    if (!(gaps[i] < gaps[i - 1])) ok = false;
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "fractional growth dynamics and generalized production surfaces"};
  app.require_subcommand(1);
  int rc = 0;

  // ml-eval
  double ml_alpha = 0.0, ml_beta = 1.0, ml_x = 0.0;
  CLI::App* ml = app.add_subcommand(
      "ml-eval", "evaluate the Mittag-Leffler function E_alpha(x)");
  ml->add_option("--alpha", ml_alpha, "order in (0, 1]")->required();
  ml->add_option("--x", ml_x, "argument")->required();
  ml->add_option("--beta", ml_beta, "second parameter (default 1)");
  ml->callback([&]() { rc = run_ml_eval(ml_alpha, ml_beta, ml_x); });

  // simulate
  std::string sim_config, sim_out = "-";
  double sim_t_end = 0.0;
  std::size_t sim_steps = 0;
  CLI::App* sim = app.add_subcommand(
      "simulate", "sample the three factor trajectories to CSV (t,L,K,Y)");
  sim->add_option("--config", sim_config, "economy config (JSON)")->required();
  sim->add_option("--t-end", sim_t_end, "horizon")->required();
  sim->add_option("--steps", sim_steps, "number of grid steps")->required();
  sim->add_option("--out", sim_out, "output path, - for stdout");
  sim->callback(
      [&]() { rc = run_simulate(sim_config, sim_t_end, sim_steps, sim_out); });

  // verify-oracle
  double vo_alpha = 0.0, vo_b = 1.0, vo_t_end = 1.0;
  std::size_t vo_steps = 4000;
  CLI::App* vo = app.add_subcommand(
      "verify-oracle",
      "check the L1 defect and the ABM solver against the closed form");
  vo->add_option("--alpha", vo_alpha, "order in (0, 1]")->required();
  vo->add_option("--b", vo_b, "growth rate (default 1)");
  vo->add_option("--t-end", vo_t_end, "horizon (default 1)");
  vo->add_option("--steps", vo_steps, "grid steps (default 4000)");
  vo->callback(
      [&]() { rc = run_verify_oracle(vo_alpha, vo_b, vo_t_end, vo_steps); });

  // surface
  std::string sur_config, sur_out = "-";
  double sur_t_end = 0.0;
  std::size_t sur_steps = 0;
  bool sur_residual = false;
  CLI::App* sur = app.add_subcommand(
      "surface", "sample the production surface along the trajectory");
  sur->add_option("--config", sur_config, "economy config (JSON)")->required();
  sur->add_option("--t-end", sur_t_end, "horizon")->required();
  sur->add_option("--steps", sur_steps, "number of grid steps")->required();
  sur->add_flag("--residual", sur_residual,
                "append the composite-collapse residual column");
  sur->add_option("--out", sur_out, "output path, - for stdout");
  sur->callback([&]() {
    rc = run_surface(sur_config, sur_t_end, sur_steps, sur_residual, sur_out);
  });

  // fit
  std::string fit_input, fit_column, fit_out = "-";
  double fit_alpha_lo = 0.05, fit_alpha_hi = 1.0, fit_b_lo = 1e-4,
         fit_b_hi = 2.0;
  CLI::App* fit = app.add_subcommand(
      "fit", "calibrate (alpha, b) to an observed series");
  fit->add_option("--input", fit_input, "CSV with time in the first column")
      ->required();
  fit->add_option("--column", fit_column,
                  "value column by header name (default: second column)");
  fit->add_option("--alpha-lo", fit_alpha_lo, "alpha lower bound");
  fit->add_option("--alpha-hi", fit_alpha_hi, "alpha upper bound");
  fit->add_option("--b-lo", fit_b_lo, "b lower bound");
  fit->add_option("--b-hi", fit_b_hi, "b upper bound");
  fit->add_option("--out", fit_out, "output path, - for stdout");
  fit->callback([&]() {
    rc = run_fit(fit_input, fit_column, fit_alpha_lo, fit_alpha_hi, fit_b_lo,
                 fit_b_hi, fit_out);
  });

  // limit-check
  std::string lc_config;
  double lc_L = 0.0, lc_K = 0.0;
  std::vector<double> lc_eps{0.1, 0.01, 0.001, 0.0};
  CLI::App* lc = app.add_subcommand(
      "limit-check",
      "convergence of the composite surface to its classical limit");
  lc->add_option("--config", lc_config, "economy config (JSON)")->required();
  lc->add_option("--L", lc_L, "labor level")->required();
  lc->add_option("--K", lc_K, "capital level")->required();
  lc->add_option("--eps", lc_eps,
                 "strictly decreasing offsets from alpha = 1 "
                 "(default 0.1 0.01 0.001 0)")
      ->expected(-1);
  lc->callback([&]() { rc = run_limit_check(lc_config, lc_L, lc_K, lc_eps); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
