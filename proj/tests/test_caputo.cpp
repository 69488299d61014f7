#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "fracgrowth/caputo.hpp"
#include "test_util.hpp"

using namespace fracgrowth;

namespace {

Trajectory sampled(double (*f)(double), const TimeGrid& g) {
  std::vector<double> v;
  for (double t : g.points()) v.push_back(f(t));
  return Trajectory(g, std::move(v));
}

double max_abm_rel_error(double b, double alpha, std::size_t steps) {
  const FracOrder a(alpha);
  const TimeGrid g(0.0, 1.0, steps);
  const Trajectory tr = solve_fode_abm(b, a, 1.0, g);
  double worst = 0.0;
  for (std::size_t i = 0; i <= steps; ++i) {
    const double t = g.points()[i];
    const double exact =
        ml_eval(a, b * (t == 0.0 ? 0.0 : std::pow(t, alpha)));
    worst = std::max(worst, std::abs(tr.values[i] - exact) / exact);
  }
  return worst;
}

}  // namespace

TEST_CASE("time grid construction and validation") {
  const TimeGrid g(0.0, 1.0, 4);
  CHECK(g.points().size() == 5);
  CHECK(g.t0() == 0.0);
  CHECK(g.t_end() == 1.0);
  CHECK(g.n_steps() == 4);
  CHECK(g.step() == doctest::Approx(0.25));
  CHECK(g.uniform());
  CHECK_NOTHROW(TimeGrid(0.0, 1e-8, 1));

  CHECK_THROWS_AS(TimeGrid(0.0, 0.0, 4), std::domain_error);
  CHECK_THROWS_AS(TimeGrid(1.0, 0.5, 4), std::domain_error);
  CHECK_THROWS_AS(TimeGrid(0.0, 1.0, 0), std::domain_error);
  CHECK_THROWS_AS(TimeGrid(0.0, std::nan(""), 4), std::domain_error);
}

TEST_CASE("time grid from explicit points") {
  const TimeGrid u = TimeGrid::from_points({0.0, 0.5, 1.0, 1.5});
  CHECK(u.uniform());
  CHECK(u.n_steps() == 3);

  const TimeGrid nu = TimeGrid::from_points({0.0, 0.1, 1.0, 1.5});
  CHECK_FALSE(nu.uniform());

  CHECK_THROWS_AS(TimeGrid::from_points({0.0}), std::domain_error);
  CHECK_THROWS_AS(TimeGrid::from_points({0.0, 1.0, 1.0}), std::domain_error);
  CHECK_THROWS_AS(TimeGrid::from_points({0.0, 1.0, 0.5}), std::domain_error);
}

TEST_CASE("trajectory validation") {
  const TimeGrid g(0.0, 1.0, 2);
  CHECK_NOTHROW(Trajectory(g, {1.0, 2.0, 3.0}));
  CHECK_THROWS_AS(Trajectory(g, {1.0, 2.0}), std::domain_error);
  CHECK_THROWS_AS(Trajectory(g, {1.0, std::nan(""), 3.0}), std::domain_error);
}

TEST_CASE("caputo_l1 of a constant is exactly zero") {
  const TimeGrid g(0.0, 2.0, 16);
  const Trajectory tr(g, std::vector<double>(17, 7.0));
  for (double a : {0.3, 0.5, 0.8, 1.0})
    for (std::size_t i : {std::size_t(1), std::size_t(8), std::size_t(16)})
      CHECK(caputo_l1(tr, FracOrder(a), i) == 0.0);
}

TEST_CASE("caputo_l1 is exact on linear data") {
  const TimeGrid g(0.0, 1.0, 50);
  const Trajectory tr = sampled([](double t) { return t; }, g);
  // Caputo derivative of t: t^(1-a) / Gamma(2-a); at t = 1, a = 1/2 this is
  // 1/Gamma(3/2).
  CHECK(rel_diff(caputo_l1(tr, FracOrder(0.5), 50), 1.1283791670955125739) <=
        1e-12);
  for (double a : {0.3, 0.8}) {
    for (std::size_t i : {std::size_t(10), std::size_t(50)}) {
      const double t = g.points()[i];
      const double exact = std::pow(t, 1.0 - a) / std::tgamma(2.0 - a);
      CHECK(rel_diff(caputo_l1(tr, FracOrder(a), i), exact) <= 1e-12);
    }
  }
}

TEST_CASE("caputo_l1 degenerates to the backward difference at alpha = 1") {
  const TimeGrid g(0.0, 1.0, 10);
  const Trajectory tr = sampled([](double t) { return t * t; }, g);
  const double h = g.step();
  for (std::size_t i : {std::size_t(1), std::size_t(5), std::size_t(10)}) {
    const double bd = (tr.values[i] - tr.values[i - 1]) / h;
    CHECK(rel_diff(caputo_l1(tr, FracOrder(1.0), i), bd) <= 1e-13);
  }
  // On linear data that backward difference is 1, approached as a -> 1.
  const Trajectory lin = sampled([](double t) { return t; }, g);
  CHECK(std::abs(caputo_l1(lin, FracOrder(0.999), 10) - 1.0) <= 1e-2);
  CHECK(caputo_l1(lin, FracOrder(1.0), 10) == doctest::Approx(1.0));
}

TEST_CASE("caputo_l1 converges at order 2 - alpha on t^2") {
  // Caputo derivative of t^2 at t = 1, a = 1/2: 2 / Gamma(5/2).
  const double exact = 1.5045055561273500985;
  auto err_at = [&](std::size_t n) {
    const TimeGrid g(0.0, 1.0, n);
    const Trajectory tr = sampled([](double t) { return t * t; }, g);
    return std::abs(caputo_l1(tr, FracOrder(0.5), n) - exact);
  };
  const double e500 = err_at(500);
  const double e1000 = err_at(1000);
  const double e2000 = err_at(2000);
  CHECK(e2000 <= 1e-4);
  // Halving the step should shrink the error by about 2^(1.5).
  CHECK(e500 / e1000 >= 0.7 * std::pow(2.0, 1.5));
  CHECK(e1000 / e2000 >= 0.7 * std::pow(2.0, 1.5));
}

TEST_CASE("caputo_l1 input validation") {
  const TimeGrid g(0.0, 1.0, 10);
  const Trajectory tr = sampled([](double t) { return t; }, g);
  CHECK_THROWS_AS(caputo_l1(tr, FracOrder(0.5), 0), std::domain_error);
  CHECK_THROWS_AS(caputo_l1(tr, FracOrder(0.5), 11), std::domain_error);

  const Trajectory nu(TimeGrid::from_points({0.0, 0.1, 1.0}),
                      {0.0, 0.1, 1.0});
  CHECK_THROWS_AS(caputo_l1(nu, FracOrder(0.5), 1), std::invalid_argument);

  const Trajectory one_step(TimeGrid(0.0, 1.0, 1), {0.0, 1.0});
  CHECK_THROWS_AS(caputo_l1(one_step, FracOrder(0.5), 1), std::domain_error);
}

TEST_CASE("abm solver matches the closed form") {
  // alpha = 1 against the plain exponential, scaled initial value.
  const TimeGrid g(0.0, 1.0, 2000);
  const Trajectory tr = solve_fode_abm(0.3, FracOrder(1.0), 100.0, g);
  CHECK(tr.values.front() == 100.0);
  CHECK(rel_diff(tr.values.back(), 134.9858807576003104) <= 1e-6);

  // Fractional case against the Mittag-Leffler closed form.
  const Trajectory tf = solve_fode_abm(0.1, FracOrder(0.5), 1.0, g);
  CHECK(rel_diff(tf.values.back(), 1.1236433541992094732) <= 1e-6);

  for (double a : {0.3, 1.0})
    CHECK(max_abm_rel_error(1.0, a, 2000) <= 1e-3);
}

TEST_CASE("abm error shrinks at order min(2, 1 + alpha) under step halving") {
  const double e1 = max_abm_rel_error(1.0, 0.5, 500);
  const double e2 = max_abm_rel_error(1.0, 0.5, 1000);
  CHECK(e1 / e2 >= 0.7 * std::pow(2.0, 1.5));
}

TEST_CASE("abm trajectory is positive and nondecreasing for b > 0") {
  for (double a : {0.3, 0.8}) {
    const TimeGrid g(0.0, 1.0, 500);
    const Trajectory tr = solve_fode_abm(1.0, FracOrder(a), 2.0, g);
    for (std::size_t i = 0; i < tr.values.size(); ++i) {
      CHECK(tr.values[i] > 0.0);
      if (i) CHECK(tr.values[i] >= tr.values[i - 1]);
    }
  }
}

TEST_CASE("abm solver stays near x0 for a vanishing horizon") {
  const TimeGrid g(0.0, 1e-8, 2);
  const Trajectory tr = solve_fode_abm(1.0, FracOrder(0.5), 3.0, g);
  for (double v : tr.values) CHECK(rel_diff(v, 3.0) <= 1e-3);
}

TEST_CASE("abm solver input validation") {
  const TimeGrid g(0.0, 1.0, 10);
  CHECK_THROWS_AS(solve_fode_abm(-1.0, FracOrder(0.5), 1.0, g),
                  std::domain_error);
  CHECK_THROWS_AS(solve_fode_abm(1.0, FracOrder(0.5), 0.0, g),
                  std::domain_error);

  const TimeGrid off(1.0, 2.0, 10);
  CHECK_THROWS_AS(solve_fode_abm(1.0, FracOrder(0.5), 1.0, off),
                  std::domain_error);

  const TimeGrid nu = TimeGrid::from_points({0.0, 0.1, 1.0});
  CHECK_THROWS_AS(solve_fode_abm(1.0, FracOrder(0.5), 1.0, nu),
                  std::invalid_argument);

  // One-step grids cannot carry the corrector stencil.
  const TimeGrid one(0.0, 1.0, 1);
  CHECK_THROWS_AS(solve_fode_abm(1.0, FracOrder(0.5), 1.0, one),
                  std::domain_error);

  // Coarse grid with a large rate: corrector loses contractivity.
  const TimeGrid coarse(0.0, 1.0, 2);
  CHECK_THROWS_AS(solve_fode_abm(50.0, FracOrder(0.5), 1.0, coarse),
                  std::domain_error);
}

TEST_CASE("verify_eigenproperty certifies the closed-form trajectory") {
  const TimeGrid g4000(0.0, 1.0, 4000);
  CHECK(verify_eigenproperty(1.0, FracOrder(0.5), g4000) <= 1e-2);
  CHECK(verify_eigenproperty(1.0, FracOrder(0.8), g4000) <= 1e-2);

  const TimeGrid g10000(0.0, 1.0, 10000);
  CHECK(verify_eigenproperty(1.0, FracOrder(1.0), g10000) < 1e-4);

  // The defect itself shrinks at order 2 - alpha.
  const TimeGrid g2000(0.0, 1.0, 2000);
  const double d2000 = verify_eigenproperty(1.0, FracOrder(0.5), g2000);
  const double d4000 = verify_eigenproperty(1.0, FracOrder(0.5), g4000);
  const double ratio = d2000 / d4000;
  CHECK(ratio >= 0.7 * std::pow(2.0, 1.5));
  CHECK(ratio <= 1.3 * std::pow(2.0, 1.5));
}
