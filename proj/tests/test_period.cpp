#include <cmath>
#include <vector>

#include "corpus.hpp"
#include "doctest.h"
#include "graphpoly/errors.hpp"
#include "graphpoly/families.hpp"
#include "graphpoly/period.hpp"
#include "period_oracle.hpp"

using namespace graphpoly;

TEST_CASE("zeta values") {
  CHECK(zeta(2) == doctest::Approx(1.644934066848226).epsilon(1e-15));
  CHECK(zeta(3) == doctest::Approx(1.202056903159594).epsilon(1e-15));
  CHECK(zeta(5) == doctest::Approx(1.036927755143370).epsilon(1e-15));
  CHECK(zeta(1000) == 1.0);
  CHECK(zeta(60) == 1.0);
  CHECK_THROWS_AS(zeta(1), ValidationError);
}

TEST_CASE("convergence check") {
  CHECK(convergence_check(corpus::k4()).convergent);
  CHECK(convergence_check(wheel(4)).convergent);
  const ConvergenceReport r = convergence_check(corpus::two_bubbles_at_vertex());
  CHECK(!r.convergent);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->edges == 2);
  CHECK(r.witness->loops == 1);
  CHECK_THROWS_AS(convergence_check(corpus::triangle()), ValidationError);
}

TEST_CASE("integrand values") {
  CHECK(integrand_value(corpus::bubble(), std::vector<double>{0.5}) == doctest::Approx(1.0));
  CHECK(integrand_value(corpus::k4(), std::vector<double>(5, 0.5)) == doctest::Approx(4.0));
  // x = 0: Psi reduces to its monomials in the chart variable alone.
  CHECK(integrand_value(corpus::bubble(), std::vector<double>{0.0}) == 1.0);
  CHECK(std::isinf(integrand_value(corpus::k4(), std::vector<double>(5, 0.0))));
  CHECK_THROWS_AS(integrand_value(corpus::k4(), std::vector<double>(4, 0.5)), ValidationError);
  // Other chart: same value at the all-ones point of A.
  CHECK(integrand_value(corpus::k4(), std::vector<double>(5, 0.5), 0) == doctest::Approx(4.0));
}

TEST_CASE("deterministic oracle for the K4 period") {
  const double coarse = oracle::chart_integral(corpus::k4(), 1.0 / 8);
  const double fine = oracle::chart_integral(corpus::k4(), 1.0 / 16);
  CHECK(std::abs(fine - coarse) < 1e-6);
  CHECK(fine / zeta(3) == doctest::Approx(6.0).epsilon(1e-6));
}

TEST_CASE("bubble calibration") {
  const PeriodEstimate e = estimate_period(corpus::bubble(), 100000, 1);
  CHECK(e.estimate == doctest::Approx(1.0).epsilon(0.01));
  CHECK(e.standard_error > 0);
  CHECK(!e.ratio_to_zeta.has_value());
  CHECK(e.zeta_order == -1);
}

TEST_CASE("K4 period estimate") {
  PeriodOptions opts;
  opts.threads = 2;
  const PeriodEstimate e = estimate_period(corpus::k4(), 400000, 42, opts, "k4");
  REQUIRE(e.ratio_to_zeta.has_value());
  CHECK(std::abs(*e.ratio_to_zeta - 6.0) < 4 * *e.ratio_error);
  CHECK(e.zeta_order == 3);

  opts.sampler = Sampler::kPrng;
  const PeriodEstimate p = estimate_period(corpus::k4(), 400000, 42, opts);
  CHECK(std::abs(*p.ratio_to_zeta - 6.0) < 4 * *p.ratio_error);

  opts.sampler = Sampler::kNet;
  opts.chart = 0;
  const PeriodEstimate c = estimate_period(corpus::k4(), 400000, 42, opts);
  CHECK(std::abs(c.estimate - e.estimate) < 4 * std::hypot(c.standard_error, e.standard_error));
  CHECK(*e.ratio_error < 0.02);
}

TEST_CASE("map power") {
  // Same integral under every power; the plain map has the widest spread.
  PeriodOptions plain, fitted;
  plain.map_power = 1;
  const PeriodEstimate a = estimate_period(corpus::k4(), 200000, 3, plain);
  const PeriodEstimate b = estimate_period(corpus::k4(), 200000, 3, fitted);
  CHECK(a.map_power == 1);
  CHECK(b.map_power == 3);
  CHECK(b.standard_error < a.standard_error);
  CHECK(std::abs(a.estimate - b.estimate) < 4 * std::hypot(a.standard_error, b.standard_error));
  const PeriodIntegrand cube(corpus::k4(), 5, 1), cubed(corpus::k4(), 5, 3);
  // x = 1/2 maps to A = 1 under every power; Jacobian 4 * k per coordinate.
  const std::vector<double> half(5, 0.5);
  CHECK(cubed(half) == doctest::Approx(cube(half) * 243));
  CHECK_THROWS_AS(PeriodIntegrand(corpus::k4(), 5, 0), ValidationError);
}

TEST_CASE("WS4 period estimate is consistent across charts") {
  PeriodOptions a, b;
  b.chart = 0;
  const PeriodEstimate x = estimate_period(wheel(4), 200000, 5, a);
  const PeriodEstimate y = estimate_period(wheel(4), 200000, 5, b);
  REQUIRE(x.ratio_to_zeta.has_value());
  CHECK(x.zeta_order == 5);
  CHECK(std::abs(x.estimate - y.estimate) < 4 * std::hypot(x.standard_error, y.standard_error));
}

TEST_CASE("period estimates ignore the worker count") {
  PeriodOptions one, many;
  many.threads = 3;
  const PeriodEstimate a = estimate_period(corpus::k4(), 50000, 9, one);
  const PeriodEstimate b = estimate_period(corpus::k4(), 50000, 9, many);
  CHECK(a.estimate == b.estimate);
  CHECK(a.standard_error == b.standard_error);
}

TEST_CASE("period preconditions") {
  CHECK_THROWS_AS(estimate_period(corpus::k4(), 100, 1), ValidationError);
  CHECK_THROWS_AS(estimate_period(corpus::two_bubbles_at_vertex(), 100000, 1), ValidationError);
  PeriodOptions few;
  few.batches = 8;
  CHECK_THROWS_AS(estimate_period(corpus::k4(), 100000, 1, few), ValidationError);
  CHECK(parse_sampler("prng") == Sampler::kPrng);
  CHECK_THROWS_AS(parse_sampler("grid"), ValidationError);
}
