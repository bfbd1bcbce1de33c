#include "fading/specfun.hpp"

#include <cmath>
#include <stdexcept>

#include "doctest.h"

using namespace fading;

namespace {

double rel(double actual, double expected) {
  return std::abs(actual - expected) / std::abs(expected);
}

// Independent oracle: the power series of I0 summed to convergence in long
// double, then scaled. Usable for x up to ~50 without meaningful rounding.
double i0_scaled_series(double x) {
  const long double a = (long double)(x) * x / 4.0L;
  long double sum = 1.0L, term = 1.0L;
  for (int k = 1; k < 400; ++k) {
    term *= a / ((long double)(k) * k);
    sum += term;
    if (term < 1e-25L * sum) break;
  }
  return double(sum * std::exp((long double)(-x)));
}

}  // namespace

TEST_CASE("bessel_i0_scaled frozen values") {
  CHECK(bessel_i0_scaled(0.0) == 1.0);
  CHECK(rel(bessel_i0_scaled(0.5), 0.64503527044915006811) < 1e-14);
  CHECK(rel(bessel_i0_scaled(1.0), 0.4657596075936404365) < 1e-14);
  CHECK(rel(bessel_i0_scaled(7.75), 0.14581227430891430778) < 1e-14);
  CHECK(rel(bessel_i0_scaled(10.0), 0.12783333716342860732) < 1e-14);
  CHECK(rel(bessel_i0_scaled(50.0), 0.05656162664745419253) < 1e-14);
  CHECK(rel(bessel_i0_scaled(500.0), 0.017845706500153167237) < 1e-14);
  CHECK(rel(bessel_i0_scaled(700.0), 0.015081295651531357587) < 1e-14);
}

TEST_CASE("bessel_i0_scaled matches the series oracle on [0, 50]") {
  for (double x = 0.0; x <= 50.0; x += 0.25)
    CHECK(rel(bessel_i0_scaled(x), i0_scaled_series(x)) < 1e-13);
}

TEST_CASE("bessel_i0_scaled range and monotonicity") {
  double prev = 2.0;
  for (double x : {0.0, 0.3, 1.0, 2.0, 7.7, 7.8, 25.0, 100.0, 499.0, 501.0,
                   700.0, 1e6, 1e300}) {
    const double v = bessel_i0_scaled(x);
    CHECK(v > 0.0);
    CHECK(v <= 1.0);
    CHECK(v <= prev);
    prev = v;
  }
}

TEST_CASE("bessel_i0_scaled domain errors") {
  CHECK_THROWS_AS(bessel_i0_scaled(-1.0), std::domain_error);
  CHECK_THROWS_AS(bessel_i0_scaled(std::nan("")), std::domain_error);
  CHECK_THROWS_AS(bessel_i0_scaled(INFINITY), std::domain_error);
}

TEST_CASE("langevin frozen values") {
  CHECK(langevin(0.0) == 0.0);
  CHECK(rel(langevin(0.1), 0.033311132253989610145) < 5e-14);
  CHECK(rel(langevin(0.15), 0.049925160353498537945) < 1e-13);
  CHECK(rel(langevin(0.5), 0.16395341373865284877) < 5e-14);
  CHECK(rel(langevin(1.0), 0.31303528549933130364) < 1e-14);
  CHECK(rel(langevin(2.0), 0.53731472072754809588) < 1e-14);
  CHECK(rel(langevin(10.0), 0.90000000412230725337) < 1e-14);
  CHECK(std::abs(langevin(1e6) - 0.999999) < 1e-9);
}

TEST_CASE("langevin Taylor bracket on [0, 0.5]") {
  for (double k = 0.0125; k <= 0.5; k += 0.0125) {
    const double w = langevin(k);
    CHECK(w <= k / 3.0);
    CHECK(w >= k / 3.0 - k * k * k / 45.0);
  }
}

TEST_CASE("langevin is increasing and stays in [0, 1)") {
  double prev = -1.0;
  for (double k : {0.0, 1e-8, 1e-4, 0.01, 0.1, 0.149, 0.151, 0.5, 1.0, 3.0,
                   10.0, 50.0, 700.0, 1e8}) {
    const double w = langevin(k);
    CHECK(w >= 0.0);
    CHECK(w < 1.0);
    CHECK(w > prev);
    prev = w;
  }
  CHECK_THROWS_AS(langevin(-0.1), std::domain_error);
  CHECK_THROWS_AS(langevin(INFINITY), std::domain_error);
}

TEST_CASE("kappa_over_sinh frozen values and limits") {
  CHECK(kappa_over_sinh(0.0) == 1.0);
  CHECK(rel(kappa_over_sinh(0.5), 0.95951737566747185975) < 1e-14);
  CHECK(rel(kappa_over_sinh(1.0), 0.85091812823932154513) < 1e-14);
  CHECK(rel(kappa_over_sinh(10.0), 0.00090799859712122162834) < 1e-14);
  CHECK_THROWS_AS(kappa_over_sinh(-1.0), std::domain_error);
}

TEST_CASE("kappa_over_sinh round-trips against sinh") {
  for (double k = 1e-6; k <= 30.0; k *= 1.9)
    CHECK(rel(kappa_over_sinh(k) * std::sinh(k), k) < 1e-12);
}

TEST_CASE("kappa_over_sinh large-argument behavior") {
  const double at700 = kappa_over_sinh(700.0);
  CHECK(at700 > 0.0);
  CHECK(std::isfinite(at700));
  CHECK(at700 < 1e-300);
  // Beyond ~745 the true value is below the subnormal range; documented
  // flush to +0 rather than overflow or NaN.
  const double at800 = kappa_over_sinh(800.0);
  CHECK(at800 >= 0.0);
  CHECK(at800 < 1e-300);
  double prev = 2.0;
  for (double k : {0.0, 0.5, 1.0, 1.5, 5.0, 20.0, 100.0, 700.0}) {
    const double v = kappa_over_sinh(k);
    CHECK(v < prev);
    prev = v;
  }
}

TEST_CASE("kappa_over_sinh_scaled") {
  CHECK(kappa_over_sinh_scaled(0.0) == 1.0);
  for (double k : {1e-12, 0.01, 0.5, 1.0, 5.0, 20.0})
    CHECK(rel(kappa_over_sinh_scaled(k), kappa_over_sinh(k) * std::exp(k)) <
          1e-13);
  // ~ 2 kappa for large kappa; stays finite where the unscaled form is 0.
  CHECK(rel(kappa_over_sinh_scaled(700.0), 1400.0) < 1e-13);
  CHECK(std::isfinite(kappa_over_sinh_scaled(1e12)));
}

TEST_CASE("specfun functions are deterministic") {
  for (double x : {0.7, 7.7, 77.0}) {
    CHECK(bessel_i0_scaled(x) == bessel_i0_scaled(x));
    CHECK(langevin(x) == langevin(x));
    CHECK(kappa_over_sinh(x) == kappa_over_sinh(x));
  }
}
