#include "fading/vmf.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "fading/oracle.hpp"
#include "fading/rng.hpp"
#include "fading/specfun.hpp"

using namespace fading;

namespace {

constexpr double kPi = std::numbers::pi;

double rel(double actual, double expected) {
  return std::abs(actual - expected) / std::abs(expected);
}

// 0.999 chi-square quantile by the Wilson-Hilferty approximation; accurate
// to well under a percent for the dof used here.
double chi2_q999(int dof) {
  const double z = 3.0902323061678132;
  const double t = 2.0 / (9.0 * dof);
  const double base = 1.0 - t + z * std::sqrt(t);
  return dof * base * base * base;
}

// Exact CDF of the axial component u ~ e^{kappa u} on [-1, 1], written
// directly from the density (independent of the sampler's inverse form).
double axial_cdf(double kappa, double u) {
  if (kappa == 0.0) return 0.5 * (u + 1.0);
  return (std::exp(kappa * u) - std::exp(-kappa)) / (2.0 * std::sinh(kappa));
}

}  // namespace

TEST_CASE("VmfScattering validates its parameters") {
  CHECK_NOTHROW(VmfScattering(kPi, -0.5 * kPi, 0.0));
  CHECK_THROWS_AS(VmfScattering(-kPi, 0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(VmfScattering(0.0, 2.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(VmfScattering(0.0, 0.0, -1.0), std::domain_error);
  CHECK_THROWS_AS(VmfScattering(0.0, 0.0, std::nan("")), std::domain_error);
}

TEST_CASE("vmf_pdf: isotropic case is cos(psi)/(4 pi)") {
  const VmfScattering iso(0.0, 0.0, 0.0);
  for (double phi : {-3.0, -0.5, 0.0, 2.0})
    for (double psi : {-1.5, -0.3, 0.0, 0.7}) {
      CHECK(rel(vmf_pdf(iso, AnglePair{phi, psi}),
                std::cos(psi) / (4.0 * kPi)) < 1e-14);
    }
}

TEST_CASE("vmf_pdf at the mode, kappa = 5") {
  const VmfScattering scat(0.0, 0.0, 5.0);
  CHECK(rel(vmf_pdf(scat, AnglePair{0.0, 0.0}), 0.79581084521595370685) <
        1e-13);
}

TEST_CASE("vmf_pdf domain and stability") {
  const VmfScattering scat(0.0, 0.0, 1.0);
  CHECK_THROWS_AS(vmf_pdf(scat, AnglePair{3.5, 0.0}), std::domain_error);
  CHECK_THROWS_AS(vmf_pdf(scat, AnglePair{0.0, 1.8}), std::domain_error);
  const VmfScattering sharp(0.5, 0.25, 700.0);
  const double at_mode = vmf_pdf(sharp, AnglePair{0.5, 0.25});
  CHECK(std::isfinite(at_mode));
  CHECK(at_mode > 0.0);
  CHECK(vmf_pdf(sharp, AnglePair{-2.5, -0.7}) >= 0.0);
}

TEST_CASE("vmf_pdf normalization via 2-D quadrature") {
  const QuadratureSpec spec{32, 8, 1e-11};
  for (double kappa : {0.0, 1.0, 10.0, 100.0}) {
    const VmfScattering scat(0.4, -0.3, kappa);
    CHECK(std::abs(sphere_normalization(scat, spec) - 1.0) < 1e-9);
  }
}

TEST_CASE("vmf_pdf rotational symmetry: depends on angles only through the "
          "dot product and cos(psi)") {
  const VmfScattering scat(0.7, 0.2, 8.0);
  const Direction3 kmu = mean_direction(scat);
  const CounterRng rng(7, 7);
  for (int i = 0; i < 200; ++i) {
    // Two directions on the same cone around k_mu.
    const double ang = kPi * rng.uniform(std::uint64_t(i), 0);
    const auto on_cone = [&](double azimuth) {
      const double ca = std::cos(ang), sa = std::sin(ang);
      // Build in the frame where k_mu is the pole, rotate back using a
      // Householder-free construction: any orthonormal pair around k_mu.
      const Direction3 ref = std::abs(kmu.z) < 0.9
                                 ? Direction3{0.0, 0.0, 1.0}
                                 : Direction3{1.0, 0.0, 0.0};
      const double d = dot(ref, kmu);
      Direction3 e1 = unit_direction(ref.x - d * kmu.x, ref.y - d * kmu.y,
                                     ref.z - d * kmu.z);
      const Direction3 e2 =
          unit_direction(kmu.y * e1.z - kmu.z * e1.y,
                         kmu.z * e1.x - kmu.x * e1.z,
                         kmu.x * e1.y - kmu.y * e1.x);
      return unit_direction(
          ca * kmu.x + sa * (std::cos(azimuth) * e1.x + std::sin(azimuth) * e2.x),
          ca * kmu.y + sa * (std::cos(azimuth) * e1.y + std::sin(azimuth) * e2.y),
          ca * kmu.z + sa * (std::cos(azimuth) * e1.z + std::sin(azimuth) * e2.z));
    };
    const AnglePair a = direction_to_angles(on_cone(0.9));
    const AnglePair b = direction_to_angles(on_cone(-2.2));
    const double va = vmf_pdf(scat, a) / std::cos(a.psi);
    const double vb = vmf_pdf(scat, b) / std::cos(b.psi);
    CHECK(rel(va, vb) < 1e-11);
  }
}

TEST_CASE("mean_direction basis cases") {
  const auto close = [](const Direction3& d, double x, double y, double z) {
    return std::abs(d.x - x) < 1e-15 && std::abs(d.y - y) < 1e-15 &&
           std::abs(d.z - z) < 1e-15;
  };
  CHECK(close(mean_direction(VmfScattering(0.0, 0.0, 1.0)), 1, 0, 0));
  CHECK(close(mean_direction(VmfScattering(0.5 * kPi, 0.0, 1.0)), 0, 1, 0));
  CHECK(close(mean_direction(VmfScattering(0.0, 0.5 * kPi, 1.0)), 0, 0, 1));
}

TEST_CASE("angle/direction round trip") {
  const AnglePair zero{0.0, 0.0};
  const Direction3 dx = angles_to_direction(zero);
  CHECK(dx.x == 1.0);
  const Direction3 mx = angles_to_direction(AnglePair{kPi, 0.0});
  CHECK(mx.x == -1.0);
  CHECK(std::abs(mx.y) < 1e-15);

  const CounterRng rng(11, 3);
  for (std::uint64_t i = 0; i < 10000; ++i) {
    const AnglePair a{(2.0 * rng.uniform(i, 0) - 1.0) * kPi,
                      (2.0 * rng.uniform(i, 1) - 1.0) * 0.5 * kPi};
    const AnglePair back = direction_to_angles(angles_to_direction(a));
    CHECK(std::abs(back.psi - a.psi) < 1e-12);
    // Azimuth wraps at +-pi; compare circularly.
    const double dphi = std::remainder(back.phi - a.phi, 2.0 * kPi);
    CHECK(std::abs(dphi) < 1e-12);
  }
}

TEST_CASE("direction_to_angles pole convention") {
  CHECK(direction_to_angles(Direction3{0.0, 0.0, 1.0}).phi == 0.0);
  CHECK(direction_to_angles(Direction3{0.0, 0.0, -1.0}).phi == 0.0);
  CHECK(direction_to_angles(Direction3{0.0, 0.0, 1.0}).psi ==
        doctest::Approx(0.5 * kPi));
}

TEST_CASE("sampler: isotropic draws average to the zero vector") {
  const VmfScattering iso(0.0, 0.0, 0.0);
  const auto draws = sample_directions(iso, 1000000, 2024);
  double sx = 0.0, sy = 0.0, sz = 0.0;
  for (const auto& d : draws) {
    sx += d.x;
    sy += d.y;
    sz += d.z;
  }
  const double n = double(draws.size());
  const double norm =
      std::sqrt(sx * sx + sy * sy + sz * sz) / n;
  CHECK(norm < 0.005);
}

TEST_CASE("sampler: mean axial component matches the Langevin function") {
  const VmfScattering scat(1.1, 0.4, 10.0);
  const Direction3 kmu = mean_direction(scat);
  const auto draws = sample_directions(scat, 1000000, 99);
  double sum = 0.0, sumsq = 0.0;
  for (const auto& d : draws) {
    const double u = dot(d, kmu);
    sum += u;
    sumsq += u * u;
  }
  const double n = double(draws.size());
  const double mean = sum / n;
  const double se = std::sqrt((sumsq / n - mean * mean) / n);
  CHECK(std::abs(mean - 0.90000000412230725337) <= 3.0 * se);
}

TEST_CASE("sampler: near-point concentration stays within 0.01 radians") {
  const VmfScattering scat(-0.8, 0.3, 1e6);
  const Direction3 kmu = mean_direction(scat);
  for (const auto& d : sample_directions(scat, 100, 5)) {
    const double ang = std::acos(std::fmin(1.0, dot(d, kmu)));
    CHECK(ang < 0.01);
  }
}

TEST_CASE("sampler: axial histogram matches e^{kappa u} (chi-square, 0.001)") {
  const std::size_t n = 200000;
  const int bins = 40;
  for (double kappa : {0.5, 2.0, 10.0}) {
    const VmfScattering scat(0.3, -0.6, kappa);
    const Direction3 kmu = mean_direction(scat);
    const auto draws = sample_directions(scat, n, 31 + std::uint64_t(kappa));
    std::vector<double> observed(bins, 0.0);
    for (const auto& d : draws) {
      const double u = std::fmin(1.0, std::fmax(-1.0, dot(d, kmu)));
      int b = int((u + 1.0) / 2.0 * bins);
      if (b == bins) b = bins - 1;
      observed[std::size_t(b)] += 1.0;
    }
    // Merge cells until every expected count is >= 10.
    std::vector<double> obs_m, exp_m;
    double o_acc = 0.0, e_acc = 0.0;
    for (int b = 0; b < bins; ++b) {
      const double lo = -1.0 + 2.0 * b / bins;
      const double hi = -1.0 + 2.0 * (b + 1) / bins;
      o_acc += observed[std::size_t(b)];
      e_acc += double(n) * (axial_cdf(kappa, hi) - axial_cdf(kappa, lo));
      if (e_acc >= 10.0) {
        obs_m.push_back(o_acc);
        exp_m.push_back(e_acc);
        o_acc = e_acc = 0.0;
      }
    }
    if (e_acc > 0.0 && !exp_m.empty()) {
      obs_m.back() += o_acc;
      exp_m.back() += e_acc;
    }
    double chi2 = 0.0;
    for (std::size_t b = 0; b < obs_m.size(); ++b)
      chi2 += (obs_m[b] - exp_m[b]) * (obs_m[b] - exp_m[b]) / exp_m[b];
    CHECK(chi2 < chi2_q999(int(obs_m.size()) - 1));
  }
}

TEST_CASE("sampler: deterministic and thread-partition independent") {
  const VmfScattering scat(0.2, 0.1, 3.0);
  const auto a = sample_directions(scat, 5000, 77);
  const auto b = sample_directions(scat, 5000, 77);
  const auto c = sample_directions_reference(scat, 5000, 77);
  REQUIRE(a.size() == b.size());
  REQUIRE(a.size() == c.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].x == b[i].x);
    CHECK(a[i].x == c[i].x);
    CHECK(a[i].y == c[i].y);
    CHECK(a[i].z == c[i].z);
  }
  const auto other = sample_directions(scat, 16, 78);
  CHECK(other[0].x != a[0].x);
  CHECK_THROWS_AS(sample_directions(scat, 0, 1), std::domain_error);
}

TEST_CASE("sampled directions are unit vectors") {
  const VmfScattering scat(2.0, 1.0, 25.0);
  for (const auto& d : sample_directions(scat, 2000, 123)) {
    CHECK(std::abs(dot(d, d) - 1.0) < 1e-12);
  }
}
