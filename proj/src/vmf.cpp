#include "fading/vmf.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fading/rng.hpp"
#include "fading/specfun.hpp"

namespace fading {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_angles_in_domain(const AnglePair& a) {
  if (!std::isfinite(a.phi) || std::abs(a.phi) > kPi)
    throw std::domain_error("AnglePair: |phi| must be <= pi");
  if (!std::isfinite(a.psi) || std::abs(a.psi) > 0.5 * kPi)
    throw std::domain_error("AnglePair: |psi| must be <= pi/2");
}

// Householder reflection taking the z pole onto `target`; identity when the
// target already is the pole. det = -1, which is irrelevant here because the
// azimuth about the pole is uniform.
struct PoleRotation {
  explicit PoleRotation(const Direction3& target) {
    const double vx = -target.x;
    const double vy = -target.y;
    const double vz = 1.0 - target.z;
    const double n2 = vx * vx + vy * vy + vz * vz;
    if (n2 < 1e-28) {
      identity = true;
      return;
    }
    const double n = std::sqrt(n2);
    ux = vx / n;
    uy = vy / n;
    uz = vz / n;
  }

  Direction3 apply(double x, double y, double z) const {
    if (identity) return Direction3{x, y, z};
    const double p = 2.0 * (ux * x + uy * y + uz * z);
    return Direction3{x - p * ux, y - p * uy, z - p * uz};
  }

  bool identity = false;
  double ux = 0.0, uy = 0.0, uz = 0.0;
};

// One vMF draw as a pure function of the element index; shared by the
// OpenMP kernel and the serial reference so the sequences coincide bitwise.
Direction3 sample_one(double kappa, double one_minus_exp_m2k,
                      const PoleRotation& rot, const CounterRng& rng,
                      std::uint64_t i) {
  const double xi = rng.uniform(i, 0);
  const double theta = kTwoPi * rng.uniform(i, 1);
  // Inverse CDF of the axial component u ~ exp(kappa u) on [-1, 1]:
  // u = 1 + log(xi + (1 - xi) e^{-2 kappa}) / kappa, in cancellation-safe form.
  double u;
  if (kappa == 0.0) {
    u = 2.0 * xi - 1.0;
  } else {
    u = 1.0 + std::log1p((xi - 1.0) * one_minus_exp_m2k) / kappa;
    if (u < -1.0) u = -1.0;
  }
  const double r = std::sqrt(std::fmax(0.0, 1.0 - u * u));
  const Direction3 d =
      rot.apply(r * std::cos(theta), r * std::sin(theta), u);
  const double norm = std::sqrt(d.x * d.x + d.y * d.y + d.z * d.z);
  return Direction3{d.x / norm, d.y / norm, d.z / norm};
}

}  // namespace

Direction3 unit_direction(double x, double y, double z) {
  const double n2 = x * x + y * y + z * z;
  if (!std::isfinite(n2) || n2 <= 0.0)
    throw std::domain_error("unit_direction: vector must be finite and nonzero");
  const double n = std::sqrt(n2);
  return Direction3{x / n, y / n, z / n};
}

double dot(const Direction3& a, const Direction3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

VmfScattering::VmfScattering(double mu_phi_, double mu_psi_, double kappa_)
    : mu_phi(mu_phi_), mu_psi(mu_psi_), kappa(kappa_) {
  if (!std::isfinite(mu_phi) || mu_phi <= -kPi || mu_phi > kPi)
    throw std::domain_error("VmfScattering: mu_phi must lie in (-pi, pi]");
  if (!std::isfinite(mu_psi) || std::abs(mu_psi) > 0.5 * kPi)
    throw std::domain_error("VmfScattering: mu_psi must lie in [-pi/2, pi/2]");
  if (!std::isfinite(kappa) || kappa < 0.0)
    throw std::domain_error("VmfScattering: kappa must be finite and >= 0");
}

double vmf_pdf(const VmfScattering& model, const AnglePair& angles) {
  require_angles_in_domain(angles);
  // Cosine of the angle between the direction and the mean direction.
  const double d = std::cos(model.mu_psi) * std::cos(angles.psi) *
                       std::cos(angles.phi - model.mu_phi) +
                   std::sin(model.mu_psi) * std::sin(angles.psi);
  // kappa/(4 pi sinh kappa) e^{kappa d} with the e^{kappa} pulled into the
  // prefactor; the remaining exponent kappa (d - 1) is <= 0.
  return std::cos(angles.psi) / (4.0 * kPi) *
         kappa_over_sinh_scaled(model.kappa) *
         std::exp(model.kappa * (std::fmin(d, 1.0) - 1.0));
}

Direction3 mean_direction(const VmfScattering& model) {
  return angles_to_direction(AnglePair{model.mu_phi, model.mu_psi});
}

Direction3 angles_to_direction(const AnglePair& a) {
  const double cpsi = std::cos(a.psi);
  return Direction3{std::cos(a.phi) * cpsi, std::sin(a.phi) * cpsi,
                    std::sin(a.psi)};
}

AnglePair direction_to_angles(const Direction3& d) {
  const double z = std::fmin(1.0, std::fmax(-1.0, d.z));
  if (std::abs(z) >= 1.0 || (d.x == 0.0 && d.y == 0.0))
    return AnglePair{0.0, std::asin(z)};
  return AnglePair{std::atan2(d.y, d.x), std::asin(z)};
}

std::vector<Direction3> sample_directions(const VmfScattering& model,
                                          std::size_t n,
                                          std::uint64_t rng_seed) {
  if (n < 1) throw std::domain_error("sample_directions: n must be >= 1");
  const CounterRng rng(rng_seed, rng_stream::kDirections);
  const PoleRotation rot(mean_direction(model));
  const double om = -std::expm1(-2.0 * model.kappa);
  std::vector<Direction3> out(n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < std::ptrdiff_t(n); ++i)
    out[std::size_t(i)] =
        sample_one(model.kappa, om, rot, rng, std::uint64_t(i));
  return out;
}

std::vector<Direction3> sample_directions_reference(const VmfScattering& model,
                                                    std::size_t n,
                                                    std::uint64_t rng_seed) {
  if (n < 1) throw std::domain_error("sample_directions: n must be >= 1");
  const CounterRng rng(rng_seed, rng_stream::kDirections);
  const PoleRotation rot(mean_direction(model));
  const double om = -std::expm1(-2.0 * model.kappa);
  std::vector<Direction3> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = sample_one(model.kappa, om, rot, rng, i);
  return out;
}

}  // namespace fading
