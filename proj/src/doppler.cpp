#include "fading/doppler.hpp"

#include <cmath>
#include <stdexcept>

#include "fading/oracle.hpp"
#include "fading/specfun.hpp"

namespace fading {

namespace {

double clamp_unit(double x) { return std::fmin(1.0, std::fmax(-1.0, x)); }

// w_kappa / kappa with its kappa -> 0 limit 1/3.
double langevin_over_kappa(double kappa) {
  if (kappa == 0.0) return 1.0 / 3.0;
  return langevin(kappa) / kappa;
}

}  // namespace

MotionConfig::MotionConfig(double speed_, const Direction3& direction_,
                           double wavelength_)
    : speed(speed_), direction(direction_), wavelength(wavelength_) {
  if (!std::isfinite(speed) || speed < 0.0)
    throw std::domain_error("MotionConfig: speed must be finite and >= 0");
  if (!std::isfinite(wavelength) || wavelength <= 0.0)
    throw std::domain_error("MotionConfig: wavelength must be > 0");
  const double n2 = dot(direction, direction);
  if (std::abs(n2 - 1.0) > 1e-12)
    throw std::domain_error("MotionConfig: direction must be a unit vector");
}

DopplerGeometry::DopplerGeometry(double f_m_, double f_mu_, double beta_)
    : f_m(f_m_), f_mu(f_mu_), beta(beta_) {
  if (!std::isfinite(f_m) || f_m < 0.0)
    throw std::domain_error("DopplerGeometry: f_m must be finite and >= 0");
  if (!std::isfinite(beta) || beta < 0.0 || beta > std::acos(-1.0))
    throw std::domain_error("DopplerGeometry: beta must lie in [0, pi]");
  if (std::abs(f_mu - f_m * std::cos(beta)) > 1e-12 * std::fmax(f_m, 1.0))
    throw std::domain_error("DopplerGeometry: f_mu must equal f_m cos(beta)");
}

DopplerGeometry DopplerGeometry::from_beta(double f_m, double beta) {
  return DopplerGeometry(f_m, f_m * std::cos(beta), beta);
}

double DopplerGeometry::f_mu_hat() const { return std::cos(beta); }

DopplerGeometry geometry(const VmfScattering& scat,
                         const MotionConfig& motion) {
  const double f_m = motion.max_doppler();
  const double d = clamp_unit(dot(mean_direction(scat), motion.direction));
  return DopplerGeometry(f_m, f_m * d, std::acos(d));
}

double doppler_pdf(const VmfScattering& scat, const DopplerGeometry& geom,
                   double f) {
  if (geom.f_m <= 0.0)
    throw std::domain_error("doppler_pdf: degenerate geometry, f_m must be > 0");
  if (!std::isfinite(f) || std::abs(f) > geom.f_m)
    throw std::domain_error("doppler_pdf: |f| must be <= f_m");
  if (scat.kappa == 0.0) return 0.5 / geom.f_m;
  const double fh = clamp_unit(f / geom.f_m);
  const double fmu = clamp_unit(geom.f_mu / geom.f_m);
  const double c = scat.kappa * std::sqrt(std::fmax(0.0, 1.0 - fmu * fmu));
  const double s = std::sqrt(std::fmax(0.0, 1.0 - fh * fh));
  // Exponent relative to its maximum kappa; always <= 0, so the scaled
  // prefactor keeps the product finite up to arbitrarily large kappa.
  const double expo = scat.kappa * (fmu * fh - 1.0) + c * s;
  return 0.5 / geom.f_m * kappa_over_sinh_scaled(scat.kappa) *
         std::exp(std::fmin(expo, 0.0)) * bessel_i0_scaled(c * s);
}

double mean_doppler(const VmfScattering& scat, const DopplerGeometry& geom) {
  return langevin(scat.kappa) * geom.f_mu;
}

double mean_square_doppler(const VmfScattering& scat,
                           const DopplerGeometry& geom) {
  if (scat.kappa == 0.0) return geom.f_m * geom.f_m / 3.0;
  const double wok = langevin_over_kappa(scat.kappa);
  return wok * geom.f_m * geom.f_m + (1.0 - 3.0 * wok) * geom.f_mu * geom.f_mu;
}

double doppler_spread(const VmfScattering& scat, const DopplerGeometry& geom) {
  if (scat.kappa == 0.0) return geom.f_m / std::sqrt(3.0);
  const double w = langevin(scat.kappa);
  const double wok = langevin_over_kappa(scat.kappa);
  const double s2 = wok * geom.f_m * geom.f_m +
                    (1.0 - 3.0 * wok - w * w) * geom.f_mu * geom.f_mu;
  return std::sqrt(std::fmax(0.0, s2));
}

DopplerMoments doppler_moments(const VmfScattering& scat,
                               const DopplerGeometry& geom) {
  return DopplerMoments{mean_doppler(scat, geom),
                        mean_square_doppler(scat, geom),
                        doppler_spread(scat, geom)};
}

IStarParams::IStarParams(double a_, double b_, double c_) : a(a_), b(b_), c(c_) {
  if (!std::isfinite(a) || a <= 0.0)
    throw std::domain_error("IStarParams: a must be finite and > 0");
  if (!std::isfinite(b))
    throw std::domain_error("IStarParams: b must be finite");
  if (!std::isfinite(c) || c < 0.0)
    throw std::domain_error("IStarParams: c must be finite and >= 0");
}

IStarParams IStarParams::from_cluster(double kappa, double f_mu_hat) {
  const double fmu = std::fmin(1.0, std::fmax(-1.0, f_mu_hat));
  return IStarParams(0.5 * kappa_over_sinh(kappa), -kappa * fmu,
                     kappa * std::sqrt(std::fmax(0.0, 1.0 - fmu * fmu)));
}

double istar(const IStarParams& p) {
  const double r = std::hypot(p.b, p.c);
  if (r == 0.0) return 2.0;
  return 2.0 * std::sinh(r) / r;
}

double normalized_moment(const VmfScattering& scat, const DopplerGeometry& geom,
                         int order) {
  if (order < 1)
    throw std::domain_error("normalized_moment: order must be >= 1");
  const double fmu = geom.f_mu_hat();
  if (order == 1) return langevin(scat.kappa) * fmu;
  if (order == 2) {
    const double wok = langevin_over_kappa(scat.kappa);
    return wok + (1.0 - 3.0 * wok) * fmu * fmu;
  }
  return normalized_moment_by_quadrature(scat.kappa, fmu, order,
                                         QuadratureSpec{});
}

DopplerMoments mixture_moments(const std::vector<WeightedCluster>& components,
                               const MotionConfig& motion) {
  if (components.empty())
    throw std::domain_error("mixture_moments: at least one component required");
  double wsum = 0.0;
  for (const auto& c : components) {
    if (!std::isfinite(c.weight) || c.weight <= 0.0)
      throw std::domain_error("mixture_moments: weights must be > 0");
    wsum += c.weight;
  }
  if (std::abs(wsum - 1.0) > 1e-12)
    throw std::domain_error("mixture_moments: weights must sum to 1");
  double mean = 0.0;
  double mean_square = 0.0;
  for (const auto& c : components) {
    const DopplerGeometry geom = geometry(c.scat, motion);
    mean += c.weight * mean_doppler(c.scat, geom);
    mean_square += c.weight * mean_square_doppler(c.scat, geom);
  }
  const double var = std::fmax(0.0, mean_square - mean * mean);
  return DopplerMoments{mean, mean_square, std::sqrt(var)};
}

}  // namespace fading
