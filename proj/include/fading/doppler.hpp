#pragma once

#include <vector>

#include "fading/vmf.hpp"

namespace fading {

/// Mobile motion: speed (m/s, >= 0), unit direction, carrier wavelength
/// (m, > 0). The maximum Doppler shift is f_m = speed / wavelength.
struct MotionConfig {
  double speed;
  Direction3 direction;
  double wavelength;

  MotionConfig(double speed_, const Direction3& direction_, double wavelength_);
  double max_doppler() const { return speed / wavelength; }
};

/// Doppler geometry of a scattering/motion pair: f_m = |v|/lambda, the angle
/// beta in [0, pi] between the mean scattering direction and the motion
/// direction, and f_mu = f_m cos(beta).
struct DopplerGeometry {
  double f_m;
  double f_mu;
  double beta;

  DopplerGeometry(double f_m_, double f_mu_, double beta_);
  static DopplerGeometry from_beta(double f_m, double beta);

  /// f_mu / f_m, well-defined through beta even when f_m = 0.
  double f_mu_hat() const;
};

DopplerGeometry geometry(const VmfScattering& scat, const MotionConfig& motion);

/// First and second Doppler spectral moments and their standard deviation.
struct DopplerMoments {
  double mean;         // Hz
  double mean_square;  // Hz^2
  double spread;       // Hz
};

/// Doppler probability density at f, |f| <= f_m. Requires f_m > 0
/// (degenerate geometry otherwise). Finite for any kappa; for kappa beyond
/// ~700 the density approaches a point mass and relative accuracy degrades.
double doppler_pdf(const VmfScattering& scat, const DopplerGeometry& geom,
                   double f);

/// Mean Doppler shift w_kappa * f_mu.
double mean_doppler(const VmfScattering& scat, const DopplerGeometry& geom);

/// Mean squared Doppler (w/kappa) f_m^2 + (1 - 3 w/kappa) f_mu^2, with the
/// exact isotropic limit f_m^2 / 3 at kappa = 0.
double mean_square_doppler(const VmfScattering& scat,
                           const DopplerGeometry& geom);

/// Doppler spread sqrt((w/kappa) f_m^2 + (1 - 3 w/kappa - w^2) f_mu^2),
/// with the exact isotropic limit f_m / sqrt(3) at kappa = 0.
double doppler_spread(const VmfScattering& scat, const DopplerGeometry& geom);

DopplerMoments doppler_moments(const VmfScattering& scat,
                               const DopplerGeometry& geom);

/// Substitution parameters of the moment-generating integral:
/// a = kappa / (2 sinh kappa), b = -kappa f_mu_hat, c = kappa sqrt(1 - f_mu_hat^2).
struct IStarParams {
  double a;
  double b;
  double c;

  IStarParams(double a_, double b_, double c_);
  static IStarParams from_cluster(double kappa, double f_mu_hat);
};

/// Closed form 2 sinh(sqrt(b^2+c^2)) / sqrt(b^2+c^2); 2 at b = c = 0.
double istar(const IStarParams& p);

/// E[(f_D/f_m)^n]. Orders 1 and 2 use the closed forms; n >= 3 is defined
/// through the quadrature engine. Requires n >= 1.
double normalized_moment(const VmfScattering& scat, const DopplerGeometry& geom,
                         int order);

struct WeightedCluster {
  double weight;
  VmfScattering scat;
};

/// Moments of a vMF mixture by linearity of expectation: weighted raw
/// moments combined, spread derived. Weights must be positive and sum to 1
/// within 1e-12.
DopplerMoments mixture_moments(const std::vector<WeightedCluster>& components,
                               const MotionConfig& motion);

}  // namespace fading
