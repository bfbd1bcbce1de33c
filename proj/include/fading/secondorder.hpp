#pragma once

#include <vector>

#include "fading/doppler.hpp"

namespace fading {

/// Envelope level normalized to the RMS value sqrt(Omega); finite and > 0.
class NormalizedLevel {
 public:
  explicit NormalizedLevel(double rho);
  static NormalizedLevel from_db(double db);
  double value() const { return rho_; }
  double db() const;

 private:
  double rho_;
};

/// Level-crossing rate 2 sqrt(pi) sigma_d rho e^{-rho^2} of Rayleigh fading
/// with Doppler spread sigma_d.
double lcr(double sigma_d, NormalizedLevel rho);

/// Average fade duration (e^{rho^2} - 1) / (2 sqrt(pi) sigma_d rho).
/// sigma_d = 0 is the constant-envelope limit: returns +infinity.
double afd(double sigma_d, NormalizedLevel rho);

struct MaxLcr {
  NormalizedLevel level;  // always 1/sqrt(2), i.e. 3 dB below RMS
  double rate;            // sigma_d sqrt(2 pi / e)
};
MaxLcr max_lcr(double sigma_d);

/// LCR/AFD sampled on a level grid. For sigma_d > 0 every point satisfies
/// lcr * afd = 1 - e^{-rho^2} (the Rayleigh CDF below the level).
struct LcrAfdCurve {
  std::vector<NormalizedLevel> levels;
  std::vector<double> lcr;  // crossings/s
  std::vector<double> afd;  // s
};

/// Evaluates the closed-form pair on a strictly increasing level grid,
/// driving the Doppler spread from the scattering/motion pair.
LcrAfdCurve curve(const VmfScattering& scat, const MotionConfig& motion,
                  const std::vector<NormalizedLevel>& levels);

}  // namespace fading
