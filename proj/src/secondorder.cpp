#include "fading/secondorder.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace fading {

namespace {

const double kTwoSqrtPi = 2.0 * std::sqrt(std::numbers::pi);

void require_sigma(double sigma_d, const char* what) {
  if (!std::isfinite(sigma_d) || sigma_d < 0.0)
    throw std::domain_error(std::string(what) +
                            ": sigma_d must be finite and >= 0");
}

}  // namespace

NormalizedLevel::NormalizedLevel(double rho) : rho_(rho) {
  if (!std::isfinite(rho_) || rho_ <= 0.0)
    throw std::domain_error("NormalizedLevel: rho must be finite and > 0");
}

NormalizedLevel NormalizedLevel::from_db(double db) {
  return NormalizedLevel(std::pow(10.0, db / 20.0));
}

double NormalizedLevel::db() const { return 20.0 * std::log10(rho_); }

double lcr(double sigma_d, NormalizedLevel rho) {
  require_sigma(sigma_d, "lcr");
  const double r = rho.value();
  return kTwoSqrtPi * sigma_d * r * std::exp(-r * r);
}

double afd(double sigma_d, NormalizedLevel rho) {
  require_sigma(sigma_d, "afd");
  if (sigma_d == 0.0) return std::numeric_limits<double>::infinity();
  const double r = rho.value();
  return std::expm1(r * r) / (kTwoSqrtPi * sigma_d * r);
}

MaxLcr max_lcr(double sigma_d) {
  require_sigma(sigma_d, "max_lcr");
  return MaxLcr{NormalizedLevel(1.0 / std::sqrt(2.0)),
                sigma_d * std::sqrt(2.0 * std::numbers::pi / std::numbers::e)};
}

LcrAfdCurve curve(const VmfScattering& scat, const MotionConfig& motion,
                  const std::vector<NormalizedLevel>& levels) {
  if (levels.empty()) throw std::domain_error("curve: empty level grid");
  for (std::size_t i = 1; i < levels.size(); ++i)
    if (!(levels[i].value() > levels[i - 1].value()))
      throw std::domain_error("curve: levels must be strictly increasing");
  const double sigma = doppler_spread(scat, geometry(scat, motion));
  LcrAfdCurve out;
  out.levels = levels;
  out.lcr.reserve(levels.size());
  out.afd.reserve(levels.size());
  for (const auto& level : levels) {
    out.lcr.push_back(lcr(sigma, level));
    out.afd.push_back(afd(sigma, level));
  }
  return out;
}

}  // namespace fading
