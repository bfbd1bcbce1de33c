#include "fading/simulator.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "fading/rng.hpp"

namespace fading {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::size_t sample_count(double duration, double dt) {
  if (!std::isfinite(dt) || dt <= 0.0)
    throw std::invalid_argument("envelope: dt must be finite and > 0");
  if (!std::isfinite(duration) || duration < dt)
    throw std::invalid_argument("envelope: duration must be >= dt");
  return std::size_t(std::floor(duration / dt)) + 1;
}

void check_sampling_contract(const ChannelRealization& real, double dt) {
  if (dt * real.max_doppler > (1.0 / 32.0) * (1.0 + 1e-12))
    throw std::invalid_argument(
        "envelope: sampling contract violated, need dt * f_m <= 1/32");
}

std::complex<double> sample_at(const ChannelRealization& real, double t) {
  double re = 0.0, im = 0.0;
  const std::size_t n = real.amplitudes.size();
  for (std::size_t k = 0; k < n; ++k) {
    const double arg = real.phases[k] - kTwoPi * real.dopplers[k] * t;
    re += real.amplitudes[k] * std::cos(arg);
    im += real.amplitudes[k] * std::sin(arg);
  }
  return {re, im};
}

}  // namespace

ChannelConfig::ChannelConfig(std::size_t n_paths_, double omega_,
                             const VmfScattering& scat_,
                             const MotionConfig& motion_,
                             double carrier_offset_, std::uint64_t seed_)
    : n_paths(n_paths_),
      omega(omega_),
      scat(scat_),
      motion(motion_),
      carrier_offset(carrier_offset_),
      seed(seed_) {
  if (n_paths < 1)
    throw std::domain_error("ChannelConfig: n_paths must be >= 1");
  if (!std::isfinite(omega) || omega <= 0.0)
    throw std::domain_error("ChannelConfig: omega must be finite and > 0");
  if (!std::isfinite(carrier_offset))
    throw std::domain_error("ChannelConfig: carrier_offset must be finite");
}

std::uint64_t realization_seed(std::uint64_t seed, std::uint64_t index) {
  return CounterRng(seed, rng_stream::kRealizations).bits(index, 0);
}

ChannelRealization realize(const ChannelConfig& config) {
  ChannelRealization real;
  const std::size_t n = config.n_paths;
  real.amplitudes.assign(n, std::sqrt(config.omega / double(n)));
  real.doas = sample_directions(config.scat, n, config.seed);
  real.phases.resize(n);
  real.dopplers.resize(n);
  real.max_doppler = config.motion.max_doppler();
  real.omega = config.omega;
  const CounterRng phase_rng(config.seed, rng_stream::kPhases);
  const double f_m = real.max_doppler;
  for (std::size_t i = 0; i < n; ++i) {
    real.phases[i] = kTwoPi * phase_rng.uniform(i, 0);
    real.dopplers[i] = f_m * dot(real.doas[i], config.motion.direction);
  }
  return real;
}

std::vector<std::complex<double>> synthesize(const ChannelRealization& real,
                                             double duration, double dt) {
  const std::size_t n = sample_count(duration, dt);
  std::vector<std::complex<double>> out(n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < std::ptrdiff_t(n); ++i)
    out[std::size_t(i)] = sample_at(real, dt * double(i));
  return out;
}

std::vector<std::complex<double>> synthesize_reference(
    const ChannelRealization& real, double duration, double dt) {
  const std::size_t n = sample_count(duration, dt);
  std::vector<std::complex<double>> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = sample_at(real, dt * double(i));
  return out;
}

EnvelopeSeries envelope(const ChannelRealization& real, double duration,
                        double dt) {
  check_sampling_contract(real, dt);
  const auto series = synthesize(real, duration, dt);
  EnvelopeSeries out;
  out.dt = dt;
  out.rms_ref = std::sqrt(real.omega);
  out.samples.resize(series.size());
  for (std::size_t i = 0; i < series.size(); ++i)
    out.samples[i] = std::abs(series[i]);
  return out;
}

EmpiricalSecondOrder estimate_lcr_afd(
    const EnvelopeSeries& series, const std::vector<NormalizedLevel>& levels) {
  const auto& s = series.samples;
  if (s.size() < 2)
    throw std::domain_error("estimate_lcr_afd: series length must be >= 2");
  const double duration = double(s.size() - 1) * series.dt;
  EmpiricalSecondOrder out;
  out.levels = levels;
  for (const auto& level : levels) {
    const double thr = level.value() * series.rms_ref;
    std::size_t crossings = 0;
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
      if (s[i] < thr && s[i + 1] >= thr) ++crossings;
    // Fades are maximal runs strictly below the threshold; runs touching a
    // boundary are dropped from both numerator and denominator.
    std::size_t fades = 0;
    double fade_time = 0.0;
    std::size_t run_start = 0;
    bool in_run = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] < thr) {
        if (!in_run) {
          in_run = true;
          run_start = i;
        }
      } else if (in_run) {
        in_run = false;
        if (run_start > 0) {
          ++fades;
          fade_time += double(i - run_start) * series.dt;
        }
      }
    }
    out.n_crossings.push_back(crossings);
    out.n_fades.push_back(fades);
    out.total_fade_time.push_back(fade_time);
    out.lcr_hat.push_back(double(crossings) / duration);
    out.afd_hat.push_back(fades > 0
                              ? fade_time / double(fades)
                              : std::numeric_limits<double>::quiet_NaN());
  }
  return out;
}

DopplerMoments estimate_doppler_moments(const ChannelRealization& real) {
  const auto& f = real.dopplers;
  if (f.size() < 2)
    throw std::domain_error("estimate_doppler_moments: need >= 2 paths");
  double mean = 0.0;
  for (double v : f) mean += v;
  mean /= double(f.size());
  double ss = 0.0;
  for (double v : f) ss += (v - mean) * (v - mean);
  const double var = ss / double(f.size() - 1);
  return DopplerMoments{mean, mean * mean + var, std::sqrt(var)};
}

}  // namespace fading
