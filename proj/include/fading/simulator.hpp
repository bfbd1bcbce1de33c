#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "fading/doppler.hpp"
#include "fading/secondorder.hpp"

namespace fading {

/// Sum-of-sinusoids channel configuration. carrier_offset is the fixed
/// observation frequency; its phase contribution is absorbed into the
/// uniform initial phases and kept only as metadata.
struct ChannelConfig {
  std::size_t n_paths;
  double omega;  // local average power, > 0
  VmfScattering scat;
  MotionConfig motion;
  double carrier_offset = 0.0;
  std::uint64_t seed = 0;

  ChannelConfig(std::size_t n_paths_, double omega_, const VmfScattering& scat_,
                const MotionConfig& motion_, double carrier_offset_ = 0.0,
                std::uint64_t seed_ = 0);
};

/// One drawn channel: equal deterministic amplitudes sqrt(omega/n_paths),
/// i.i.d. uniform phases, vMF directions of arrival and their Doppler
/// shifts. Deterministic in the config seed.
struct ChannelRealization {
  std::vector<double> amplitudes;
  std::vector<double> phases;  // radians in [0, 2 pi)
  std::vector<Direction3> doas;
  std::vector<double> dopplers;  // Hz, |f_D^n| <= max_doppler
  double max_doppler;            // f_m of the generating motion
  double omega;
};

ChannelRealization realize(const ChannelConfig& config);

/// Deterministic per-realization sub-seed for multi-realization runs; the
/// aggregate is identical no matter how realizations are scheduled.
std::uint64_t realization_seed(std::uint64_t seed, std::uint64_t index);

/// Complex channel coefficient sampled at t_i = i dt over [0, duration]:
/// H(t) = sum_n A_n exp(j (phi0_n - 2 pi f_D^n t)).
/// OpenMP-parallel over samples; bit-identical to synthesize_reference.
std::vector<std::complex<double>> synthesize(const ChannelRealization& real,
                                             double duration, double dt);

/// Serial reference implementation of the synthesis kernel.
std::vector<std::complex<double>> synthesize_reference(
    const ChannelRealization& real, double duration, double dt);

/// Sampled envelope |H(t_i)| with its sampling metadata. The sampling
/// contract dt * f_m <= 1/32 keeps crossing-count bias below ~1%.
struct EnvelopeSeries {
  std::vector<double> samples;
  double dt;
  double rms_ref;  // sqrt(omega)
};

EnvelopeSeries envelope(const ChannelRealization& real, double duration,
                        double dt);

/// Empirical level-crossing and fade-duration estimates. Crossings are
/// strict up-crossings (s_i < threshold <= s_{i+1}); fades touching either
/// series boundary are excluded from the AFD. afd_hat is NaN at levels with
/// no completed fade.
struct EmpiricalSecondOrder {
  std::vector<NormalizedLevel> levels;
  std::vector<double> lcr_hat;              // crossings/s
  std::vector<double> afd_hat;              // s
  std::vector<std::size_t> n_crossings;
  std::vector<std::size_t> n_fades;         // completed fades only
  std::vector<double> total_fade_time;      // s, over completed fades
};

EmpiricalSecondOrder estimate_lcr_afd(const EnvelopeSeries& series,
                                      const std::vector<NormalizedLevel>& levels);

/// Sample mean / unbiased variance of the per-path Doppler shifts;
/// mean_square is reconstructed as mean^2 + variance. Requires >= 2 paths.
DopplerMoments estimate_doppler_moments(const ChannelRealization& real);

}  // namespace fading
