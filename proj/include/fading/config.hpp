#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fading/doppler.hpp"
#include "fading/secondorder.hpp"
#include "fading/vmf.hpp"

namespace fading::cli {

/// Raised on malformed or inconsistent configuration; maps to exit code 1.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Experiment description assembled from built-in defaults, an optional
/// `key = value` config file and command-line overrides. Angles enter in
/// degrees and are converted to radians exactly once, here.
struct ExperimentConfig {
  std::string scenario = "default";

  // scattering
  double mu_phi_deg = 0.0;
  double mu_psi_deg = 0.0;
  double kappa = 10.0;

  // motion; exactly one of carrier_hz / wavelength_m may be given
  // explicitly (the built-in default is wavelength_m = 0.125).
  double speed_mps = 30.0;
  double motion_azimuth_deg = 0.0;
  double motion_elevation_deg = 0.0;
  std::optional<double> carrier_hz;
  std::optional<double> wavelength_m;

  // level grid, dB relative to RMS
  double level_db_min = -30.0;
  double level_db_max = 10.0;
  double level_db_step = 0.25;

  // simulation block
  std::size_t n_paths = 128;
  double duration_fm = 400.0;          // duration in units of 1/f_m
  std::optional<double> duration_s;    // absolute override
  int dt_factor = 32;                  // dt = 1 / (dt_factor * f_m)
  int realizations = 20;
  double omega = 1.0;
  std::uint64_t seed = 20250810;

  std::string output;  // file path (or directory prefix for figures)

  // figure knobs
  std::vector<double> figure_kappas = {0, 1, 3, 10, 30, 100, 1000};
  std::vector<double> figure_betas_deg = {0, 45, 90, 135, 180};
  double fig1_beta_step_deg = 15.0;
  int pdf_points = 1001;

  /// Applies one `key = value` assignment; unknown keys or unparseable
  /// values raise ConfigError mentioning the key (and line when from file).
  void set(const std::string& key, const std::string& value);

  /// Consistency checks across fields; raises ConfigError naming the field.
  void validate() const;

  // derived views
  double wavelength() const;                // m
  double max_doppler() const;               // f_m = speed / wavelength
  VmfScattering scattering() const;
  MotionConfig motion() const;
  DopplerGeometry geometry() const;
  std::vector<NormalizedLevel> levels() const;
  std::vector<double> level_dbs() const;
  double duration() const;                  // s
  double dt() const;                        // s

  /// Deterministic one-line `key=value ...` echo of every parameter,
  /// sufficient to reproduce any emitted file.
  std::string echo() const;
};

/// Defaults + optional config file + `key=value` override strings.
ExperimentConfig load_config(const std::optional<std::string>& path,
                             const std::vector<std::string>& overrides);

}  // namespace fading::cli
