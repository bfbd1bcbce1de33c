#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "fading/config.hpp"
#include "fading/verification.hpp"

namespace fading::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitVerification = 2;
inline constexpr int kExitIo = 3;

/// Output path problems; maps to exit code 3.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Closed-form and quadrature moments side by side, human readable.
int cmd_moments(const ExperimentConfig& config, std::ostream& out);

/// Level-crossing rate / fade duration / Doppler density curves as CSV
/// (config.output, stdout when empty).
int cmd_lcr(const ExperimentConfig& config);
int cmd_afd(const ExperimentConfig& config);
int cmd_pdf(const ExperimentConfig& config);

/// One sum-of-sinusoids trace: time, I/Q, envelope, envelope in dB relative
/// to the RMS. Byte-identical across runs for a fixed config and seed.
int cmd_simulate(const ExperimentConfig& config);

/// Figure data as CSV files under the config.output directory:
/// fig1 - normalized Doppler spread over (kappa, beta), closed and oracle;
/// fig2 - LCR per motion direction plus the min/max envelope;
/// fig3/fig4 - LCR/AFD across scattering concentrations at beta = 0.
/// `which` selects fig1..fig4 or all.
int cmd_figures(const std::string& which, const ExperimentConfig& config);

struct VerifyOptions {
  double wkappa_bias = 0.0;  // fault-injection hook, see verification.hpp
  bool analytic_only = false;
};

/// Full verification sweep: analytic checks, sampler law, Monte-Carlo
/// closure and CSV determinism. One PASS/FAIL line per check; exit code 2
/// on any failure.
int cmd_verify(const ExperimentConfig& config, const VerifyOptions& options,
               std::ostream& out);

/// Renders the simulation trace twice and compares bytes.
verification::CheckResult csv_determinism_check(const ExperimentConfig& config);

/// The simulation trace serializer behind cmd_simulate.
void write_simulation_csv(const ExperimentConfig& config, std::ostream& out);

}  // namespace fading::cli
