#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fading::verification {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
};

/// Monte-Carlo verification scale. The defaults keep the complete closure
/// run within a couple of minutes on a laptop.
struct McScale {
  std::size_t n_paths = 128;
  int realizations = 20;
  double duration_fm = 400.0;  // per-realization duration in units of 1/f_m
  int dt_factor = 32;
  double f_m = 100.0;  // Hz; the statistics are scale-free in f_m
};

/// Isotropic limit: spread equals f_m/sqrt(3) to 1e-12 relative and the mean
/// vanishes, for f_m in {1, 50, 1000} across the beta range.
CheckResult check_isotropic_spread();

/// Closed-form mean/mean-square/spread against quadrature moments on the
/// grid kappa in {0, 0.1, 1, 3, 10, 30, 100} x beta in {0..180}; agreement
/// within 1e-8 relative to max(|oracle|, f_m^n). `wkappa_bias` is a fault
/// injection hook: a nonzero value perturbs the closed-form route by the
/// exact effect of w_kappa -> w_kappa + bias and must trip this check.
CheckResult check_oracle_agreement(double wkappa_bias = 0.0);

/// Closed-form moment integral vs quadrature on 100 random (b, c) pairs
/// with kappa <= 50 (1e-9 relative), plus first/second central-difference
/// derivatives in b reproducing the order-1/2 moment formulas within 1e-6.
CheckResult check_istar_closure(std::uint64_t seed);

/// Grid search of the crossing-rate maximum for sigma_d in {0.1, 1, 10}:
/// located at rho = 1/sqrt(2) within one grid step, value within 1e-10
/// relative of sigma_d sqrt(2 pi / e).
CheckResult check_max_lcr_law();

/// lcr * afd = 1 - e^{-rho^2} within 1e-12 relative at every curve point.
CheckResult check_lcr_afd_identity(const std::vector<double>& level_dbs);

/// Exact pointwise orderings: LCR grows with beta in {0, 45, 90} at
/// kappa = 10; LCR falls and AFD grows as kappa runs through
/// {0, 1, 10, 100} at beta = 0.
CheckResult check_ordering(const std::vector<double>& level_dbs);

/// Sampler law: for kappa in {0.5, 2, 10}, the mean axial component of 1e6
/// draws matches the Langevin function within 4 standard errors.
CheckResult check_sampler_law(std::uint64_t seed);

/// End-to-end Monte-Carlo closure for (kappa, beta) in
/// {(0, 60), (10, 0), (10, 90)} degrees: empirical LCR within 5% and AFD
/// within 8% at -10/-3/0 dB, envelope Rayleigh by a KS test at significance
/// 0.001 (asymptotic critical value).
CheckResult check_monte_carlo_closure(std::uint64_t seed, const McScale& scale);

/// kappa = 700 keeps every analytic operation finite; the kappa = 0 branch
/// returns the exact limits instead of NaN.
CheckResult check_stability_extremes();

}  // namespace fading::verification
