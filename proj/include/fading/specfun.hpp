#pragma once

namespace fading {

// Scalar special functions shared by the analytic formulas and the
// quadrature engine. All of them are evaluated in scaled forms so that
// concentration parameters up to (and well beyond) kappa = 700 stay finite.
// Pure functions; safe to call from any thread.

/// e^{-x} I0(x) for x >= 0. Strictly positive, <= 1, non-increasing.
/// Throws std::domain_error for negative or non-finite input.
double bessel_i0_scaled(double x);

/// Langevin function w_kappa = coth(kappa) - 1/kappa, continuously
/// extended with w_0 = 0. Strictly increasing on [0, inf), limit 1.
/// Throws std::domain_error for negative or non-finite input.
double langevin(double kappa);

/// kappa / sinh(kappa) with the limit value 1 at kappa = 0. Evaluated as
/// 2 kappa e^{-kappa} / (1 - e^{-2 kappa}) for kappa > 1, so sinh never
/// overflows; for kappa >~ 745 the true value drops below the smallest
/// subnormal and the function flushes to +0.
double kappa_over_sinh(double kappa);

/// e^{kappa} * kappa / sinh(kappa) = 2 kappa / (1 - e^{-2 kappa}).
/// Finite for every kappa >= 0 (grows like 2 kappa); limit 1 at kappa = 0.
/// This is the prefactor shape used by the vMF and Doppler densities.
double kappa_over_sinh_scaled(double kappa);

}  // namespace fading
