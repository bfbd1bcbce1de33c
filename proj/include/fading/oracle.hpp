#pragma once

#include <stdexcept>
#include <vector>

#include "fading/doppler.hpp"

namespace fading {

/// Composite Gauss-Legendre quadrature control. `nodes` per panel (>= 8),
/// `panels` starting panel count per subrange; panels double until two
/// successive refinements differ by no more than tolerance * max(|I|, 1)
/// (all integrals handled here are O(1) after internal scaling).
struct QuadratureSpec {
  int nodes = 32;
  int panels = 8;
  double tolerance = 1e-10;
};

struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration on the
/// Legendre recurrence.
void gauss_legendre(int n, std::vector<double>& nodes,
                    std::vector<double>& weights);

/// n-th raw moment of the Doppler density by numerical integration over
/// [-f_m, f_m]; order 0 returns the normalization. Independent of the
/// closed-form moment path: only the scaled special functions are shared.
double moment_by_quadrature(const VmfScattering& scat,
                            const DopplerGeometry& geom, int order,
                            const QuadratureSpec& spec);

/// Same in the normalized frequency f/f_m; the density depends on the
/// geometry only through cos(beta).
double normalized_moment_by_quadrature(double kappa, double f_mu_hat,
                                       int order, const QuadratureSpec& spec);

/// Integral of e^{-b f} I0(c sqrt(1-f^2)) over [-1, 1], evaluated in scaled
/// form (interior maximum of the exponent factored out).
double istar_by_quadrature(const IStarParams& p, const QuadratureSpec& spec);

/// 2-D quadrature of the vMF density over |phi| <= pi, |psi| <= pi/2, with
/// panels graded toward the mode; equals 1 for a correct density.
double sphere_normalization(const VmfScattering& scat,
                            const QuadratureSpec& spec);

}  // namespace fading
