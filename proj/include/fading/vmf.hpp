#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace fading {

/// Unit vector on the sphere. Components satisfy x^2+y^2+z^2 = 1 within
/// 1e-12; construct through unit_direction() or angles_to_direction().
struct Direction3 {
  double x = 1.0;
  double y = 0.0;
  double z = 0.0;
};

/// Normalizes (x, y, z); throws std::domain_error on a zero or non-finite
/// input vector.
Direction3 unit_direction(double x, double y, double z);

double dot(const Direction3& a, const Direction3& b);

/// Azimuth/elevation angle-of-arrival pair, |phi| <= pi, |psi| <= pi/2.
struct AnglePair {
  double phi = 0.0;
  double psi = 0.0;
};

/// von Mises-Fisher scattering model: mean azimuth AoA in (-pi, pi],
/// mean elevation AoA in [-pi/2, pi/2], concentration kappa >= 0
/// (kappa = 0 is isotropic, kappa -> inf a single point).
struct VmfScattering {
  double mu_phi;
  double mu_psi;
  double kappa;

  VmfScattering(double mu_phi_, double mu_psi_, double kappa_);
};

/// Joint density over (phi, psi), including the cos(psi) area factor, so it
/// integrates to 1 over |phi| <= pi, |psi| <= pi/2. Evaluated in scaled form;
/// finite for any representable kappa. Throws std::domain_error for angles
/// outside the domain.
double vmf_pdf(const VmfScattering& model, const AnglePair& angles);

/// Mean scattering direction unit vector k_mu.
Direction3 mean_direction(const VmfScattering& model);

Direction3 angles_to_direction(const AnglePair& a);

/// Inverse of angles_to_direction; at the poles (|z| = 1) phi is undefined
/// and 0 is returned by convention.
AnglePair direction_to_angles(const Direction3& d);

/// n i.i.d. draws from the vMF density, deterministic in rng_seed and
/// independent of the thread partition (counter RNG, see rng.hpp).
/// kappa = 0 yields exactly uniform-on-sphere draws. Requires n >= 1.
std::vector<Direction3> sample_directions(const VmfScattering& model,
                                          std::size_t n, std::uint64_t rng_seed);

/// Serial reference for sample_directions; bit-identical output.
std::vector<Direction3> sample_directions_reference(const VmfScattering& model,
                                                    std::size_t n,
                                                    std::uint64_t rng_seed);

}  // namespace fading
