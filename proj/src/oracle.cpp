#include "fading/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fading/specfun.hpp"

namespace fading {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxPanels = 16384;

void validate_spec(const QuadratureSpec& spec) {
  if (spec.nodes < 8)
    throw std::domain_error("QuadratureSpec: nodes must be >= 8");
  if (spec.panels < 1)
    throw std::domain_error("QuadratureSpec: panels must be >= 1");
  if (!(spec.tolerance > 0.0))
    throw std::domain_error("QuadratureSpec: tolerance must be > 0");
}

// Panel edges over [a, b] graded quadratically toward `peak` (clamped into
// the interval). Sharp integrands peak there, so small panels near the peak
// buy most of the accuracy.
std::vector<double> graded_edges(double a, double b, double peak, int panels) {
  const double p = std::fmin(b, std::fmax(a, peak));
  std::vector<double> edges;
  edges.reserve(std::size_t(2 * panels + 2));
  auto grade = [&](double from, double to) {
    // from = peak side; quadratic clustering toward `from`.
    if (to == from) return;
    for (int j = 1; j <= panels; ++j) {
      const double t = double(j) / double(panels);
      edges.push_back(from + (to - from) * t * t);
    }
  };
  edges.push_back(p);
  grade(p, a);
  grade(p, b);
  std::sort(edges.begin(), edges.end());
  edges.front() = a;
  edges.back() = b;
  return edges;
}

template <typename F>
double composite_gl(const F& f, const std::vector<double>& edges,
                    const std::vector<double>& xs,
                    const std::vector<double>& ws) {
  double total = 0.0;
  for (std::size_t e = 0; e + 1 < edges.size(); ++e) {
    const double mid = 0.5 * (edges[e] + edges[e + 1]);
    const double half = 0.5 * (edges[e + 1] - edges[e]);
    if (half == 0.0) continue;
    double acc = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i)
      acc += ws[i] * f(mid + half * xs[i]);
    total += half * acc;
  }
  return total;
}

// Panel doubling until two successive refinements agree to
// tolerance * max(|I|, 1); every integral below is O(1) by construction.
template <typename F>
double integrate_1d(const F& f, double a, double b, double peak,
                    const QuadratureSpec& spec) {
  std::vector<double> xs, ws;
  gauss_legendre(spec.nodes, xs, ws);
  double prev = composite_gl(f, graded_edges(a, b, peak, spec.panels), xs, ws);
  for (int panels = 2 * spec.panels; panels <= kMaxPanels; panels *= 2) {
    const double cur = composite_gl(f, graded_edges(a, b, peak, panels), xs, ws);
    if (std::abs(cur - prev) <= spec.tolerance * std::fmax(std::abs(cur), 1.0))
      return cur;
    prev = cur;
  }
  throw ConvergenceError("quadrature did not converge within the panel cap");
}

// Normalized Doppler density, expressed directly from the scaled special
// functions (no dependence on the closed-form moment path).
struct NormalizedDopplerDensity {
  NormalizedDopplerDensity(double kappa_, double f_mu_hat)
      : kappa(kappa_),
        fmu(std::fmin(1.0, std::fmax(-1.0, f_mu_hat))),
        c(kappa_ * std::sqrt(std::fmax(0.0, 1.0 - fmu * fmu))),
        prefactor(0.5 * kappa_over_sinh_scaled(kappa_)) {}

  double operator()(double fhat) const {
    if (kappa == 0.0) return 0.5;
    const double s = std::sqrt(std::fmax(0.0, 1.0 - fhat * fhat));
    const double expo = kappa * (fmu * fhat - 1.0) + c * s;
    return prefactor * std::exp(std::fmin(expo, 0.0)) *
           bessel_i0_scaled(c * s);
  }

  double kappa, fmu, c, prefactor;
};

}  // namespace

void gauss_legendre(int n, std::vector<double>& nodes,
                    std::vector<double>& weights) {
  if (n < 1) throw std::domain_error("gauss_legendre: n must be >= 1");
  nodes.assign(std::size_t(n), 0.0);
  weights.assign(std::size_t(n), 0.0);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Chebyshev-based initial guess, then Newton on P_n.
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) < 1e-15) break;
    }
    nodes[std::size_t(i)] = -z;
    nodes[std::size_t(n - 1 - i)] = z;
    weights[std::size_t(i)] = 2.0 / ((1.0 - z * z) * pp * pp);
    weights[std::size_t(n - 1 - i)] = weights[std::size_t(i)];
  }
}

double normalized_moment_by_quadrature(double kappa, double f_mu_hat,
                                       int order, const QuadratureSpec& spec) {
  validate_spec(spec);
  if (order < 0)
    throw std::domain_error("normalized_moment_by_quadrature: order must be >= 0");
  if (!std::isfinite(kappa) || kappa < 0.0)
    throw std::domain_error("normalized_moment_by_quadrature: kappa must be >= 0");
  const NormalizedDopplerDensity pdf(kappa, f_mu_hat);
  const auto integrand = [&](double fhat) {
    return std::pow(fhat, order) * pdf(fhat);
  };
  return integrate_1d(integrand, -1.0, 1.0, pdf.fmu, spec);
}

double moment_by_quadrature(const VmfScattering& scat,
                            const DopplerGeometry& geom, int order,
                            const QuadratureSpec& spec) {
  validate_spec(spec);
  if (order < 0)
    throw std::domain_error("moment_by_quadrature: order must be >= 0");
  if (geom.f_m == 0.0) return order == 0 ? 1.0 : 0.0;
  return std::pow(geom.f_m, order) *
         normalized_moment_by_quadrature(scat.kappa, geom.f_mu_hat(), order,
                                         spec);
}

double istar_by_quadrature(const IStarParams& p, const QuadratureSpec& spec) {
  validate_spec(spec);
  // Factor out the interior maximum M = sqrt(b^2+c^2) of the exponent
  // -b f + c sqrt(1-f^2); the scaled integrand is O(1).
  const double m = std::hypot(p.b, p.c);
  const double peak = m == 0.0 ? 0.0 : -p.b / m;
  const auto integrand = [&](double f) {
    const double s = std::sqrt(std::fmax(0.0, 1.0 - f * f));
    const double expo = -p.b * f + p.c * s - m;
    return std::exp(std::fmin(expo, 0.0)) * bessel_i0_scaled(p.c * s);
  };
  return std::exp(m) * integrate_1d(integrand, -1.0, 1.0, peak, spec);
}

double sphere_normalization(const VmfScattering& scat,
                            const QuadratureSpec& spec) {
  validate_spec(spec);
  std::vector<double> xs, ws;
  gauss_legendre(spec.nodes, xs, ws);
  double prev = 0.0;
  bool have_prev = false;
  for (int panels = spec.panels; panels <= 128; panels *= 2) {
    const auto phi_edges =
        graded_edges(-kPi, kPi, scat.mu_phi, panels);
    const auto psi_edges =
        graded_edges(-0.5 * kPi, 0.5 * kPi, scat.mu_psi, panels);
    const auto outer = [&](double phi) {
      const auto inner = [&](double psi) {
        return vmf_pdf(scat, AnglePair{phi, psi});
      };
      return composite_gl(inner, psi_edges, xs, ws);
    };
    const double cur = composite_gl(outer, phi_edges, xs, ws);
    if (have_prev &&
        std::abs(cur - prev) <= spec.tolerance * std::fmax(std::abs(cur), 1.0))
      return cur;
    prev = cur;
    have_prev = true;
  }
  throw ConvergenceError(
      "sphere_normalization did not converge within the panel cap");
}

}  // namespace fading
