#include "fading/verification.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "fading/oracle.hpp"
#include "fading/rng.hpp"
#include "fading/secondorder.hpp"
#include "fading/simulator.hpp"
#include "fading/specfun.hpp"

namespace fading::verification {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDegToRad = kPi / 180.0;

// Asymptotic one-sample Kolmogorov-Smirnov critical value at significance
// alpha: sqrt(-ln(alpha/2) / (2n)).
double ks_critical(double alpha, std::size_t n) {
  return std::sqrt(-std::log(alpha / 2.0) / (2.0 * double(n)));
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

struct Collector {
  explicit Collector(std::string name) { result.name = std::move(name); }

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && result.pass) {
      result.pass = false;
      result.detail = what;
    }
  }

  // Records the worst relative deviation; used for informative PASS details.
  void expect_close(double actual, double expected, double tol, double scale,
                    const std::string& where) {
    const double err =
        std::abs(actual - expected) / std::fmax(std::abs(expected), scale);
    worst = std::fmax(worst, err);
    expect(err <= tol, where + ": deviation " + fmt(err) + " > tol " + fmt(tol));
  }

  CheckResult done(const std::string& pass_detail = "") {
    if (result.pass)
      result.detail = pass_detail.empty()
                          ? std::to_string(checks) + " checks, worst deviation " +
                                fmt(worst)
                          : pass_detail;
    return result;
  }

  CheckResult result;
  int checks = 0;
  double worst = 0.0;
};

VmfScattering cluster(double kappa) { return VmfScattering(0.0, 0.0, kappa); }

// Closed-form moments with an optional exact perturbation of w_kappa; the
// bias path reproduces what the formulas would yield for w + bias, so a
// nonzero bias must be caught by the oracle comparison.
DopplerMoments biased_moments(const VmfScattering& scat,
                              const DopplerGeometry& geom, double bias) {
  DopplerMoments m = doppler_moments(scat, geom);
  if (bias != 0.0 && scat.kappa > 0.0) {
    m.mean += bias * geom.f_mu;
    m.mean_square +=
        bias * (geom.f_m * geom.f_m - 3.0 * geom.f_mu * geom.f_mu) / scat.kappa;
    m.spread = std::sqrt(std::fmax(0.0, m.mean_square - m.mean * m.mean));
  }
  return m;
}

}  // namespace

CheckResult check_isotropic_spread() {
  Collector c("isotropic-spread");
  const VmfScattering iso = cluster(0.0);
  for (double f_m : {1.0, 50.0, 1000.0}) {
    const double expected = f_m / std::sqrt(3.0);
    for (int beta_deg = 0; beta_deg <= 180; beta_deg += 30) {
      const auto geom = DopplerGeometry::from_beta(f_m, beta_deg * kDegToRad);
      c.expect_close(doppler_spread(iso, geom), expected, 1e-12, 0.0,
                     "spread f_m=" + fmt(f_m) + " beta=" + fmt(beta_deg));
      c.expect(mean_doppler(iso, geom) == 0.0,
               "mean not exactly 0 at kappa=0, beta=" + fmt(beta_deg));
    }
  }
  return c.done();
}

CheckResult check_oracle_agreement(double wkappa_bias) {
  Collector c("oracle-agreement");
  const QuadratureSpec spec{32, 8, 1e-11};
  const double f_m = 1.0;
  for (double kappa : {0.0, 0.1, 1.0, 3.0, 10.0, 30.0, 100.0}) {
    const VmfScattering scat = cluster(kappa);
    for (double beta_deg : {0.0, 30.0, 60.0, 90.0, 120.0, 180.0}) {
      const auto geom = DopplerGeometry::from_beta(f_m, beta_deg * kDegToRad);
      const DopplerMoments closed = biased_moments(scat, geom, wkappa_bias);
      const double m1 = moment_by_quadrature(scat, geom, 1, spec);
      const double m2 = moment_by_quadrature(scat, geom, 2, spec);
      const double spread_o = std::sqrt(std::fmax(0.0, m2 - m1 * m1));
      const std::string at = " kappa=" + fmt(kappa) + " beta=" + fmt(beta_deg);
      // Relative where the moment is O(scale), absolute-at-scale where it
      // vanishes (e.g. the mean at beta = 90 is zero up to roundoff).
      c.expect_close(closed.mean, m1, 1e-8, f_m, "mean" + at);
      c.expect_close(closed.mean_square, m2, 1e-8, f_m * f_m, "mean_square" + at);
      c.expect_close(closed.spread, spread_o, 1e-8, f_m, "spread" + at);
    }
  }
  return c.done();
}

CheckResult check_istar_closure(std::uint64_t seed) {
  Collector c("istar-closure");
  const QuadratureSpec spec{32, 8, 1e-12};
  const CounterRng rng(seed, 101);
  const double h1 = 2e-5;  // central-difference steps balancing truncation
  const double h2 = 5e-4;  // against rounding of the O(e^kappa) integral
  for (std::uint64_t i = 0; i < 100; ++i) {
    const double kappa = 50.0 * rng.uniform(i, 0);
    const double fmu = 2.0 * rng.uniform(i, 1) - 1.0;
    const auto p = IStarParams::from_cluster(kappa, fmu);
    const double closed = istar(p);
    const double quad = istar_by_quadrature(p, spec);
    c.expect_close(quad, closed, 1e-9, 0.0, "istar kappa=" + fmt(kappa));

    const auto at = [&](double b) {
      return istar(IStarParams(p.a, b, p.c));
    };
    const double d1 = (at(p.b + h1) - at(p.b - h1)) / (2.0 * h1);
    const double d2 =
        (at(p.b + h2) - 2.0 * at(p.b) + at(p.b - h2)) / (h2 * h2);
    const double w = langevin(kappa);
    const double wok = kappa == 0.0 ? 1.0 / 3.0 : w / kappa;
    c.expect_close(-p.a * d1, w * fmu, 1e-6, 1.0,
                   "first moment by differentiation, kappa=" + fmt(kappa));
    c.expect_close(p.a * d2, wok + (1.0 - 3.0 * wok) * fmu * fmu, 1e-6, 1.0,
                   "second moment by differentiation, kappa=" + fmt(kappa));
  }
  return c.done();
}

CheckResult check_max_lcr_law() {
  Collector c("max-lcr-law");
  const double step = 1e-5;
  for (double sigma : {0.1, 1.0, 10.0}) {
    double best_rho = 0.0, best = -1.0;
    for (double rho = step; rho <= 4.0; rho += step) {
      const double v = lcr(sigma, NormalizedLevel(rho));
      if (v > best) {
        best = v;
        best_rho = rho;
      }
    }
    const double law = sigma * std::sqrt(2.0 * kPi / std::numbers::e);
    c.expect(std::abs(best_rho - 1.0 / std::sqrt(2.0)) <= step,
             "argmax off 1/sqrt(2) by more than one grid step, sigma=" +
                 fmt(sigma));
    c.expect_close(best, law, 1e-10, 0.0, "peak value, sigma=" + fmt(sigma));
    c.expect_close(max_lcr(sigma).rate, law, 1e-12, 0.0,
                   "max_lcr value, sigma=" + fmt(sigma));
  }
  return c.done();
}

CheckResult check_lcr_afd_identity(const std::vector<double>& level_dbs) {
  Collector c("lcr-afd-identity");
  for (double kappa : {0.0, 1.0, 10.0, 100.0, 1000.0}) {
    const VmfScattering scat = cluster(kappa);
    for (double beta_deg : {0.0, 90.0}) {
      const auto geom = DopplerGeometry::from_beta(100.0, beta_deg * kDegToRad);
      const double sigma = doppler_spread(scat, geom);
      for (double db : level_dbs) {
        const NormalizedLevel rho = NormalizedLevel::from_db(db);
        const double target = -std::expm1(-rho.value() * rho.value());
        c.expect_close(lcr(sigma, rho) * afd(sigma, rho), target, 1e-12, 0.0,
                       "identity at " + fmt(db) + " dB, kappa=" + fmt(kappa));
      }
    }
  }
  return c.done();
}

CheckResult check_ordering(const std::vector<double>& level_dbs) {
  Collector c("ordering");
  std::vector<NormalizedLevel> levels;
  for (double db : level_dbs) levels.push_back(NormalizedLevel::from_db(db));
  const double f_m = 100.0;

  // LCR(beta=90) > LCR(beta=45) > LCR(beta=0) pointwise at kappa = 10.
  const VmfScattering k10 = cluster(10.0);
  std::vector<std::vector<double>> by_beta;
  for (double beta_deg : {0.0, 45.0, 90.0}) {
    const auto geom = DopplerGeometry::from_beta(f_m, beta_deg * kDegToRad);
    const double sigma = doppler_spread(k10, geom);
    std::vector<double> row;
    for (const auto& rho : levels) row.push_back(lcr(sigma, rho));
    by_beta.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < levels.size(); ++i) {
    c.expect(by_beta[2][i] > by_beta[1][i] && by_beta[1][i] > by_beta[0][i],
             "beta ordering violated at " + fmt(levels[i].db()) + " dB");
  }

  // LCR strictly falls and AFD strictly grows with kappa at beta = 0.
  std::vector<std::vector<double>> lcr_by_kappa, afd_by_kappa;
  for (double kappa : {0.0, 1.0, 10.0, 100.0}) {
    const auto geom = DopplerGeometry::from_beta(f_m, 0.0);
    const double sigma = doppler_spread(cluster(kappa), geom);
    std::vector<double> lrow, arow;
    for (const auto& rho : levels) {
      lrow.push_back(lcr(sigma, rho));
      arow.push_back(afd(sigma, rho));
    }
    lcr_by_kappa.push_back(std::move(lrow));
    afd_by_kappa.push_back(std::move(arow));
  }
  for (std::size_t k = 1; k < lcr_by_kappa.size(); ++k) {
    for (std::size_t i = 0; i < levels.size(); ++i) {
      c.expect(lcr_by_kappa[k][i] < lcr_by_kappa[k - 1][i],
               "LCR not decreasing in kappa at " + fmt(levels[i].db()) + " dB");
      c.expect(afd_by_kappa[k][i] > afd_by_kappa[k - 1][i],
               "AFD not increasing in kappa at " + fmt(levels[i].db()) + " dB");
    }
  }
  return c.done();
}

CheckResult check_sampler_law(std::uint64_t seed) {
  Collector c("sampler-law");
  const std::size_t n = 1000000;
  for (double kappa : {0.5, 2.0, 10.0}) {
    const VmfScattering scat = cluster(kappa);
    const Direction3 kmu = mean_direction(scat);
    const auto draws =
        sample_directions(scat, n, seed + std::uint64_t(kappa * 16));
    double sum = 0.0, sumsq = 0.0;
    for (const auto& d : draws) {
      const double u = dot(d, kmu);
      sum += u;
      sumsq += u * u;
    }
    const double mean = sum / double(n);
    const double var = (sumsq - double(n) * mean * mean) / double(n - 1);
    const double se = std::sqrt(var / double(n));
    const double w = langevin(kappa);
    c.expect(std::abs(mean - w) <= 4.0 * se,
             "mean axial component off by " + fmt(std::abs(mean - w) / se) +
                 " standard errors at kappa=" + fmt(kappa));
    c.worst = std::fmax(c.worst, std::abs(mean - w) / se);
    ++c.checks;
  }
  return c.done("worst deviation " + fmt(c.worst) + " standard errors");
}

CheckResult check_monte_carlo_closure(std::uint64_t seed,
                                      const McScale& scale) {
  Collector c("monte-carlo-closure");
  const double wavelength = 0.3;
  const double speed = scale.f_m * wavelength;
  const double omega = 1.0;
  const double dt = 1.0 / (double(scale.dt_factor) * scale.f_m);
  const double duration = scale.duration_fm / scale.f_m;
  const std::vector<double> rho_dbs = {-10.0, -3.0, 0.0};
  std::vector<NormalizedLevel> levels;
  for (double db : rho_dbs) levels.push_back(NormalizedLevel::from_db(db));

  struct Case {
    double kappa;
    double beta_deg;
  };
  const std::vector<Case> cases = {{0.0, 60.0}, {10.0, 0.0}, {10.0, 90.0}};

  int case_index = 0;
  for (const auto& cs : cases) {
    const VmfScattering scat = cluster(cs.kappa);
    const Direction3 vdir = angles_to_direction(
        AnglePair{cs.beta_deg * kDegToRad, 0.0});  // k_mu is +x
    const MotionConfig motion(speed, vdir, wavelength);
    const double sigma = doppler_spread(scat, geometry(scat, motion));

    const int nr = scale.realizations;
    const auto nru = static_cast<std::size_t>(nr);
    std::vector<std::vector<std::size_t>> cross(nru);
    std::vector<std::vector<std::size_t>> fades(nru);
    std::vector<std::vector<double>> fade_time(nru);
    std::vector<std::vector<double>> decimated(nru);
    double total_duration = 0.0;

    for (int r = 0; r < nr; ++r) {
      const ChannelConfig config(
          scale.n_paths, omega, scat, motion, 0.0,
          realization_seed(seed + std::uint64_t(case_index), std::uint64_t(r)));
      const auto real = realize(config);
      const auto series = envelope(real, duration, dt);
      const auto est = estimate_lcr_afd(series, levels);
      cross[std::size_t(r)] = est.n_crossings;
      fades[std::size_t(r)] = est.n_fades;
      fade_time[std::size_t(r)] = est.total_fade_time;
      total_duration += double(series.samples.size() - 1) * dt;
      // Decimate to ~one sample per 1/f_m for an approximately independent
      // Rayleigh sample for the KS test.
      for (std::size_t i = 0; i < series.samples.size();
           i += std::size_t(scale.dt_factor))
        decimated[std::size_t(r)].push_back(series.samples[i]);
    }

    for (std::size_t li = 0; li < levels.size(); ++li) {
      std::size_t total_cross = 0, total_fades = 0;
      double total_fade_time = 0.0;
      for (int r = 0; r < nr; ++r) {
        total_cross += cross[std::size_t(r)][li];
        total_fades += fades[std::size_t(r)][li];
        total_fade_time += fade_time[std::size_t(r)][li];
      }
      const double lcr_hat = double(total_cross) / total_duration;
      const double afd_hat = total_fade_time / double(total_fades);
      const std::string at = " kappa=" + fmt(cs.kappa) +
                             " beta=" + fmt(cs.beta_deg) + " level=" +
                             fmt(rho_dbs[li]) + " dB";
      c.expect_close(lcr_hat, lcr(sigma, levels[li]), 0.05, 0.0, "LCR" + at);
      c.expect_close(afd_hat, afd(sigma, levels[li]), 0.08, 0.0, "AFD" + at);
    }

    std::vector<double> pooled;
    for (const auto& d : decimated)
      pooled.insert(pooled.end(), d.begin(), d.end());
    std::sort(pooled.begin(), pooled.end());
    double d_stat = 0.0;
    const double n = double(pooled.size());
    for (std::size_t i = 0; i < pooled.size(); ++i) {
      const double x = pooled[i];
      const double cdf = -std::expm1(-x * x / omega);
      d_stat = std::fmax(d_stat, std::fmax(cdf - double(i) / n,
                                           double(i + 1) / n - cdf));
    }
    const double crit = ks_critical(0.001, pooled.size());
    c.expect(d_stat <= crit,
             "Rayleigh KS statistic " + fmt(d_stat) + " > critical " +
                 fmt(crit) + " at kappa=" + fmt(cs.kappa) +
                 " beta=" + fmt(cs.beta_deg));
    ++case_index;
  }
  return c.done();
}

CheckResult check_stability_extremes() {
  Collector c("stability-extremes");
  const double kappa = 700.0;
  const VmfScattering scat(0.5, 0.25, kappa);
  c.expect(std::isfinite(bessel_i0_scaled(kappa)), "bessel_i0_scaled(700)");
  c.expect(std::isfinite(langevin(kappa)), "langevin(700)");
  c.expect(std::isfinite(kappa_over_sinh(kappa)) && kappa_over_sinh(kappa) > 0,
           "kappa_over_sinh(700)");
  c.expect(std::isfinite(vmf_pdf(scat, AnglePair{0.5, 0.25})),
           "vmf_pdf at the mode, kappa=700");
  c.expect(std::isfinite(vmf_pdf(scat, AnglePair{-2.0, -0.7})),
           "vmf_pdf off the mode, kappa=700");
  const auto geom = DopplerGeometry::from_beta(100.0, 60.0 * kDegToRad);
  for (double f : {-100.0, 0.0, 50.0, 100.0})
    c.expect(std::isfinite(doppler_pdf(scat, geom, f)),
             "doppler_pdf(kappa=700) at f=" + fmt(f));
  const auto m = doppler_moments(scat, geom);
  c.expect(std::isfinite(m.mean) && std::isfinite(m.mean_square) &&
               std::isfinite(m.spread),
           "moments at kappa=700");
  c.expect(std::isfinite(istar(IStarParams::from_cluster(kappa, 0.5))),
           "istar at kappa=700");
  const QuadratureSpec spec{32, 8, 1e-9};
  c.expect(std::isfinite(moment_by_quadrature(scat, geom, 2, spec)),
           "quadrature moment at kappa=700");
  c.expect(std::isfinite(lcr(m.spread, NormalizedLevel(1.0))) &&
               std::isfinite(afd(m.spread, NormalizedLevel(1.0))),
           "lcr/afd at kappa=700");

  // kappa = 0 returns exact limits, not NaN.
  const VmfScattering iso = cluster(0.0);
  c.expect(mean_doppler(iso, geom) == 0.0, "kappa=0 mean limit");
  c.expect(doppler_spread(iso, geom) == geom.f_m / std::sqrt(3.0),
           "kappa=0 spread limit");
  return c.done();
}

}  // namespace fading::verification
