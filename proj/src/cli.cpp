#include "fading/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "fading/csv.hpp"
#include "fading/oracle.hpp"
#include "fading/simulator.hpp"

namespace fading::cli {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

std::ofstream open_output(const std::string& path) {
  const auto parent = std::filesystem::path(path).parent_path();
  std::error_code ec;
  if (!parent.empty()) std::filesystem::create_directories(parent, ec);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open output file: " + path);
  return out;
}

void finish_output(std::ostream& out, const std::string& path) {
  out.flush();
  if (!out) throw IoError("write failed: " + (path.empty() ? "stdout" : path));
}

// Runs `emit` against config.output, or stdout when no path is set.
template <typename Emit>
int emit_csv(const ExperimentConfig& config, const Emit& emit) {
  if (config.output.empty()) {
    emit(std::cout);
    finish_output(std::cout, "");
  } else {
    auto out = open_output(config.output);
    emit(out);
    finish_output(out, config.output);
  }
  return kExitOk;
}

double rel_dev(double a, double b, double scale) {
  return std::abs(a - b) / std::fmax(std::abs(b), scale);
}

std::string column_suffix(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

void require_moving(const ExperimentConfig& config) {
  if (!(config.max_doppler() > 0.0))
    throw ConfigError("speed_mps: this command requires f_m > 0");
}

}  // namespace

int cmd_moments(const ExperimentConfig& config, std::ostream& out) {
  const VmfScattering scat = config.scattering();
  const DopplerGeometry geom = config.geometry();
  const DopplerMoments closed = doppler_moments(scat, geom);
  const QuadratureSpec spec{32, 8, 1e-11};
  const double m1 = moment_by_quadrature(scat, geom, 1, spec);
  const double m2 = moment_by_quadrature(scat, geom, 2, spec);
  const double spread_o = std::sqrt(std::fmax(0.0, m2 - m1 * m1));
  const double f_m = geom.f_m;

  out << "# vmf-fading v1 " << config.echo() << "\n";
  out << "f_m_hz   = " << format_g17(f_m) << "\n";
  out << "beta_deg = " << format_g17(geom.beta / kDegToRad) << "\n";
  out << "f_mu_hz  = " << format_g17(geom.f_mu) << "\n";
  const auto line = [&](const char* name, double closed_v, double oracle_v,
                        double scale) {
    out << name << " closed=" << format_g17(closed_v)
        << " oracle=" << format_g17(oracle_v)
        << " rel_dev=" << format_g17(rel_dev(closed_v, oracle_v, scale))
        << "\n";
  };
  line("mean_doppler_hz    ", closed.mean, m1, f_m);
  line("mean_square_hz2    ", closed.mean_square, m2, f_m * f_m);
  line("doppler_spread_hz  ", closed.spread, spread_o, f_m);
  finish_output(out, "");
  return kExitOk;
}

namespace {

int emit_curve(const ExperimentConfig& config, bool want_lcr) {
  require_moving(config);
  const auto levels = config.levels();
  const auto c = curve(config.scattering(), config.motion(), levels);
  return emit_csv(config, [&](std::ostream& out) {
    CsvWriter csv(out, config.echo(),
                  {"level_db", "rho", want_lcr ? "lcr_per_s" : "afd_s"});
    for (std::size_t i = 0; i < levels.size(); ++i) {
      const double v = want_lcr ? c.lcr[i] : c.afd[i];
      csv.row(std::initializer_list<double>{levels[i].db(), levels[i].value(), v});
    }
  });
}

}  // namespace

int cmd_lcr(const ExperimentConfig& config) { return emit_curve(config, true); }

int cmd_afd(const ExperimentConfig& config) { return emit_curve(config, false); }

int cmd_pdf(const ExperimentConfig& config) {
  require_moving(config);
  const VmfScattering scat = config.scattering();
  const DopplerGeometry geom = config.geometry();
  const int n = config.pdf_points;
  return emit_csv(config, [&](std::ostream& out) {
    CsvWriter csv(out, config.echo(), {"f_hz", "pdf"});
    for (int i = 0; i < n; ++i) {
      const double frac = -1.0 + 2.0 * double(i) / double(n - 1);
      const double f =
          std::fmin(geom.f_m, std::fmax(-geom.f_m, frac * geom.f_m));
      csv.row(std::initializer_list<double>{f, doppler_pdf(scat, geom, f)});
    }
  });
}

void write_simulation_csv(const ExperimentConfig& config, std::ostream& out) {
  const ChannelConfig channel(config.n_paths, config.omega,
                              config.scattering(), config.motion(),
                              config.carrier_hz.value_or(0.0), config.seed);
  const auto real = realize(channel);
  const double dt = config.dt();
  const auto series = synthesize(real, config.duration(), dt);
  const double rms = std::sqrt(config.omega);
  CsvWriter csv(out, config.echo(),
                {"time_s", "in_phase", "quadrature", "envelope",
                 "envelope_db"});
  for (std::size_t i = 0; i < series.size(); ++i) {
    const double env = std::abs(series[i]);
    csv.row(std::initializer_list<double>{
        double(i) * dt, series[i].real(), series[i].imag(), env,
        20.0 * std::log10(env / rms)});
  }
}

int cmd_simulate(const ExperimentConfig& config) {
  require_moving(config);
  return emit_csv(config,
                  [&](std::ostream& out) { write_simulation_csv(config, out); });
}

namespace {

std::ofstream open_figure(const ExperimentConfig& config, const char* name) {
  const auto dir = config.output.empty()
                       ? std::filesystem::path(".")
                       : std::filesystem::path(config.output);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  const auto path = (dir / name).string();
  auto out = open_output(path);
  return out;
}

void figure1(const ExperimentConfig& config) {
  auto out = open_figure(config, "fig1.csv");
  CsvWriter csv(out, config.echo(),
                {"kappa", "beta_deg", "spread_norm_closed",
                 "spread_norm_oracle"});
  const QuadratureSpec spec{32, 8, 1e-11};
  for (double kappa : config.figure_kappas) {
    const VmfScattering scat(0.0, 0.0, kappa);
    for (double beta = 0.0; beta <= 180.0 + 1e-9;
         beta += config.fig1_beta_step_deg) {
      const auto geom = DopplerGeometry::from_beta(1.0, beta * kDegToRad);
      const double m1 = moment_by_quadrature(scat, geom, 1, spec);
      const double m2 = moment_by_quadrature(scat, geom, 2, spec);
      csv.row(std::initializer_list<double>{
          kappa, beta, doppler_spread(scat, geom),
          std::sqrt(std::fmax(0.0, m2 - m1 * m1))});
    }
  }
  finish_output(out, "fig1.csv");
}

void figure2(const ExperimentConfig& config) {
  require_moving(config);
  const double f_m = config.max_doppler();
  const VmfScattering scat(0.0, 0.0, config.kappa);
  auto out = open_figure(config, "fig2.csv");
  std::vector<std::string> columns = {"level_db"};
  for (double beta : config.figure_betas_deg)
    columns.push_back("lcr_beta_" + column_suffix(beta));
  columns.push_back("lcr_min");
  columns.push_back("lcr_max");
  CsvWriter csv(out, config.echo(), columns);

  std::vector<double> sigmas;
  for (double beta : config.figure_betas_deg)
    sigmas.push_back(doppler_spread(
        scat, DopplerGeometry::from_beta(f_m, beta * kDegToRad)));
  // The envelope of all motion directions: parallel motion gives the lowest
  // spread, perpendicular the highest.
  const double sigma_min =
      doppler_spread(scat, DopplerGeometry::from_beta(f_m, 0.0));
  const double sigma_max = doppler_spread(
      scat, DopplerGeometry::from_beta(f_m, 90.0 * kDegToRad));
  for (double db : config.level_dbs()) {
    const NormalizedLevel rho = NormalizedLevel::from_db(db);
    std::vector<double> row = {db};
    for (double sigma : sigmas) row.push_back(lcr(sigma, rho));
    row.push_back(lcr(sigma_min, rho));
    row.push_back(lcr(sigma_max, rho));
    csv.row(row);
  }
  finish_output(out, "fig2.csv");
}

void figure34(const ExperimentConfig& config, bool want_lcr) {
  require_moving(config);
  const double f_m = config.max_doppler();
  const char* name = want_lcr ? "fig3.csv" : "fig4.csv";
  auto out = open_figure(config, name);
  std::vector<std::string> columns = {"level_db"};
  for (double kappa : config.figure_kappas)
    columns.push_back(std::string(want_lcr ? "lcr" : "afd") + "_k" +
                      column_suffix(kappa));
  CsvWriter csv(out, config.echo(), columns);
  std::vector<double> sigmas;
  for (double kappa : config.figure_kappas)
    sigmas.push_back(doppler_spread(VmfScattering(0.0, 0.0, kappa),
                                    DopplerGeometry::from_beta(f_m, 0.0)));
  for (double db : config.level_dbs()) {
    const NormalizedLevel rho = NormalizedLevel::from_db(db);
    std::vector<double> row = {db};
    for (double sigma : sigmas)
      row.push_back(want_lcr ? lcr(sigma, rho) : afd(sigma, rho));
    csv.row(row);
  }
  finish_output(out, name);
}

}  // namespace

int cmd_figures(const std::string& which, const ExperimentConfig& config) {
  if (which == "fig1" || which == "all") figure1(config);
  if (which == "fig2" || which == "all") figure2(config);
  if (which == "fig3" || which == "all") figure34(config, true);
  if (which == "fig4" || which == "all") figure34(config, false);
  if (which != "fig1" && which != "fig2" && which != "fig3" &&
      which != "fig4" && which != "all")
    throw ConfigError("unknown figure selection '" + which +
                      "' (fig1|fig2|fig3|fig4|all)");
  return kExitOk;
}

verification::CheckResult csv_determinism_check(const ExperimentConfig& config) {
  verification::CheckResult result;
  result.name = "csv-determinism";
  std::ostringstream first, second;
  write_simulation_csv(config, first);
  write_simulation_csv(config, second);
  if (first.str() == second.str()) {
    result.detail = "two renders, " + std::to_string(first.str().size()) +
                    " bytes, byte-identical";
  } else {
    result.pass = false;
    result.detail = "repeated renders differ";
  }
  return result;
}

int cmd_verify(const ExperimentConfig& config, const VerifyOptions& options,
               std::ostream& out) {
  using namespace fading::verification;
  std::vector<CheckResult> results;
  results.push_back(check_isotropic_spread());
  results.push_back(check_oracle_agreement(options.wkappa_bias));
  results.push_back(check_istar_closure(config.seed));
  results.push_back(check_max_lcr_law());
  results.push_back(check_lcr_afd_identity(config.level_dbs()));
  results.push_back(check_ordering(config.level_dbs()));
  results.push_back(check_stability_extremes());
  if (!options.analytic_only) {
    results.push_back(check_sampler_law(config.seed));
    McScale scale;
    scale.n_paths = config.n_paths;
    scale.realizations = config.realizations;
    scale.duration_fm = config.duration_fm;
    scale.dt_factor = config.dt_factor;
    results.push_back(check_monte_carlo_closure(config.seed, scale));
    if (config.max_doppler() > 0.0)
      results.push_back(csv_determinism_check(config));
  }
  int failed = 0;
  for (const auto& r : results) {
    out << (r.pass ? "PASS " : "FAIL ") << r.name << " - " << r.detail << "\n";
    if (!r.pass) ++failed;
  }
  out << "VERDICT " << (failed == 0 ? "PASS" : "FAIL") << " checks="
      << results.size() << " failed=" << failed << "\n";
  finish_output(out, "");
  return failed == 0 ? kExitOk : kExitVerification;
}

}  // namespace fading::cli
