#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fading/cli.hpp"
#include "fading/oracle.hpp"

namespace {

struct CommonOptions {
  std::optional<std::string> config_path;
  std::vector<std::string> overrides;
  std::optional<std::string> output;
  std::optional<std::uint64_t> seed;

  void attach(CLI::App* cmd) {
    cmd->add_option("-c,--config", config_path,
                    "config file with `key = value` lines, `#` comments");
    cmd->add_option("-s,--set", overrides,
                    "override a config key, e.g. --set kappa=30")
        ->take_all();
    cmd->add_option("-o,--output", output, "output file (figures: directory)");
    cmd->add_option("--seed", seed, "random seed override");
  }

  fading::cli::ExperimentConfig load() const {
    auto config = fading::cli::load_config(config_path, overrides);
    if (output) config.output = *output;
    if (seed) config.seed = *seed;
    return config;
  }
};

}  // namespace

int main(int argc, char** argv) {
  using namespace fading::cli;
  CLI::App app{
      "Doppler statistics, level crossings and fade durations of mobile "
      "channels with von Mises-Fisher scattering"};
  app.require_subcommand(1);

  CommonOptions moments_opts, lcr_opts, afd_opts, pdf_opts, sim_opts,
      fig_opts, verify_opts;
  auto* moments =
      app.add_subcommand("moments", "closed-form and quadrature Doppler moments");
  moments_opts.attach(moments);
  auto* lcr_cmd = app.add_subcommand("lcr", "level-crossing rate curve (CSV)");
  lcr_opts.attach(lcr_cmd);
  auto* afd_cmd = app.add_subcommand("afd", "average fade duration curve (CSV)");
  afd_opts.attach(afd_cmd);
  auto* pdf_cmd = app.add_subcommand("pdf", "Doppler probability density (CSV)");
  pdf_opts.attach(pdf_cmd);
  auto* sim = app.add_subcommand("simulate",
                                 "sum-of-sinusoids channel trace (CSV)");
  sim_opts.attach(sim);
  auto* figures = app.add_subcommand("figures", "figure data sets (CSV files)");
  std::string which = "all";
  figures->add_option("which", which, "fig1|fig2|fig3|fig4|all");
  fig_opts.attach(figures);
  auto* verify = app.add_subcommand(
      "verify", "verification sweep: analytic vs quadrature vs Monte Carlo");
  VerifyOptions verify_options;
  verify->add_option("--inject-wkappa-bias", verify_options.wkappa_bias,
                     "test hook: perturb w_kappa to prove sensitivity");
  verify->add_flag("--analytic-only", verify_options.analytic_only,
                   "skip the Monte-Carlo checks");
  verify_opts.attach(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (moments->parsed()) return cmd_moments(moments_opts.load(), std::cout);
    if (lcr_cmd->parsed()) return cmd_lcr(lcr_opts.load());
    if (afd_cmd->parsed()) return cmd_afd(afd_opts.load());
    if (pdf_cmd->parsed()) return cmd_pdf(pdf_opts.load());
    if (sim->parsed()) return cmd_simulate(sim_opts.load());
    if (figures->parsed()) return cmd_figures(which, fig_opts.load());
    if (verify->parsed())
      return cmd_verify(verify_opts.load(), verify_options, std::cout);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const fading::ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerification;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitValidation;
}
