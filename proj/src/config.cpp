#include "fading/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

#include "fading/csv.hpp"

namespace fading::cli {

namespace {

constexpr double kSpeedOfLight = 299792458.0;  // m/s
constexpr double kDegToRad = std::numbers::pi / 180.0;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("invalid numeric value for '" + key + "': " + value);
  }
}

std::uint64_t parse_uint(const std::string& key, const std::string& value) {
  std::uint64_t v = 0;
  const auto [ptr, ec] =
      std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc{} || ptr != value.data() + value.size())
    throw ConfigError("invalid integer value for '" + key + "': " + value);
  return v;
}

std::vector<double> parse_list(const std::string& key,
                               const std::string& value) {
  std::vector<double> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty())
      throw ConfigError("empty element in list for '" + key + "'");
    out.push_back(parse_double(key, item));
  }
  if (out.empty()) throw ConfigError("empty list for '" + key + "'");
  return out;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

}  // namespace

void ExperimentConfig::set(const std::string& key, const std::string& value) {
  using Setter = std::function<void(ExperimentConfig&, const std::string&)>;
  static const std::map<std::string, Setter> setters = {
      {"scenario", [](auto& c, const auto& v) { c.scenario = v; }},
      {"mu_phi_deg",
       [](auto& c, const auto& v) { c.mu_phi_deg = parse_double("mu_phi_deg", v); }},
      {"mu_psi_deg",
       [](auto& c, const auto& v) { c.mu_psi_deg = parse_double("mu_psi_deg", v); }},
      {"kappa", [](auto& c, const auto& v) { c.kappa = parse_double("kappa", v); }},
      {"speed_mps",
       [](auto& c, const auto& v) { c.speed_mps = parse_double("speed_mps", v); }},
      {"motion_azimuth_deg",
       [](auto& c, const auto& v) {
         c.motion_azimuth_deg = parse_double("motion_azimuth_deg", v);
       }},
      {"motion_elevation_deg",
       [](auto& c, const auto& v) {
         c.motion_elevation_deg = parse_double("motion_elevation_deg", v);
       }},
      {"carrier_hz",
       [](auto& c, const auto& v) { c.carrier_hz = parse_double("carrier_hz", v); }},
      {"wavelength_m",
       [](auto& c, const auto& v) {
         c.wavelength_m = parse_double("wavelength_m", v);
       }},
      {"level_db_min",
       [](auto& c, const auto& v) { c.level_db_min = parse_double("level_db_min", v); }},
      {"level_db_max",
       [](auto& c, const auto& v) { c.level_db_max = parse_double("level_db_max", v); }},
      {"level_db_step",
       [](auto& c, const auto& v) {
         c.level_db_step = parse_double("level_db_step", v);
       }},
      {"n_paths",
       [](auto& c, const auto& v) {
         c.n_paths = std::size_t(parse_uint("n_paths", v));
       }},
      {"duration_fm",
       [](auto& c, const auto& v) { c.duration_fm = parse_double("duration_fm", v); }},
      {"duration_s",
       [](auto& c, const auto& v) { c.duration_s = parse_double("duration_s", v); }},
      {"dt_factor",
       [](auto& c, const auto& v) { c.dt_factor = int(parse_uint("dt_factor", v)); }},
      {"realizations",
       [](auto& c, const auto& v) {
         c.realizations = int(parse_uint("realizations", v));
       }},
      {"omega", [](auto& c, const auto& v) { c.omega = parse_double("omega", v); }},
      {"seed", [](auto& c, const auto& v) { c.seed = parse_uint("seed", v); }},
      {"output", [](auto& c, const auto& v) { c.output = v; }},
      {"figure_kappas",
       [](auto& c, const auto& v) { c.figure_kappas = parse_list("figure_kappas", v); }},
      {"figure_betas_deg",
       [](auto& c, const auto& v) {
         c.figure_betas_deg = parse_list("figure_betas_deg", v);
       }},
      {"fig1_beta_step_deg",
       [](auto& c, const auto& v) {
         c.fig1_beta_step_deg = parse_double("fig1_beta_step_deg", v);
       }},
      {"pdf_points",
       [](auto& c, const auto& v) { c.pdf_points = int(parse_uint("pdf_points", v)); }},
  };
  const auto it = setters.find(key);
  if (it == setters.end()) throw ConfigError("unknown config key '" + key + "'");
  it->second(*this, value);
}

void ExperimentConfig::validate() const {
  require(std::isfinite(kappa) && kappa >= 0.0, "kappa: must be >= 0");
  require(mu_phi_deg > -180.0 && mu_phi_deg <= 180.0,
          "mu_phi_deg: must lie in (-180, 180]");
  require(std::abs(mu_psi_deg) <= 90.0, "mu_psi_deg: must lie in [-90, 90]");
  require(std::isfinite(speed_mps) && speed_mps >= 0.0,
          "speed_mps: must be >= 0");
  require(motion_azimuth_deg > -180.0 && motion_azimuth_deg <= 180.0,
          "motion_azimuth_deg: must lie in (-180, 180]");
  require(std::abs(motion_elevation_deg) <= 90.0,
          "motion_elevation_deg: must lie in [-90, 90]");
  require(!(carrier_hz && wavelength_m),
          "carrier_hz / wavelength_m: specify exactly one");
  if (carrier_hz) require(*carrier_hz > 0.0, "carrier_hz: must be > 0");
  if (wavelength_m) require(*wavelength_m > 0.0, "wavelength_m: must be > 0");
  require(level_db_step > 0.0, "level_db_step: must be > 0");
  require(level_db_min <= level_db_max,
          "level_db_min: must be <= level_db_max");
  require(n_paths >= 1, "n_paths: must be >= 1");
  require(duration_fm > 0.0, "duration_fm: must be > 0");
  if (duration_s) require(*duration_s > 0.0, "duration_s: must be > 0");
  require(dt_factor >= 32,
          "dt_factor: must be >= 32 (sampling contract dt * f_m <= 1/32)");
  require(realizations >= 1, "realizations: must be >= 1");
  require(std::isfinite(omega) && omega > 0.0, "omega: must be > 0");
  require(pdf_points >= 2, "pdf_points: must be >= 2");
  require(fig1_beta_step_deg > 0.0 && fig1_beta_step_deg <= 180.0,
          "fig1_beta_step_deg: must lie in (0, 180]");
  for (double k : figure_kappas)
    require(std::isfinite(k) && k >= 0.0, "figure_kappas: entries must be >= 0");
  for (double b : figure_betas_deg)
    require(b >= 0.0 && b <= 180.0,
            "figure_betas_deg: entries must lie in [0, 180]");
}

double ExperimentConfig::wavelength() const {
  if (carrier_hz) return kSpeedOfLight / *carrier_hz;
  return wavelength_m.value_or(0.125);
}

double ExperimentConfig::max_doppler() const { return speed_mps / wavelength(); }

VmfScattering ExperimentConfig::scattering() const {
  return VmfScattering(mu_phi_deg * kDegToRad, mu_psi_deg * kDegToRad, kappa);
}

MotionConfig ExperimentConfig::motion() const {
  const Direction3 dir = angles_to_direction(AnglePair{
      motion_azimuth_deg * kDegToRad, motion_elevation_deg * kDegToRad});
  return MotionConfig(speed_mps, dir, wavelength());
}

DopplerGeometry ExperimentConfig::geometry() const {
  return fading::geometry(scattering(), motion());
}

std::vector<double> ExperimentConfig::level_dbs() const {
  std::vector<double> out;
  for (double db = level_db_min; db <= level_db_max + 0.5 * level_db_step;
       db += level_db_step)
    out.push_back(db);
  return out;
}

std::vector<NormalizedLevel> ExperimentConfig::levels() const {
  std::vector<NormalizedLevel> out;
  for (double db : level_dbs()) out.push_back(NormalizedLevel::from_db(db));
  return out;
}

double ExperimentConfig::duration() const {
  if (duration_s) return *duration_s;
  const double f_m = max_doppler();
  require(f_m > 0.0,
          "duration_fm: requires f_m > 0 (set duration_s for static scenarios)");
  return duration_fm / f_m;
}

double ExperimentConfig::dt() const {
  const double f_m = max_doppler();
  require(f_m > 0.0, "dt_factor: requires f_m > 0");
  return 1.0 / (double(dt_factor) * f_m);
}

std::string ExperimentConfig::echo() const {
  std::ostringstream os;
  const auto num = [&](const char* key, double v) {
    os << ' ' << key << '=' << format_g17(v);
  };
  os << "scenario=" << scenario;
  num("mu_phi_deg", mu_phi_deg);
  num("mu_psi_deg", mu_psi_deg);
  num("kappa", kappa);
  num("speed_mps", speed_mps);
  num("motion_azimuth_deg", motion_azimuth_deg);
  num("motion_elevation_deg", motion_elevation_deg);
  if (carrier_hz) num("carrier_hz", *carrier_hz);
  num("wavelength_m", wavelength());
  num("level_db_min", level_db_min);
  num("level_db_max", level_db_max);
  num("level_db_step", level_db_step);
  os << " n_paths=" << n_paths;
  num("omega", omega);
  if (duration_s)
    num("duration_s", *duration_s);
  else
    num("duration_fm", duration_fm);
  os << " dt_factor=" << dt_factor;
  os << " realizations=" << realizations;
  os << " seed=" << seed;
  return os.str();
}

ExperimentConfig load_config(const std::optional<std::string>& path,
                             const std::vector<std::string>& overrides) {
  ExperimentConfig config;
  if (path) {
    std::ifstream in(*path);
    if (!in) throw ConfigError("cannot open config file: " + *path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      line = trim(line);
      if (line.empty()) continue;
      const auto eq = line.find('=');
      if (eq == std::string::npos)
        throw ConfigError(*path + ":" + std::to_string(lineno) +
                          ": expected 'key = value'");
      const std::string key = trim(line.substr(0, eq));
      const std::string value = trim(line.substr(eq + 1));
      try {
        config.set(key, value);
      } catch (const ConfigError& e) {
        throw ConfigError(*path + ":" + std::to_string(lineno) + ": " +
                          e.what());
      }
    }
  }
  for (const auto& item : overrides) {
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw ConfigError("override must look like key=value: " + item);
    config.set(trim(item.substr(0, eq)), trim(item.substr(eq + 1)));
  }
  config.validate();
  return config;
}

}  // namespace fading::cli
