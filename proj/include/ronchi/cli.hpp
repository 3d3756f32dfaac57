#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace ronchi::cli {

/// Every setting a command can use. Field names double as config-file keys.
struct RunConfig {
  std::string subcommand;
  double wavelength_nm = 633.0;
  double f = 0.56;
  std::string grating;  ///< empty: command default
  std::string output;   ///< empty: standard output
  std::string format = "csv";
  std::uint64_t seed = 1;

  // coupling
  double power_g_uw = 6.0;
  double power_r_uw = 600.0;
  double mask_mm = 1.7;
  double iris_mm = 3.3;
  double beam_g_mm = 3.8;
  double beam_r_mm = 1.0;
  double eta = 1.0;

  // measurement
  double sigma = 0.0065;
  int trials = 10;
  double kappa = 1.0;
  double pwr_ga_uw = 2.5;
  double pwr_ra_uw = 2.5;
  double background_uw = 0.0;
  std::string coupling = "ac";
  double sample_rate_hz = 1000.0;
  double chopper_hz = 40.0;
  int cycles = 128;
  double ramp_fraction = 0.01;
  double gain_nonlinearity = 0.0;
  std::string waveform_output;

  // theory tables
  double j_min = 2.0;
  double j_max = 4.0;
  double step = 0.01;
  int slits = 20;
  int samples_per_unit = 0;

  // statistics
  std::string tails = "one";
  std::string method = "pooled";
  std::string control = "NG";
  bool text = false;

  int mc_seeds = 1000;

  void validate() const;
};

/// Parses `key=value` lines ('#' starts a comment) into a map.
std::map<std::string, std::string> read_config_file(const std::string& path);

/// Applies config entries to a RunConfig. Throws ArgumentError on an
/// unknown key or unparsable value.
void apply_config(RunConfig& cfg, const std::map<std::string, std::string>& entries);

/// Runs one command. Exit status: 0 success, 1 I/O or runtime failure,
/// 2 usage error. `reproduce` returns 3 when an acceptance check fails.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ronchi::cli
