#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ronchi/grating.hpp"
#include "ronchi/trials.hpp"

namespace ronchi::measurement {

enum class CouplingMode { ac, dc };

std::string_view to_string(CouplingMode m);
CouplingMode parse_coupling_mode(std::string_view s);

/// Acquisition settings for one chopper-modulated detector record. The
/// chopper runs at 50% duty with the beam unblocked for the first half of
/// each cycle; t = 0 is a rising edge.
struct WaveformParams {
  double sample_rate_hz = 1000.0;
  double chopper_hz = 40.0;
  int cycles = 128;
  /// Vane-eclipse ramp width as a fraction of the chopper period, centred
  /// on each transition.
  double ramp_fraction = 0.01;
  CouplingMode mode = CouplingMode::ac;
  /// Quadratic gain term v -> v + c v^2 applied after coupling. Off by default.
  double gain_nonlinearity = 0.0;

  static constexpr double duty_cycle = 0.5;

  void validate() const;
  std::size_t sample_count() const;
};

struct WaveformRecord {
  std::vector<double> volts;
  WaveformParams params;

  double time_s(std::size_t i) const { return static_cast<double>(i) / params.sample_rate_hz; }
};

/// Square wave of the given height riding on `bias` (dc) or centred on
/// zero (ac), with linear eclipse ramps and i.i.d. Gaussian sample noise.
/// Deterministic for a fixed seed.
WaveformRecord synthesize_waveform(double pulse_height, double bias, const WaveformParams& params,
                                   double noise_sigma, std::uint64_t seed);

/// Upper-minus-lower level difference, averaged over every cycle in the
/// record. Samples inside the eclipse ramps are excluded by chopper phase.
/// Throws MeasurementError for records shorter than one cycle or with no
/// level separation above the noise floor.
double pulse_height(const WaveformRecord& w);

/// Number of samples classified into the upper and lower levels.
struct LevelCounts {
  std::size_t upper = 0;
  std::size_t lower = 0;
};
LevelCounts level_counts(const WaveformParams& params, std::size_t samples);

/// Single-trial occupation from a blocked/unblocked pulse-height pair.
double omega_from_pair(double dv_g, double dv_gc);

/// Everything one trial set needs.
struct TrialConfig {
  std::string label = "NG";  ///< "G(2.63)", ... or "NG"
  double omega_true = 1.0;
  double sigma = 0.0065;     ///< per-trial SD of the occupation estimate
  int trials = 10;
  std::uint64_t seed = 1;
  double kappa = 1.0;        ///< volts per microwatt at the detector
  double pwr_ga_uw = 2.5;    ///< prepared-beam power on the detector annulus
  double pwr_ra_uw = 2.5;    ///< restoration-beam leakage onto the annulus (dc bias)
  double background_uw = 0.0;
  double power_g_uw = 6.0;   ///< prepared beam on the coupling path
  double power_r_uw = 600.0; ///< restoration beam on the coupling path
  double eta = 1.0;          ///< equilibration efficiency
  WaveformParams waveform;

  void validate() const;

  /// Config for a catalog label or "NG" with omega_true from theory.
  static TrialConfig for_selection(const std::string& label,
                                   double wavelength_nm = grating::kHeNeWavelengthNm,
                                   double f = grating::kDefaultObliquity);
};

struct TrialRecord {
  int index;
  std::string label;
  double dv_gc;
  double dv_g;
  double omega;
};

struct TrialRun {
  std::string label;
  double omega_true;
  std::vector<TrialRecord> records;

  trials::TrialSet set() const;
};

/// Simulates `trials` sequential pairs: unblocked (coupled) then blocked
/// pulse-height acquisitions, each with its own noise draw.
TrialRun run_trials(const TrialConfig& cfg);

/// The record acquired for one leg of one trial: `coupled` selects the
/// unblocked (ΔV_Gc) acquisition, otherwise the blocked (ΔV_G) one.
WaveformRecord trial_waveform(const TrialConfig& cfg, int trial, bool coupled);

/// Occupation ratio E_G / E_Gc that a noiseless run reproduces.
double expected_trial_omega(const TrialConfig& cfg);

/// Per-sample noise that gives the configured per-trial sigma.
double sample_noise_sigma(const TrialConfig& cfg);

/// The four trial sets (three gratings and the control) sharing one
/// master seed and one base configuration.
std::vector<TrialRun> run_protocol(const TrialConfig& base, double wavelength_nm = grating::kHeNeWavelengthNm,
                                   double f = grating::kDefaultObliquity);

/// Protocol labels in acquisition order.
std::vector<std::string> protocol_labels(double wavelength_nm = grating::kHeNeWavelengthNm);

/// Independent per-trial seed derived from a master seed and stream tags.
std::uint64_t derive_seed(std::uint64_t master, std::string_view stream, std::uint64_t trial,
                          std::uint64_t leg);

}  // namespace ronchi::measurement
