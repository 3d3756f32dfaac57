#include "ronchi/measurement.hpp"

#include <cmath>
#include <random>

#include <boost/random/normal_distribution.hpp>

#include "ronchi/coupling.hpp"
#include "ronchi/duality.hpp"
#include "ronchi/errors.hpp"

namespace ronchi::measurement {

std::string_view to_string(CouplingMode m) { return m == CouplingMode::ac ? "ac" : "dc"; }

CouplingMode parse_coupling_mode(std::string_view s) {
  if (s == "ac") return CouplingMode::ac;
  if (s == "dc") return CouplingMode::dc;
  throw ArgumentError("coupling mode must be 'ac' or 'dc', got '" + std::string(s) + "'");
}

void WaveformParams::validate() const {
  if (!(sample_rate_hz > 0.0) || !(chopper_hz > 0.0))
    throw ArgumentError("WaveformParams: sample rate and chopper frequency must be positive");
  if (sample_rate_hz < 4.0 * chopper_hz)
    throw ArgumentError("WaveformParams: need at least four samples per chopper cycle");
  if (cycles < 1) throw ArgumentError("WaveformParams: cycles must be >= 1");
  if (!(ramp_fraction >= 0.0 && ramp_fraction <= 0.1))
    throw ArgumentError("WaveformParams: ramp fraction must lie in [0, 0.1]");
}

std::size_t WaveformParams::sample_count() const {
  return static_cast<std::size_t>(std::llround(cycles * sample_rate_hz / chopper_hz));
}

namespace {

// Fraction of the beam passing the chopper at a given phase.
double transmitted_fraction(double phase, double ramp) {
  const double half = 0.5 * ramp;
  if (phase < half) return (phase + half) / ramp;
  if (phase >= 1.0 - half) return (phase - 1.0 + half) / ramp;
  if (std::abs(phase - 0.5) < half) return 1.0 - (phase - 0.5 + half) / ramp;
  return phase < 0.5 ? 1.0 : 0.0;
}

enum class Level { upper, lower, excluded };

Level classify_phase(double phase, double ramp) {
  const double half = 0.5 * ramp;
  if (phase >= half && phase < 0.5 - half) return Level::upper;
  if (phase >= 0.5 + half && phase < 1.0 - half) return Level::lower;
  return Level::excluded;
}

// Per-sample transmission and level class over one chopper period (or
// the whole record when samples-per-cycle is not integral).
struct ChopperTemplate {
  std::vector<double> open;
  std::vector<Level> level;

  ChopperTemplate(const WaveformParams& p, std::size_t samples) {
    const double per_cycle = p.sample_rate_hz / p.chopper_hz;
    const bool periodic = per_cycle == std::floor(per_cycle);
    const std::size_t len = periodic ? static_cast<std::size_t>(per_cycle) : samples;
    open.resize(len);
    level.resize(len);
    for (std::size_t i = 0; i < len; ++i) {
      const double phase =
          periodic ? static_cast<double>(i) / per_cycle
                   : std::fmod(static_cast<double>(i) * p.chopper_hz, p.sample_rate_hz) /
                         p.sample_rate_hz;
      open[i] = transmitted_fraction(phase, p.ramp_fraction);
      level[i] = classify_phase(phase, p.ramp_fraction);
    }
  }

  std::size_t size() const { return open.size(); }
};

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

WaveformRecord synthesize_waveform(double pulse_height, double bias, const WaveformParams& params,
                                   double noise_sigma, std::uint64_t seed) {
  params.validate();
  if (!(pulse_height >= 0.0)) throw ArgumentError("synthesize_waveform: negative pulse height");
  if (!(noise_sigma >= 0.0)) throw ArgumentError("synthesize_waveform: negative noise sigma");

  WaveformRecord rec;
  rec.params = params;
  const std::size_t n = params.sample_count();
  rec.volts.resize(n);

  std::mt19937_64 rng(seed);
  boost::random::normal_distribution<double> noise(0.0, 1.0);
  const bool ac = params.mode == CouplingMode::ac;
  const ChopperTemplate chopper(params, n);
  for (std::size_t i = 0, k = 0; i < n; ++i, k = (k + 1 == chopper.size() ? 0 : k + 1)) {
    // ac coupling removes the record's mean level, bias + h/2 (ramps are symmetric).
    const double open = chopper.open[k];
    double v = ac ? pulse_height * (open - 0.5) : bias + pulse_height * open;
    if (noise_sigma > 0.0) v += noise_sigma * noise(rng);
    if (params.gain_nonlinearity != 0.0) v += params.gain_nonlinearity * v * v;
    rec.volts[i] = v;
  }
  return rec;
}

LevelCounts level_counts(const WaveformParams& params, std::size_t samples) {
  LevelCounts c;
  const ChopperTemplate chopper(params, samples);
  for (std::size_t i = 0; i < samples; ++i) {
    switch (chopper.level[i % chopper.size()]) {
      case Level::upper: ++c.upper; break;
      case Level::lower: ++c.lower; break;
      case Level::excluded: break;
    }
  }
  return c;
}

double pulse_height(const WaveformRecord& w) {
  const auto& p = w.params;
  p.validate();
  const double per_cycle = p.sample_rate_hz / p.chopper_hz;
  if (static_cast<double>(w.volts.size()) < per_cycle)
    throw MeasurementError("pulse_height: record shorter than one chopper cycle");

  const ChopperTemplate chopper(p, w.volts.size());
  double sum_u = 0.0, sum_l = 0.0, sq_u = 0.0, sq_l = 0.0;
  std::size_t n_u = 0, n_l = 0;
  for (std::size_t i = 0, k = 0; i < w.volts.size();
       ++i, k = (k + 1 == chopper.size() ? 0 : k + 1)) {
    const double v = w.volts[i];
    switch (chopper.level[k]) {
      case Level::upper: sum_u += v; sq_u += v * v; ++n_u; break;
      case Level::lower: sum_l += v; sq_l += v * v; ++n_l; break;
      case Level::excluded: break;
    }
  }
  if (n_u < 2 || n_l < 2) throw MeasurementError("pulse_height: too few samples on a level");

  const double mu = sum_u / static_cast<double>(n_u);
  const double ml = sum_l / static_cast<double>(n_l);
  const double var_u = std::max(0.0, (sq_u - mu * sum_u) / static_cast<double>(n_u - 1));
  const double var_l = std::max(0.0, (sq_l - ml * sum_l) / static_cast<double>(n_l - 1));
  const double height = mu - ml;
  const double se = std::sqrt(var_u / static_cast<double>(n_u) + var_l / static_cast<double>(n_l));
  if (!(height > 3.0 * se))
    throw MeasurementError("pulse_height: level separation below the noise floor");
  return height;
}

double omega_from_pair(double dv_g, double dv_gc) {
  if (!(dv_gc > 0.0)) throw DomainError("omega_from_pair: coupled pulse height must be positive");
  return dv_g / dv_gc;
}

void TrialConfig::validate() const {
  waveform.validate();
  if (trials < 2) throw ArgumentError("TrialConfig: need at least two trials");
  if (!(sigma >= 0.0)) throw ArgumentError("TrialConfig: sigma must be >= 0");
  if (!(kappa > 0.0)) throw ArgumentError("TrialConfig: kappa must be > 0");
  if (!(omega_true > 0.0)) throw ArgumentError("TrialConfig: omega_true must be > 0");
  if (!(pwr_ga_uw > 0.0)) throw ArgumentError("TrialConfig: pwr_ga_uw must be > 0");
  if (!(pwr_ra_uw >= 0.0) || !(background_uw >= 0.0))
    throw ArgumentError("TrialConfig: bias powers must be >= 0");
  if (!(power_g_uw > 0.0) || !(power_r_uw > 0.0))
    throw ArgumentError("TrialConfig: beam powers must be > 0");
  if (!(eta >= 0.0 && eta <= 1.0)) throw ArgumentError("TrialConfig: eta must lie in [0, 1]");
}

TrialConfig TrialConfig::for_selection(const std::string& label, double wavelength_nm, double f) {
  TrialConfig cfg;
  const auto g = grating::parse_grating(label, wavelength_nm);
  if (!g) {
    cfg.label = "NG";
    cfg.omega_true = 1.0;
    return cfg;
  }
  const double ji = grating::truncation_point(g->slit_width_nm(), wavelength_nm);
  cfg.label = grating::label_for(ji);
  cfg.omega_true = duality::occupation(ji, f);
  return cfg;
}

trials::TrialSet TrialRun::set() const {
  trials::TrialSet s{label, {}};
  s.values.reserve(records.size());
  for (const auto& r : records) s.values.push_back(r.omega);
  return s;
}

std::uint64_t derive_seed(std::uint64_t master, std::string_view stream, std::uint64_t trial,
                          std::uint64_t leg) {
  std::uint64_t h = splitmix64(master);
  h = splitmix64(h ^ fnv1a(stream));
  h = splitmix64(h ^ trial);
  return splitmix64(h ^ (leg + 0x632be59bd9b4e019ULL));
}

double expected_trial_omega(const TrialConfig& cfg) {
  const auto prepared = coupling::BeamState::from_power(cfg.power_g_uw, cfg.omega_true);
  const auto restoration = coupling::BeamState::from_power(cfg.power_r_uw, 1.0);
  const auto eq = coupling::equilibrate(prepared, restoration, cfg.eta);
  return prepared.energy() / eq.prepared.energy();
}

double sample_noise_sigma(const TrialConfig& cfg) {
  const auto counts = level_counts(cfg.waveform, cfg.waveform.sample_count());
  // Each pulse height carries half the per-trial variance of the ratio.
  const double height_sd = cfg.sigma * cfg.kappa * cfg.pwr_ga_uw / std::sqrt(2.0);
  return height_sd / std::sqrt(1.0 / static_cast<double>(counts.upper) +
                               1.0 / static_cast<double>(counts.lower));
}

namespace {

struct TrialLevels {
  double h_blocked;
  double h_coupled;
  double bias_blocked;
  double bias_coupled;
  double sigma_s;
};

TrialLevels trial_levels(const TrialConfig& cfg) {
  cfg.validate();
  const auto prepared = coupling::BeamState::from_power(cfg.power_g_uw, cfg.omega_true);
  const auto restoration = coupling::BeamState::from_power(cfg.power_r_uw, 1.0);
  const auto eq = coupling::equilibrate(prepared, restoration, cfg.eta);
  // The detector samples a fixed annulus of Φ_G, so the coupled pulse
  // scales with the equilibrated-to-emergent energy ratio.
  TrialLevels lv{};
  lv.h_blocked = cfg.kappa * cfg.pwr_ga_uw;
  lv.h_coupled = lv.h_blocked * eq.prepared.energy() / prepared.energy();
  lv.bias_blocked = cfg.kappa * cfg.background_uw;
  lv.bias_coupled = cfg.kappa * (cfg.background_uw + cfg.pwr_ra_uw);
  lv.sigma_s = sample_noise_sigma(cfg);
  return lv;
}

WaveformRecord acquire(const TrialConfig& cfg, const TrialLevels& lv, int trial, bool coupled) {
  const auto seed = derive_seed(cfg.seed, cfg.label, static_cast<std::uint64_t>(trial), coupled ? 0 : 1);
  return coupled ? synthesize_waveform(lv.h_coupled, lv.bias_coupled, cfg.waveform, lv.sigma_s, seed)
                 : synthesize_waveform(lv.h_blocked, lv.bias_blocked, cfg.waveform, lv.sigma_s, seed);
}

}  // namespace

WaveformRecord trial_waveform(const TrialConfig& cfg, int trial, bool coupled) {
  if (trial < 0 || trial >= cfg.trials) throw ArgumentError("trial_waveform: trial index out of range");
  return acquire(cfg, trial_levels(cfg), trial, coupled);
}

TrialRun run_trials(const TrialConfig& cfg) {
  const TrialLevels lv = trial_levels(cfg);
  TrialRun run{cfg.label, cfg.omega_true, {}};
  run.records.reserve(static_cast<std::size_t>(cfg.trials));
  for (int i = 0; i < cfg.trials; ++i) {
    const double dv_gc = pulse_height(acquire(cfg, lv, i, true));
    const double dv_g = pulse_height(acquire(cfg, lv, i, false));
    run.records.push_back({i, cfg.label, dv_gc, dv_g, omega_from_pair(dv_g, dv_gc)});
  }
  return run;
}

std::vector<std::string> protocol_labels(double wavelength_nm) {
  std::vector<std::string> labels;
  for (const auto& e : grating::standard_catalog(wavelength_nm)) labels.push_back(e.label);
  labels.emplace_back("NG");
  return labels;
}

std::vector<TrialRun> run_protocol(const TrialConfig& base, double wavelength_nm, double f) {
  std::vector<TrialRun> runs;
  for (const auto& label : protocol_labels(wavelength_nm)) {
    const auto sel = TrialConfig::for_selection(label, wavelength_nm, f);
    TrialConfig cfg = base;
    cfg.label = sel.label;
    cfg.omega_true = sel.omega_true;
    runs.push_back(run_trials(cfg));
  }
  return runs;
}

}  // namespace ronchi::measurement
