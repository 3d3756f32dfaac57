#include "ronchi/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <iostream>
#include <set>
#include <sstream>

#include "ronchi/acceptance.hpp"
#include "ronchi/coupling.hpp"
#include "ronchi/duality.hpp"
#include "ronchi/errors.hpp"
#include "ronchi/grating.hpp"
#include "ronchi/measurement.hpp"
#include "ronchi/report.hpp"
#include "ronchi/trials.hpp"

namespace ronchi::cli {

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double to_double(const std::string& key, const std::string& v) {
  std::size_t pos = 0;
  double x = 0.0;
  try {
    x = std::stod(v, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != v.size()) throw ArgumentError("config: '" + key + "' expects a number, got '" + v + "'");
  return x;
}

long long to_integer(const std::string& key, const std::string& v) {
  std::size_t pos = 0;
  long long x = 0;
  try {
    x = std::stoll(v, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != v.size()) throw ArgumentError("config: '" + key + "' expects an integer, got '" + v + "'");
  return x;
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ArgumentError("config: '" + key + "' expects true/false, got '" + v + "'");
}

using Setter = std::function<void(RunConfig&, const std::string&, const std::string&)>;

template <typename T>
Setter setter(T RunConfig::*field) {
  return [field](RunConfig& c, const std::string& key, const std::string& v) {
    if constexpr (std::is_same_v<T, double>)
      c.*field = to_double(key, v);
    else if constexpr (std::is_same_v<T, bool>)
      c.*field = to_bool(key, v);
    else if constexpr (std::is_same_v<T, std::string>)
      c.*field = v;
    else {
      const long long x = to_integer(key, v);
      if (x < 0 && std::is_unsigned_v<T>) throw ArgumentError("config: '" + key + "' must be >= 0");
      c.*field = static_cast<T>(x);
    }
  };
}

const std::map<std::string, Setter>& config_keys() {
  static const std::map<std::string, Setter> keys = {
      {"wavelength_nm", setter(&RunConfig::wavelength_nm)},
      {"f", setter(&RunConfig::f)},
      {"grating", setter(&RunConfig::grating)},
      {"output", setter(&RunConfig::output)},
      {"format", setter(&RunConfig::format)},
      {"seed", setter(&RunConfig::seed)},
      {"power_g_uw", setter(&RunConfig::power_g_uw)},
      {"power_r_uw", setter(&RunConfig::power_r_uw)},
      {"mask_mm", setter(&RunConfig::mask_mm)},
      {"iris_mm", setter(&RunConfig::iris_mm)},
      {"beam_g_mm", setter(&RunConfig::beam_g_mm)},
      {"beam_r_mm", setter(&RunConfig::beam_r_mm)},
      {"eta", setter(&RunConfig::eta)},
      {"sigma", setter(&RunConfig::sigma)},
      {"trials", setter(&RunConfig::trials)},
      {"kappa", setter(&RunConfig::kappa)},
      {"pwr_ga_uw", setter(&RunConfig::pwr_ga_uw)},
      {"pwr_ra_uw", setter(&RunConfig::pwr_ra_uw)},
      {"background_uw", setter(&RunConfig::background_uw)},
      {"coupling", setter(&RunConfig::coupling)},
      {"sample_rate_hz", setter(&RunConfig::sample_rate_hz)},
      {"chopper_hz", setter(&RunConfig::chopper_hz)},
      {"cycles", setter(&RunConfig::cycles)},
      {"ramp_fraction", setter(&RunConfig::ramp_fraction)},
      {"gain_nonlinearity", setter(&RunConfig::gain_nonlinearity)},
      {"waveform_output", setter(&RunConfig::waveform_output)},
      {"j_min", setter(&RunConfig::j_min)},
      {"j_max", setter(&RunConfig::j_max)},
      {"step", setter(&RunConfig::step)},
      {"slits", setter(&RunConfig::slits)},
      {"samples_per_unit", setter(&RunConfig::samples_per_unit)},
      {"tails", setter(&RunConfig::tails)},
      {"method", setter(&RunConfig::method)},
      {"control", setter(&RunConfig::control)},
      {"text", setter(&RunConfig::text)},
      {"mc_seeds", setter(&RunConfig::mc_seeds)},
  };
  return keys;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

measurement::TrialConfig trial_config(const RunConfig& c) {
  measurement::TrialConfig t;
  t.sigma = c.sigma;
  t.trials = c.trials;
  t.seed = c.seed;
  t.kappa = c.kappa;
  t.pwr_ga_uw = c.pwr_ga_uw;
  t.pwr_ra_uw = c.pwr_ra_uw;
  t.background_uw = c.background_uw;
  t.power_g_uw = c.power_g_uw;
  t.power_r_uw = c.power_r_uw;
  t.eta = c.eta;
  t.waveform.sample_rate_hz = c.sample_rate_hz;
  t.waveform.chopper_hz = c.chopper_hz;
  t.waveform.cycles = c.cycles;
  t.waveform.ramp_fraction = c.ramp_fraction;
  t.waveform.mode = measurement::parse_coupling_mode(c.coupling);
  t.waveform.gain_nonlinearity = c.gain_nonlinearity;
  return t;
}

// Runs `body` against the configured output, a file or `out`.
void emit(const std::string& path, std::ostream& out, const std::function<void(std::ostream&)>& body) {
  if (path.empty() || path == "-") {
    body(out);
    return;
  }
  std::ofstream file(path);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  body(file);
  file.flush();
  if (!file) throw IoError("write to '" + path + "' failed");
}

std::string fmt(const char* pattern, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, x);
  return buf;
}

// --- subcommands ---------------------------------------------------------

int cmd_curve(const RunConfig& c, std::ostream& out) {
  const auto rows = duality::curve_sample(c.j_min, c.j_max, c.step, c.f);
  const auto fmt_out = report::parse_format(c.format);
  emit(c.output, out, [&](std::ostream& os) { report::write(report::curve_table(rows), fmt_out, os); });
  return 0;
}

int cmd_spectrum(const RunConfig& c, std::ostream& out) {
  const std::string sel = c.grating.empty() ? "G(3.16)" : c.grating;
  const auto g = grating::parse_grating(sel, c.wavelength_nm);
  if (!g) throw ArgumentError("spectrum needs a grating, not '" + sel + "'");
  const auto s = duality::spectrum(*g, c.wavelength_nm, c.slits, c.samples_per_unit);
  const auto fmt_out = report::parse_format(c.format);
  emit(c.output, out, [&](std::ostream& os) { report::write(report::spectrum_table(s), fmt_out, os); });
  return 0;
}

int cmd_gratings(const RunConfig& c, std::ostream& out) {
  const auto fmt_out = report::parse_format(c.format);
  emit(c.output, out, [&](std::ostream& os) {
    report::write(report::gratings_table(c.wavelength_nm, c.f), fmt_out, os);
  });
  return 0;
}

std::vector<measurement::TrialRun> simulate_runs(const RunConfig& c) {
  const auto base = trial_config(c);
  if (c.grating.empty() || c.grating == "all")
    return measurement::run_protocol(base, c.wavelength_nm, c.f);
  const auto sel = measurement::TrialConfig::for_selection(c.grating, c.wavelength_nm, c.f);
  auto cfg = base;
  cfg.label = sel.label;
  cfg.omega_true = sel.omega_true;
  return {measurement::run_trials(cfg)};
}

int cmd_simulate(const RunConfig& c, std::ostream& out) {
  const auto runs = simulate_runs(c);
  const auto fmt_out = report::parse_format(c.format);
  emit(c.output, out, [&](std::ostream& os) { report::write(report::trials_table(runs), fmt_out, os); });
  if (!c.waveform_output.empty()) {
    auto cfg = trial_config(c);
    cfg.label = runs.front().label;
    cfg.omega_true = runs.front().omega_true;
    const auto w = measurement::trial_waveform(cfg, 0, true);
    emit(c.waveform_output, out,
         [&](std::ostream& os) { report::write(report::waveform_table(w), fmt_out, os); });
  }
  return 0;
}

std::vector<trials::TestReport> compare_sets(const std::vector<trials::TrialSet>& sets,
                                             const std::string& control, trials::Method method) {
  std::map<std::string, const trials::TrialSet*> by_label;
  for (const auto& s : sets) by_label[s.label] = &s;
  std::vector<trials::TestReport> reports;
  std::set<std::pair<std::string, std::string>> done;
  const auto run = [&](const std::string& a, const std::string& b, trials::Tails tails) {
    if (!done.insert({std::min(a, b), std::max(a, b)}).second) return;
    reports.push_back({a, b, trials::t_test(*by_label.at(a), *by_label.at(b), tails, method)});
  };
  for (const auto& cmp : trials::standard_comparisons())
    if (by_label.count(cmp.first) && by_label.count(cmp.second) &&
        (cmp.first == control || cmp.second == control || (cmp.first != "NG" && cmp.second != "NG")))
      run(cmp.first, cmp.second, cmp.tails);
  if (by_label.count(control))
    for (const auto& s : sets)
      if (s.label != control) run(s.label, control, trials::Tails::two);
  return reports;
}

std::string text_summaries(const std::vector<trials::TrialSet>& sets) {
  std::ostringstream os;
  char buf[128];
  std::snprintf(buf, sizeof buf, "%-10s %4s %10s %10s\n", "set", "n", "mean", "se");
  os << buf;
  for (const auto& s : sets) {
    const auto sum = trials::summarize(s);
    std::snprintf(buf, sizeof buf, "%-10s %4zu %10.5f %10.5f\n", s.label.c_str(), sum.n, sum.mean,
                  sum.se);
    os << buf;
  }
  return os.str();
}

int cmd_analyze(const RunConfig& c, const std::string& input, std::ostream& out) {
  std::vector<trials::TrialSet> sets;
  if (input == "-") {
    sets = report::read_trials_csv(std::cin);
  } else {
    std::ifstream in(input);
    if (!in) throw IoError("cannot open '" + input + "'");
    sets = report::read_trials_csv(in);
  }
  if (sets.empty()) throw ArgumentError("analyze: no trial rows in '" + input + "'");
  const auto reports = compare_sets(sets, c.control, trials::parse_method(c.method));
  emit(c.output, out, [&](std::ostream& os) {
    if (c.text) {
      os << text_summaries(sets) << '\n' << trials::format_reports(reports);
      return;
    }
    const auto fmt_out = report::parse_format(c.format);
    if (fmt_out == report::Format::csv) {
      report::write_csv(report::tests_table(reports), os);
    } else {
      std::ostringstream sums, tests;
      report::write_json(report::summaries_table(sets), sums);
      report::write_json(report::tests_table(reports), tests);
      nlohmann::ordered_json doc;
      doc["summaries"] = nlohmann::ordered_json::parse(sums.str());
      doc["tests"] = nlohmann::ordered_json::parse(tests.str());
      os << doc.dump(2) << '\n';
    }
  });
  return 0;
}

int cmd_ttest(const RunConfig& c, const std::vector<double>& v, std::ostream& out) {
  const auto as_count = [](double x, const char* what) {
    if (!(x >= 2.0) || x != std::floor(x))
      throw ArgumentError(std::string("ttest: ") + what + " must be an integer >= 2");
    return static_cast<std::size_t>(x);
  };
  const auto r = trials::t_test_from_summary(v[0], v[1], as_count(v[2], "n1"), v[3], v[4],
                                             as_count(v[5], "n2"), trials::parse_tails(c.tails),
                                             trials::parse_method(c.method));
  const std::vector<trials::TestReport> reports{{"a", "b", r}};
  emit(c.output, out, [&](std::ostream& os) {
    if (c.text)
      os << trials::format_reports(reports);
    else
      report::write(report::tests_table(reports), report::parse_format(c.format), os);
  });
  return 0;
}

int cmd_reproduce(const RunConfig& c, std::ostream& out) {
  std::ostringstream os;
  char buf[256];

  os << "occupation values, lambda = " << fmt("%g", c.wavelength_nm) << " nm, f = " << fmt("%g", c.f)
     << "\n";
  for (const auto& e : grating::standard_catalog(c.wavelength_nm)) {
    const double ji = grating::truncation_point(e.grating.slit_width_nm(), c.wavelength_nm);
    const double omega = duality::occupation(ji, c.f);
    std::snprintf(buf, sizeof buf, "  %-8s j_i=%.4f omega=%.4f %s\n", e.label.c_str(), ji, omega,
                  std::string(duality::to_string(duality::classify(omega))).c_str());
    os << buf;
  }

  os << "\nreported summaries\n";
  std::vector<trials::TestReport> ref_reports;
  {
    std::map<std::string, trials::Summary> ref;
    for (const auto& s : trials::reference_summaries()) {
      ref[s.label] = s.summary;
      std::snprintf(buf, sizeof buf, "  %-8s n=%zu mean=%.4f se=%.4f\n", s.label.c_str(),
                    s.summary.n, s.summary.mean, s.summary.se);
      os << buf;
    }
    for (const auto& cmp : trials::standard_comparisons()) {
      const auto& a = ref.at(cmp.first);
      const auto& b = ref.at(cmp.second);
      ref_reports.push_back({cmp.first, cmp.second,
                             trials::t_test_from_summary(a.mean, a.se, a.n, b.mean, b.se, b.n, cmp.tails)});
    }
    os << trials::format_reports(ref_reports);
  }

  os << "\nsimulated trial sets, seed " << c.seed << "\n";
  auto base = trial_config(c);
  const auto runs = measurement::run_protocol(base, c.wavelength_nm, c.f);
  std::vector<trials::TrialSet> sets;
  for (const auto& r : runs) sets.push_back(r.set());
  os << text_summaries(sets);
  std::vector<trials::TestReport> sim_reports;
  {
    std::map<std::string, const trials::TrialSet*> by_label;
    for (const auto& s : sets) by_label[s.label] = &s;
    for (const auto& cmp : trials::standard_comparisons())
      sim_reports.push_back({cmp.first, cmp.second,
                             trials::t_test(*by_label.at(cmp.first), *by_label.at(cmp.second), cmp.tails)});
  }
  os << trials::format_reports(sim_reports);

  os << "\ncoupling\n";
  const auto sink = coupling::check_sink_criterion(c.power_g_uw, c.power_r_uw);
  std::snprintf(buf, sizeof buf, "  P_R/P_G = %.1f (%s)\n", sink.ratio, sink.pass ? "sink" : "not a sink");
  os << buf;
  const auto g_split = coupling::mask_split({c.beam_g_mm, c.mask_mm, c.iris_mm});
  const auto r_split = coupling::mask_split({c.beam_r_mm, c.mask_mm, c.iris_mm});
  std::snprintf(buf, sizeof buf, "  prepared beam: on mask %.4f, annulus %.4f, outside iris %.4f\n",
                g_split.on_mask, g_split.annulus, g_split.outside_iris);
  os << buf;
  std::snprintf(buf, sizeof buf, "  restoration beam: on mask %.4f, annulus %.4f, outside iris %.4f\n",
                r_split.on_mask, r_split.annulus, r_split.outside_iris);
  os << buf;

  os << "\nacceptance\n";
  acceptance::Options opts;
  opts.seed = c.seed;
  opts.monte_carlo_seeds = c.mc_seeds;
  const auto results = acceptance::run_all(opts);
  bool all = true;
  for (const auto& r : results) {
    os << acceptance::format_line(r, false) << '\n';
    all &= r.pass;
  }

  if (report::parse_format(c.format) == report::Format::json) {
    nlohmann::ordered_json doc;
    for (const auto& [name, reps] : {std::pair{"reported_tests", &ref_reports},
                                     std::pair{"simulated_tests", &sim_reports}}) {
      std::ostringstream tmp;
      report::write_json(report::tests_table(*reps), tmp);
      doc[name] = nlohmann::ordered_json::parse(tmp.str());
    }
    std::ostringstream sums;
    report::write_json(report::summaries_table(sets), sums);
    doc["simulated_summaries"] = nlohmann::ordered_json::parse(sums.str());
    auto crit = nlohmann::ordered_json::array();
    for (const auto& r : results) crit.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    doc["acceptance"] = crit;
    emit(c.output, out, [&](std::ostream& o) { o << doc.dump(2) << '\n'; });
  } else {
    emit(c.output, out, [&](std::ostream& o) { o << os.str(); });
  }
  return all ? 0 : 3;
}

// Scans raw arguments for --config so file values load before flags.
std::string find_config_path(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) return args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) return args[i].substr(9);
  }
  return {};
}

}  // namespace

void RunConfig::validate() const {
  if (!(wavelength_nm > 0.0)) throw ArgumentError("wavelength_nm must be > 0");
  if (!(f > 0.0 && f <= 1.0)) throw ArgumentError("f must lie in (0, 1]");
  report::parse_format(format);
  trials::parse_tails(tails);
  trials::parse_method(method);
  measurement::parse_coupling_mode(coupling);
  if (trials < 2) throw ArgumentError("trials must be >= 2");
  if (slits < 2) throw ArgumentError("slits must be >= 2");
  if (samples_per_unit < 0) throw ArgumentError("samples_per_unit must be >= 0");
  if (mc_seeds < 1) throw ArgumentError("mc_seeds must be >= 1");
  if (cycles < 1) throw ArgumentError("cycles must be >= 1");
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  std::map<std::string, std::string> entries;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ArgumentError("config line " + std::to_string(line_no) + ": expected key=value");
    entries[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return entries;
}

void apply_config(RunConfig& cfg, const std::map<std::string, std::string>& entries) {
  const auto& keys = config_keys();
  for (const auto& [key, value] : entries) {
    const auto it = keys.find(key);
    if (it == keys.end()) throw ArgumentError("config: unknown key '" + key + "'");
    it->second(cfg, key, value);
  }
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Ronchi grating occupation values: theory tables, trial simulation and statistics",
               "ronchi"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  app.add_option("--config", config_path, "key=value settings file, applied before flags");
  app.add_option("--lambda,--wavelength_nm", cfg.wavelength_nm, "wavelength in nm");
  app.add_option("--f", cfg.f, "obliquity factor for orders beyond the first");
  app.add_option("-o,--output", cfg.output, "output file (default stdout)");
  app.add_option("--format", cfg.format, "csv or json");
  app.add_option("--seed", cfg.seed, "master random seed");

  auto* curve = app.add_subcommand("curve", "resultant probability and occupation vs truncation point");
  curve->add_option("--min,--j_min", cfg.j_min, "first truncation point");
  curve->add_option("--max,--j_max", cfg.j_max, "last truncation point");
  curve->add_option("--step", cfg.step, "grid step");

  auto* spectrum = app.add_subcommand("spectrum", "far-field intensity profile of one grating");
  spectrum->add_option("--grating", cfg.grating, "label, slit width (w=833, 833nm) or lines/mm");
  spectrum->add_option("--slits", cfg.slits, "number of irradiated slits");
  spectrum->add_option("--samples_per_unit", cfg.samples_per_unit, "samples per unit order (0: auto)");

  app.add_subcommand("gratings", "catalog gratings with their predicted occupation");

  auto* simulate = app.add_subcommand("simulate", "simulate chopped-beam trials");
  simulate->add_option("--grating", cfg.grating, "'all' or one grating selector");
  simulate->add_option("--power_g_uw", cfg.power_g_uw, "prepared beam power");
  simulate->add_option("--power_r_uw", cfg.power_r_uw, "restoration beam power");
  simulate->add_option("--eta", cfg.eta, "equilibration efficiency");
  simulate->add_option("--sigma", cfg.sigma, "per-trial SD of omega");
  simulate->add_option("--trials", cfg.trials, "trials per set");
  simulate->add_option("--kappa", cfg.kappa, "detector gain, V per uW");
  simulate->add_option("--pwr_ga_uw", cfg.pwr_ga_uw, "prepared power on the detector annulus");
  simulate->add_option("--pwr_ra_uw", cfg.pwr_ra_uw, "restoration leakage on the annulus");
  simulate->add_option("--background_uw", cfg.background_uw, "ambient background");
  simulate->add_option("--coupling", cfg.coupling, "ac or dc");
  simulate->add_option("--sample_rate_hz", cfg.sample_rate_hz, "digitizer rate");
  simulate->add_option("--chopper_hz", cfg.chopper_hz, "chopper frequency");
  simulate->add_option("--cycles", cfg.cycles, "chopper cycles per record");
  simulate->add_option("--ramp_fraction", cfg.ramp_fraction, "eclipse ramp, fraction of a cycle");
  simulate->add_option("--gain_nonlinearity", cfg.gain_nonlinearity, "quadratic gain term");
  simulate->add_option("--waveform_output", cfg.waveform_output, "also write trial 0's coupled record");

  std::string input;
  auto* analyze = app.add_subcommand("analyze", "summaries and t tests for a trials CSV");
  analyze->add_option("input", input, "trials CSV ('-' for stdin)")->required();
  analyze->add_option("--control", cfg.control, "control set label");
  analyze->add_option("--method", cfg.method, "pooled or welch");
  analyze->add_flag("--text", cfg.text, "plain-text report");

  std::vector<double> numbers;
  auto* ttest = app.add_subcommand("ttest", "t test from two summaries: mean1 se1 n1 mean2 se2 n2");
  ttest->add_option("values", numbers, "mean1 se1 n1 mean2 se2 n2")->required()->expected(6);
  ttest->add_option("--tails", cfg.tails, "one or two");
  ttest->add_option("--method", cfg.method, "pooled or welch");
  ttest->add_flag("--text", cfg.text, "plain-text report");

  auto* reproduce = app.add_subcommand("reproduce", "full protocol report with acceptance checks");
  reproduce->add_option("--mc_seeds", cfg.mc_seeds, "master seeds for the Monte Carlo check");
  reproduce->add_option("--mask_mm", cfg.mask_mm, "mask diameter");
  reproduce->add_option("--iris_mm", cfg.iris_mm, "iris diameter");
  reproduce->add_option("--beam_g_mm", cfg.beam_g_mm, "prepared beam diameter");
  reproduce->add_option("--beam_r_mm", cfg.beam_r_mm, "restoration beam diameter");

  try {
    if (const auto path = find_config_path(args); !path.empty()) apply_config(cfg, read_config_file(path));
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  const auto* sub = app.get_subcommands().front();
  cfg.subcommand = sub->get_name();
  try {
    cfg.validate();
    if (cfg.subcommand == "curve") return cmd_curve(cfg, out);
    if (cfg.subcommand == "spectrum") return cmd_spectrum(cfg, out);
    if (cfg.subcommand == "gratings") return cmd_gratings(cfg, out);
    if (cfg.subcommand == "simulate") return cmd_simulate(cfg, out);
    if (cfg.subcommand == "analyze") return cmd_analyze(cfg, input, out);
    if (cfg.subcommand == "ttest") return cmd_ttest(cfg, numbers, out);
    if (cfg.subcommand == "reproduce") return cmd_reproduce(cfg, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace ronchi::cli
