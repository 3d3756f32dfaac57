#include "ronchi/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <istream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "ronchi/errors.hpp"
#include "ronchi/grating.hpp"

namespace ronchi::report {

namespace {

std::string format_real(double x, int digits) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

std::string csv_cell(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return format_real(*d, 12);
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  return std::get<std::string>(c);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) {
    while (!field.empty() && (field.back() == '\r' || field.back() == ' ')) field.pop_back();
    while (!field.empty() && field.front() == ' ') field.erase(field.begin());
    out.push_back(field);
  }
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw ArgumentError("output format must be 'csv' or 'json', got '" + s + "'");
}

double round_significant(double x) { return std::strtod(format_real(x, 9).c_str(), nullptr); }

void write_csv(const Table& t, std::ostream& os) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
    os << '\n';
  }
}

void write_json(const Table& t, std::ostream& os) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json rec;
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>)
              rec[t.columns[i]] = round_significant(v);
            else
              rec[t.columns[i]] = v;
          },
          row[i]);
    }
    arr.push_back(std::move(rec));
  }
  os << arr.dump(2) << '\n';
}

void write(const Table& t, Format f, std::ostream& os) {
  if (f == Format::csv)
    write_csv(t, os);
  else
    write_json(t, os);
}

Table curve_table(const std::vector<duality::CurveRow>& rows) {
  Table t{{"j_i", "P_r", "omega", "branch"}, {}};
  for (const auto& r : rows)
    t.rows.push_back({r.truncation, r.probability, r.occupation, std::string(to_string(r.branch))});
  return t;
}

Table spectrum_table(const duality::ResultantSpectrum& s) {
  Table t{{"j", "envelope", "peak"}, {}};
  t.rows.reserve(s.samples.size());
  for (const auto& x : s.samples) t.rows.push_back({x.j, x.envelope, x.peak});
  return t;
}

Table trials_table(const std::vector<measurement::TrialRun>& runs) {
  Table t{{"trial_index", "grating", "dV_Gc_volts", "dV_G_volts", "omega_i"}, {}};
  for (const auto& run : runs)
    for (const auto& r : run.records)
      t.rows.push_back({static_cast<std::int64_t>(r.index), r.label, r.dv_gc, r.dv_g, r.omega});
  return t;
}

Table waveform_table(const measurement::WaveformRecord& w) {
  Table t{{"time_s", "volts"}, {}};
  t.rows.reserve(w.volts.size());
  for (std::size_t i = 0; i < w.volts.size(); ++i) t.rows.push_back({w.time_s(i), w.volts[i]});
  return t;
}

Table gratings_table(double wavelength_nm, double f) {
  Table t{{"lines_per_mm", "slit_width_nm", "period_nm", "j_i", "label", "omega_th", "class"}, {}};
  for (const auto& e : grating::standard_catalog(wavelength_nm)) {
    const double ji = grating::truncation_point(e.grating.slit_width_nm(), wavelength_nm);
    std::string omega_class = "n/a";
    double omega = 0.0;
    if (ji >= 2.0 && ji <= 8.0) {
      omega = duality::occupation(ji, f);
      omega_class = std::string(duality::to_string(duality::classify(omega)));
    }
    t.rows.push_back({e.lines_per_mm, e.grating.slit_width_nm(), e.grating.period_nm(), ji,
                      e.label, omega, omega_class});
  }
  return t;
}

Table tests_table(const std::vector<trials::TestReport>& reports) {
  Table t{{"label_a", "label_b", "t", "df", "tails", "p", "method"}, {}};
  for (const auto& r : reports)
    t.rows.push_back({r.label_a, r.label_b, r.result.t, r.result.df,
                      std::string(trials::to_string(r.result.tails)), r.result.p,
                      std::string(trials::to_string(r.result.method))});
  return t;
}

Table summaries_table(const std::vector<trials::TrialSet>& sets) {
  Table t{{"label", "n", "mean", "se"}, {}};
  for (const auto& s : sets) {
    const auto sum = trials::summarize(s);
    t.rows.push_back({s.label, static_cast<std::int64_t>(sum.n), sum.mean, sum.se});
  }
  return t;
}

std::vector<trials::TrialSet> read_trials_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw ArgumentError("trials CSV: empty input");
  const auto header = split_csv_line(line);
  int col_label = -1, col_omega = -1;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == "grating") col_label = static_cast<int>(i);
    if (header[i] == "omega_i") col_omega = static_cast<int>(i);
  }
  if (col_label < 0 || col_omega < 0)
    throw ArgumentError("trials CSV: header needs 'grating' and 'omega_i' columns");

  std::vector<trials::TrialSet> sets;
  std::map<std::string, std::size_t> index;
  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != header.size())
      throw ArgumentError("trials CSV: wrong field count on line " + std::to_string(line_no));
    const std::string& label = fields[static_cast<std::size_t>(col_label)];
    const std::string& raw = fields[static_cast<std::size_t>(col_omega)];
    char* end = nullptr;
    const double omega = std::strtod(raw.c_str(), &end);
    if (raw.empty() || end != raw.c_str() + raw.size())
      throw ArgumentError("trials CSV: bad omega_i on line " + std::to_string(line_no));
    auto [it, inserted] = index.try_emplace(label, sets.size());
    if (inserted) sets.push_back({label, {}});
    sets[it->second].values.push_back(omega);
  }
  return sets;
}

}  // namespace ronchi::report
