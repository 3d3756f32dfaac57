#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "ronchi/duality.hpp"
#include "ronchi/measurement.hpp"
#include "ronchi/trials.hpp"

namespace ronchi::report {

using Cell = std::variant<double, std::int64_t, std::string>;

/// Column-major description of a flat table, emitted as CSV or JSON.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

enum class Format { csv, json };

Format parse_format(const std::string& s);

/// CSV with a header row; reals printed with 12 significant digits.
void write_csv(const Table& t, std::ostream& os);

/// Array of records keyed by column name; reals rounded to 9 significant digits.
void write_json(const Table& t, std::ostream& os);

void write(const Table& t, Format f, std::ostream& os);

/// Rounds to 9 significant digits, the precision used for JSON output.
double round_significant(double x);

Table curve_table(const std::vector<duality::CurveRow>& rows);
Table spectrum_table(const duality::ResultantSpectrum& s);
Table trials_table(const std::vector<measurement::TrialRun>& runs);
Table waveform_table(const measurement::WaveformRecord& w);
Table gratings_table(double wavelength_nm, double f);
Table tests_table(const std::vector<trials::TestReport>& reports);
Table summaries_table(const std::vector<trials::TrialSet>& sets);

/// Reads the trials CSV schema back into labelled sets, in order of first
/// appearance. Throws ArgumentError on a malformed header or row.
std::vector<trials::TrialSet> read_trials_csv(std::istream& is);

}  // namespace ronchi::report
