#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "ronchi/duality.hpp"
#include "ronchi/errors.hpp"
#include "ronchi/measurement.hpp"
#include "ronchi/report.hpp"

using namespace ronchi;
using namespace ronchi::report;

namespace {

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_SUITE("report") {
  TEST_CASE("CSV schemas") {
    std::ostringstream curve, spec, trials, wave;
    write_csv(curve_table(duality::curve_sample(2, 4, 1.0)), curve);
    CHECK(first_line(curve.str()) == "j_i,P_r,omega,branch");
    write_csv(spectrum_table(duality::spectrum(grating::RonchiGrating(1000), 633, 4, 10)), spec);
    CHECK(first_line(spec.str()) == "j,envelope,peak");

    auto cfg = measurement::TrialConfig::for_selection("NG");
    cfg.trials = 2;
    write_csv(trials_table({measurement::run_trials(cfg)}), trials);
    CHECK(first_line(trials.str()) == "trial_index,grating,dV_Gc_volts,dV_G_volts,omega_i");
    write_csv(waveform_table(measurement::trial_waveform(cfg, 0, true)), wave);
    CHECK(first_line(wave.str()) == "time_s,volts");
  }

  TEST_CASE("curve CSV rows") {
    std::ostringstream os;
    write_csv(curve_table(duality::curve_sample(2, 4, 1.0)), os);
    const std::string s = os.str();
    CHECK(std::count(s.begin(), s.end(), '\n') == 6);
    CHECK(s.find("3,1.01289812577,0.987266117446,plus") != std::string::npos);
    CHECK(s.find(",minus\n") != std::string::npos);
  }

  TEST_CASE("JSON output is an array of records") {
    std::ostringstream os;
    write(gratings_table(633, 0.56), Format::json, os);
    const auto doc = nlohmann::json::parse(os.str());
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 3);
    CHECK(doc[0]["label"] == "G(2.63)");
    CHECK(doc[0]["lines_per_mm"].get<double>() == 600);
    CHECK(doc[1]["class"] == "depleted");
    CHECK(doc[2]["slit_width_nm"].get<double>() == 1250);
    CHECK(doc[0]["omega_th"].get<double>() == doctest::Approx(1.0043768).epsilon(1e-7));
  }

  TEST_CASE("format names") {
    CHECK(parse_format("csv") == Format::csv);
    CHECK(parse_format("json") == Format::json);
    CHECK_THROWS_AS(parse_format("xml"), ArgumentError);
  }

  TEST_CASE("significant-digit rounding") {
    CHECK(round_significant(1.23456789012) == 1.23456789);
    CHECK(round_significant(0.0) == 0.0);
  }

  TEST_CASE("trials CSV round trip") {
    auto a = measurement::TrialConfig::for_selection("G(2.63)");
    auto b = measurement::TrialConfig::for_selection("NG");
    a.trials = b.trials = 4;
    const auto ra = measurement::run_trials(a), rb = measurement::run_trials(b);
    std::stringstream ss;
    write_csv(trials_table({ra, rb}), ss);
    const auto sets = read_trials_csv(ss);
    REQUIRE(sets.size() == 2);
    CHECK(sets[0].label == "G(2.63)");
    CHECK(sets[1].label == "NG");
    REQUIRE(sets[0].values.size() == 4);
    for (std::size_t i = 0; i < 4; ++i)
      CHECK(sets[0].values[i] == doctest::Approx(ra.records[i].omega).epsilon(1e-11));
  }

  TEST_CASE("trials CSV errors") {
    std::istringstream empty("");
    CHECK_THROWS_AS(read_trials_csv(empty), ArgumentError);
    std::istringstream no_cols("a,b\n1,2\n");
    CHECK_THROWS_AS(read_trials_csv(no_cols), ArgumentError);
    std::istringstream bad("grating,omega_i\nNG,abc\n");
    CHECK_THROWS_AS(read_trials_csv(bad), ArgumentError);
    std::istringstream ragged("grating,omega_i\nNG\n");
    CHECK_THROWS_AS(read_trials_csv(ragged), ArgumentError);
    std::istringstream minimal("omega_i,grating\r\n1.01,A\r\n\r\n0.99,A\r\n");
    const auto sets = read_trials_csv(minimal);
    REQUIRE(sets.size() == 1);
    CHECK(sets[0].values == std::vector<double>{1.01, 0.99});
  }
}
