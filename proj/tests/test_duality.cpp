#include <doctest.h>

#include <cmath>
#include <random>

#include "ronchi/duality.hpp"
#include "ronchi/errors.hpp"
#include "ronchi/grating.hpp"

using namespace ronchi;
using namespace ronchi::duality;

TEST_SUITE("duality") {
  TEST_CASE("output state is ordinary") {
    CHECK(OutputState::probability == 1.0);
    CHECK(OutputState::energy == 1.0);
    CHECK(OutputState::occupation == 1.0);
  }

  TEST_CASE("Fraunhofer resultant probability") {
    // (pi/2)(0.5 + 4/pi^2) / Si(2 pi)
    CHECK(resultant_probability_fraunhofer(2).probability == doctest::Approx(1.0027263374).epsilon(1e-9));
    CHECK(resultant_probability_fraunhofer(4).probability == doctest::Approx(1.0003969011).epsilon(1e-9));
    CHECK(std::abs(resultant_probability_fraunhofer(40).probability - 1.0) < 1e-3);
    CHECK_THROWS_AS(resultant_probability_fraunhofer(0.5), ArgumentError);
  }

  TEST_CASE("resultant probability with obliquity") {
    CHECK(resultant_probability(2).probability == doctest::Approx(1.0028).epsilon(3e-4));
    CHECK(resultant_probability(4).probability == doctest::Approx(1.0015).epsilon(3e-4));
    CHECK(resultant_probability(2).probability == doctest::Approx(1.00272634).epsilon(1e-8));
    CHECK(resultant_probability(4).probability == doctest::Approx(1.00139275).epsilon(1e-8));
    const auto plus = resultant_probability(3, 0.56, true);
    const auto minus = resultant_probability(3, 0.56, false);
    CHECK(plus.probability == doctest::Approx(1.01289813).epsilon(1e-8));
    CHECK(minus.probability == doctest::Approx(0.98544739).epsilon(1e-8));
    CHECK(plus.probability - 1.0 == doctest::Approx(0.013).epsilon(0.1));
    CHECK(1.0 - minus.probability == doctest::Approx(0.015).epsilon(0.05));
    CHECK(plus.threshold_included);
    CHECK_FALSE(minus.threshold_included);
    CHECK(plus.occupation == doctest::Approx(1.0 / plus.probability));
  }

  TEST_CASE("at the first null there is no side-lobe content for f to weight") {
    for (double f : {0.1, 0.56, 1.0})
      CHECK(resultant_probability(2.0, f).probability ==
            doctest::Approx(resultant_probability_fraunhofer(2.0).probability).epsilon(1e-12));
  }

  TEST_CASE("f weights the side-lobe integral once j_i passes 2") {
    CHECK(resultant_probability(2.5, 0.56).probability > resultant_probability(2.5, 1.0).probability);
  }

  TEST_CASE("f = 1 reduces to the Fraunhofer form") {
    for (double j : {3.2, 4.0, 5.5, 7.9})
      CHECK(resultant_probability(j, 1.0).probability ==
            doctest::Approx(resultant_probability_fraunhofer(j).probability).epsilon(1e-12));
  }

  TEST_CASE("resultant probability domain") {
    CHECK_THROWS_AS(resultant_probability(1.9), ArgumentError);
    CHECK_THROWS_AS(resultant_probability(8.1), ArgumentError);
    CHECK_THROWS_AS(resultant_probability(3.5, 0.0), ArgumentError);
    CHECK_THROWS_AS(resultant_probability(std::nan("")), ArgumentError);
  }

  TEST_CASE("occupation of the catalog gratings") {
    CHECK(occupation(2.63) == doctest::Approx(1.0043).epsilon(3e-4));
    CHECK(occupation(3.16) == doctest::Approx(0.9912).epsilon(3e-4));
    CHECK(occupation(3.95) == doctest::Approx(0.9985).epsilon(3e-4));
    CHECK(occupation(2.63) == doctest::Approx(1.00432835).epsilon(1e-8));
    CHECK(occupation(3.16) == doctest::Approx(0.99129937).epsilon(1e-8));
    CHECK(occupation(3.95) == doctest::Approx(0.99860759).epsilon(1e-8));
  }

  TEST_CASE("first-lobe constants scaled by 1/f") {
    const auto t = first_lobe_terms(0.56);
    CHECK(t.numerator_base / 0.56 == doctest::Approx(2.5393177).epsilon(1e-7));
    CHECK(t.third_order / 0.56 == doctest::Approx(0.0707355).epsilon(1e-6));
    CHECK(t.denominator_base / 0.56 == doctest::Approx(2.5324135).epsilon(1e-7));
    CHECK(t.numerator_base == doctest::Approx(1.4220179).epsilon(1e-7));
    CHECK(t.denominator_base == doctest::Approx(1.4181516).epsilon(1e-7));
  }

  TEST_CASE("classification") {
    CHECK(classify(1.0043) == Classification::enriched);
    CHECK(classify(0.9912) == Classification::depleted);
    CHECK(classify(1.0) == Classification::ordinary);
    CHECK(classify(1.0, 0.0) == Classification::ordinary);
    CHECK(classify(1.004, 0.01) == Classification::ordinary);
    CHECK(to_string(Classification::depleted) == "depleted");
    CHECK_THROWS_AS(classify(0.0), ArgumentError);
  }

  TEST_CASE("probability and occupation are reciprocal everywhere") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(2.0, 8.0);
    for (int i = 0; i < 200; ++i) {
      const auto r = resultant_probability(u(rng));
      CHECK(r.probability * r.occupation == doctest::Approx(1.0).epsilon(1e-15));
      CHECK(r.probability > 0.9);
      CHECK(r.probability < 1.1);
    }
  }

  TEST_CASE("curve rows on the default grid") {
    const auto rows = curve_sample(2, 4, 0.01);
    int regular = 0, plus = 0, minus = 0;
    for (const auto& r : rows) {
      regular += r.branch == Branch::regular;
      plus += r.branch == Branch::plus;
      minus += r.branch == Branch::minus;
    }
    CHECK(regular == 201);
    CHECK(plus == 1);
    CHECK(minus == 1);
    CHECK(rows.front().truncation == 2.0);
    CHECK(rows.back().truncation == 4.0);
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i - 1].truncation <= rows[i].truncation);
  }

  TEST_CASE("curve rows on a coarse grid") {
    const auto rows = curve_sample(2, 4, 1.0);
    REQUIRE(rows.size() == 5);
    CHECK(rows[1].truncation == 3.0);
    CHECK(rows[1].branch == Branch::regular);
    CHECK(rows[2].branch == Branch::plus);
    CHECK(rows[3].branch == Branch::minus);
    CHECK(rows[1].probability == rows[2].probability);
  }

  TEST_CASE("threshold jump is about 2.8 percent and shrinks at higher orders") {
    const double jump3 = resultant_probability(3, 0.56, true).probability -
                         resultant_probability(3, 0.56, false).probability;
    const double jump5 = resultant_probability(5, 0.56, true).probability -
                         resultant_probability(5, 0.56, false).probability;
    CHECK(100 * jump3 == doctest::Approx(2.8).epsilon(0.2 / 2.8));
    CHECK(jump3 == doctest::Approx(0.0274507).epsilon(1e-5));
    CHECK(jump5 > 0.0);
    CHECK(jump5 < jump3);
  }

  TEST_CASE("shape of the curve between the first and second nulls") {
    const double p2 = resultant_probability(2.0).probability;
    const double p3_minus = resultant_probability(3.0, 0.56, false).probability;
    for (double j = 2.01; j < 3.0; j += 0.01) {
      const double p = resultant_probability(j).probability;
      CHECK(p < p2);
      CHECK(p > p3_minus);
    }
    // Past the third-order threshold the growing envelope integral pulls
    // P_r down toward its value at the second null.
    double prev = resultant_probability(3.0).probability;
    for (double j = 3.01; j <= 4.0; j += 0.01) {
      const double p = resultant_probability(j).probability;
      CHECK(p < prev);
      prev = p;
    }
  }

  TEST_CASE("curve is continuous away from odd integers") {
    const auto rows = curve_sample(3.01, 4.99, 0.01);
    for (std::size_t i = 1; i < rows.size(); ++i)
      CHECK(std::abs(rows[i].probability - rows[i - 1].probability) < 2e-3);
  }

  TEST_CASE("curve errors") {
    CHECK_THROWS_AS(curve_sample(1.5, 4, 0.1), ArgumentError);
    CHECK_THROWS_AS(curve_sample(4, 2, 0.1), ArgumentError);
    CHECK_THROWS_AS(curve_sample(2, 4, 0.0), ArgumentError);
    CHECK_THROWS_AS(curve_sample(2, 9, 0.1), ArgumentError);
  }

  TEST_CASE("spectrum envelope and peaks") {
    const grating::RonchiGrating g(1000);
    const auto s = spectrum(g, 633, 20, 100);
    CHECK(s.slit_count == 20);
    CHECK(s.truncation == doctest::Approx(3.1596).epsilon(1e-4));
    bool saw_two = false;
    double peak0 = 0, peak1 = 0;
    for (const auto& x : s.samples) {
      if (x.j == 2.0) {
        saw_two = true;
        CHECK(x.envelope == 0.0);
        CHECK(x.peak == 0.0);
      }
      if (x.j == 0.0) peak0 = x.peak;
      if (x.j == 1.0) peak1 = x.peak;
      CHECK(x.peak <= 20.0 * x.envelope * (1 + 1e-12) + 1e-12);
    }
    CHECK(saw_two);
    CHECK(peak0 == doctest::Approx(400.0));
    CHECK(peak1 / peak0 == doctest::Approx(0.4053).epsilon(1e-4));

    REQUIRE(s.peaks.size() == 5);
    double total = 0;
    for (const auto& p : s.peaks) {
      CHECK((p.j % 2 != 0 || p.j == 0));
      total += p.energy_share;
    }
    CHECK(total == doctest::Approx(1.0));
  }

  TEST_CASE("order peaks narrow with slit count") {
    const auto s = spectrum(grating::RonchiGrating(1000), 633, 500, 4);
    const auto& third = s.peaks.back();
    CHECK(third.j == 3);
    // Side lobe between the nulls at j = 2 and j = 4 spans 2 units.
    CHECK(third.base_width / 2.0 == doctest::Approx(0.002));
  }

  TEST_CASE("spectrum errors") {
    CHECK_THROWS_AS(spectrum(grating::RonchiGrating(1000), 633, 1), ArgumentError);
    CHECK_THROWS_AS(spectrum(grating::RonchiGrating(1000), 633, 10, -1), ArgumentError);
  }
}
