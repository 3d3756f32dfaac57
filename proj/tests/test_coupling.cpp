#include <doctest.h>

#include <cmath>
#include <random>

#include "ronchi/coupling.hpp"
#include "ronchi/errors.hpp"

using namespace ronchi;
using namespace ronchi::coupling;

TEST_SUITE("coupling") {
  TEST_CASE("beam state") {
    const BeamState b(2.0, 3.0);
    CHECK(b.occupation() == 1.5);
    const auto p = BeamState::from_power(6.0, 0.9912);
    CHECK(p.energy() == 6.0);
    CHECK(p.power_uw() == 6.0);
    CHECK(p.occupation() == doctest::Approx(0.9912));
    CHECK_THROWS_AS(BeamState(0.0, 1.0), ArgumentError);
    CHECK_THROWS_AS(BeamState(1.0, -1.0), ArgumentError);
  }

  TEST_CASE("ordinary prepared beam exchanges nothing") {
    for (double pr : {0.5, 37.0, 100.0, 1e6})
      CHECK(std::abs(equilibrate(BeamState(1.0, 1.0), BeamState(pr, pr)).delta_energy) < 1e-12);
    // An ordinary prepared beam still trades with a non-ordinary partner.
    CHECK(equilibrate(BeamState(1.0, 1.0), BeamState(37.0, 41.0)).delta_energy > 0.0);
  }

  TEST_CASE("depleted beam restored by a 100:1 sink") {
    const auto out = equilibrate(BeamState(1.0, 0.9912), BeamState(100.0, 100.0));
    const double omega_c = (0.9912 + 100.0) / 101.0;
    CHECK(out.prepared.energy() == doctest::Approx(omega_c).epsilon(1e-14));
    CHECK(out.prepared.occupation() == doctest::Approx(0.99991).epsilon(1e-5));
    CHECK(out.delta_energy == doctest::Approx(0.0087).epsilon(0.01));
    CHECK(out.delta_energy > 0.0);
    CHECK(out.restoration.occupation() == doctest::Approx(omega_c));
  }

  TEST_CASE("enriched beam gives energy away") {
    double prev = 0.0;
    for (double pr : {1e2, 1e4, 1e6, 1e8}) {
      const auto out = equilibrate(BeamState(1.0, 1.0043), BeamState(pr, pr));
      CHECK(out.delta_energy < 0.0);
      CHECK(out.delta_energy <= prev);
      prev = out.delta_energy;
    }
    CHECK(prev == doctest::Approx(-0.0043).epsilon(1e-6));
  }

  TEST_CASE("efficiency scales the transfer linearly") {
    const BeamState g(3.0, 2.9), r(50.0, 51.0);
    const double full = equilibrate(g, r, 1.0).delta_energy;
    CHECK(equilibrate(g, r, 0.0).delta_energy == 0.0);
    CHECK(equilibrate(g, r, 0.25).delta_energy == doctest::Approx(0.25 * full));
    CHECK_THROWS_AS(equilibrate(g, r, -0.1), ArgumentError);
    CHECK_THROWS_AS(equilibrate(g, r, 1.1), ArgumentError);
  }

  TEST_CASE("equilibration invariants on random pairs") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> prob(0.01, 100.0), occ(0.5, 1.5), eff(0.0, 1.0);
    for (int i = 0; i < 5000; ++i) {
      const double pg = prob(rng), pr = prob(rng);
      const BeamState g(pg, pg * occ(rng)), r(pr, pr * occ(rng));
      const double eta = eff(rng);
      const auto out = equilibrate(g, r, eta);
      const double before = g.energy() + r.energy();
      CHECK(std::abs(out.prepared.energy() + out.restoration.energy() - before) <= 1e-12 * before);
      CHECK(out.prepared.probability() == pg);
      CHECK(out.restoration.probability() == pr);
      CHECK(out.prepared.energy() - g.energy() == doctest::Approx(out.delta_energy).epsilon(1e-9));
      // Occupations move toward each other and never cross.
      const double gap_before = g.occupation() - r.occupation();
      const double gap_after = out.prepared.occupation() - out.restoration.occupation();
      CHECK(std::abs(gap_after) <= std::abs(gap_before) * (1 + 1e-12));
      CHECK(gap_after * gap_before >= -1e-18);
      // Full equilibration is idempotent.
      const auto full = equilibrate(g, r, 1.0);
      const auto again = equilibrate(full.prepared, full.restoration, 1.0);
      CHECK(std::abs(again.delta_energy) <= 1e-12 * before);
    }
  }

  TEST_CASE("sink criterion") {
    const auto ok = check_sink_criterion(6.0, 600.0);
    CHECK(ok.ratio == doctest::Approx(100.0));
    CHECK(ok.pass);
    CHECK_FALSE(check_sink_criterion(6.0, 60.0).pass);
    const auto eq = check_sink_criterion(5.0, 5.0);
    CHECK(eq.ratio == 1.0);
    CHECK_FALSE(eq.pass);
    CHECK(check_sink_criterion(BeamState(1.0, 1.0), BeamState(250.0, 250.0)).pass);
  }

  TEST_CASE("encircled power") {
    CHECK(encircled_fraction(0.0, 1.0) == 0.0);
    CHECK(encircled_fraction(0.5, 1.0) == doctest::Approx(1.0 - std::exp(-2.0)));
    CHECK(encircled_fraction(1e3, 1.0) == doctest::Approx(1.0));
  }

  TEST_CASE("mask split of both beams") {
    const auto r = mask_split({1.0, 1.7, 3.3});
    CHECK(r.on_mask == doctest::Approx(0.99691).epsilon(1e-5));
    CHECK(r.on_mask > 100 * r.annulus);
    const auto g = mask_split({3.8, 1.7, 3.3});
    CHECK(g.annulus == doctest::Approx(0.44885).epsilon(1e-5));
    CHECK(g.annulus * 6.0 == doctest::Approx(2.5).epsilon(0.1));
    for (const auto& s : {r, g}) CHECK(s.on_mask + s.annulus + s.outside_iris == doctest::Approx(1.0));
  }

  TEST_CASE("mask split limits and monotonicity") {
    CHECK(mask_split({3.8, 1e-9, 3.3}).on_mask < 1e-15);
    double prev = 0.0;
    for (double m = 0.1; m < 3.3; m += 0.1) {
      const double on = mask_split({3.8, m, 3.3}).on_mask;
      CHECK(on > prev);
      prev = on;
    }
  }

  TEST_CASE("mask geometry validation") {
    CHECK_THROWS_AS(mask_split({3.8, 3.5, 3.3}), ArgumentError);
    CHECK_THROWS_AS(mask_split({0.0, 1.7, 3.3}), ArgumentError);
  }
}
