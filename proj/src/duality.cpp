#include "ronchi/duality.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ronchi/errors.hpp"

namespace ronchi::duality {

using numerics::kPi;

namespace {

constexpr double kMinTruncation = 2.0;
constexpr double kMaxTruncation = 8.0;

// Whether odd order k sits inside the truncation, with the explicit
// threshold convention when k == j_i.
bool order_included(int k, double truncation, bool include_threshold_order) {
  const double kd = static_cast<double>(k);
  if (kd < truncation) return true;
  if (kd == truncation) return include_threshold_order;
  return false;
}

// Half-plane envelope integral over alpha in [0, pi j_i / 2], with the
// part beyond the first null weighted by f.
double weighted_envelope(double truncation, double f) {
  const double edge = 0.5 * kPi * truncation;
  const double central = numerics::integrate_sinc2(0.0, std::min(edge, kPi));
  if (edge <= kPi) return central;
  return central + f * numerics::integrate_sinc2(kPi, edge);
}

double snap_to_integer(double x) {
  const double r = std::nearbyint(x);
  return std::abs(x - r) < 1e-9 ? r : x;
}

}  // namespace

ResultantProbability resultant_probability_fraunhofer(double truncation) {
  if (!std::isfinite(truncation) || truncation < 1.0)
    throw ArgumentError("resultant_probability_fraunhofer: truncation point must be >= 1");
  double orders = 0.5;  // half of the zeroth order in the half-plane sum
  for (int k = 1; k <= truncation; k += 2) orders += numerics::sinc2_order(k);
  const double envelope = numerics::integrate_sinc2(0.0, 0.5 * kPi * truncation);
  const double p = 0.5 * kPi * orders / envelope;
  return {truncation, p, 1.0 / p, true, 1.0};
}

ResultantProbability resultant_probability(double truncation, double f,
                                           bool include_threshold_order) {
  if (!std::isfinite(truncation) || truncation < kMinTruncation || truncation > kMaxTruncation)
    throw ArgumentError("resultant_probability: truncation point must lie in [2, 8], got " +
                        std::to_string(truncation));
  if (!(f > 0.0 && f <= 1.0)) throw ArgumentError("resultant_probability: f must lie in (0, 1]");

  double orders = 0.5 + numerics::sinc2_order(1);
  for (int k = 3; k <= truncation; k += 2)
    if (order_included(k, truncation, include_threshold_order))
      orders += f * numerics::sinc2_order(k);

  const double p = 0.5 * kPi * orders / weighted_envelope(truncation, f);
  return {truncation, p, 1.0 / p, include_threshold_order, f};
}

double occupation(double truncation, double f, bool include_threshold_order) {
  return resultant_probability(truncation, f, include_threshold_order).occupation;
}

FirstLobeTerms first_lobe_terms(double f) {
  return {0.5 * kPi * (0.5 + numerics::sinc2_order(1)),
          0.5 * kPi * f * numerics::sinc2_order(3),
          numerics::integrate_sinc2(0.0, kPi)};
}

Classification classify(double omega, double tol) {
  if (!(omega > 0.0)) throw ArgumentError("classify: occupation must be positive");
  if (!(tol >= 0.0)) throw ArgumentError("classify: tolerance must be >= 0");
  if (std::abs(omega - 1.0) <= tol) return Classification::ordinary;
  return omega > 1.0 ? Classification::enriched : Classification::depleted;
}

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::enriched: return "enriched";
    case Classification::depleted: return "depleted";
    case Classification::ordinary: return "ordinary";
  }
  return "?";
}

std::string_view to_string(Branch b) {
  switch (b) {
    case Branch::regular: return "regular";
    case Branch::plus: return "plus";
    case Branch::minus: return "minus";
  }
  return "?";
}

std::vector<CurveRow> curve_sample(double j_min, double j_max, double step, double f) {
  if (!(j_min >= kMinTruncation && j_min < j_max && j_max <= kMaxTruncation))
    throw ArgumentError("curve_sample: require 2 <= j_min < j_max <= 8");
  if (!(step > 0.0)) throw ArgumentError("curve_sample: step must be positive");

  std::vector<CurveRow> rows;
  const auto count = static_cast<long>(std::floor((j_max - j_min) / step + 1e-9));
  for (long k = 0; k <= count; ++k) {
    const double j = std::min(snap_to_integer(j_min + static_cast<double>(k) * step), j_max);
    const auto r = resultant_probability(j, f, true);
    rows.push_back({j, r.probability, r.occupation, Branch::regular});
  }
  for (int odd = 3; odd <= j_max; odd += 2) {
    if (odd < j_min) continue;
    for (bool plus : {true, false}) {
      const auto r = resultant_probability(odd, f, plus);
      rows.push_back({static_cast<double>(odd), r.probability, r.occupation,
                      plus ? Branch::plus : Branch::minus});
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const CurveRow& a, const CurveRow& b) {
    if (a.truncation != b.truncation) return a.truncation < b.truncation;
    return static_cast<int>(a.branch) < static_cast<int>(b.branch);
  });
  return rows;
}

ResultantSpectrum spectrum(const grating::RonchiGrating& g, double wavelength_nm, int slit_count,
                           int samples_per_unit) {
  if (slit_count < 2) throw ArgumentError("spectrum: need at least two irradiated slits");
  if (samples_per_unit < 0) throw ArgumentError("spectrum: negative sampling density");
  const double ji = grating::truncation_point(g.slit_width_nm(), wavelength_nm);
  const int m = samples_per_unit > 0 ? samples_per_unit : std::max(100, 20 * slit_count);
  const double n = static_cast<double>(slit_count);

  ResultantSpectrum out;
  out.slit_count = slit_count;
  out.truncation = ji;

  const auto k_max = static_cast<long>(std::floor(ji * m));
  out.samples.reserve(static_cast<std::size_t>(2 * k_max + 1));
  for (long k = -k_max; k <= k_max; ++k) {
    const double j = static_cast<double>(k) / m;
    const double env = numerics::sinc2_order(j);
    const double denom = numerics::sin_pi(j);
    // Interference factor [sin(N pi j) / sin(pi j)]^2 peaks at N^2 on integers.
    const double interference =
        denom == 0.0 ? n * n : std::pow(numerics::sin_pi(n * j) / denom, 2);
    out.samples.push_back({j, n * env, env * interference});
  }

  double total = 0.0;
  for (const auto& o : grating::order_geometry(g, wavelength_nm)) {
    if (!o.nonzero_intensity) continue;
    const double rel = numerics::sinc2_order(o.j);
    out.peaks.push_back({o.j, rel, 0.0, 2.0 / n});
    total += rel;
  }
  for (auto& p : out.peaks) p.energy_share = p.relative_intensity / total;
  return out;
}

}  // namespace ronchi::duality
