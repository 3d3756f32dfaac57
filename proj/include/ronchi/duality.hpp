#pragma once

#include <string_view>
#include <vector>

#include "ronchi/grating.hpp"
#include "ronchi/numerics.hpp"

namespace ronchi::duality {

/// Near-field grating output in dimensionless units. Probability, energy
/// and occupation are all unity independent of slit width.
struct OutputState {
  static constexpr double probability = 1.0;
  static constexpr double energy = 1.0;
  static constexpr double occupation = 1.0;
};

/// Total resultant probability of the far-field orders for one truncation
/// point, and the matching occupation value (energy is conserved at 1, so
/// occupation = 1 / probability).
struct ResultantProbability {
  double truncation = 0.0;
  double probability = 0.0;
  double occupation = 0.0;
  bool threshold_included = true;  ///< S-flag for an order sitting exactly at j_i
  double obliquity = 1.0;
};

/// Plain Fraunhofer ratio: half-plane order sum over the half-plane
/// envelope integral, no obliquity. Requires j_i >= 1.
ResultantProbability resultant_probability_fraunhofer(double truncation);

/// Obliquity-amended resultant probability for 2 <= j_i <= 8. Orders past
/// the first null and the envelope beyond alpha = pi are weighted by f.
/// When j_i is exactly an odd integer, `include_threshold_order` picks the
/// j⁺ (true) or j⁻ (false) side of the discontinuity.
ResultantProbability resultant_probability(double truncation,
                                           double f = grating::kDefaultObliquity,
                                           bool include_threshold_order = true);

/// Occupation value 1 / P_r.
double occupation(double truncation, double f = grating::kDefaultObliquity,
                  bool include_threshold_order = true);

/// The three unscaled pieces of the first-side-lobe formula:
///   P_r = (numerator_base + third_order * S3) / (denominator_base + f * int_pi^{pi j_i/2} sinc^2)
/// The printed form divides numerator and denominator by f.
struct FirstLobeTerms {
  double numerator_base;     ///< 0.5 pi (0.5 + sinc^2 alpha_1)
  double third_order;        ///< 0.5 pi f sinc^2 alpha_3
  double denominator_base;   ///< int_0^pi sinc^2
};
FirstLobeTerms first_lobe_terms(double f = grating::kDefaultObliquity);

enum class Classification { enriched, depleted, ordinary };

Classification classify(double omega, double tol = 1e-9);
std::string_view to_string(Classification c);

enum class Branch { regular, plus, minus };
std::string_view to_string(Branch b);

struct CurveRow {
  double truncation;
  double probability;
  double occupation;
  Branch branch;
};

/// P_r and occupation on a regular grid over [j_min, j_max]. Every odd
/// integer in the range additionally gets a `plus` and a `minus` row.
std::vector<CurveRow> curve_sample(double j_min, double j_max, double step,
                                   double f = grating::kDefaultObliquity);

struct SpectrumSample {
  double j;
  double envelope;  ///< N sinc^2(pi j / 2)
  double peak;      ///< N-slit resultant intensity
};

struct OrderPeak {
  int j;
  double relative_intensity;  ///< sinc^2 alpha_j
  double energy_share;        ///< fraction of resultant energy on this order
  double base_width;          ///< null-to-null width on the j continuum
};

struct ResultantSpectrum {
  int slit_count = 0;
  double truncation = 0.0;
  std::vector<SpectrumSample> samples;
  std::vector<OrderPeak> peaks;
};

/// Envelope and resultant peaks on the j continuum over [-j_i, j_i].
/// `samples_per_unit` of 0 picks max(100, 20 N).
ResultantSpectrum spectrum(const grating::RonchiGrating& g, double wavelength_nm, int slit_count,
                           int samples_per_unit = 0);

}  // namespace ronchi::duality
