#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ronchi::acceptance {

/// Outcome of one acceptance criterion.
struct CriterionResult {
  int id;
  std::string name;
  bool pass;
  std::string detail;
  double seconds;
};

struct Options {
  std::uint64_t seed = 1;  ///< base for every random draw in the checks
  int monte_carlo_seeds = 1000;   ///< master seeds for the distribution check
};

CriterionResult theory_golden_values();
CriterionResult resultant_probability_landmarks();
CriterionResult first_lobe_constants();
CriterionResult quadrature_against_sine_integral(std::uint64_t seed);
CriterionResult reference_statistics();
CriterionResult equilibration_conservation(std::uint64_t seed);
CriterionResult noiseless_end_to_end();
CriterionResult trial_distribution(std::uint64_t seed, int master_seeds);
CriterionResult estimator_invariances(std::uint64_t seed);
/// In-process determinism: the trial protocol serialized twice must match byte for byte.
CriterionResult simulation_determinism(std::uint64_t seed);

/// Runs every criterion in order.
std::vector<CriterionResult> run_all(const Options& opts = {});

/// "[PASS]  1 name (0.01 s): detail". Timing is left out when output must
/// be reproducible byte for byte.
std::string format_line(const CriterionResult& r, bool with_timing = true);

}  // namespace ronchi::acceptance
