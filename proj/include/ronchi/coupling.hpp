#pragma once

namespace ronchi::coupling {

/// Relative probability and energy on a beam segment. Power in microwatts
/// is carried as the energy (one segment per unit time), so the occupation
/// value is E / P in any consistent unit.
class BeamState {
 public:
  BeamState(double probability, double energy);

  /// Beam of measured power with a given occupation: E = power, P = power / omega.
  static BeamState from_power(double power_uw, double omega = 1.0);

  double probability() const { return probability_; }
  double energy() const { return energy_; }
  double occupation() const { return energy_ / probability_; }
  double power_uw() const { return energy_; }

 private:
  double probability_;
  double energy_;
};

struct Equilibrated {
  BeamState prepared;     ///< Φ_G at the end of the coupling path
  BeamState restoration;  ///< Φ_R at the end of the coupling path
  double delta_energy;    ///< gain by Φ_G (negative when Φ_G gives energy away)
};

/// Net energy exchange that moves both beams toward the common occupation
/// (E_G + E_R) / (P_G + P_R). `efficiency` in [0, 1] scales the transfer;
/// 1 is complete equilibration. Probabilities are untouched and the total
/// energy is conserved.
Equilibrated equilibrate(const BeamState& prepared, const BeamState& restoration,
                         double efficiency = 1.0);

inline constexpr double kSinkRatioThreshold = 100.0;

struct SinkCheck {
  double ratio;
  bool pass;
};

/// Restoration-to-prepared ratio, evaluated with powers standing in for
/// probabilities. Passes at >= 100:1.
SinkCheck check_sink_criterion(const BeamState& prepared, const BeamState& restoration);
SinkCheck check_sink_criterion(double power_g_uw, double power_r_uw);

/// Beam, disk-mask and iris diameters in mm. Beam diameters are 1/e^2
/// intensity diameters of a circular Gaussian.
struct MaskGeometry {
  double beam_mm;
  double mask_mm;
  double iris_mm;

  void validate() const;
};

struct MaskSplit {
  double on_mask;
  double annulus;
  double outside_iris;
};

/// Fraction of a Gaussian beam's power inside radius r: 1 - exp(-8 r^2 / D^2).
double encircled_fraction(double radius_mm, double beam_mm);

MaskSplit mask_split(const MaskGeometry& geom);

}  // namespace ronchi::coupling
