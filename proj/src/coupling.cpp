#include "ronchi/coupling.hpp"

#include <cmath>

#include "ronchi/errors.hpp"

namespace ronchi::coupling {

BeamState::BeamState(double probability, double energy)
    : probability_(probability), energy_(energy) {
  if (!(probability > 0.0) || !std::isfinite(probability))
    throw ArgumentError("BeamState: probability must be positive");
  if (!(energy >= 0.0) || !std::isfinite(energy))
    throw ArgumentError("BeamState: energy must be non-negative");
}

BeamState BeamState::from_power(double power_uw, double omega) {
  if (!(omega > 0.0)) throw ArgumentError("BeamState: occupation must be positive");
  return BeamState(power_uw / omega, power_uw);
}

Equilibrated equilibrate(const BeamState& prepared, const BeamState& restoration,
                         double efficiency) {
  if (!(efficiency >= 0.0 && efficiency <= 1.0))
    throw ArgumentError("equilibrate: efficiency must lie in [0, 1]");
  const double common = (prepared.energy() + restoration.energy()) /
                        (prepared.probability() + restoration.probability());
  const double delta = efficiency * (common * prepared.probability() - prepared.energy());
  return {BeamState(prepared.probability(), prepared.energy() + delta),
          BeamState(restoration.probability(), restoration.energy() - delta), delta};
}

SinkCheck check_sink_criterion(double power_g_uw, double power_r_uw) {
  if (!(power_g_uw > 0.0) || !(power_r_uw >= 0.0))
    throw ArgumentError("check_sink_criterion: powers must be positive");
  const double ratio = power_r_uw / power_g_uw;
  return {ratio, ratio >= kSinkRatioThreshold};
}

SinkCheck check_sink_criterion(const BeamState& prepared, const BeamState& restoration) {
  return check_sink_criterion(prepared.power_uw(), restoration.power_uw());
}

void MaskGeometry::validate() const {
  if (!(beam_mm > 0.0) || !(mask_mm > 0.0) || !(iris_mm > 0.0))
    throw ArgumentError("MaskGeometry: diameters must be positive");
  if (!(mask_mm < iris_mm)) throw ArgumentError("MaskGeometry: mask must be smaller than iris");
}

double encircled_fraction(double radius_mm, double beam_mm) {
  return -std::expm1(-8.0 * radius_mm * radius_mm / (beam_mm * beam_mm));
}

MaskSplit mask_split(const MaskGeometry& geom) {
  geom.validate();
  const double inner = encircled_fraction(0.5 * geom.mask_mm, geom.beam_mm);
  const double iris = encircled_fraction(0.5 * geom.iris_mm, geom.beam_mm);
  return {inner, iris - inner, 1.0 - iris};
}

}  // namespace ronchi::coupling
