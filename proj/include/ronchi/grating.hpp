#pragma once

#include <optional>
#include <string>
#include <vector>

namespace ronchi::grating {

inline constexpr double kDefaultObliquity = 0.56;
inline constexpr double kHeNeWavelengthNm = 633.0;

/// Binary transmission grating with equal opaque and transmissive bands.
class RonchiGrating {
 public:
  /// Slit width in nm; the period is fixed at twice the slit width.
  explicit RonchiGrating(double slit_width_nm, double band_thickness_nm = 150.0);

  static RonchiGrating from_line_frequency(double lines_per_mm, double band_thickness_nm = 150.0);

  double slit_width_nm() const { return slit_width_nm_; }
  double period_nm() const { return 2.0 * slit_width_nm_; }
  double band_thickness_nm() const { return band_thickness_nm_; }
  double lines_per_mm() const { return 1e6 / period_nm(); }

 private:
  double slit_width_nm_;
  double band_thickness_nm_;
};

/// One diffraction order of a grating at a given wavelength.
struct OrderGeometry {
  int j = 0;
  double alpha = 0.0;      ///< radians, j pi / 2
  double sin_theta = 0.0;  ///< j lambda / (2 w)
  double theta_deg = 0.0;
  bool propagating = false;
  bool nonzero_intensity = false;
};

/// Truncation point on the order continuum, j_i = 2 w / lambda.
double truncation_point(double slit_width_nm, double wavelength_nm);

/// Orders with |j| <= floor(j_i), ordered from -n to +n. Inclusion at
/// |j| == j_i is inclusive.
std::vector<OrderGeometry> order_geometry(const RonchiGrating& g, double wavelength_nm);

/// Empirical obliquity factor for order j. Unity inside the central
/// maximum (|j| <= 1), f beyond the first null. Orders past the
/// truncation point carry nothing and get 0.
///
/// Only the first side lobe's f was ever measured; applying the same f to
/// later lobes is an extrapolation used for curve plotting at j_i > 4.
double obliquity_factor(int j, double truncation, double f = kDefaultObliquity);

/// Catalog entry for one of the standard gratings.
struct CatalogEntry {
  std::string label;      ///< "G(2.63)" etc.
  double lines_per_mm;
  RonchiGrating grating;
};

/// The three commercial gratings (600, 500, 400 lines/mm) labelled by
/// their truncation point at the given wavelength.
std::vector<CatalogEntry> standard_catalog(double wavelength_nm = kHeNeWavelengthNm);

/// Resolve a grating selector: a catalog label ("G(2.63)"), a line
/// frequency ("600" or "600lpmm"), or a slit width ("w=833", "833nm").
/// Returns nullopt for "NG".
std::optional<RonchiGrating> parse_grating(const std::string& selector,
                                           double wavelength_nm = kHeNeWavelengthNm);

/// "G(2.63)" style label for a truncation point.
std::string label_for(double truncation);

}  // namespace ronchi::grating
