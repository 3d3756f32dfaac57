#include "ronchi/grating.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "ronchi/errors.hpp"
#include "ronchi/numerics.hpp"

namespace ronchi::grating {

RonchiGrating::RonchiGrating(double slit_width_nm, double band_thickness_nm)
    : slit_width_nm_(slit_width_nm), band_thickness_nm_(band_thickness_nm) {
  if (!(slit_width_nm > 0.0) || !std::isfinite(slit_width_nm))
    throw ArgumentError("RonchiGrating: slit width must be positive");
  if (!(band_thickness_nm >= 0.0)) throw ArgumentError("RonchiGrating: negative band thickness");
}

RonchiGrating RonchiGrating::from_line_frequency(double lines_per_mm, double band_thickness_nm) {
  if (!(lines_per_mm > 0.0)) throw ArgumentError("RonchiGrating: line frequency must be positive");
  return RonchiGrating(0.5e6 / lines_per_mm, band_thickness_nm);
}

double truncation_point(double slit_width_nm, double wavelength_nm) {
  if (!(slit_width_nm > 0.0) || !(wavelength_nm > 0.0))
    throw ArgumentError("truncation_point: slit width and wavelength must be positive");
  return 2.0 * slit_width_nm / wavelength_nm;
}

std::vector<OrderGeometry> order_geometry(const RonchiGrating& g, double wavelength_nm) {
  const double ji = truncation_point(g.slit_width_nm(), wavelength_nm);
  const int n = static_cast<int>(std::floor(ji));
  std::vector<OrderGeometry> orders;
  orders.reserve(static_cast<std::size_t>(2 * n + 1));
  for (int j = -n; j <= n; ++j) {
    OrderGeometry o;
    o.j = j;
    o.alpha = 0.5 * numerics::kPi * j;
    o.sin_theta = j / ji;
    o.theta_deg = std::asin(o.sin_theta) * 180.0 / numerics::kPi;
    o.propagating = std::abs(o.sin_theta) <= 1.0;
    o.nonzero_intensity = (j == 0) || (j % 2 != 0);
    orders.push_back(o);
  }
  return orders;
}

double obliquity_factor(int j, double truncation, double f) {
  if (!(f > 0.0 && f <= 1.0)) throw ArgumentError("obliquity_factor: f must lie in (0, 1]");
  const int aj = std::abs(j);
  if (aj > truncation) return 0.0;
  return aj <= 1 ? 1.0 : f;
}

std::string label_for(double truncation) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "G(%.2f)", truncation);
  return buf;
}

std::vector<CatalogEntry> standard_catalog(double wavelength_nm) {
  // Nominal slit widths of the commercial 600/500/400 lines/mm rulings.
  const struct {
    double lines;
    double width;
  } rows[] = {{600.0, 833.0}, {500.0, 1000.0}, {400.0, 1250.0}};
  std::vector<CatalogEntry> out;
  for (const auto& r : rows) {
    RonchiGrating g(r.width);
    out.push_back({label_for(truncation_point(r.width, wavelength_nm)), r.lines, g});
  }
  return out;
}

namespace {

std::string lower_trimmed(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c)))
      out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return out;
}

bool parse_number(const std::string& s, double& value) {
  if (s.empty()) return false;
  char* end = nullptr;
  value = std::strtod(s.c_str(), &end);
  return end == s.c_str() + s.size() && std::isfinite(value);
}

bool strip_suffix(std::string& s, const std::string& suffix) {
  if (s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0) {
    s.erase(s.size() - suffix.size());
    return true;
  }
  return false;
}

}  // namespace

std::optional<RonchiGrating> parse_grating(const std::string& selector, double wavelength_nm) {
  std::string s = lower_trimmed(selector);
  if (s == "ng" || s == "none") return std::nullopt;

  for (const auto& e : standard_catalog(wavelength_nm))
    if (lower_trimmed(e.label) == s) return e.grating;

  double value = 0.0;
  if (s.rfind("w=", 0) == 0) {
    s.erase(0, 2);
    strip_suffix(s, "nm");
    if (parse_number(s, value)) return RonchiGrating(value);
  } else if (strip_suffix(s, "nm")) {
    if (parse_number(s, value)) return RonchiGrating(value);
  } else {
    strip_suffix(s, "lpmm") || strip_suffix(s, "l/mm");
    if (parse_number(s, value)) {
      // Match catalog line frequencies to their nominal slit widths.
      for (const auto& e : standard_catalog(wavelength_nm))
        if (e.lines_per_mm == value) return e.grating;
      return RonchiGrating::from_line_frequency(value);
    }
  }
  throw ArgumentError("unrecognized grating selector '" + selector + "'");
}

}  // namespace ronchi::grating
