#pragma once

#include <cstddef>
#include <numbers>

namespace ronchi::numerics {

inline constexpr double kPi = std::numbers::pi;

/// Adaptive quadrature policy.
struct QuadratureSpec {
  double tolerance = 1e-10;            ///< absolute error target
  int max_depth = 60;                  ///< bisection depth limit
  std::size_t max_evaluations = 10'000'000;
};

/// sin(pi x), exactly zero at integer x.
double sin_pi(double x);

/// sin^2(alpha)/alpha^2 with the removable singularity at 0 filled by 1.
/// Throws DomainError for non-finite alpha.
double sinc2(double alpha);

/// sinc^2 evaluated at alpha = pi j / 2, i.e. on the diffraction-order
/// continuum. Exactly zero at even nonzero j.
double sinc2_order(double j);

/// Sine integral Si(x) = int_0^x sin(t)/t dt for x >= 0, |error| < 1e-10.
double sine_integral(double x);

/// Closed form of int_a^b sinc^2 via Si(2x) - sin^2(x)/x. Used as a
/// cross-check of the quadrature path.
double sinc2_integral_closed_form(double a, double b);

/// int_a^b sinc^2(alpha) d(alpha) by adaptive Simpson with Richardson
/// extrapolation. Requires 0 <= a <= b.
double integrate_sinc2(double a, double b, const QuadratureSpec& spec = {});

enum class Tails { one, two };

/// Upper tail of Student's t. One-tailed returns P(T >= t); two-tailed
/// returns P(|T| >= |t|). Fractional df are accepted.
double student_t_tail(double t, double df, Tails tails);

/// Regularized incomplete beta I_x(a, b).
double regularized_incomplete_beta(double x, double a, double b);

}  // namespace ronchi::numerics
