#include "ronchi/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "ronchi/errors.hpp"

namespace ronchi::numerics {

namespace {

// Below this argument Si uses its Taylor series; the series terms stay
// small enough here that cancellation costs under 1e-15.
constexpr double kSiSeriesLimit = 4.0;

double si_series(double x) {
  const double x2 = x * x;
  double term = x;  // x^(2k+1) / (2k+1)!
  double sum = x;
  for (int k = 1; k < 60; ++k) {
    term *= -x2 / ((2.0 * k) * (2.0 * k + 1.0));
    const double contrib = term / (2.0 * k + 1.0);
    sum += contrib;
    if (std::abs(contrib) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

// Auxiliary functions f, g via the continued fraction of E1(ix):
//   Si(x) = pi/2 - f(x) cos x - g(x) sin x.
double si_auxiliary(double x) {
  using C = std::complex<double>;
  constexpr double tiny = 1e-300;
  C b(1.0, x);
  C c(1.0 / tiny, 0.0);
  C d = 1.0 / b;
  C h = d;
  for (int i = 2; i < 100000; ++i) {
    const double a = -static_cast<double>((i - 1) * (i - 1));
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const C del = c * d;
    h *= del;
    if (std::abs(del.real() - 1.0) + std::abs(del.imag()) < 1e-16) {
      // h = e^{ix} E1(ix) = (f - i g) up to sign conventions below.
      h *= C(std::cos(x), -std::sin(x));
      const C cs = -std::conj(h) + C(0.0, kPi / 2.0);
      return cs.imag();
    }
  }
  throw ConvergenceError("sine_integral: continued fraction did not converge at x = " +
                         std::to_string(x));
}

struct SimpsonState {
  const QuadratureSpec& spec;
  std::size_t evaluations = 0;

  double eval(double x) {
    ++evaluations;
    return sinc2(x);
  }
};

double adaptive_simpson(SimpsonState& st, double a, double b, double fa, double fm, double fb,
                        double whole, double eps, int depth, int min_depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = st.eval(lm);
  const double frm = st.eval(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;

  if (min_depth <= 0 && std::abs(delta) <= 15.0 * eps) return left + right + delta / 15.0;
  if (depth >= st.spec.max_depth || st.evaluations >= st.spec.max_evaluations) {
    throw ConvergenceError("integrate_sinc2: tolerance " + std::to_string(st.spec.tolerance) +
                           " not reached on [" + std::to_string(a) + ", " + std::to_string(b) +
                           "]");
  }
  return adaptive_simpson(st, a, m, fa, flm, fm, left, 0.5 * eps, depth + 1, min_depth - 1) +
         adaptive_simpson(st, m, b, fm, frm, fb, right, 0.5 * eps, depth + 1, min_depth - 1);
}

double beta_continued_fraction(double x, double a, double b) {
  constexpr double tiny = 1e-300;
  constexpr double eps = 1e-16;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < tiny) d = tiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 10000; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < eps) return h;
  }
  throw ConvergenceError("incomplete beta continued fraction did not converge");
}

}  // namespace

double sin_pi(double x) {
  // Reduce to r in [-1, 1] so integers map to 0 or +-1 exactly.
  const double r = x - 2.0 * std::nearbyint(0.5 * x);
  if (r > 0.5) return std::sin(kPi * (1.0 - r));
  if (r < -0.5) return -std::sin(kPi * (1.0 + r));
  return std::sin(kPi * r);
}

double sinc2(double alpha) {
  if (!std::isfinite(alpha)) throw DomainError("sinc2: non-finite argument");
  if (alpha == 0.0) return 1.0;
  if (std::abs(alpha) < 1e-4) {
    const double a2 = alpha * alpha;
    return 1.0 - a2 / 3.0 + 2.0 * a2 * a2 / 45.0;
  }
  const double s = std::sin(alpha) / alpha;
  return s * s;
}

double sinc2_order(double j) {
  if (!std::isfinite(j)) throw DomainError("sinc2_order: non-finite argument");
  if (j == 0.0) return 1.0;
  const double alpha = 0.5 * kPi * j;
  if (std::abs(alpha) < 1e-4) return sinc2(alpha);
  const double s = sin_pi(0.5 * j) / alpha;
  return s * s;
}

double sine_integral(double x) {
  if (!std::isfinite(x) || x < 0.0) throw DomainError("sine_integral: requires finite x >= 0");
  if (x == 0.0) return 0.0;
  return x < kSiSeriesLimit ? si_series(x) : si_auxiliary(x);
}

double sinc2_integral_closed_form(double a, double b) {
  // d/dx [Si(2x) - sin^2(x)/x] = sinc^2(x)
  const auto antiderivative = [](double x) {
    if (x == 0.0) return 0.0;
    const double s = std::sin(x);
    return sine_integral(2.0 * x) - s * s / x;
  };
  return antiderivative(b) - antiderivative(a);
}

double integrate_sinc2(double a, double b, const QuadratureSpec& spec) {
  if (!std::isfinite(a) || !std::isfinite(b)) throw ArgumentError("integrate_sinc2: non-finite limit");
  if (a < 0.0) throw ArgumentError("integrate_sinc2: lower limit must be >= 0");
  if (a > b) throw ArgumentError("integrate_sinc2: lower limit exceeds upper limit");
  if (!(spec.tolerance > 0.0)) throw ArgumentError("QuadratureSpec: tolerance must be > 0");
  if (spec.max_depth < 1) throw ArgumentError("QuadratureSpec: max_depth must be >= 1");
  if (a == b) return 0.0;

  SimpsonState st{spec};
  const double fa = st.eval(a);
  const double fb = st.eval(b);
  const double fm = st.eval(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  // A few forced bisections keep coarse Simpson estimates on oscillating
  // stretches from agreeing by accident.
  const int min_depth = std::min(4, spec.max_depth);
  return adaptive_simpson(st, a, b, fa, fm, fb, whole, spec.tolerance, 0, min_depth);
}

double regularized_incomplete_beta(double x, double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw DomainError("incomplete beta: a, b must be > 0");
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("incomplete beta: x outside [0, 1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) +
                          b * std::log1p(-x);
  const double front = std::exp(ln_front);
  if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_continued_fraction(x, a, b) / a;
  return 1.0 - front * beta_continued_fraction(1.0 - x, b, a) / b;
}

double student_t_tail(double t, double df, Tails tails) {
  if (!(df > 0.0) || !std::isfinite(df)) throw DomainError("student_t_tail: df must be > 0");
  if (!std::isfinite(t)) throw DomainError("student_t_tail: non-finite t");
  // P(|T| >= |t|) = I_{df/(df+t^2)}(df/2, 1/2)
  const double x = df / (df + t * t);
  const double two_sided = regularized_incomplete_beta(x, 0.5 * df, 0.5);
  if (tails == Tails::two) return two_sided;
  const double half = 0.5 * two_sided;
  return t >= 0.0 ? half : 1.0 - half;
}

}  // namespace ronchi::numerics
