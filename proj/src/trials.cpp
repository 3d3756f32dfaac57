#include "ronchi/trials.hpp"

#include <cmath>
#include <cstdio>

#include "ronchi/errors.hpp"

namespace ronchi::trials {

Summary summarize(const TrialSet& s) {
  const std::size_t n = s.n();
  if (n < 2) throw ArgumentError("summarize: need at least two values in set '" + s.label + "'");
  double mean = 0.0;
  for (double v : s.values) mean += v;
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (double v : s.values) ss += (v - mean) * (v - mean);
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));
  return {mean, sd / std::sqrt(static_cast<double>(n)), n};
}

std::string_view to_string(Method m) { return m == Method::pooled ? "pooled" : "welch"; }
std::string_view to_string(Tails t) { return t == Tails::one ? "one" : "two"; }

Method parse_method(std::string_view s) {
  if (s == "pooled") return Method::pooled;
  if (s == "welch") return Method::welch;
  throw ArgumentError("unknown t-test method '" + std::string(s) + "'");
}

Tails parse_tails(std::string_view s) {
  if (s == "one") return Tails::one;
  if (s == "two") return Tails::two;
  throw ArgumentError("tails must be 'one' or 'two', got '" + std::string(s) + "'");
}

namespace {

// Shared by both entry points; se values may be zero individually.
TTestResult welch_or_pooled(double mean1, double se1, std::size_t n1, double mean2, double se2,
                            std::size_t n2, Tails tails, Method method) {
  const double v1 = se1 * se1;
  const double v2 = se2 * se2;
  const double t = (mean1 - mean2) / std::sqrt(v1 + v2);
  double df = static_cast<double>(n1 + n2 - 2);
  if (method == Method::welch) {
    df = (v1 + v2) * (v1 + v2) /
         (v1 * v1 / static_cast<double>(n1 - 1) + v2 * v2 / static_cast<double>(n2 - 1));
  }
  return {t, df, tails, numerics::student_t_tail(t, df, tails), method};
}

}  // namespace

TTestResult t_test_from_summary(double mean1, double se1, std::size_t n1, double mean2,
                                double se2, std::size_t n2, Tails tails, Method method) {
  if (n1 < 2 || n2 < 2) throw ArgumentError("t_test: each set needs n >= 2");
  if (!(se1 > 0.0) || !(se2 > 0.0)) throw ArgumentError("t_test: standard errors must be > 0");
  if (!std::isfinite(mean1) || !std::isfinite(mean2)) throw ArgumentError("t_test: non-finite mean");
  return welch_or_pooled(mean1, se1, n1, mean2, se2, n2, tails, method);
}

TTestResult t_test(const TrialSet& a, const TrialSet& b, Tails tails, Method method) {
  const Summary sa = summarize(a);
  const Summary sb = summarize(b);
  // A single constant set is legitimate (e.g. a noiseless control); only
  // two constant sets leave nothing to test.
  if (sa.se == 0.0 && sb.se == 0.0) throw ArgumentError("t_test: both sets have zero variance");
  return welch_or_pooled(sa.mean, sa.se, sa.n, sb.mean, sb.se, sb.n, tails, method);
}

std::vector<Comparison> standard_comparisons() {
  return {{"G(2.63)", "NG", Tails::one},
          {"NG", "G(3.16)", Tails::one},
          {"G(3.95)", "NG", Tails::two},
          {"G(2.63)", "G(3.16)", Tails::one}};
}

std::vector<LabelledSummary> reference_summaries() {
  return {{"G(2.63)", {1.0059, 0.0024, 10}},
          {"G(3.16)", {0.9923, 0.0019, 10}},
          {"G(3.95)", {0.9997, 0.0023, 10}},
          {"NG", {0.9988, 0.0018, 10}}};
}

std::string format_reports(const std::vector<TestReport>& reports) {
  std::string out;
  char line[160];
  std::snprintf(line, sizeof line, "%-10s %-10s %10s %8s %5s %12s %7s\n", "set_a", "set_b", "t", "df",
                "tails", "p", "method");
  out += line;
  for (const auto& r : reports) {
    std::snprintf(line, sizeof line, "%-10s %-10s %10.4f %8.3f %5s %12.6g %7s\n", r.label_a.c_str(),
                  r.label_b.c_str(), r.result.t, r.result.df, to_string(r.result.tails).data(),
                  r.result.p, to_string(r.result.method).data());
    out += line;
  }
  return out;
}

}  // namespace ronchi::trials
