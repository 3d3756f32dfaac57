#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ronchi/numerics.hpp"

namespace ronchi::trials {

using numerics::Tails;

/// A labelled set of single-trial occupation values.
struct TrialSet {
  std::string label;
  std::vector<double> values;

  std::size_t n() const { return values.size(); }
};

struct Summary {
  double mean;
  double se;  ///< sample standard deviation / sqrt(n)
  std::size_t n;
};

Summary summarize(const TrialSet& s);

enum class Method { pooled, welch };

std::string_view to_string(Method m);
std::string_view to_string(Tails t);
Method parse_method(std::string_view s);
Tails parse_tails(std::string_view s);

struct TTestResult {
  double t;
  double df;
  Tails tails;
  double p;
  Method method;
};

/// Two-sample t test from summary statistics. t = (mean1 - mean2) /
/// sqrt(se1^2 + se2^2); the one-tailed alternative is mean1 > mean2.
TTestResult t_test_from_summary(double mean1, double se1, std::size_t n1, double mean2,
                                double se2, std::size_t n2, Tails tails,
                                Method method = Method::pooled);

TTestResult t_test(const TrialSet& a, const TrialSet& b, Tails tails,
                   Method method = Method::pooled);

/// One hypothesis: `first` vs `second`, one-tailed meaning first > second.
struct Comparison {
  std::string first;
  std::string second;
  Tails tails;
};

/// The four comparisons of the grating protocol: each grating against the
/// no-grating control (direction set by its predicted occupation), plus
/// the enriched grating against the depleted one.
std::vector<Comparison> standard_comparisons();

/// Labelled summary for a named set.
struct LabelledSummary {
  std::string label;
  Summary summary;
};

/// Reported experimental summaries (mean +- SE, n = 10) for the three
/// gratings and the no-grating control.
std::vector<LabelledSummary> reference_summaries();

/// Structured record of one executed comparison.
struct TestReport {
  std::string label_a;
  std::string label_b;
  TTestResult result;
};

/// Fixed-width plain-text table of test reports.
std::string format_reports(const std::vector<TestReport>& reports);

}  // namespace ronchi::trials
