#ifndef TURAN_HARNESS_HPP
#define TURAN_HARNESS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "turan/functionals.hpp"

namespace turan {

/// A bracketing interval with opposite-sign endpoint values, both resolved
/// beyond 10x the evaluation tolerance. Self-validating: re-evaluating the
/// endpoints reproduces the stored signs.
struct SignChangeCertificate {
  std::string function_label;
  std::string params_json;
  double r_lo = 0.0;
  double r_hi = 0.0;
  double value_lo = 0.0;
  double value_hi = 0.0;
  double eval_eps = 0.0;

  bool valid() const;
  std::string to_json() const;
};

struct ScanResult {
  std::vector<SignChangeCertificate> certificates;
  std::vector<double> failed_samples;  // abscissae where evaluation threw
};

/// Samples fn over [r_lo, r_hi]; every adjacent-sample sign flip is refined
/// by bisection to width <= 1e-6 and certified. Unresolved flips (endpoint
/// magnitude within 10 eps of zero) are dropped, never fabricated.
ScanResult scan_sign(const std::function<double(double)>& fn, const std::string& label,
                     const std::string& params_json, double r_lo, double r_hi, int steps,
                     double eps);

/// One grid axis. Linear scale places `steps` points from lo to hi; the
/// log-toward-1 scale interprets lo..hi as exponents k and places 1 - 10^-k.
struct Axis {
  std::string name;  // one of a, b1, b2, r, n
  double lo = 0.0;
  double hi = 0.0;
  int steps = 2;
  bool log_toward_one = false;
};

struct GridSpec {
  std::string name;
  Chain chain = Chain::ineqa1pp;
  std::vector<Axis> axes;
  double eps = 1e-12;
};

/// The grid each chain is verified on by default (open-interval margins 0.01
/// or wider; a <= 1 on the general-triple chains).
GridSpec default_grid(Chain chain);

struct VerificationReport {
  int total = 0;
  int passed = 0;
  std::vector<std::pair<ChainArgs, BoundReport>> failures;
  double runtime_ms = 0.0;

  std::string to_json() const;
};

/// Runs bound_chain at every grid point, in row-major axis order (the result
/// is deterministic and independent of evaluation order since aggregation is
/// commutative). Per-point domain errors are recorded as failures with an
/// explanatory pseudo-report. When `rows` is given, every evaluated point is
/// appended to it.
VerificationReport verify_grid(const GridSpec& spec,
                               std::vector<std::pair<ChainArgs, BoundReport>>* rows = nullptr);

/// CSV with stable columns: a,b1,b2,r,n, then one column per link, then
/// slack_min and verdict.
std::string rows_to_csv(const std::vector<std::pair<ChainArgs, BoundReport>>& rows);

struct CounterexampleFinding {
  enum class Status { found, no_small_r_counterexample, inconclusive };
  Status status = Status::inconclusive;
  double a = 0.0;
  std::optional<double> r_small, lambda_small;  // witness with Lambda < 1
  std::optional<double> r_large, lambda_large;  // witness with Lambda > 1

  std::string to_json() const;
};

/// Searches (0, 0.2] for a point with Lambda(a,r) < 1 and [0.9, 1) for one
/// with Lambda(a,r) > 1, both resolved beyond 10x the evaluation tolerance.
CounterexampleFinding counterexample_certificate(double a, double eps = 1e-12);

struct TrendReport {
  std::string label;
  double target = 0.0;  // +infinity for divergence reports
  std::vector<int> ks;
  std::vector<double> values;  // fn at r_k = 1 - 10^-k
  std::vector<double> gaps;    // |value - target| when the target is finite
  bool monotone = false;       // gaps strictly decreasing / values strictly increasing
  double divergence_threshold = 10.0;
  bool exceeded_threshold = false;

  std::string to_json() const;
};

/// Evaluates fn at r_k = 1 - 10^-k for the given ascending ks and reports the
/// approach to `target` (strict decrease of the gaps), or, for an infinite
/// target, strict increase of the values.
TrendReport trend_to_limit(const std::function<double(double)>& fn, const std::string& label,
                           double target, const std::vector<int>& ks,
                           double divergence_threshold = 10.0);

/// Named single-variable functionals in r, for scans and trend reports.
/// Unused parameters among (a,b1,b2) are ignored by the given name.
std::function<double(double)> make_r_function(const std::string& name, double a, double b1,
                                              double b2, double eps);
/// Names accepted by make_r_function.
std::vector<std::string> r_function_names();

}  // namespace turan

#endif  // TURAN_HARNESS_HPP
