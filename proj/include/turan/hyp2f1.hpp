#ifndef TURAN_HYP2F1_HPP
#define TURAN_HYP2F1_HPP

#include <cstddef>

#include "turan/rational.hpp"
#include "turan/series.hpp"

namespace turan {

/// Parameters of F(a,b;c;x). c must not be a nonpositive integer.
struct HypParams {
  double a;
  double b;
  double c;
};

/// How an evaluation went: which route was taken, how many terms were summed,
/// and the certified (or, when truncated at the term cap, estimated) relative
/// tolerance with respect to max(1,|result|).
struct EvalReport {
  enum class Route { series, euler, log_near_one };
  Route route = Route::series;
  std::size_t terms = 0;
  double achieved_tol = 0.0;
  bool truncated = false;

  /// Merge the worse of two reports (used when a value combines evaluations).
  void absorb(const EvalReport& other);
};

/// Term cap for the direct series. Zero-balanced series at x close to 1 hit
/// it and come back flagged `truncated` with the achieved tolerance filled in.
inline constexpr std::size_t kMaxSeriesTerms = 2'000'000;

/// F(a,b;c;x) for x in [0,1), certified tail bound |F - S| <= eps*max(1,|S|).
/// Routing: zero-balanced x > 0.95 goes through the logarithmic reflection
/// series; c-a-b >= 1/4 with x in (0.9, 0.999] goes through the Euler
/// transformation; everything else sums the defining series directly.
double f21(const HypParams& p, double x, double eps, EvalReport* rep = nullptr);

/// The direct summation path of f21, with no routing.
double f21_series(const HypParams& p, double x, double eps, EvalReport* rep = nullptr);

/// (1-x)^(c-a-b) F(c-a,c-b;c;x). Requires c-a-b > 0.
double f21_euler(const HypParams& p, double x, double eps = 1e-12, EvalReport* rep = nullptr);

/// Gauss value F(a,b;c;1) = Gamma(c)Gamma(c-a-b)/(Gamma(c-a)Gamma(c-b)),
/// requires c-a-b > 0.
double f21_value_at_1(const HypParams& p);

/// Leading term of the zero-balanced blow-up near x=1:
/// (R(a,b) - log(1-x)) / B(a,b).
double zero_balanced_asymptote(double a, double b, double x);

/// Full logarithmic reflection series for zero-balanced F(a,b;a+b;x); exact
/// representation, fast for x near 1. Requires a,b > 0 and x in (0,1).
double f21_zero_balanced_log(double a, double b, double x, double eps,
                             EvalReport* rep = nullptr);

/// d/da F(a,1-a;1;r) for a in (0,1), summed term by term with the digamma
/// weights produced by parameter differentiation.
double df21_da_zero_balanced(double a, double r, double eps);

/// Parameter derivatives of the three companions:
/// f2 -> d/da F(a,1-a;2;r), f32 -> d/da F(a,3/2-a;3/2;r),
/// f52 -> d/da F(a,3/2-a;5/2;r).
enum class DfVariant { f2, f32, f52 };
double df21_da_variant(DfVariant which, double a, double r, double eps);

/// Exact Maclaurin coefficients of F(a,b;c;x) up to degree n.
SeriesPoly f21_series_coeffs(const Rational& a, const Rational& b, const Rational& c, int n);

}  // namespace turan

#endif  // TURAN_HYP2F1_HPP
