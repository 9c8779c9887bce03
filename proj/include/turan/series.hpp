#ifndef TURAN_SERIES_HPP
#define TURAN_SERIES_HPP

#include <vector>

#include "turan/rational.hpp"

namespace turan {

/// Truncated Maclaurin series with exact rational coefficients.
/// coeffs[k] multiplies x^k; coeffs.size() == degree()+1. Immutable in
/// practice once built, so values are safe to share across threads.
struct SeriesPoly {
  std::vector<Rational> coeffs;

  SeriesPoly() = default;
  explicit SeriesPoly(int degree) : coeffs(static_cast<std::size_t>(degree) + 1) {}

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  const Rational& operator[](int k) const { return coeffs[static_cast<std::size_t>(k)]; }
  Rational& operator[](int k) { return coeffs[static_cast<std::size_t>(k)]; }

  /// Evaluates the float image of the partial sum at x.
  double eval_double(double x) const;
};

SeriesPoly series_add(const SeriesPoly& a, const SeriesPoly& b);
SeriesPoly series_sub(const SeriesPoly& a, const SeriesPoly& b);
SeriesPoly series_scale(const Rational& c, const SeriesPoly& a);

/// Cauchy product truncated to `degree` (defaults to a.degree()+b.degree()).
SeriesPoly series_mul(const SeriesPoly& a, const SeriesPoly& b, int degree = -1);

/// Exact quotient to min(num.degree, den.degree). The constant coefficient of
/// `den` must be nonzero (it is 1 for every series divided here).
SeriesPoly series_divide(const SeriesPoly& num, const SeriesPoly& den);

}  // namespace turan

#endif  // TURAN_SERIES_HPP
