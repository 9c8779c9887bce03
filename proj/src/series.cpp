#include "turan/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace turan {

double SeriesPoly::eval_double(double x) const {
  double acc = 0.0;
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k].to_double();
  return acc;
}

SeriesPoly series_add(const SeriesPoly& a, const SeriesPoly& b) {
  SeriesPoly out(std::max(a.degree(), b.degree()));
  for (int k = 0; k <= a.degree(); ++k) out[k] += a[k];
  for (int k = 0; k <= b.degree(); ++k) out[k] += b[k];
  return out;
}

SeriesPoly series_sub(const SeriesPoly& a, const SeriesPoly& b) {
  SeriesPoly out(std::max(a.degree(), b.degree()));
  for (int k = 0; k <= a.degree(); ++k) out[k] += a[k];
  for (int k = 0; k <= b.degree(); ++k) out[k] -= b[k];
  return out;
}

SeriesPoly series_scale(const Rational& c, const SeriesPoly& a) {
  SeriesPoly out(a.degree());
  for (int k = 0; k <= a.degree(); ++k) out[k] = c * a[k];
  return out;
}

SeriesPoly series_mul(const SeriesPoly& a, const SeriesPoly& b, int degree) {
  if (degree < 0) degree = a.degree() + b.degree();
  SeriesPoly out(degree);
  for (int i = 0; i <= a.degree(); ++i) {
    if (a[i].is_zero()) continue;
    int jmax = std::min(b.degree(), degree - i);
    for (int j = 0; j <= jmax; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

SeriesPoly series_divide(const SeriesPoly& num, const SeriesPoly& den) {
  if (den.coeffs.empty() || den[0].is_zero())
    throw std::domain_error("series_divide: constant coefficient of denominator is zero");
  int degree = std::min(num.degree(), den.degree());
  SeriesPoly q(degree);
  for (int n = 0; n <= degree; ++n) {
    Rational s = n <= num.degree() ? num[n] : Rational();
    for (int k = 0; k < n; ++k) {
      int m = n - k;
      if (m <= den.degree()) s -= q[k] * den[m];
    }
    q[n] = s / den[0];
  }
  return q;
}

}  // namespace turan
