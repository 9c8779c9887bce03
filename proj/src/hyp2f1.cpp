#include "turan/hyp2f1.hpp"

#include <cmath>
#include <stdexcept>

#include "turan/special.hpp"

namespace turan {

namespace {

bool nonpositive_integer(double c) {
  return c <= 0.0 && c == std::floor(c);
}

void validate(const HypParams& p, double x) {
  if (nonpositive_integer(p.c)) throw std::domain_error("f21: c is a nonpositive integer");
  if (x >= 1.0) throw std::domain_error("f21: x must be < 1");
  if (x < 0.0) throw std::domain_error("f21: x must be >= 0");
}

// supported tolerance window; requests outside it are clamped
double clamp_eps(double eps) { return std::min(std::max(eps, 1e-15), 1e-6); }

double positive_part(double v) { return v > 0.0 ? v : 0.0; }

}  // namespace

void EvalReport::absorb(const EvalReport& other) {
  terms += other.terms;
  if (other.achieved_tol > achieved_tol) achieved_tol = other.achieved_tol;
  truncated = truncated || other.truncated;
  if (other.route != Route::series) route = other.route;
}

double f21_series(const HypParams& p, double x, double eps, EvalReport* rep) {
  validate(p, x);
  eps = clamp_eps(eps);
  EvalReport local;
  local.route = EvalReport::Route::series;
  double sum = 1.0;
  double term = 1.0;
  // Term factors (a+n)(b+n) keep one sign once n clears -a and -b; the
  // geometric tail bound is only applied from there on.
  std::size_t n_settled = 0;
  if (p.a < 0.0) n_settled = static_cast<std::size_t>(std::ceil(-p.a));
  if (p.b < 0.0) {
    auto nb = static_cast<std::size_t>(std::ceil(-p.b));
    if (nb > n_settled) n_settled = nb;
  }

  std::size_t n = 0;
  double value = sum;
  for (;; ++n) {
    double next = term * (p.a + n) * (p.b + n) / ((p.c + n) * (n + 1)) * x;
    double scale = std::max(1.0, std::abs(sum));
    if (n >= n_settled) {
      // sup_{m>n} of the term ratio: x * (1 + [(a+b-c-1)m + ab-c]/((c+m)(1+m)))
      // bounded by pushing each positive piece to m = n+1.
      double q = x * (1.0 + positive_part(p.a + p.b - p.c - 1.0) / (n + 2.0) +
                      positive_part(p.a * p.b - p.c) / ((p.c + n + 1.0) * (n + 2.0)));
      if (q < 1.0) {
        double tail = std::abs(next) / (1.0 - q);
        if (tail <= eps * scale) {
          local.achieved_tol = tail / scale;
          local.terms = n + 1;
          value = sum;
          break;
        }
      }
    }
    if (n + 1 >= kMaxSeriesTerms) {
      double q = std::min(x * (1.0 + 4.0 / (n + 2.0)), 1.0 - 1e-16);
      local.achieved_tol = std::abs(next) / (1.0 - q) / scale;
      local.terms = n + 1;
      local.truncated = true;
      value = sum;
      break;
    }
    term = next;
    sum += term;
  }
  if (rep) *rep = local;
  return value;
}

double f21_zero_balanced_log(double a, double b, double x, double eps, EvalReport* rep) {
  if (!(a > 0.0) || !(b > 0.0)) throw std::domain_error("f21_zero_balanced_log: a,b must be > 0");
  if (!(x > 0.0 && x < 1.0)) throw std::domain_error("f21_zero_balanced_log: x must be in (0,1)");
  eps = clamp_eps(eps);
  double y = 1.0 - x;
  double big_l = -std::log(y);
  double inv_beta = 1.0 / beta_fn(a, b);
  double h = 1.0;                                          // (a)_n (b)_n / (n!)^2
  double w = -2.0 * kEulerGamma - digamma(a) - digamma(b); // 2 psi(n+1)-psi(a+n)-psi(b+n)
  double sum = 0.0;
  double yn = 1.0;
  EvalReport local;
  local.route = EvalReport::Route::log_near_one;
  for (std::size_t n = 0;; ++n) {
    double term = h * yn * (w + big_l);
    sum += term;
    double q = y * (1.0 + 3.0 / (n + 1.0));
    double scale = std::max(1.0, std::abs(sum));
    if (q < 1.0 && n >= 1) {
      double tail = std::abs(term) * q / (1.0 - q) + std::abs(h * yn) * y * 2.0 / (1.0 - q);
      if (tail <= eps * scale) {
        local.achieved_tol = tail / scale;
        local.terms = n + 1;
        break;
      }
    }
    if (n + 1 >= kMaxSeriesTerms) {
      local.terms = n + 1;
      local.truncated = true;
      local.achieved_tol = std::abs(term);
      break;
    }
    h *= (a + n) * (b + n) / ((n + 1.0) * (n + 1.0));
    w += 2.0 / (n + 1.0) - 1.0 / (a + n) - 1.0 / (b + n);
    yn *= y;
  }
  if (rep) *rep = local;
  return sum * inv_beta;
}

double f21(const HypParams& p, double x, double eps, EvalReport* rep) {
  validate(p, x);
  if (x == 0.0) {
    if (rep) *rep = EvalReport{};
    return 1.0;
  }
  double bal = p.c - p.a - p.b;
  if (std::abs(bal) < 1e-12 && x > 0.95 && p.a > 0.0 && p.b > 0.0) {
    return f21_zero_balanced_log(p.a, p.b, x, eps, rep);
  }
  if (bal >= 0.25 && x > 0.9 && x <= 0.999) {
    return f21_euler(p, x, eps, rep);
  }
  return f21_series(p, x, eps, rep);
}

double f21_euler(const HypParams& p, double x, double eps, EvalReport* rep) {
  validate(p, x);
  double bal = p.c - p.a - p.b;
  if (!(bal > 0.0)) throw std::domain_error("f21_euler: requires c-a-b > 0");
  if (x == 0.0) {
    if (rep) *rep = EvalReport{};
    return 1.0;
  }
  EvalReport local;
  double transformed = f21_series({p.c - p.a, p.c - p.b, p.c}, x, eps, &local);
  local.route = EvalReport::Route::euler;
  if (rep) *rep = local;
  return std::pow(1.0 - x, bal) * transformed;
}

double f21_value_at_1(const HypParams& p) {
  double bal = p.c - p.a - p.b;
  if (!(bal > 0.0)) throw std::domain_error("f21_value_at_1: requires c-a-b > 0");
  return std::exp(log_gamma(p.c) + log_gamma(bal) - log_gamma(p.c - p.a) - log_gamma(p.c - p.b));
}

double zero_balanced_asymptote(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0)) throw std::domain_error("zero_balanced_asymptote: a,b must be > 0");
  if (!(x < 1.0)) throw std::domain_error("zero_balanced_asymptote: x must be < 1");
  return (ramanujan_r(a, b) - std::log1p(-x)) / beta_fn(a, b);
}

namespace {

// Shared driver for the parameter-derivative series: terms h_n * w_n * r^n
// where the h ratio and w increment are supplied per variant. The weights grow
// logarithmically, so a slightly padded geometric ratio certifies the tail;
// two consecutive small tail bounds are required to ride out w sign changes.
template <typename HRatio, typename WStep>
double dseries_sum(double r, double eps, double h1, double w1, HRatio hratio, WStep wstep) {
  double h = h1, w = w1;
  double rn = r;
  double sum = 0.0;
  std::size_t small_streak = 0;
  for (std::size_t n = 1;; ++n) {
    double term = h * w * rn;
    sum += term;
    double q = r * (1.0 + 3.0 / n);
    double scale = std::max(1.0, std::abs(sum));
    double bound = q < 1.0 ? std::abs(term) * q / (1.0 - q) + std::abs(h * rn) * r / (1.0 - q)
                           : 1.0;
    small_streak = bound <= eps * scale ? small_streak + 1 : 0;
    if (small_streak >= 2) break;
    if (n + 1 >= kMaxSeriesTerms) break;
    h *= hratio(n);
    w += wstep(n);
    rn *= r;
  }
  return sum;
}

}  // namespace

double df21_da_zero_balanced(double a, double r, double eps) {
  if (!(a > 0.0 && a < 1.0)) throw std::domain_error("df21_da_zero_balanced: a must be in (0,1)");
  if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("df21_da_zero_balanced: r must be in [0,1)");
  if (r == 0.0) return 0.0;
  // Sum_{n>=1} (a)_n(1-a)_n/(n!)^2 [psi(n+a)-psi(n+1-a)-psi(a)+psi(1-a)] r^n,
  // with the bracket accumulated as Sum_{j<n} [1/(j+a) - 1/(j+1-a)].
  return dseries_sum(
      r, eps, a * (1.0 - a), 1.0 / a - 1.0 / (1.0 - a),
      [a](std::size_t n) { return (a + n) * (1.0 - a + n) / ((n + 1.0) * (n + 1.0)); },
      [a](std::size_t n) { return 1.0 / (n + a) - 1.0 / (n + 1.0 - a); });
}

double df21_da_variant(DfVariant which, double a, double r, double eps) {
  if (!(a > 0.0 && a < 1.0)) throw std::domain_error("df21_da_variant: a must be in (0,1)");
  if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("df21_da_variant: r must be in [0,1)");
  if (r == 0.0) return 0.0;
  switch (which) {
    case DfVariant::f2: {
      // weight psi_{1,n} = a(1-a) Sum_{1<=j<n} [1/(j+a)-1/(j+1-a)] + 1-2a
      double aa = a * (1.0 - a);
      return dseries_sum(
          r, eps, 0.5, 1.0 - 2.0 * a,
          [a](std::size_t n) { return (a + n) * (1.0 - a + n) / ((n + 2.0) * (n + 1.0)); },
          [a, aa](std::size_t n) { return aa * (1.0 / (n + a) - 1.0 / (n + 1.0 - a)); });
    }
    case DfVariant::f32:
    case DfVariant::f52: {
      // weight psi_{2,n} = a [ Sum_{1<=j<n} 1/(j+a) - Sum_{0<=j<n} 1/(j+3/2-a) ] + 1
      double c = which == DfVariant::f32 ? 1.5 : 2.5;
      double h1 = (1.5 - a) / c;
      double w1 = 1.0 - a / (1.5 - a);
      return dseries_sum(
          r, eps, h1, w1,
          [a, c](std::size_t n) { return (a + n) * (1.5 - a + n) / ((c + n) * (n + 1.0)); },
          [a](std::size_t n) { return a * (1.0 / (n + a) - 1.0 / (n + 1.5 - a)); });
    }
  }
  throw std::logic_error("df21_da_variant: unreachable");
}

SeriesPoly f21_series_coeffs(const Rational& a, const Rational& b, const Rational& c, int n) {
  if (n < 0) throw std::domain_error("f21_series_coeffs: degree must be >= 0");
  if (c.sign() <= 0 && c.is_integer())
    throw std::domain_error("f21_series_coeffs: c is a nonpositive integer");
  SeriesPoly out(n);
  out[0] = Rational(1);
  for (int k = 0; k < n; ++k) {
    out[k + 1] = out[k] * (a + Rational(k)) * (b + Rational(k)) /
                 ((c + Rational(k)) * Rational(k + 1));
  }
  return out;
}

}  // namespace turan
