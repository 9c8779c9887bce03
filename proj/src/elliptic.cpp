#include "turan/elliptic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "turan/special.hpp"

namespace turan {

namespace {
constexpr double kHalfPi = std::numbers::pi / 2.0;
}

Modulus::Modulus(double r_in) : r(r_in) {
  if (!(r_in > 0.0 && r_in < 1.0)) throw std::domain_error("Modulus: r must be in (0,1)");
  // (1-r)(1+r) avoids cancellation in 1-r^2 as r -> 1.
  r_prime = std::sqrt((1.0 - r_in) * (1.0 + r_in));
}

double generalized_k(double a, const Modulus& m, double eps, EvalReport* rep) {
  if (!(a > 0.0 && a < 1.0)) throw std::domain_error("generalized_k: a must be in (0,1)");
  if (a == 0.5 && m.r > 0.95) {
    if (rep) *rep = EvalReport{};
    return agm_k(m.r);
  }
  return kHalfPi * f21({a, 1.0 - a, 1.0}, m.r * m.r, eps, rep);
}

double generalized_e(double a, const Modulus& m, double eps, EvalReport* rep) {
  if (!(a > 0.0 && a < 1.0)) throw std::domain_error("generalized_e: a must be in (0,1)");
  return kHalfPi * f21({a - 1.0, 1.0 - a, 1.0}, m.r * m.r, eps, rep);
}

double agm_k(double r) {
  if (!(r > 0.0 && r < 1.0)) throw std::domain_error("agm_k: r must be in (0,1)");
  double x = 1.0;
  double g = std::sqrt((1.0 - r) * (1.0 + r));
  while (x - g > 1e-15 * x) {
    double mid = 0.5 * (x + g);
    g = std::sqrt(x * g);
    x = mid;
  }
  return std::numbers::pi / (x + g);
}

double arth_ratio(double r) {
  if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("arth_ratio: r must be in [0,1)");
  if (r < 1e-4) {
    double r2 = r * r;
    return 1.0 + r2 * (1.0 / 3.0 + r2 * (1.0 / 5.0 + r2 / 7.0));
  }
  return std::atanh(r) / r;
}

double ek_combo(const Modulus& m, double eps) {
  return (std::numbers::pi / 4.0) * f21({0.5, 0.5, 2.0}, m.r * m.r, eps);
}

double ka_combo(double a, double t, double eps, double* residual) {
  if (!(a > 0.0 && a < 1.0)) throw std::domain_error("ka_combo: a must be in (0,1)");
  if (!(t > 0.0 && t < 1.0)) throw std::domain_error("ka_combo: t must be in (0,1)");
  double lhs = f21({a, 1.0 - a, 2.0}, t * t, eps);
  if (residual) {
    Modulus m(t);
    double e = generalized_e(a, m, eps);
    double k = generalized_k(a, m, eps);
    double rhs = 2.0 / (std::numbers::pi * a) * (e - m.r_prime * m.r_prime * k) / (t * t);
    *residual = std::abs(lhs - rhs);
  }
  return lhs;
}

}  // namespace turan
