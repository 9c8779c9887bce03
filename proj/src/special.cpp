#include "turan/special.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace turan {

namespace {

// Lanczos approximation, g = 7, 9 terms. Good to ~1e-15 relative on the
// positive axis, which is comfortably inside the 1e-13 contract.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

double lanczos_sum(double x) {
  // x >= 0.5 here; series indexed from (x-1).
  double acc = kLanczos[0];
  for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (x - 1.0 + i);
  return acc;
}

void require_positive(double x, const char* fn) {
  if (!(x > 0.0)) throw std::domain_error(std::string(fn) + ": argument must be > 0");
}

}  // namespace

double gamma_fn(double x) {
  require_positive(x, "gamma_fn");
  if (x < 0.5) {
    // Reflection keeps the Lanczos argument away from the poles.
    return std::numbers::pi / (std::sin(std::numbers::pi * x) * gamma_fn(1.0 - x));
  }
  double z = x - 1.0;
  double t = z + kLanczosG + 0.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z + 0.5) * std::exp(-t) * lanczos_sum(x);
}

double log_gamma(double x) {
  require_positive(x, "log_gamma");
  if (x < 0.5) {
    return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) - log_gamma(1.0 - x);
  }
  double z = x - 1.0;
  double t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t +
         std::log(lanczos_sum(x));
}

double digamma(double x) {
  require_positive(x, "digamma");
  // Shift to x >= 10, then the asymptotic series in 1/x^2; the B_16 term at
  // x = 10 is ~4e-17, far below the 1e-13 contract.
  double acc = 0.0;
  while (x < 10.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  double inv = 1.0 / x;
  double inv2 = inv * inv;
  double series = inv2 * (1.0 / 12 - inv2 * (1.0 / 120 - inv2 * (1.0 / 252 - inv2 * (1.0 / 240 - inv2 * (1.0 / 132 - inv2 * (691.0 / 32760 - inv2 * (1.0 / 12)))))));
  return acc + std::log(x) - 0.5 * inv - series;
}

double trigamma(double x) {
  require_positive(x, "trigamma");
  double acc = 0.0;
  while (x < 10.0) {
    acc += 1.0 / (x * x);
    x += 1.0;
  }
  double inv = 1.0 / x;
  double inv2 = inv * inv;
  double series = 1.0 + inv * 0.5 + inv2 * (1.0 / 6 - inv2 * (1.0 / 30 - inv2 * (1.0 / 42 - inv2 * (1.0 / 30 - inv2 * (5.0 / 66 - inv2 * (691.0 / 2730 - inv2 * (7.0 / 6)))))));
  return acc + inv * series;
}

double beta_fn(double x, double y) {
  require_positive(x, "beta_fn");
  require_positive(y, "beta_fn");
  return std::exp(log_gamma(x) + log_gamma(y) - log_gamma(x + y));
}

double ramanujan_r(double a, double b) {
  require_positive(a, "ramanujan_r");
  require_positive(b, "ramanujan_r");
  // Grouped so the result is bit-identical under swapping a and b.
  return -2.0 * kEulerGamma - (digamma(a) + digamma(b));
}

double ramanujan_r(double a) { return ramanujan_r(a, 1.0 - a); }

double pochhammer(double x, int n) {
  if (n < 0) throw std::domain_error("pochhammer: n must be >= 0");
  double p = 1.0;
  for (int i = 0; i < n; ++i) p *= x + i;
  return p;
}

}  // namespace turan
