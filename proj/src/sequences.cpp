#include "turan/sequences.hpp"

#include <cmath>
#include <stdexcept>

namespace turan {

SeqParams::SeqParams(double a_in, double b_in) : a(a_in), b(b_in), c(a_in + b_in) {
  if (!(a_in > 0.0) || !(b_in > 0.0)) throw std::domain_error("SeqParams: a,b must be > 0");
}

namespace {
void check_n(int n) {
  if (n < 0) throw std::domain_error("sequence index must be >= 0");
}
}  // namespace

double phi_n(const SeqParams& p, int n) {
  check_n(n);
  double v = 1.0;
  for (int k = 0; k < n; ++k) v *= (p.b + k) / (p.c + 1.0 + k);
  return v;
}

double rho_n(const SeqParams& p, int n) {
  check_n(n);
  double v = 1.0;
  for (int k = 0; k < n; ++k) v *= (p.b + k) / (p.c + k);
  return v;
}

double tau_n(const SeqParams& p, int n) {
  check_n(n);
  double s = 0.0;
  for (int k = n - 1; k >= 0; --k) s += (p.a + 1.0) / ((p.b + k) * (p.c + 1.0 + k));
  return s;
}

double lambda_n(const SeqParams& p, int n) {
  check_n(n);
  double s = 0.0;
  for (int k = n - 1; k >= 0; --k) s += p.a / ((p.b + k) * (p.c + k));
  return s;
}

std::optional<int> product_turning_point(ProductKind kind, const SeqParams& p, int n_max) {
  if (n_max < 2) throw std::domain_error("product_turning_point: n_max must be >= 2");
  // Incremental scan; the sequences rise to a single peak and then fall
  // (or fall from the start), so the first decrease locates the argmax.
  double tail = kind == ProductKind::phi_tau ? tau_n(p, 1) : lambda_n(p, 1);
  double prod = (kind == ProductKind::phi_tau ? phi_n(p, 1) : rho_n(p, 1)) * tail;
  for (int n = 1; n < n_max; ++n) {
    double ratio, step;
    if (kind == ProductKind::phi_tau) {
      ratio = (p.b + n) / (p.c + 1.0 + n);
      step = (p.a + 1.0) / ((p.b + n) * (p.c + 1.0 + n));
    } else {
      ratio = (p.b + n) / (p.c + n);
      step = p.a / ((p.b + n) * (p.c + n));
    }
    tail += step;
    double next = prod / (tail - step) * ratio * tail;
    if (next < prod * (1.0 - 1e-14)) return n;
    prod = next;
  }
  return std::nullopt;
}

}  // namespace turan
