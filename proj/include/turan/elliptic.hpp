#ifndef TURAN_ELLIPTIC_HPP
#define TURAN_ELLIPTIC_HPP

#include "turan/hyp2f1.hpp"

namespace turan {

/// Elliptic modulus r in (0,1) with its complement r' = sqrt(1-r^2).
struct Modulus {
  double r;
  double r_prime;
  explicit Modulus(double r_in);
};

/// Generalized complete elliptic integral of the first kind,
/// (pi/2) F(a,1-a;1;r^2). At a = 1/2 and r > 0.95 the AGM value is returned
/// instead of the zero-balanced series.
double generalized_k(double a, const Modulus& m, double eps = 1e-12, EvalReport* rep = nullptr);

/// Generalized complete elliptic integral of the second kind,
/// (pi/2) F(a-1,1-a;1;r^2).
double generalized_e(double a, const Modulus& m, double eps = 1e-12, EvalReport* rep = nullptr);

/// Classical K(r) through the arithmetic-geometric mean: pi/(2 AGM(1, r')).
/// Series-independent; iterated to 1e-15.
double agm_k(double r);

/// arth(r)/r with the removable singularity at r=0 handled by series.
double arth_ratio(double r);

/// (E(r) - r'^2 K(r))/r^2 computed through its hypergeometric form
/// (pi/4) F(1/2,1/2;2;r^2), stable at small r.
double ek_combo(const Modulus& m, double eps = 1e-12);

/// F(a,1-a;2;t^2), together with the E/K route for the same quantity; the
/// hypergeometric side is returned and |lhs-rhs| exposed through *residual.
double ka_combo(double a, double t, double eps = 1e-12, double* residual = nullptr);

}  // namespace turan

#endif  // TURAN_ELLIPTIC_HPP
