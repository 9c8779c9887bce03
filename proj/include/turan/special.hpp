#ifndef TURAN_SPECIAL_HPP
#define TURAN_SPECIAL_HPP

namespace turan {

/// Euler-Mascheroni constant.
inline constexpr double kEulerGamma = 0.577215664901532860606512090082402431042;

// Gamma-family scalar functions on the positive real axis. All of these are
// pure and reentrant. Nonpositive arguments raise std::domain_error.

/// Gamma(x) for x > 0. Relative error <= 1e-13 on (0, 50].
double gamma_fn(double x);

/// log Gamma(x) for x > 0.
double log_gamma(double x);

/// psi(x) = Gamma'(x)/Gamma(x) for x > 0. Absolute error <= 1e-13 on (1e-3, 50].
double digamma(double x);

/// psi'(x) for x > 0. Absolute error <= 1e-11.
double trigamma(double x);

/// B(x,y) = Gamma(x)Gamma(y)/Gamma(x+y), computed in log space.
double beta_fn(double x, double y);

/// Ramanujan constant R(a,b) = -2*gamma - psi(a) - psi(b). Symmetric in (a,b).
double ramanujan_r(double a, double b);

/// R(a) = R(a, 1-a) for a in (0,1).
double ramanujan_r(double a);

/// Rising factorial (x)_n; (x)_0 = 1.
double pochhammer(double x, int n);

}  // namespace turan

#endif  // TURAN_SPECIAL_HPP
