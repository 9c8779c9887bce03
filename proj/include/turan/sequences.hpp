#ifndef TURAN_SEQUENCES_HPP
#define TURAN_SEQUENCES_HPP

#include <optional>

namespace turan {

/// Parameter pair (a,b) with c = a+b, the setting for the auxiliary
/// sequences below.
struct SeqParams {
  double a;
  double b;
  double c;
  SeqParams(double a_in, double b_in);
};

/// phi_n = (b)_n / (c+1)_n, in (0,1], phi_0 = 1.
double phi_n(const SeqParams& p, int n);

/// rho_n = (b)_n / (c)_n, in (0,1], rho_0 = 1.
double rho_n(const SeqParams& p, int n);

/// tau_n = sum_{k<n} (a+1)/((k+b)(k+c+1)); tau_0 = 0. Also representable as
/// psi(c+1)-psi(b)+psi(n+b)-psi(n+c+1); the finite sum avoids cancellation.
double tau_n(const SeqParams& p, int n);

/// lambda_n = sum_{k<n} a/((k+b)(k+c)); lambda_0 = 0.
double lambda_n(const SeqParams& p, int n);

enum class ProductKind { phi_tau, rho_lambda };

/// Argmax index of {phi_n tau_n} or {rho_n lambda_n} over n in [1, n_max].
/// Returns 1 when the sequence decreases from the start (the case
/// b <= sqrt((a+1)(a+2)) resp. b <= sqrt(a(a+1))), and nullopt when the
/// sequence is still rising at n_max (peak not bracketed).
std::optional<int> product_turning_point(ProductKind kind, const SeqParams& p, int n_max);

}  // namespace turan

#endif  // TURAN_SEQUENCES_HPP
