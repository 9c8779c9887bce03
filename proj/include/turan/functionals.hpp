#ifndef TURAN_FUNCTIONALS_HPP
#define TURAN_FUNCTIONALS_HPP

#include <string>
#include <utility>
#include <vector>

#include "turan/hyp2f1.hpp"

namespace turan {

/// Derived constants of the symmetric family at parameter a in (0,1):
/// alpha = (3-2a)/(3(1-a)), eta = a/(3-2a),
/// beta = (psi(3/2-a)-psi(1-a))/B(a,1-a).
struct SymmetricParams {
  double a;
  double alpha;
  double eta;
  double beta;
};

/// Derived constants of the general family at (a,b1,b2), b1 < b2:
/// alpha_bar = b2 c1/(b1 c2) > 1, eta_bar = a(b2-b1)/(b2 c1),
/// beta_bar = (psi(b2)-psi(b1))/B(a,b1).
struct TuranParams {
  double a;
  double b1;
  double b2;
  double c1;
  double c2;
  double alpha_bar;
  double eta_bar;
  double beta_bar;
};

SymmetricParams constants_symmetric(double a);
TuranParams constants_general(double a, double b1, double b2);

/// For a > 1, the positive root of -(a-1)b^2 - (a^2-1)b + a(a+1) = 0; the
/// largest b2 for which the sign structure of the an1 family is guaranteed.
double b_bar(double a);

/// f(a,b,r) = F(a,b;a+b+1;r)/F(a,b;a+b;r); equals 1 at r = 0.
double f_ratio(double a, double b, double r, double eps = 1e-12, EvalReport* rep = nullptr);

enum class LambdaKind { lambda, lambda1, lambda2, lambda3 };

/// The ratio functionals. lambda/lambda1 are the symmetric specialization
/// (b1,b2) = (1-a,3/2-a); lambda2/lambda3 take the general triple. Passing
/// b1 == b2 returns the analytic collapse (lambda2 = 1, lambda3 = F).
double lambda_family(LambdaKind kind, double a, double b1, double b2, double r,
                     double eps = 1e-12, EvalReport* rep = nullptr);
double lambda_family(LambdaKind kind, double a, double r, double eps = 1e-12,
                     EvalReport* rep = nullptr);

enum class SmallF { f1, f2, f3, f4 };

/// The four gap functions built from the lambda family and the zero-balanced
/// baseline. f1,f2 are symmetric-family; f3,f4 take the general triple.
double f_small(SmallF which, double a, double b1, double b2, double r, double eps = 1e-12,
               EvalReport* rep = nullptr);
double f_small(SmallF which, double a, double r, double eps = 1e-12, EvalReport* rep = nullptr);

/// Product difference at a = 1/4 whose sign change witnesses that the ratio
/// ordering fails near 0, and its derivative; f5_prime(0) = -1/96.
double f5(double r, double eps = 1e-12);
double f5_prime(double r, double eps = 1e-12);

/// Gap between the first-kind integral and its ratio representation;
/// f6 = pi f2 /(2 alpha) identically, evaluated here through the E/K route.
double f6(double a, double r, double eps = 1e-12);
/// f6 at a = 1/2; increases from pi/8 to log 2.
double f7(double r, double eps = 1e-12);

// Ratio and derivative functions named h9..h15, f8 in the family they come
// from. h9/h10/f8 take the general triple; h15/h1/h2 the symmetric family.
double h9(double a, double b1, double b2, double r, double eps = 1e-12);
double h9_prime(double a, double b1, double b2, double r, double eps = 1e-12);
double h10(double a, double b1, double b2, double r, double eps = 1e-12);
double h11(double r, double eps = 1e-12);
double h12(int n, double r, double eps = 1e-12);
double h13(double r, double eps = 1e-12);
double h15(double a, double r, double eps = 1e-12);
double f8(double a, double b1, double b2, double r, double eps = 1e-12);
double h1(double a, double r, double eps = 1e-12);
double h2(double a, double r, double eps = 1e-12);

/// Dispatch wrapper over the named functions above, for harness and CLI use.
enum class HKind { h9, h10, h11, h12, h13, h15, f8, h1, h2 };
struct HArgs {
  double a = 0.0;
  double b1 = 0.0;
  double b2 = 0.0;
  double r = 0.0;
  int n = 0;
  double eps = 1e-12;
};
double h_ratio(HKind which, const HArgs& args);

/// P_n(a,r) = sum_{k<=n+1} a_k r^{2k} and
/// Q_n(a,r) = a[F(a,1-a;1;r)-1-a(1-a)r]/(3(1-a)r) - sum_{1<=k<=n} a_{k+1} r^k,
/// evaluated from the exact ak family (a is rationalized internally).
double p_n(double a, double r, int n);
double q_n(double a, double r, int n, double eps = 1e-12);

/// One evaluated inequality chain: ordered links, consecutive slacks, and a
/// verdict that passes iff every slack >= -tolerance.
struct BoundReport {
  std::string chain;
  std::vector<std::pair<std::string, double>> links;
  std::vector<double> slacks;
  double slack_min = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  double eval_accuracy = 0.0;  // worst achieved evaluation tolerance
  std::string note;

  std::string to_json() const;
  static BoundReport from_json(const std::string& text);
};

enum class Chain {
  ineqf2,
  ineqlam1,
  ineqlam1p,
  ineqa1pp,
  ineqlam2,
  ineqlam3,
  ineq2g1,
  ineqlam23,
  ineqlam23p,
  ineqwv,
  ineqh14,
  ineq2g2,
};

const char* chain_name(Chain chain);
/// Parses a chain name (case-insensitive); throws std::invalid_argument.
Chain chain_from_name(const std::string& name);
/// Whether the chain takes a truncation index n.
bool chain_uses_n(Chain chain);
/// Whether the chain takes a general (a,b1,b2) triple.
bool chain_uses_triple(Chain chain);

struct ChainArgs {
  double a = 0.5;
  double b1 = 0.0;
  double b2 = 0.0;
  double r = 0.5;
  int n = 0;
  double eps = 1e-12;
};

/// Evaluates every link of the chain left to right. Precondition violations
/// (out-of-range parameters, an unproven sign region) throw std::domain_error
/// rather than producing a failed verdict.
BoundReport bound_chain(Chain chain, const ChainArgs& args);

}  // namespace turan

#endif  // TURAN_FUNCTIONALS_HPP
