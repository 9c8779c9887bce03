#ifndef TURAN_COEFF_ENGINE_HPP
#define TURAN_COEFF_ENGINE_HPP

#include <string>
#include <vector>

#include "turan/rational.hpp"
#include "turan/series.hpp"

namespace turan {

// Every recurrence below runs in exact rational arithmetic; double-valued
// parameters must be rationalized by the caller (Rational::from_double_exact
// is exact for any double). Completed tables are immutable and safe to share.

enum class TableKind { an1, an2, ak, bn, cn, dn, bbarn, btilde, an3, an4 };

const char* table_kind_name(TableKind kind);

/// One coefficient family: values[k] is the k-th series coefficient. The
/// an3/an4 kinds carry pi factors and live in fvalues instead.
struct CoeffTable {
  TableKind kind;
  std::vector<Rational> params;
  std::vector<Rational> values;
  std::vector<double> fvalues;
  int degree = -1;

  bool exact() const { return fvalues.empty(); }
  double value_as_double(int k) const;

  /// JSON with rationals rendered "p/q".
  std::string to_json() const;
  static CoeffTable from_json(const std::string& text);
};

/// Builders refuse degrees above this unless allow_large is set; coefficient
/// bit-size grows quickly with depth.
inline constexpr int kDefaultDegreeCap = 64;

/// Quotient coefficients of F(a,b1;c1+1;.)/F(a,b2;c2+1;.), c_i = a+b_i.
/// Negative for all indices >= 1 when a <= 1, or a > 1 with b2 small enough.
CoeffTable an1_table(const Rational& a, const Rational& b1, const Rational& b2, int n,
                     bool allow_large = false);

/// The (1/2,1/2,1) instance of an1 via its own self-contained recurrence.
CoeffTable an2_table(int n, bool allow_large = false);

/// Coefficients of the absolutely monotone gap function pairing the
/// first-kind integral with its ratio representation. Built along two
/// independent routes that must agree exactly; disagreement throws.
CoeffTable ak_table(const Rational& a, int n, bool allow_large = false);

/// Product-ratio coefficients of F(a,b1;c1+1;.)F(a,b2;c2;.)/F(a,b2;c2+1;.).
CoeffTable bn_table(const Rational& a, const Rational& b1, const Rational& b2, int n,
                    bool allow_large = false);

/// bn at (b1,b2) = (1-a, 3/2-a); requires a in (0,1).
CoeffTable cn_table(const Rational& a, int n, bool allow_large = false);

/// cn divided by F(a,1-a;1;.), term by term.
CoeffTable dn_table(const Rational& a, int n, bool allow_large = false);

/// bn divided by F(a,b1;c1;.), term by term.
CoeffTable bbarn_table(const Rational& a, const Rational& b1, const Rational& b2, int n,
                       bool allow_large = false);

/// btilde_k = alpha_bar (a)_k(b1)_k/((c1)_k k!) - B_k; btilde_0 = alpha_bar-1.
CoeffTable btilde_table(const Rational& a, const Rational& b1, const Rational& b2, int n,
                        bool allow_large = false);

/// (3 pi / 8) an2, float-valued.
CoeffTable an3_table(int n, bool allow_large = false);

/// (pi / (2 alpha)) ak, float-valued.
CoeffTable an4_table(const Rational& a, int n, bool allow_large = false);

/// Tail constants: delta_n, eta_n strictly decrease to 0 in n; a_tilde_n is
/// the partial-sum gap of the an2 family against its limit 8/(3 pi).
struct TailConstants {
  double delta_n;
  double eta_n;
  double a_tilde_n;
};

/// Symmetric-family tails at parameter a (eta_n coincides with delta_n here).
TailConstants tails(const Rational& a, int n);

/// General-triple tails; delta_n is not defined for a general triple and is
/// returned as NaN.
TailConstants tails(const Rational& a, const Rational& b1, const Rational& b2, int n);

/// Maclaurin coefficients A_n of the b-derivative numerator of the ratio
/// F(a,b;c+1;.)/F(a,b;c;.); A_0 = a(b^2 - a(a+1))/(c^2(c+1)^2) in closed form,
/// the rest by the double sum over the auxiliary sequences.
std::vector<double> a_n_coeffs(double a, double b, int n);

}  // namespace turan

#endif  // TURAN_COEFF_ENGINE_HPP
