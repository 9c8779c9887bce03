#ifndef TURAN_RATIONAL_HPP
#define TURAN_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace turan {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational number, kept in lowest terms with a positive
/// denominator. Backbone of every coefficient recurrence in the library:
/// deep recurrences compound roundoff, so they run exactly and are converted
/// to double only at the edges.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    normalize();
  }
  Rational(long long n, long long d) : Rational(BigInt(n), BigInt(d)) {}

  /// Accepts "p/q", an integer, or a plain decimal ("0.25" -> 1/4, exactly).
  static Rational from_string(std::string_view s);

  /// Exact value of the double (every finite double is m*2^e).
  static Rational from_double_exact(double x);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  double to_double() const;

  /// "p/q", or just "p" when the value is an integer.
  std::string str() const;

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  Rational& operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Rational& operator-=(const Rational& o) { return *this += -o; }
  Rational& operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  void normalize();
  BigInt num_, den_;
};

inline Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

/// Rising factorial (x)_n = x(x+1)...(x+n-1), (x)_0 = 1, computed exactly.
Rational pochhammer(const Rational& x, int n);

}  // namespace turan

#endif  // TURAN_RATIONAL_HPP
