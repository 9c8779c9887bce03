#include "turan/rational.hpp"

#include <cmath>
#include <cstdint>

namespace turan {

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::from_string(std::string_view s) {
  auto bad = [&] { return std::invalid_argument("Rational: cannot parse '" + std::string(s) + "'"); };
  if (s.empty()) throw bad();
  bool neg = false;
  std::size_t i = 0;
  if (s[i] == '+' || s[i] == '-') {
    neg = s[i] == '-';
    ++i;
  }
  BigInt num = 0, den = 1;
  bool any_digit = false, seen_point = false, seen_slash = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c >= '0' && c <= '9') {
      num = num * 10 + (c - '0');
      if (seen_point) den *= 10;
      any_digit = true;
    } else if (c == '.' && !seen_point && !seen_slash) {
      seen_point = true;
    } else if (c == '/' && !seen_slash && !seen_point && any_digit) {
      seen_slash = true;
      BigInt d = 0;
      bool dd = false;
      for (++i; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw bad();
        d = d * 10 + (s[i] - '0');
        dd = true;
      }
      if (!dd || d == 0) throw bad();
      den = d;
      break;
    } else {
      throw bad();
    }
  }
  if (!any_digit) throw bad();
  if (neg) num = -num;
  return Rational(std::move(num), std::move(den));
}

Rational Rational::from_double_exact(double x) {
  if (!std::isfinite(x)) throw std::domain_error("Rational: non-finite double");
  if (x == 0.0) return Rational();
  int e = 0;
  double m = std::frexp(x, &e);  // x = m * 2^e, |m| in [0.5, 1)
  auto mi = static_cast<std::int64_t>(std::ldexp(m, 53));
  e -= 53;
  BigInt num(mi), den(1);
  if (e >= 0) {
    num <<= e;
  } else {
    den <<= -e;
  }
  return Rational(std::move(num), std::move(den));
}

double Rational::to_double() const {
  boost::multiprecision::cpp_rational q(num_, den_);
  return q.convert_to<double>();
}

std::string Rational::str() const {
  std::string out = num_.str();
  if (den_ != 1) {
    out += '/';
    out += den_.str();
  }
  return out;
}

Rational pochhammer(const Rational& x, int n) {
  if (n < 0) throw std::domain_error("pochhammer: n must be >= 0");
  Rational p(1);
  for (int i = 0; i < n; ++i) p *= x + Rational(i);
  return p;
}

}  // namespace turan
