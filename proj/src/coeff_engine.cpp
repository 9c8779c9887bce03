#include "turan/coeff_engine.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "json.hpp"
#include "turan/sequences.hpp"
#include "turan/special.hpp"

namespace turan {

namespace {

const Rational kOne(1);

Rational factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return Rational(std::move(f));
}

void check_degree(int n, bool allow_large) {
  if (n < 0) throw std::domain_error("coeff table: degree must be >= 0");
  if (n > kDefaultDegreeCap && !allow_large)
    throw std::invalid_argument("coeff table: degree above 64 requires allow_large");
}

void check_b_order(const Rational& b1, const Rational& b2) {
  if (!(b1.sign() > 0) || !(b2.sign() > 0) || !(b1 < b2))
    throw std::domain_error("coeff table: requires 0 < b1 < b2");
}

void check_unit_interval(const Rational& a, const char* who) {
  if (!(a.sign() > 0) || !(a < kOne))
    throw std::domain_error(std::string(who) + ": a must be in (0,1)");
}

// Coefficients of F(a,b;c;.) up to degree n (same recurrence as
// f21_series_coeffs, local to avoid the header dependency).
std::vector<Rational> hyp_coeffs(const Rational& a, const Rational& b, const Rational& c, int n) {
  std::vector<Rational> u(static_cast<std::size_t>(n) + 1);
  u[0] = kOne;
  for (int k = 0; k < n; ++k)
    u[k + 1] = u[k] * (a + Rational(k)) * (b + Rational(k)) / ((c + Rational(k)) * Rational(k + 1));
  return u;
}

CoeffTable make_table(TableKind kind, std::vector<Rational> params, std::vector<Rational> values) {
  CoeffTable t;
  t.kind = kind;
  t.params = std::move(params);
  t.values = std::move(values);
  t.degree = static_cast<int>(t.values.size()) - 1;
  return t;
}

}  // namespace

const char* table_kind_name(TableKind kind) {
  switch (kind) {
    case TableKind::an1: return "an1";
    case TableKind::an2: return "an2";
    case TableKind::ak: return "ak";
    case TableKind::bn: return "bn";
    case TableKind::cn: return "cn";
    case TableKind::dn: return "dn";
    case TableKind::bbarn: return "bbarn";
    case TableKind::btilde: return "btilde";
    case TableKind::an3: return "an3";
    case TableKind::an4: return "an4";
  }
  throw std::logic_error("table_kind_name: unreachable");
}

double CoeffTable::value_as_double(int k) const {
  return exact() ? values[static_cast<std::size_t>(k)].to_double()
                 : fvalues[static_cast<std::size_t>(k)];
}

std::string CoeffTable::to_json() const {
  nlohmann::json j;
  j["kind"] = table_kind_name(kind);
  j["degree"] = degree;
  nlohmann::json ps = nlohmann::json::array();
  for (const Rational& p : params) ps.push_back(p.str());
  j["params"] = ps;
  if (exact()) {
    nlohmann::json vs = nlohmann::json::array();
    for (const Rational& v : values) vs.push_back(v.str());
    j["values"] = vs;
  } else {
    j["values"] = fvalues;
  }
  return j.dump();
}

CoeffTable CoeffTable::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  CoeffTable t;
  std::string kind = j.at("kind").get<std::string>();
  bool found = false;
  for (TableKind k : {TableKind::an1, TableKind::an2, TableKind::ak, TableKind::bn,
                      TableKind::cn, TableKind::dn, TableKind::bbarn, TableKind::btilde,
                      TableKind::an3, TableKind::an4}) {
    if (kind == table_kind_name(k)) {
      t.kind = k;
      found = true;
      break;
    }
  }
  if (!found) throw std::invalid_argument("CoeffTable::from_json: unknown kind " + kind);
  t.degree = j.at("degree").get<int>();
  for (const auto& p : j.at("params")) t.params.push_back(Rational::from_string(p.get<std::string>()));
  if (t.kind == TableKind::an3 || t.kind == TableKind::an4) {
    t.fvalues = j.at("values").get<std::vector<double>>();
  } else {
    for (const auto& v : j.at("values")) t.values.push_back(Rational::from_string(v.get<std::string>()));
  }
  return t;
}

CoeffTable an1_table(const Rational& a, const Rational& b1, const Rational& b2, int n,
                     bool allow_large) {
  check_degree(n, allow_large);
  check_b_order(b1, b2);
  Rational c1 = a + b1, c2 = a + b2;
  std::vector<Rational> u = hyp_coeffs(a, b1, c1 + kOne, n);  // numerator family
  std::vector<Rational> w = hyp_coeffs(a, b2, c2 + kOne, n);  // denominator family
  std::vector<Rational> out(static_cast<std::size_t>(n) + 1);
  out[0] = kOne;
  for (int m = 1; m <= n; ++m) {
    Rational s = u[m];
    for (int k = 0; k < m; ++k) s -= w[m - k] * out[k];
    out[m] = s;
  }
  return make_table(TableKind::an1, {a, b1, b2}, std::move(out));
}

CoeffTable an2_table(int n, bool allow_large) {
  check_degree(n, allow_large);
  // self-contained recurrence; the generic an1 at (1/2,1/2,1) must agree
  std::vector<Rational> out(static_cast<std::size_t>(n) + 1);
  out[0] = kOne;
  Rational half(1, 2);
  Rational poch_sq = kOne;  // ((1/2)_k / k!)^2
  for (int k = 1; k <= n; ++k) {
    Rational ratio = (half + Rational(k - 1)) / Rational(k);
    poch_sq *= ratio * ratio;
    Rational s = poch_sq / Rational(k + 1);
    Rational conv;
    for (int j = 0; j < k; ++j) {
      int m = k - j;
      conv += out[j] / Rational((2 * m + 1) * (2 * m + 3));
    }
    out[k] = s - Rational(3) * conv;
  }
  return make_table(TableKind::an2, {}, std::move(out));
}

CoeffTable bn_table(const Rational& a, const Rational& b1, const Rational& b2, int n,
                    bool allow_large) {
  check_degree(n, allow_large);
  check_b_order(b1, b2);
  Rational c1 = a + b1, c2 = a + b2;
  std::vector<Rational> u = hyp_coeffs(a, b1, c1 + kOne, n);
  std::vector<Rational> v = hyp_coeffs(a, b2, c2, n);
  std::vector<Rational> w = hyp_coeffs(a, b2, c2 + kOne, n);
  std::vector<Rational> out(static_cast<std::size_t>(n) + 1);
  out[0] = kOne;
  for (int m = 1; m <= n; ++m) {
    Rational s = u[m];
    for (int k = 0; k < m; ++k) s += u[k] * v[m - k] - out[k] * w[m - k];
    out[m] = s;
  }
  return make_table(TableKind::bn, {a, b1, b2}, std::move(out));
}

CoeffTable cn_table(const Rational& a, int n, bool allow_large) {
  check_unit_interval(a, "cn_table");
  CoeffTable t = bn_table(a, kOne - a, Rational(3, 2) - a, n, allow_large);
  t.kind = TableKind::cn;
  t.params = {a};
  return t;
}

CoeffTable dn_table(const Rational& a, int n, bool allow_large) {
  check_unit_interval(a, "dn_table");
  CoeffTable cn = cn_table(a, n, allow_large);
  std::vector<Rational> f = hyp_coeffs(a, kOne - a, kOne, n);
  std::vector<Rational> out(static_cast<std::size_t>(n) + 1);
  out[0] = kOne;
  for (int m = 1; m <= n; ++m) {
    Rational s = cn.values[m];
    for (int k = 0; k < m; ++k) s -= out[k] * f[m - k];
    out[m] = s;
  }
  return make_table(TableKind::dn, {a}, std::move(out));
}

CoeffTable bbarn_table(const Rational& a, const Rational& b1, const Rational& b2, int n,
                       bool allow_large) {
  CoeffTable bn = bn_table(a, b1, b2, n, allow_large);
  std::vector<Rational> f = hyp_coeffs(a, b1, a + b1, n);
  std::vector<Rational> out(static_cast<std::size_t>(n) + 1);
  out[0] = kOne;
  for (int m = 1; m <= n; ++m) {
    Rational s = bn.values[m];
    for (int k = 0; k < m; ++k) s -= out[k] * f[m - k];
    out[m] = s;
  }
  return make_table(TableKind::bbarn, {a, b1, b2}, std::move(out));
}

CoeffTable btilde_table(const Rational& a, const Rational& b1, const Rational& b2, int n,
                        bool allow_large) {
  CoeffTable bn = bn_table(a, b1, b2, n, allow_large);
  Rational c1 = a + b1, c2 = a + b2;
  Rational alpha_bar = b2 * c1 / (b1 * c2);
  std::vector<Rational> f = hyp_coeffs(a, b1, c1, n);
  std::vector<Rational> out(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) out[k] = alpha_bar * f[k] - bn.values[k];
  return make_table(TableKind::btilde, {a, b1, b2}, std::move(out));
}

CoeffTable ak_table(const Rational& a, int n, bool allow_large) {
  check_unit_interval(a, "ak_table");
  check_degree(n, allow_large);
  Rational alpha = (Rational(3) - Rational(2) * a) / (Rational(3) * (kOne - a));

  // Route 1: convolution of the companion-family coefficients with the
  // magnitudes |a_{i+1}^(1)| at (a, 1-a, 3/2-a).
  CoeffTable a1 = an1_table(a, kOne - a, Rational(3, 2) - a, n, allow_large);
  std::vector<Rational> f32 = hyp_coeffs(a, Rational(3, 2) - a, Rational(3, 2), n);
  std::vector<Rational> route1(static_cast<std::size_t>(n) + 1);
  route1[0] = a / (Rational(3) * (kOne - a));
  for (int k = 1; k <= n; ++k) {
    Rational s;
    for (int i = 0; i < k; ++i) {
      const Rational& tail = a1.values[i + 1];
      if (tail.sign() >= 0)
        throw std::logic_error("ak_table: companion coefficient not negative");
      s += Rational(i + 1) * f32[k - i - 1] * (-tail);
    }
    route1[k] = s / Rational(k);
  }

  // Route 2: alpha-scaled square-family coefficients minus the cn family.
  CoeffTable cn = cn_table(a, n, allow_large);
  std::vector<Rational> route2(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    Rational sq = pochhammer(a, k) * pochhammer(kOne - a, k) / (factorial(k) * factorial(k));
    route2[k] = alpha * sq - cn.values[k];
  }

  if (route1 != route2) throw std::logic_error("ak_table: the two computation routes disagree");
  return make_table(TableKind::ak, {a}, std::move(route1));
}

CoeffTable an3_table(int n, bool allow_large) {
  CoeffTable an2 = an2_table(n, allow_large);
  CoeffTable t;
  t.kind = TableKind::an3;
  t.degree = n;
  double scale = 3.0 * std::numbers::pi / 8.0;
  t.fvalues.reserve(static_cast<std::size_t>(n) + 1);
  for (const Rational& v : an2.values) t.fvalues.push_back(scale * v.to_double());
  return t;
}

CoeffTable an4_table(const Rational& a, int n, bool allow_large) {
  CoeffTable ak = ak_table(a, n, allow_large);
  Rational alpha = (Rational(3) - Rational(2) * a) / (Rational(3) * (kOne - a));
  double scale = std::numbers::pi / (2.0 * alpha.to_double());
  CoeffTable t;
  t.kind = TableKind::an4;
  t.params = {a};
  t.degree = n;
  t.fvalues.reserve(static_cast<std::size_t>(n) + 1);
  for (const Rational& v : ak.values) t.fvalues.push_back(scale * v.to_double());
  return t;
}

namespace {

double alpha_beta(const Rational& a) {
  double ad = a.to_double();
  double alpha = (3.0 - 2.0 * ad) / (3.0 * (1.0 - ad));
  double beta = (digamma(1.5 - ad) - digamma(1.0 - ad)) / beta_fn(ad, 1.0 - ad);
  return alpha * beta;
}

double a_tilde(int n) {
  CoeffTable an2 = an2_table(n);
  Rational sum;
  for (const Rational& v : an2.values) sum += v;
  return sum.to_double() - 8.0 / (3.0 * std::numbers::pi);
}

}  // namespace

TailConstants tails(const Rational& a, int n) {
  if (n < 0) throw std::domain_error("tails: n must be >= 0");
  CoeffTable ak = ak_table(a, n + 1);
  Rational sum;
  for (const Rational& v : ak.values) sum += v;
  double delta = alpha_beta(a) - sum.to_double();
  return TailConstants{delta, delta, a_tilde(n)};
}

TailConstants tails(const Rational& a, const Rational& b1, const Rational& b2, int n) {
  if (n < 0) throw std::domain_error("tails: n must be >= 0");
  CoeffTable bt = btilde_table(a, b1, b2, n + 1);
  Rational sum;
  for (const Rational& v : bt.values) sum += v;
  double ad = a.to_double(), b1d = b1.to_double(), b2d = b2.to_double();
  double alpha_bar = b2d * (ad + b1d) / (b1d * (ad + b2d));
  double beta_bar = (digamma(b2d) - digamma(b1d)) / beta_fn(ad, b1d);
  double eta = alpha_bar * beta_bar - sum.to_double();
  return TailConstants{std::numeric_limits<double>::quiet_NaN(), eta, a_tilde(n)};
}

std::vector<double> a_n_coeffs(double a, double b, int n) {
  if (!(a > 0.0) || !(b > 0.0)) throw std::domain_error("a_n_coeffs: a,b must be > 0");
  if (n < 0) throw std::domain_error("a_n_coeffs: n must be >= 0");
  SeqParams p(a, b);
  double c = p.c;
  std::vector<double> out(static_cast<std::size_t>(n) + 1);
  out[0] = a * (b * b - a * (a + 1.0)) / (c * c * (c + 1.0) * (c + 1.0));
  for (int m = 1; m <= n; ++m) {
    double s = 0.0;
    for (int k = 0; k <= m; ++k) {
      int j = m - k;
      double w = pochhammer(a, k) * rho_n(p, k) * pochhammer(a, j) * phi_n(p, j);
      double kfact = 1.0, jfact = 1.0;
      for (int i = 2; i <= k; ++i) kfact *= i;
      for (int i = 2; i <= j; ++i) jfact *= i;
      double bracket = (j + a) * (j + b) / ((j + 1.0) * (j + c + 1.0)) * tau_n(p, j + 1) -
                       (k + a) * (k + b) / ((k + 1.0) * (k + c)) * lambda_n(p, k + 1);
      s += w / (kfact * jfact) * bracket;
    }
    out[m] = s;
  }
  return out;
}

}  // namespace turan
