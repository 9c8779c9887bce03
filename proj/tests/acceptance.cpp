// Acceptance suite: one pass/fail line per criterion, each with a pinned
// tolerance and a runtime budget. Exit code is the number of failed criteria.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "turan/coeff_engine.hpp"
#include "turan/elliptic.hpp"
#include "turan/functionals.hpp"
#include "turan/harness.hpp"
#include "turan/hyp2f1.hpp"
#include "turan/special.hpp"

using namespace turan;
namespace nb = std::numbers;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
  void require(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
};

// 1. exact an2 fractions, a5 float, a_tilde_4 constant
Outcome criterion1() {
  Outcome o;
  CoeffTable t = an2_table(6);
  o.require(t.values[1] == Rational(-3, 40), "a1 != -3/40");
  o.require(t.values[2] == Rational(-267, 11200), "a2 != -267/11200");
  o.require(t.values[3] == Rational(-32279, 2688000), "a3 != -32279/2688000");
  o.require(t.values[4] == Rational(-40472969, 5519360000LL), "a4 != -40472969/5519360000");
  double a5 = t.values[5].to_double();
  o.require(std::abs(a5 - (-0.004981513)) <= 1e-9, "a5 float off: " + std::to_string(a5));
  double at4 = tails(Rational(1, 2), 4).a_tilde_n;
  std::ostringstream ss;
  ss.precision(10);
  ss << "a_tilde_4 computed " << at4 << " vs pinned 0.0353442";
  o.require(std::abs(at4 - 0.0353442) <= 1e-6, ss.str());
  return o;
}

// 2. exact partial sum of the an2 family
Outcome criterion2() {
  Outcome o;
  CoeffTable t = an2_table(3);
  Rational sum = t.values[0] + t.values[1] + t.values[2] + t.values[3];
  o.require(sum == Rational(2390041, 2688000),
            "sum_{k<=3} a_k^(2) != 2390041/2688000, got " + sum.str());
  return o;
}

// 3. beta(1/2) = log(4)/pi
Outcome criterion3() {
  Outcome o;
  double beta = constants_symmetric(0.5).beta;
  o.require(std::abs(beta - std::log(4.0) / nb::pi) <= 1e-12, "beta(1/2) off");
  return o;
}

// 4. counterexample certification at a = 1/4
Outcome criterion4() {
  Outcome o;
  double d0 = f5_prime(0.0);
  o.require(std::abs(d0 - (-1.0 / 96.0)) <= 1e-10, "f5'(0) != -1/96");
  auto fn = make_r_function("lambda_minus_1", 0.25, 0, 0, 1e-12);
  ScanResult scan = scan_sign(fn, "lambda_minus_1", R"({"a":0.25})", 0.01, 0.99, 99, 1e-12);
  bool has_neg_left = false;
  for (const auto& c : scan.certificates) {
    if (c.value_lo < 0.0 && c.valid()) has_neg_left = true;
  }
  o.require(has_neg_left, "no certificate with Lambda < 1 on its left end");
  double big = lambda_family(LambdaKind::lambda, 0.25, 0.99, 1e-12);
  o.require(big > 1.0, "Lambda(1/4, 0.99) <= 1");
  return o;
}

// 5. seed-coefficient closed forms over the sanctioned parameter sets
Outcome criterion5() {
  Outcome o;
  const Rational kOne(1);
  for (const Rational& a : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
    o.require(cn_table(a, 1).values[1] == a * (Rational(27) - Rational(23) * a) / Rational(30),
              "C1 mismatch at a=" + a.str());
    o.require(dn_table(a, 1).values[1] == a * (Rational(7) * a - Rational(3)) / Rational(30),
              "D1 mismatch at a=" + a.str());
    CoeffTable ak = ak_table(a, 2);
    o.require(ak.values[1] == a * (a + kOne) / Rational(10), "a1 mismatch at a=" + a.str());
    o.require(ak.values[2] == a * (a + kOne) *
                                  (Rational(-41) * a * a + Rational(24) * a + Rational(100)) /
                                  Rational(2100),
              "a2 mismatch at a=" + a.str());
    for (auto [b1, b2] : {std::pair{Rational(1, 2), kOne},
                          std::pair{kOne - a, Rational(3, 2) - a}}) {
      Rational c1 = a + b1, c2 = a + b2;
      o.require(bn_table(a, b1, b2, 1).values[1] ==
                    a * (b1 / (c1 + kOne) + b2 / (c2 * (c2 + kOne))),
                "B1 mismatch at a=" + a.str());
      o.require(bbarn_table(a, b1, b2, 1).values[1] ==
                    a * (b2 - b1) * (a * a + a - b1 * b2) /
                        (c1 * c2 * (c1 + kOne) * (c2 + kOne)),
                "Bbar1 mismatch at a=" + a.str());
      o.require(btilde_table(a, b1, b2, 1).values[0] == a * (b2 - b1) / (b1 * c2),
                "btilde0 mismatch at a=" + a.str());
    }
  }
  return o;
}

// 6. recurrences equal brute-force series division up to degree 30
Outcome criterion6() {
  Outcome o;
  const int deg = 30;
  const Rational kOne(1);
  auto hyp = [&](const Rational& a, const Rational& b, const Rational& c) {
    return f21_series_coeffs(a, b, c, deg);
  };
  auto eq = [&](const char* kind, const CoeffTable& t, const SeriesPoly& oracle) {
    for (int k = 0; k <= deg; ++k) {
      if (!(t.values[k] == oracle[k])) {
        o.fail(std::string(kind) + " disagrees with the oracle at k=" + std::to_string(k));
        return;
      }
    }
  };
  using Triple = std::tuple<Rational, Rational, Rational>;
  std::vector<Triple> triples = {Triple{Rational(1, 2), Rational(1, 2), kOne},
                                 Triple{Rational(1, 4), Rational(3, 4), Rational(5, 4)},
                                 Triple{Rational(3, 4), Rational(1, 3), Rational(2)}};
  for (const auto& [a, b1, b2] : triples) {
    Rational c1 = a + b1, c2 = a + b2;
    SeriesPoly an1_o = series_divide(hyp(a, b1, c1 + kOne), hyp(a, b2, c2 + kOne));
    eq("an1", an1_table(a, b1, b2, deg), an1_o);
    SeriesPoly bn_o =
        series_divide(series_mul(hyp(a, b1, c1 + kOne), hyp(a, b2, c2), deg), hyp(a, b2, c2 + kOne));
    eq("bn", bn_table(a, b1, b2, deg), bn_o);
    eq("bbarn", bbarn_table(a, b1, b2, deg), series_divide(bn_o, hyp(a, b1, c1)));
    Rational alpha_bar = b2 * c1 / (b1 * c2);
    eq("btilde", btilde_table(a, b1, b2, deg),
       series_sub(series_scale(alpha_bar, hyp(a, b1, c1)), bn_o));
  }
  eq("an2", an2_table(deg), series_divide(hyp(Rational(1, 2), Rational(1, 2), Rational(2)),
                                          hyp(Rational(1, 2), kOne, Rational(5, 2))));
  for (const Rational& a : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
    SeriesPoly cn_o = series_divide(
        series_mul(hyp(a, kOne - a, Rational(2)), hyp(a, Rational(3, 2) - a, Rational(3, 2)), deg),
        hyp(a, Rational(3, 2) - a, Rational(5, 2)));
    eq("cn", cn_table(a, deg), cn_o);
    eq("dn", dn_table(a, deg), series_divide(cn_o, hyp(a, kOne - a, kOne)));
    Rational alpha = (Rational(3) - Rational(2) * a) / (Rational(3) * (kOne - a));
    eq("ak", ak_table(a, deg),
       series_sub(series_scale(alpha, hyp(a, kOne - a, kOne)), cn_o));
  }
  return o;
}

// 7. every bound chain passes its grid with slack >= -1e-10
Outcome criterion7() {
  Outcome o;
  for (Chain c : {Chain::ineqa1pp, Chain::ineqf2, Chain::ineqlam1, Chain::ineqlam1p,
                  Chain::ineqlam2, Chain::ineqlam3, Chain::ineq2g1, Chain::ineqlam23,
                  Chain::ineqlam23p, Chain::ineqwv, Chain::ineqh14, Chain::ineq2g2}) {
    VerificationReport rep = verify_grid(default_grid(c));
    if (rep.passed != rep.total) {
      std::ostringstream ss;
      ss << chain_name(c) << ": " << rep.passed << "/" << rep.total << " (worst slack ";
      double worst = 0.0;
      for (const auto& [args, br] : rep.failures) worst = std::min(worst, br.slack_min);
      ss << worst << ")";
      o.fail(ss.str());
    }
  }
  return o;
}

// 8. sign of Lambda2 - 1 at r = 1e-3 matches the sign of a(a+1) - b1 b2
Outcome criterion8() {
  Outcome o;
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> ua(0.3, 1.0), ub(0.3, 1.0), gap(0.3, 1.3);
  int accepted = 0;
  while (accepted < 50) {
    double a = ua(rng), b1 = ub(rng), b2 = b1 + gap(rng);
    double crit = a * (a + 1.0) - b1 * b2;
    if (std::abs(crit) <= 5e-2) continue;  // stays clear of the neutral band
    ++accepted;
    double v = lambda_family(LambdaKind::lambda2, a, b1, b2, 1e-3, 1e-14) - 1.0;
    if (v * crit <= 0.0) {
      std::ostringstream ss;
      ss.precision(6);
      ss << "sign mismatch at a=" << a << " b1=" << b1 << " b2=" << b2;
      o.fail(ss.str());
    }
  }
  return o;
}

// 9. representation identities within their bracketing tails
Outcome criterion9() {
  Outcome o;
  const int n = 3;
  for (double a : {0.25, 0.5, 0.75}) {
    SymmetricParams sp = constants_symmetric(a);
    double delta = tails(Rational::from_double_exact(a), n).delta_n;
    for (double r = 0.1; r <= 0.9 + 1e-12; r += 0.1) {
      Modulus m(r);
      double x = r * r;
      double lhs = sp.alpha * generalized_k(a, m, 1e-13) -
                   (generalized_e(a, m, 1e-13) - m.r_prime * m.r_prime *
                                                     generalized_k(a, m, 1e-13)) /
                       (a * x) * f21({a, 1.5 - a, 1.5}, x, 1e-13) /
                       f21({a, 1.5 - a, 2.5}, x, 1e-13);
      double lo = nb::pi / 2.0 * p_n(a, r, n);
      double hi = lo + nb::pi / 2.0 * delta * std::pow(r, 2 * (n + 2));
      if (!(lhs >= lo - 1e-10 && lhs <= hi + 1e-10)) {
        std::ostringstream ss;
        ss << "first-kind representation out of bracket at a=" << a << " r=" << r;
        o.fail(ss.str());
      }
    }
  }
  double delta_half = tails(Rational(1, 2), n).delta_n;
  for (double r = 0.1; r <= 0.9 + 1e-12; r += 0.1) {
    double gap = agm_k(r) - h13(r * r, 1e-13) * arth_ratio(r);
    double lo = 3.0 * nb::pi / 8.0 * p_n(0.5, r, n);
    double hi = lo + 3.0 * nb::pi / 8.0 * delta_half * std::pow(r, 2 * (n + 2));
    if (!(gap >= lo - 1e-10 && gap <= hi + 1e-10)) {
      std::ostringstream ss;
      ss << "classical-K representation out of bracket at r=" << r;
      o.fail(ss.str());
    }
    // closed form of the ratio functional at a = 1/2
    double t = std::sqrt(r);
    Modulus mt(t);
    double k = generalized_k(0.5, mt, 1e-13);
    double e = generalized_e(0.5, mt, 1e-13);
    double tp2 = 1.0 - r;
    double closed = 4.0 * std::atanh(t) / (3.0 * k) * (e - tp2 * k) / (t - tp2 * std::atanh(t));
    if (std::abs(lambda_family(LambdaKind::lambda, 0.5, r, 1e-13) - closed) > 1e-10) {
      o.fail("lambda(1/2,r) closed form off at r=" + std::to_string(r));
    }
  }
  for (double a : {0.2, 0.5, 0.8}) {
    for (double t : {0.2, 0.4, 0.6, 0.8}) {
      double residual = 0.0;
      ka_combo(a, t, 1e-12, &residual);
      if (residual > 1e-10) {
        o.fail("ka_combo residual " + std::to_string(residual));
      }
    }
  }
  return o;
}

// 10. limit trends along r_k = 1 - 10^-k
Outcome criterion10() {
  Outcome o;
  std::vector<int> ks = {2, 3, 4, 5, 6};
  for (double a : {0.25, 0.5, 0.75}) {
    SymmetricParams sp = constants_symmetric(a);
    TrendReport t = trend_to_limit(make_r_function("f2", a, 0, 0, 1e-12), "f2",
                                   sp.alpha * sp.beta, ks);
    o.require(t.monotone, "f2 gap not strictly decreasing at a=" + std::to_string(a));
  }
  for (auto [a, b1, b2] : {std::tuple{0.5, 0.5, 1.0}, std::tuple{0.25, 0.75, 1.25},
                           std::tuple{0.75, 1.0 / 3.0, 2.0}}) {
    TuranParams tp = constants_general(a, b1, b2);
    TrendReport t = trend_to_limit(make_r_function("lambda2", a, b1, b2, 1e-12), "lambda2",
                                   tp.alpha_bar, ks);
    o.require(t.monotone, "lambda2 gap not strictly decreasing at a=" + std::to_string(a));
  }
  TrendReport diverge =
      trend_to_limit(make_r_function("f1", 0.25, 0, 0, 1e-12), "f1",
                     std::numeric_limits<double>::infinity(), {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12});
  o.require(diverge.monotone, "f1(1/4) not strictly increasing through k=12");
  return o;
}

// 11. derivative operations against central finite differences
Outcome criterion11() {
  Outcome o;
  for (double a : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    for (double r : {0.1, 0.3, 0.5, 0.7, 0.9}) {
      double fd = oracles::central_diff(
          [r](double aa) { return f21({aa, 1.0 - aa, 1.0}, r, 1e-13); }, a);
      if (std::abs(df21_da_zero_balanced(a, r, 1e-12) - fd) > 1e-6) {
        o.fail("df/da mismatch at a=" + std::to_string(a) + " r=" + std::to_string(r));
      }
      double fdr = oracles::central_diff(
          [a](double x) { return f_small(SmallF::f1, a, x, 1e-13); }, r);
      if (std::abs(h15(a, r, 1e-12) - fdr) > 1e-6) {
        o.fail("h15 mismatch at a=" + std::to_string(a) + " r=" + std::to_string(r));
      }
      double fdr3 = oracles::central_diff(
          [a](double x) { return f_small(SmallF::f3, a, 0.6, 1.4, x, 1e-13); }, r);
      if (std::abs(f8(a, 0.6, 1.4, r, 1e-12) - fdr3) > 1e-6) {
        o.fail("f8 mismatch at a=" + std::to_string(a) + " r=" + std::to_string(r));
      }
    }
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* label;
    double budget_s;
    std::function<Outcome()> body;
  };
  std::vector<Criterion> criteria = {
      {1, "exact an2 coefficients, a5 float, a_tilde_4", 1.0, criterion1},
      {2, "exact partial sum 2390041/2688000", 1.0, criterion2},
      {3, "beta(1/2) = log(4)/pi", 1.0, criterion3},
      {4, "counterexample certification at a = 1/4", 10.0, criterion4},
      {5, "seed-coefficient closed forms", 5.0, criterion5},
      {6, "recurrences match series-division oracle to degree 30", 30.0, criterion6},
      {7, "bound-chain grids all pass (slack >= -1e-10)", 120.0, criterion7},
      {8, "sign criterion on 50 random triples", 30.0, criterion8},
      {9, "representation identities within bracketing tails", 30.0, criterion9},
      {10, "limit trends along r = 1 - 10^-k", 30.0, criterion10},
      {11, "derivative operations vs finite differences", 30.0, criterion11},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget_s) o.fail("runtime " + std::to_string(secs) + "s over budget");
    std::printf("criterion %2d: %s  (%.2fs)  %s\n", c.id, o.pass ? "PASS" : "FAIL", secs,
                c.label);
    if (!o.pass) {
      std::printf("              %s\n", o.detail.c_str());
      ++failures;
    }
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures;
}
