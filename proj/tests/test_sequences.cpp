#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "turan/sequences.hpp"
#include "turan/special.hpp"

using namespace turan;

TEST_CASE("base values and first elements") {
  SeqParams p(0.7, 1.3);
  CHECK(phi_n(p, 0) == 1.0);
  CHECK(rho_n(p, 0) == 1.0);
  CHECK(tau_n(p, 0) == 0.0);
  CHECK(lambda_n(p, 0) == 0.0);
  CHECK(phi_n(p, 1) == doctest::Approx(p.b / (p.c + 1.0)).epsilon(1e-15));
  CHECK(rho_n(p, 1) == doctest::Approx(p.b / p.c).epsilon(1e-15));
  CHECK(tau_n(p, 1) == doctest::Approx((p.a + 1.0) / (p.b * (p.c + 1.0))).epsilon(1e-15));
  CHECK(lambda_n(p, 1) == doctest::Approx(p.a / (p.b * p.c)).epsilon(1e-15));
  CHECK_THROWS_AS(SeqParams(0.0, 1.0), std::domain_error);
}

TEST_CASE("recurrences and the phi/rho relation") {
  SeqParams p(0.45, 2.2);
  for (int n = 0; n < 20; ++n) {
    CHECK(phi_n(p, n + 1) ==
          doctest::Approx(phi_n(p, n) * (n + p.b) / (n + p.c + 1.0)).epsilon(1e-14));
    CHECK(rho_n(p, n + 1) ==
          doctest::Approx(rho_n(p, n) * (n + p.b) / (n + p.c)).epsilon(1e-14));
    CHECK(phi_n(p, n) == doctest::Approx(p.c / (n + p.c) * rho_n(p, n)).epsilon(1e-14));
    // tau_n = lambda_n + n/(c(n+c))
    CHECK(tau_n(p, n) ==
          doctest::Approx(lambda_n(p, n) + n / (p.c * (n + p.c))).epsilon(1e-13));
  }
}

TEST_CASE("psi-form cross-check of the closed sums") {
  for (double a : {0.3, 0.8, 1.7}) {
    for (double b : {0.4, 1.0, 2.5}) {
      SeqParams p(a, b);
      for (int n : {1, 2, 5, 17}) {
        double tau_psi = digamma(p.c + 1.0) - digamma(p.b) + digamma(n + p.b) -
                         digamma(n + p.c + 1.0);
        double lam_psi = digamma(p.c) - digamma(p.b) + digamma(n + p.b) - digamma(n + p.c);
        CHECK(std::abs(tau_n(p, n) - tau_psi) <= 1e-11);
        CHECK(std::abs(lambda_n(p, n) - lam_psi) <= 1e-11);
      }
    }
  }
}

TEST_CASE("limits in n: tau -> psi(c+1)-psi(b), lambda -> psi(c)-psi(b)") {
  SeqParams p(0.6, 0.9);
  int big = 200000;
  CHECK(std::abs(tau_n(p, big) - (digamma(p.c + 1.0) - digamma(p.b))) <= 1e-4);
  CHECK(std::abs(lambda_n(p, big) - (digamma(p.c) - digamma(p.b))) <= 1e-4);
}

TEST_CASE("monotonicity: tau,lambda increase in n and decrease in b") {
  for (double a : {0.4, 1.2}) {
    for (double b : {0.3, 1.0, 2.0}) {
      SeqParams p(a, b);
      for (int n = 0; n < 30; ++n) {
        CHECK(tau_n(p, n + 1) > tau_n(p, n));
        CHECK(lambda_n(p, n + 1) > lambda_n(p, n));
      }
    }
    for (int n : {1, 3, 9}) {
      double prev_tau = tau_n(SeqParams(a, 0.2), n);
      double prev_lam = lambda_n(SeqParams(a, 0.2), n);
      for (double b = 0.4; b <= 3.0; b += 0.2) {
        double t = tau_n(SeqParams(a, b), n);
        double l = lambda_n(SeqParams(a, b), n);
        CHECK(t < prev_tau);
        CHECK(l < prev_lam);
        prev_tau = t;
        prev_lam = l;
      }
    }
  }
}

TEST_CASE("phi,rho lie in (0,1), increase in b, decrease in n") {
  for (double a : {0.4, 1.1}) {
    for (double b : {0.5, 1.5, 2.5}) {
      SeqParams p(a, b);
      for (int n = 1; n < 25; ++n) {
        CHECK(phi_n(p, n) > 0.0);
        CHECK(phi_n(p, n) < 1.0);
        CHECK(rho_n(p, n) > 0.0);
        CHECK(rho_n(p, n) < 1.0);
        CHECK(phi_n(p, n + 1) < phi_n(p, n));
        CHECK(rho_n(p, n + 1) < rho_n(p, n));
      }
    }
    for (int n : {1, 4, 12}) {
      for (double b = 0.4; b <= 2.8; b += 0.2) {
        CHECK(phi_n(SeqParams(a, b + 0.2), n) > phi_n(SeqParams(a, b), n));
        CHECK(rho_n(SeqParams(a, b + 0.2), n) > rho_n(SeqParams(a, b), n));
      }
    }
  }
}

TEST_CASE("limits at b -> 0+: phi_n tau_n -> (n-1)!/(a+1)_n, rho_n lambda_n -> (n-1)!/(a)_n") {
  double b = 1e-7;
  for (double a : {0.35, 0.5, 1.4}) {
    SeqParams p(a, b);
    for (int n : {1, 2, 3, 6}) {
      double fact = 1.0;
      for (int i = 1; i < n; ++i) fact *= i;
      double lim_pt = fact / pochhammer(a + 1.0, n);
      double lim_rl = fact / pochhammer(a, n);
      CHECK(std::abs(phi_n(p, n) * tau_n(p, n) - lim_pt) / lim_pt <= 1e-4);
      CHECK(std::abs(rho_n(p, n) * lambda_n(p, n) - lim_rl) / lim_rl <= 1e-4);
    }
  }
}

TEST_CASE("turning point: decreasing from the start at or below the threshold") {
  for (double a : {0.3, 0.5, 1.0, 2.0}) {
    double thr_rl = std::sqrt(a * (a + 1.0));
    double thr_pt = std::sqrt((a + 1.0) * (a + 2.0));
    auto tp_rl = product_turning_point(ProductKind::rho_lambda, SeqParams(a, thr_rl - 0.01), 400);
    auto tp_pt = product_turning_point(ProductKind::phi_tau, SeqParams(a, thr_pt - 0.01), 400);
    REQUIRE(tp_rl.has_value());
    REQUIRE(tp_pt.has_value());
    CHECK(*tp_rl == 1);
    CHECK(*tp_pt == 1);
  }
}

TEST_CASE("turning point: rise-then-fall just above the threshold") {
  for (double a : {0.3, 0.5, 1.0, 2.0}) {
    double thr_rl = std::sqrt(a * (a + 1.0));
    double thr_pt = std::sqrt((a + 1.0) * (a + 2.0));
    auto tp_rl = product_turning_point(ProductKind::rho_lambda, SeqParams(a, thr_rl + 0.01), 4000);
    auto tp_pt = product_turning_point(ProductKind::phi_tau, SeqParams(a, thr_pt + 0.01), 4000);
    REQUIRE(tp_rl.has_value());
    REQUIRE(tp_pt.has_value());
    CHECK(*tp_rl > 1);
    CHECK(*tp_pt > 1);
  }
  // a clear supercritical case: the peak is found and verified by scan
  SeqParams p(0.5, 2.0);
  auto tp = product_turning_point(ProductKind::rho_lambda, p, 400);
  REQUIRE(tp.has_value());
  int n2 = *tp;
  CHECK(n2 >= 1);
  auto s = [&](int n) { return rho_n(p, n) * lambda_n(p, n); };
  for (int n = 1; n < n2; ++n) CHECK(s(n + 1) > s(n));
  CHECK(s(n2 + 1) < s(n2));
  CHECK(s(n2 + 2) < s(n2 + 1));
}

TEST_CASE("turning point: unresolved rise reports nullopt") {
  // far above threshold with a tiny scan window, the peak is past n_max
  auto tp = product_turning_point(ProductKind::rho_lambda, SeqParams(0.5, 50.0), 2);
  CHECK_FALSE(tp.has_value());
  CHECK_THROWS_AS(product_turning_point(ProductKind::phi_tau, SeqParams(0.5, 1.0), 1),
                  std::domain_error);
}
