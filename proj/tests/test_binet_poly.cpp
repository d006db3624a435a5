#include <doctest.h>

#include "binet/binet_poly.hpp"

using namespace binet;

namespace {

const Rat kAlphas[] = {Rat(0), Rat(1), frac(1, 2), frac(-1, 3), Rat(2), Rat(10)};

// S_M = sum_{m<=M} c_m/(m-1)!
Rat sum_c_over_factorial(int M) {
  Rat s = 0;
  for (int m = 1; m <= M; ++m) s += c_coefficient(m) / Rat(factorial(m - 1));
  return s;
}

}  // namespace

TEST_SUITE("binet_poly") {
  TEST_CASE("c_m golden values") {
    CHECK(c_coefficient(1) == frac(1, 12));
    CHECK(c_coefficient(2) == 0);
    CHECK(c_coefficient(3) == frac(-1, 360));
    CHECK(c_coefficient(7) == frac(-3499, 5040));
    CHECK(c_coefficient(9) == frac(-369689, 11880));
  }

  TEST_CASE("beta_m golden values") {
    CHECK(beta_coefficient(3) == frac(59, 360));
    CHECK(beta_coefficient(6) == frac(1577, 168));
    CHECK(beta_coefficient(8) == frac(69311, 180));
  }

  TEST_CASE("p-coefficients") {
    const auto& p2 = p_coefficients(2).p;
    REQUIRE(p2.size() == 2);
    CHECK(p2[0] == 0);
    CHECK(p2[1] == frac(1, 12));
    CHECK(p_coefficients(5).p[2] == frac(9, 10));
    CHECK(p_entry(2, 5) == frac(9, 10));
    const auto& p3 = p_coefficients(3).p;
    CHECK(p3 == std::vector<Rat>{frac(-1, 360), frac(1, 12), frac(1, 12)});
    CHECK(b_eval_exact(3, Rat(1)) == frac(59, 360));
    // Property: p_2(m) = (m-2)!(1-2/m)/4.
    for (int m = 3; m <= 20; ++m) CHECK(p_coefficients(m).p[2] == Rat(factorial(m - 2)) * (1 - frac(2, m)) / 4);
    // Leading coefficient 1/12.
    for (int m = 1; m <= 20; ++m) CHECK(p_coefficients(m).p.back() == frac(1, 12));
  }

  TEST_CASE("the three p-vector formulas agree") {
    for (int m = 1; m <= 30; ++m) {
      auto s = p_by_stirling(m);
      CHECK(s == p_by_convolution(m));
      CHECK(s == p_by_closed_form(m));
    }
  }

  TEST_CASE("b_m special values") {
    CHECK(b_eval_exact(9, Rat(0)) == c_coefficient(9));
    CHECK(b_eval_exact(7, Rat(1)) == beta_coefficient(7));
    for (const Rat& a : kAlphas) CHECK(b_eval_exact(1, a) == frac(1, 12));
  }

  TEST_CASE("three-way exact agreement of b_m(alpha)") {
    for (const Rat& a : kAlphas) {
      auto seq = b_sequence(a, 40);
      for (int m = 1; m <= 40; ++m) {
        const Rat h = b_eval_exact(m, a);
        CHECK(h == b_theorem_sum(m, a));
        CHECK(h == b_c_convolution(m, a));
        CHECK(h == seq[m]);
      }
    }
  }

  TEST_CASE("Bernoulli-polynomial identity") {
    CHECK(bernoulli_identity_check(4, frac(1, 2)) == 0);
    CHECK(bernoulli_identity_check(10, frac(-1, 3)) == 0);
    CHECK(bernoulli_identity_check(20, Rat(7)) == 0);
    for (const Rat& a : kAlphas)
      for (int m = 1; m <= 25; ++m) CHECK(bernoulli_identity_check(m, a) == 0);
  }

  TEST_CASE("positivity on the shifted interval") {
    for (const Rat& a : {frac(1, 4), Rat(1), Rat(3)})
      for (int m = 1; m <= 30; ++m) CHECK(b_eval_exact(m, frac(1, 2) + a) > 0);
  }

  TEST_CASE("c_m by quadrature") {
    const PrecisionContext ctx{30};
    PrecisionGuard g(ctx);
    CHECK(abs(c_by_quadrature_polynomial(1, ctx) - Real(frac(1, 12))) < ten_pow(-20));
    CHECK(abs(c_by_quadrature_polynomial(2, ctx)) < ten_pow(-15));
    CHECK(abs(c_by_quadrature_polynomial(8, ctx) - Real(frac(-1039, 240))) < ten_pow(-15));
    for (int m : {2, 3, 5, 8})
      CHECK(abs(c_by_quadrature_semi_infinite(m, ctx) - Real(c_coefficient(m))) < ten_pow(-20));
    CHECK_THROWS_AS(c_by_quadrature_semi_infinite(1, ctx), DomainError);
  }

  TEST_CASE("b_m by quadrature for m <= 15") {
    const PrecisionContext ctx{30};
    PrecisionGuard g(ctx);
    for (int m = 1; m <= 15; ++m)
      for (const Rat& a : {Rat(0), Rat(1), frac(1, 2)}) {
        const Real e(b_eval_exact(m, a));
        CHECK(abs(b_by_quadrature(m, Real(a), ctx) - e) <= ten_pow(-25) * max(abs(e), Real(1)));
      }
  }

  TEST_CASE("generating function") {
    const PrecisionContext ctx{30};
    PrecisionGuard g(ctx);
    CHECK(egf_closed(Real(3), Real(0)).is_zero());
    CHECK(egf_closed(Real(frac(1, 2)), Real(0)).is_zero());
    CHECK(abs(egf_closed(Real(0), Real(frac(1, 2))) - egf_partial(Real(0), Real(frac(1, 2)), 60)) < ten_pow(-12));
    auto t = egf_series_exact(Rat(0), 10);
    for (int m = 1; m <= 10; ++m) CHECK(t[m] == c_coefficient(m) / Rat(factorial(m - 1)));
    auto t1 = egf_series_exact(frac(1, 3), 12);
    for (int m = 1; m <= 12; ++m) CHECK(t1[m] == b_eval_exact(m, frac(1, 3)) / Rat(factorial(m - 1)));
  }

  TEST_CASE("zeros: small cases") {
    const PrecisionContext ctx{40};
    PrecisionGuard g(ctx);
    auto z2 = zeros(2, ctx);
    REQUIRE(z2.zeros.size() == 1);
    CHECK(z2.zeros[0].is_zero());
    auto z8 = zeros(8, ctx);
    CHECK(middle_zero_remainder(8) == 0);
    bool has_minus3 = false;
    for (const Real& x : z8.zeros) has_minus3 |= abs(x + 3) < ten_pow(-35);
    CHECK(has_minus3);
    CHECK_THROWS_AS(middle_zero_remainder(7), DomainError);
  }

  TEST_CASE("zeros: sums, products and location") {
    const PrecisionContext ctx{40};
    PrecisionGuard g(ctx);
    for (int m = 2; m <= 30; ++m) {
      auto zs = zeros(m, ctx);
      REQUIRE(static_cast<int>(zs.zeros.size()) == m - 1);
      Real s(0), prod(1);
      for (const Real& x : zs.zeros) {
        s += x;
        prod *= -x;
      }
      CHECK(abs(s + Real(binomial(m - 1, 2))) < ten_pow(-35));
      const Real c(c_coefficient(m));
      CHECK(abs(prod / 12 - c) <= ten_pow(-35) * max(abs(c), Real(1)));
      CHECK(zs.zeros.back() > Real(-m - 1));
      if (m > 10) {
        CHECK(zs.zeros.front() >= Real("0.08"));
        CHECK(zs.zeros.front() <= Real("0.1"));
      }
    }
  }

  TEST_CASE("largest zero peaks near m = 72 and then decreases slowly") {
    const PrecisionContext ctx{40};
    PrecisionGuard g(ctx);
    std::vector<double> x1;
    for (int m : {72, 80, 90, 100}) x1.push_back(zeros(m, ctx).zeros.front().to_double());
    CHECK(std::abs(x1[0] - 0.0963016) < 1e-6);
    for (size_t i = 1; i < x1.size(); ++i) CHECK(x1[i] < x1[i - 1]);
    for (double v : x1) CHECK(v >= 0.08);
  }

  TEST_CASE("growth laws") {
    auto r = growth_checks(12);
    CHECK(r.ok);
    CHECK(sum_c_over_factorial(3) == frac(59, 720));
    CHECK(sum_c_over_factorial(3) > sum_c_over_factorial(4));
    CHECK(c_coefficient(4) >= 3 * c_coefficient(3));
    CHECK(growth_checks(200, 500).ok);
  }

  TEST_CASE("large-m estimate") {
    const PrecisionContext ctx{30};
    PrecisionGuard g(ctx);
    // The leading term vanishes identically at alpha = -1/2.
    CHECK(asymptotic_estimate(50, Real(frac(-1, 2))).is_zero());
    CHECK(asymptotic_estimate(50, Real(frac(1, 2))) > Real(0));
    for (const Rat& a : {Rat(0), frac(1, 2), Rat(2)}) {
      const Real est = asymptotic_estimate(200, Real(a));
      const Real ex(b_eval_exact(201, frac(1, 2) + a) / Rat(factorial(200)));
      const Real ratio = est / ex;
      CHECK(ratio >= Real("0.5"));
      CHECK(ratio <= Real(2));
    }
  }
}
