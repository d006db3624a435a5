#include <doctest.h>

#include <random>

#include "binet/binet_poly.hpp"
#include "binet/laplace.hpp"
#include "binet/mu.hpp"

using namespace binet;

namespace {

Rat rising(const Rat& x, int m) {
  Rat p = 1;
  for (int k = 0; k < m; ++k) p *= x + k;
  return p;
}

}  // namespace

TEST_SUITE("laplace_factorial") {
  TEST_CASE("phi_0 is f(0)") {
    for (const auto& f : {exp_function(frac(-1, 2)), mittag_leffler(2, 1), reciprocal_one_plus(), binet_integrand()})
      for (const Rat& a : {Rat(0), frac(1, 3), Rat(2)}) CHECK(phi(0, a, frac(3, 2), f) == f.coeff(0));
  }

  TEST_CASE("exponential and constant functions give factorial polynomials") {
    for (const Rat& b : {frac(-1, 2), Rat(1), frac(2, 3)}) {
      auto f = exp_function(b);
      for (const Rat& a : {Rat(0), Rat(1), frac(1, 3)})
        for (int m = 0; m <= 12; ++m) CHECK(phi(m, a, Rat(1), f) == rising(a + b, m) / Rat(factorial(m)));
    }
    auto one = from_coefficients({Rat(1)}, "1");
    for (const Rat& a : {Rat(0), frac(5, 2)})
      for (int m = 0; m <= 12; ++m) CHECK(phi(m, a, Rat(1), one) == rising(a, m) / Rat(factorial(m)));
  }

  TEST_CASE("the three phi forms and the contour agree") {
    const PrecisionContext ctx{30};
    PrecisionGuard g(ctx);
    for (const auto& f : {exp_function(frac(-1, 2)), mittag_leffler(2, 1), reciprocal_one_plus()})
      for (int m = 0; m <= 10; ++m) {
        const Rat a = frac(1, 3), b = frac(3, 2);
        const Rat c = phi(m, a, b, f, PhiForm::Cauchy);
        CHECK(c == phi(m, a, b, f, PhiForm::DoubleStirling));
        CHECK(c == phi(m, a, b, f, PhiForm::Leibniz));
        CHECK(abs(phi_contour(m, a, b, f, ctx) - Complex(Real(c))) < ten_pow(-30));
      }
  }

  TEST_CASE("phi_m has degree m in alpha with leading coefficient f(0)/m!") {
    for (const auto& f : {exp_function(frac(-1, 2)), mittag_leffler(2, 1), reciprocal_one_plus()})
      for (int m = 0; m <= 15; ++m) {
        // m-th and (m+1)-th forward differences over alpha = 0, 1, ...
        std::vector<Rat> v;
        for (int a = 0; a <= m + 1; ++a) v.push_back(phi(m, Rat(a), Rat(2), f));
        for (int d = 0; d < m; ++d)
          for (size_t i = 0; i + 1 < v.size() - d; ++i) v[i] = v[i + 1] - v[i];
        CHECK(v[0] == f.coeff(0));
        CHECK(v[1] - v[0] == 0);
      }
  }

  TEST_CASE("Gauss form of the exponential example") {
    // m! phi_m(alpha, 1) / (z+alpha)_{m+1} = (b+alpha)_m / (z+alpha)_{m+1} termwise.
    const Rat b = frac(-1, 2), z = Rat(3);
    auto f = exp_function(b);
    for (const Rat& a : {Rat(0), Rat(1), frac(1, 2)})
      for (int m = 0; m <= 15; ++m) {
        const Rat lhs = Rat(factorial(m)) * phi(m, a, Rat(1), f) / rising(z + a, m + 1);
        CHECK(lhs == rising(b + a, m) / rising(z + a, m + 1));
      }
  }

  TEST_CASE("exponential example") {
    const PrecisionContext ctx{30};
    PrecisionGuard g(ctx);
    auto f = exp_function(frac(-1, 2));
    const Complex want(Real(frac(2, 7)));
    // beta = 1 converges algebraically; 200 terms are measured at 1e-8.85.
    auto slow = factorial_series_eval(Complex(3), Rat(0), Rat(1), 200, f, ctx);
    CHECK(log10_abs(abs(slow.eval.value - want)) < -8.5);
    std::vector<Complex> vals;
    for (int a : {0, 1, 2}) {
      auto r = factorial_series_eval(Complex(3), Rat(a), Rat(5), 0, f, ctx);
      CHECK(r.eval.converged);
      CHECK(abs(r.eval.value - want) < ten_pow(-20));
      vals.push_back(r.eval.value);
    }
    CHECK(abs(vals[0] - vals[1]) < ten_pow(-(ctx.digits - 10)));
    CHECK(abs(vals[0] - vals[2]) < ten_pow(-(ctx.digits - 10)));
  }

  TEST_CASE("Mittag-Leffler example") {
    const PrecisionContext ctx{30};
    PrecisionGuard g(ctx);
    auto f = mittag_leffler(2, 1);
    // Laurent reference sum_k k!/(2k)! z^{-k-1}, summed here directly.
    Real ref(0);
    for (int k = 0; k <= 40; ++k) ref += Real(Rat(factorial(k)) / Rat(factorial(2 * k))) / pow(Real(4), k + 1);
    auto laurent = laurent_eval(Complex(4), 20, f, ctx);
    CHECK(abs(laurent.value.re - ref) < ten_pow(-15));
    auto r = factorial_series_eval(Complex(4), Rat(0), Rat(8), 0, f, ctx);
    CHECK(abs(r.eval.value.re - ref) < ten_pow(-15));
  }

  TEST_CASE("Laurent series") {
    const PrecisionContext ctx{30};
    PrecisionGuard g(ctx);
    auto e = laurent_eval(Complex(5), 40, exp_function(Rat(-1)), ctx);
    CHECK(abs(e.value.re - Real(frac(1, 6))) < ten_pow(-12));
    CHECK(laurent_eval(Complex(5), 5, reciprocal_one_plus(), ctx).note != "diverging");
    CHECK(laurent_eval(Complex(5), 7, reciprocal_one_plus(), ctx).note == "diverging");
  }

  TEST_CASE("g and f transforms") {
    auto fe = taylor_coeffs(exp_function(Rat(1)), 20);
    CHECK(f_from_g(g_from_f(fe, Rat(1), 20), Rat(1), 20) == fe);

    // Non-negative f gives g_m >= f_m >= 0.
    for (const Rat& beta : {Rat(1), frac(5, 2)}) {
      auto gp = g_from_f(fe, beta, 20);
      for (int m = 0; m <= 20; ++m) {
        CHECK(fe[m] >= 0);
        CHECK(gp[m] >= fe[m]);
      }
    }

    // Alternating g gives alternating f with |f_m| > |g_m| for m >= 2.
    std::vector<Rat> ga(21);
    for (int m = 0; m <= 20; ++m) ga[m] = frac(m % 2 ? -1 : 1, m + 1);
    auto fa = f_from_g(ga, Rat(1), 20);
    CHECK(fa[1] == ga[1]);
    for (int m = 2; m <= 20; ++m) {
      CHECK((fa[m] > 0) == (m % 2 == 0));
      CHECK(abs(fa[m]) > abs(ga[m]));
    }

    // e^{-t} at beta = 1 maps to g = 1 - u.
    auto fm = taylor_coeffs(exp_function(Rat(-1)), 20);
    auto gm = g_from_f(fm, Rat(1), 20);
    CHECK(gm[0] == 1);
    CHECK(gm[1] == -1);
    for (int m = 2; m <= 20; ++m) CHECK(gm[m] == 0);

    auto fp = fm;
    fp[0] += 7;
    auto gp = g_from_f(fp, Rat(1), 20);
    for (int m = 1; m <= 20; ++m) CHECK(gp[m] == gm[m]);

    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> num(-50, 50), den(1, 40);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Rat> f(26);
      for (auto& c : f) c = frac(num(rng), den(rng));
      const Rat beta = frac(den(rng), den(rng));
      CHECK(f_from_g(g_from_f(f, beta, 25), beta, 25) == f);
      CHECK(g_from_f(f_from_g(f, beta, 25), beta, 25) == f);
    }
  }

  TEST_CASE("resummation of the Taylor series") {
    const PrecisionContext ctx{30};
    PrecisionGuard g(ctx);
    auto e = exp_function(frac(-1, 2));
    CHECK(abs(resum_f(Real(1), Rat(1), 0, e, ctx).value.re - exp(Real(frac(-1, 2)))) < ten_pow(-20));
    CHECK(resum_f(Real(0), Rat(1), 0, e, ctx).value.re == Real(1));
    auto ml = mittag_leffler(2, 1);
    CHECK(abs(resum_f(Real(2), Rat(1), 0, ml, ctx).value.re - cosh(sqrt(Real(2)))) < ten_pow(-12));
  }

  TEST_CASE("mu as a Laplace transform") {
    const PrecisionContext ctx{30};
    PrecisionGuard g(ctx);
    auto f = binet_integrand();
    CHECK(f.coeff(0) == frac(1, 12));
    for (int m = 0; m <= 12; ++m) CHECK(Rat(factorial(m)) * phi(m, Rat(0), Rat(1), f) == c_coefficient(m + 1));
    for (long K : {5, 10, 20}) {
      auto a = factorial_series_eval(Complex(5), Rat(0), Rat(1), K, f, ctx).eval.value;
      CHECK(abs(a - mu_factorial(Complex(5), Rat(0), K, ctx).value()) < ten_pow(-30));
    }
  }

  TEST_CASE("radius heuristic") {
    std::vector<Rat> geo, flat;
    for (int m = 0; m <= 30; ++m) {
      geo.push_back(rat_pow(Rat(2), m));
      flat.push_back(frac(1, m + 1));
    }
    CHECK(radius_check(geo).tripped);
    CHECK(!radius_check(flat).tripped);
  }

  TEST_CASE("preconditions") {
    const PrecisionContext ctx{20};
    PrecisionGuard g(ctx);
    CHECK_THROWS_AS(phi(2, Rat(0), Rat(-1), exp_function(Rat(1))), DomainError);
    CHECK_THROWS_AS(factorial_series_eval(Complex(0), Rat(0), Rat(1), 5, exp_function(Rat(1)), ctx), DomainError);
  }
}
