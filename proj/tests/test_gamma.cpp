#include <doctest.h>

#include "binet/binet_poly.hpp"
#include "binet/gamma.hpp"
#include "binet/stieltjes.hpp"

using namespace binet;

TEST_SUITE("gamma_family") {
  TEST_CASE("digamma factorial series") {
    const PrecisionContext ctx{25};
    PrecisionGuard g(ctx);
    const Real gamma = euler_gamma(ctx);
    CHECK(abs(digamma_factorial(Complex(1), 0, ctx).value.re + gamma) < ten_pow(-23));
    const Real psi10 = Real(harmonic_exact(9)) - gamma;
    CHECK(abs(digamma_factorial(Complex(10), 5, ctx).value.re - psi10) < ten_pow(-6));
    const Real psi3 = Real(frac(3, 2)) - gamma;
    CHECK(digamma_factorial(Complex(3), 4, ctx).value.re >= psi3);
  }

  TEST_CASE("truncations are upper bounds") {
    const PrecisionContext ctx{30};
    PrecisionGuard g(ctx);
    for (int z : {1, 2, 5}) {
      const Real exact = Real(harmonic_exact(z - 1)) - euler_gamma(ctx);
      for (long K : {3, 5, 8}) CHECK(digamma_factorial(Complex(z), K, ctx).value.re > exact);
    }
  }

  TEST_CASE("digamma recurrence") {
    const PrecisionContext ctx{30};
    PrecisionGuard g(ctx);
    for (const char* zs : {"0.5", "1.25", "2", "3.75", "7"}) {
      const Real z(zs);
      const Real d = digamma_factorial(Complex(z + 1), 0, ctx).value.re - digamma_factorial(Complex(z), 0, ctx).value.re;
      CHECK(abs(d - 1 / z) < ten_pow(-(ctx.digits - 8)));
    }
  }

  TEST_CASE("digamma asymptotic series") {
    const PrecisionContext ctx{30};
    PrecisionGuard g(ctx);
    const Real z(10);
    const Real want = log(z) - Real(frac(1, 20)) - Real(frac(1, 1200)) + Real(frac(1, 1200000));
    CHECK(abs(digamma_asymptotic(Complex(z), 2, ctx).value.re - want) < ten_pow(-29));
    const Real f = digamma_factorial(Complex(z), 0, ctx).value.re;
    CHECK(abs(digamma_asymptotic(Complex(z), 3, ctx).value.re - f) < ten_pow(-10));
    // Terms at z = 2 shrink up to K near pi z and grow after it.
    auto term = [&](long K) {
      return abs(digamma_asymptotic(Complex(2), K, ctx).value.re - digamma_asymptotic(Complex(2), K - 1, ctx).value.re);
    };
    CHECK(term(16) > term(14));
    CHECK(term(20) > term(16));
    CHECK(term(6) < term(3));
    CHECK(term(12) > term(8));
  }

  TEST_CASE("harmonic numbers") {
    const PrecisionContext ctx{30};
    PrecisionGuard g(ctx);
    CHECK(harmonic_exact(10) == frac(7381, 2520));
    CHECK(abs(harmonic(10, 5, ctx).value.re - Real(frac(7381, 2520))) < ten_pow(-6));
    CHECK(abs(harmonic(100, 5, ctx).value.re - Real(harmonic_exact(100))) < ten_pow(-11));
    // n = 1 converges slowly; K = 8 is measured at 6e-3.
    const Real e1 = abs(harmonic(1, 8, ctx).value.re - 1);
    CHECK(e1 < ten_pow(-2));
    CHECK(abs(harmonic(1, 200, ctx).value.re - 1) < e1);
  }

  TEST_CASE("polygamma") {
    {
      const PrecisionContext ctx{25};
      PrecisionGuard g(ctx);
      const Real pi = const_pi();
      CHECK(abs(polygamma_reference(1, Complex(1), ctx).value.re - pi * pi / 6) < ten_pow(-24));
      const Real r = polygamma_reference(2, Complex(3), ctx).value.re;
      CHECK(abs(polygamma_factorial(2, Complex(3), 0, ctx).value.re - r) < ten_pow(-10));
      // psi''(3) = -2 (zeta(3) - 1 - 1/8).
      CHECK(abs(r + 2 * (zeta_int(3, ctx) - Real(frac(9, 8)))) < ten_pow(-23));
    }
    const PrecisionContext ctx{30};
    PrecisionGuard g(ctx);
    const Real ref = polygamma_reference(1, Complex(10), ctx).value.re;
    const Real e10 = abs(polygamma_factorial(1, Complex(10), 10, ctx).value.re - ref);
    const Real e40 = abs(polygamma_factorial(1, Complex(10), 40, ctx).value.re - ref);
    CHECK(e10 < ten_pow(-7));
    CHECK(e40 < ten_pow(-12));
    CHECK(abs(polygamma_factorial(1, Complex(10), 0, ctx).value.re - ref) < ten_pow(-28));
  }

  TEST_CASE("polygamma error grows with the order") {
    const PrecisionContext ctx{30};
    PrecisionGuard g(ctx);
    auto err = [&](int n) {
      return abs(polygamma_factorial(n, Complex(5), 8, ctx).value.re - polygamma_reference(n, Complex(5), ctx).value.re);
    };
    CHECK(err(3) >= err(1));
  }

  TEST_CASE("alpha derivative of the coefficients gives -mu'(z)") {
    // mu(z) = sum b_m(a)/(z+a)_m for every a, so at a = 0 the alpha derivative of the numerators
    // balances the z derivative of the denominators.
    const PrecisionContext ctx{40};
    PrecisionGuard g(ctx);
    const Real z(5);
    const int K = 200;
    const Rat h = frac(1, Int("1000000000000"));
    auto G = [&](const Rat& a) {
      auto b = b_sequence(a, K);
      Real s(0), den(1);
      for (int m = 1; m <= K; ++m) {
        den *= z + Real(m - 1);
        s += Real(b[m]) / den;
      }
      return s;
    };
    const Real dG = (G(h) - G(-h)) / (2 * Real(h));
    const Real psi = Real(harmonic_exact(4)) - euler_gamma(ctx);
    const Real mu_prime = psi - log(z) + 1 / (2 * z);
    CHECK(abs(dG + mu_prime) < ten_pow(-8));
  }

  TEST_CASE("p columns") {
    const auto& c1 = p_column(1, 20);
    for (int m = 2; m <= 20; ++m) CHECK(c1[m] == p_coefficients(m).p[1]);
    CHECK(c1[0] == 0);
    CHECK(c1[1] == 0);
  }
}
