#include <doctest.h>

#include "binet/binet_poly.hpp"
#include "binet/numerics.hpp"

using namespace binet;

TEST_SUITE("precision_numerics") {
  TEST_CASE("tanh-sinh on a polynomial") {
    const PrecisionContext ctx{30};
    PrecisionGuard g(ctx);
    auto r = tanh_sinh<Real>([](const Real& u) { return u * (u - Real(frac(1, 2))); }, Real(0), Real(1), ctx);
    CHECK(abs(r.value - Real(frac(1, 12))) < ten_pow(-30));
  }

  TEST_CASE("exp-sinh on e^-t") {
    const PrecisionContext ctx{30};
    PrecisionGuard g(ctx);
    auto r = exp_sinh<Real>([](const Real& t) { return exp(-t); }, Real(0), ctx);
    CHECK(abs(r.value - 1) < ten_pow(-30));
  }

  TEST_CASE("Binet integral at z = 1") {
    const PrecisionContext ctx{30};
    PrecisionGuard g(ctx);
    Integrand<Real> f = [](const Real& t) {
      if (t < Real("1e-3")) {
        // Leading Taylor terms of (1/(e^t-1) - 1/t + 1/2)/t.
        return exp(-t) * (Real(frac(1, 12)) - t * t / 720 + t * t * t * t / 30240 - pow(t, 6) / 1209600);
      }
      return exp(-t) / t * (1 / expm1(t) - 1 / t + Real(frac(1, 2)));
    };
    const Real v = quadrature(f, Real(0), Real(0), ctx, true);
    const Real want = 1 - log(2 * const_pi()) / 2;
    CHECK(abs(v - want) < ten_pow(-25));
    CHECK(format(v, 9) == "0.0810614668");
  }

  TEST_CASE("odd integrand over a symmetric interval vanishes") {
    const PrecisionContext ctx{30};
    PrecisionGuard g(ctx);
    auto r = tanh_sinh<Real>([](const Real& x) { return sin(x) * exp(x * x); }, Real(-1), Real(1), ctx);
    CHECK(abs(r.value) < ten_pow(-30));
  }

  TEST_CASE("quadrature is stable under a precision increase") {
    const PrecisionContext lo{30}, hi{50};
    auto f = [](const Real& t) { return log1p(t) / (1 + t * t); };
    Real a, b;
    {
      PrecisionGuard g(lo);
      a = tanh_sinh<Real>(f, Real(0), Real(1), lo).value;
    }
    {
      PrecisionGuard g(hi);
      b = tanh_sinh<Real>(f, Real(0), Real(1), hi).value;
      // Known closed form pi log 2 / 8.
      CHECK(abs(b - const_pi() * const_log2() / 8) < ten_pow(-48));
    }
    PrecisionGuard g(hi);
    CHECK(abs(a - b) < ten_pow(-28));
  }

  TEST_CASE("geometric series with the tail rule") {
    const PrecisionContext ctx{20};
    auto r = sum_series([](long m) { return Complex(ldexp(Real(1), -m)); }, StopRule::tail(1), ctx);
    PrecisionGuard g(ctx);
    CHECK(r.converged);
    CHECK(abs(r.value.re - 1) < ten_pow(-20));
  }

  TEST_CASE("fixed truncation") {
    const PrecisionContext ctx{20};
    auto r = sum_series([](long m) { return Complex(Real(1) / Real(m)); }, StopRule::fixed(3), ctx);
    PrecisionGuard g(ctx);
    CHECK(r.terms_used == 3);
    CHECK(!r.converged);
    CHECK(abs(r.value.re - Real(frac(11, 6))) < ten_pow(-25));
  }

  TEST_CASE("factorial series at z = 10 under the sub-geometric tail rule") {
    const PrecisionContext ctx{20};
    PrecisionGuard g(ctx);
    const Real z(10);
    Real den(1);
    auto r = sum_series(
        [&](long m) {
          den *= z + Real(m - 1);
          return Complex(Real(c_coefficient(static_cast<int>(m))) / den);
        },
        StopRule::tail(1), ctx);
    CHECK(r.converged);
    CHECK(r.terms_used == 271);
    CHECK(format(r.value.re, 15) == "0.00833056343336287");
  }

  TEST_CASE("non-finite term stops the sum") {
    const PrecisionContext ctx{20};
    auto r = sum_series(
        [](long m) { return m < 5 ? Complex(Real(1)) : Complex(Real(1) / Real(0)); }, StopRule::tail(1), ctx);
    CHECK(!r.converged);
    CHECK(r.note == "non-finite term");
  }

  TEST_CASE("real roots") {
    const PrecisionContext ctx{30};
    PrecisionGuard g(ctx);
    auto r = real_roots({Rat(-1), Rat(0), Rat(1)}, ctx);
    REQUIRE(r.size() == 2);
    CHECK(abs(r[0] + 1) < ten_pow(-30));
    CHECK(abs(r[1] - 1) < ten_pow(-30));

    auto r2 = real_roots({Rat(0), Rat(1)}, ctx);
    REQUIRE(r2.size() == 1);
    CHECK(r2[0].is_zero());

    // b_3(alpha) = alpha^2/12 + alpha/12 - 1/360 against the quadratic formula.
    const auto& b3 = p_coefficients(3).p;
    auto r3 = real_roots(b3, ctx);
    REQUIRE(r3.size() == 2);
    const Real A(b3[2]), B(b3[1]), C(b3[0]);
    const Real disc = sqrt(B * B - 4 * A * C);
    CHECK(abs(r3[0] - (-B - disc) / (2 * A)) < ten_pow(-28));
    CHECK(abs(r3[1] - (-B + disc) / (2 * A)) < ten_pow(-28));
    CHECK(abs(r3[0] * r3[1] + Real(frac(1, 30))) < ten_pow(-28));
    CHECK(std::abs(r3[0].to_double() + 1.0323) < 1e-4);
    CHECK(std::abs(r3[1].to_double() - 0.0323) < 1e-4);
  }

  TEST_CASE("certified roots leave small residuals") {
    const PrecisionContext ctx{40};
    PrecisionGuard g(ctx);
    for (int m : {10, 25, 40}) {
      const auto& p = p_coefficients(m).p;
      auto rs = real_roots_certified(p, ctx);
      CHECK(rs.sturm_total == m - 1);
      REQUIRE(static_cast<int>(rs.roots.size()) == m - 1);
      Real scale(0);
      for (const Rat& c : p) scale = max(scale, abs(Real(c)));
      for (const Real& x : rs.roots) {
        // Residual relative to the size of the terms at x.
        Real terms(0), xp(1);
        for (const Rat& c : p) {
          terms += abs(Real(c)) * xp;
          xp *= abs(x);
        }
        CHECK(abs(horner(p, x)) <= ten_pow(-ctx.digits + 3) * terms);
      }
    }
    CHECK(sturm_count({Rat(-1), Rat(0), Rat(1)}, Rat(-2), Rat(2)) == 2);
    CHECK(sturm_count({Rat(1), Rat(0), Rat(1)}, Rat(-2), Rat(2)) == 0);
  }
}
