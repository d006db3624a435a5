#include <doctest.h>

#include "binet/binet_poly.hpp"
#include "binet/compare.hpp"
#include "binet/mu.hpp"

using namespace binet;

TEST_SUITE("compare_optimize") {
  TEST_CASE("alpha errors at K*(10)") {
    const PrecisionContext ctx{60};
    PrecisionGuard g(ctx);
    const long K = k_star(Real(10));
    auto e0 = error_alpha(Real(10), Real(0), K, ctx);
    auto e1 = error_alpha(Real(10), Real(1), K, ctx);
    CHECK(e0.log10_error.is_finite());
    CHECK(e0.log10_error > Real(-30));
    CHECK(e1.log10_error > e0.log10_error);
    CHECK(e0.signed_error.sign() * e1.signed_error.sign() < 0);
    auto empty = error_alpha(Real(10), Real(0), 0, ctx);
    CHECK(abs(empty.error - abs(reference_mu(Real(10), ctx))) < ten_pow(-70));
  }

  TEST_CASE("Stirling errors") {
    const PrecisionContext ctx{60};
    PrecisionGuard g(ctx);
    const long K = k_star(Real(10));
    const Real best = error_stirling(Real(10), K, ctx).log10_error;
    CHECK(abs(best - Real("-28.5834")) < Real("0.01"));
    CHECK(error_stirling(Real(10), K + 10, ctx).log10_error > best);
    CHECK(error_stirling(Real(8), k_star(Real(8)), ctx).log10_error <
          error_stirling(Real(4), k_star(Real(4)), ctx).log10_error);
  }

  TEST_CASE("Stirling error is unimodal in K up to 2 K*") {
    const PrecisionContext ctx{80};
    PrecisionGuard g(ctx);
    for (int zi : {4, 8, 10}) {
      const Real z(zi), ref = reference_mu(z, ctx);
      const long ks = k_star(z);
      std::vector<Real> e;
      for (long K = 1; K <= 2 * ks; ++K) e.push_back(error_stirling(ref, z, K, ctx).log10_error);
      size_t i = 0;
      while (i + 1 < e.size() && e[i + 1] < e[i]) ++i;
      CAPTURE(zi);
      CHECK(std::labs(static_cast<long>(i) + 1 - ks) <= 1);
      for (; i + 1 < e.size(); ++i) CHECK(e[i + 1] > e[i]);
    }
  }

  TEST_CASE("bracketing signs") {
    const PrecisionContext ctx{40};
    PrecisionGuard g(ctx);
    for (int zi : {2, 5, 10}) {
      const Real z(zi), ref = reference_mu(z, ctx);
      for (long K : {3, 5, 10}) {
        auto a0 = error_alpha(ref, z, Real(0), K, ctx), a1 = error_alpha(ref, z, Real(1), K, ctx);
        CHECK(a0.signed_error < Real(0));
        CHECK(a1.signed_error > Real(0));
      }
    }
  }

  TEST_CASE("reference precision") {
    const PrecisionContext ctx{40};
    Real r;
    {
      PrecisionGuard g(ctx);
      r = reference_mu(Real(3), ctx);
    }
    CHECK(r.precision() >= digits_to_bits(ctx.digits + 15));
  }

  TEST_CASE("optimized alpha at z = 10") {
    const PrecisionContext ctx{60};
    PrecisionGuard g(ctx);
    const long K = k_star(Real(10));
    auto r = optimize_alpha(Real(10), K, Real("0.09"), Real("0.10"), ctx);
    CHECK(!r.flat);
    CHECK(r.alpha_star >= Real("0.0949093943160158"));
    CHECK(r.alpha_star <= Real("0.0949093943160159"));
    CHECK(r.log10_error < Real(-30));
    CHECK(r.log10_error < error_stirling(Real(10), K, ctx).log10_error);
    // Close to, but not on, the largest zero of b_{K+1}.
    CHECK(abs(r.alpha_star - zeros(static_cast<int>(K + 1), ctx).zeros.front()) < ten_pow(-3));
  }

  TEST_CASE("fig2 minima sit near the zeros of b_K") {
    const PrecisionContext ctx{40};
    PrecisionGuard g(ctx);
    auto rows = sweep_fig2({Real(4)}, Real(-2), Real(2), 801, ctx);
    const long K = k_star(Real(4));
    auto zs = zeros(static_cast<int>(K), ctx).zeros;
    auto mins = local_minima(rows);
    for (int j = 0; j < 3; ++j) {
      double best = 1e9;
      for (size_t i : mins) best = std::min(best, std::abs(rows[i].alpha.to_double() - zs[j].to_double()));
      CHECK(best < 0.05);
    }
    // Sharp dip near 0.09, well below alpha = 0 (row 400).
    bool dip = false;
    for (size_t i : mins)
      if (std::abs(rows[i].alpha.to_double() - 0.09) < 0.02 && rows[i].log_error < rows[400].log_error - 1) dip = true;
    CHECK(dip);
  }

  TEST_CASE("alpha scan is continuous away from the dips") {
    const PrecisionContext ctx{40};
    PrecisionGuard g(ctx);
    const Real z(4), ref = reference_mu(z, ctx);
    const long K = k_star(z);
    Real worst(0), scale(0);
    std::vector<Real> e;
    for (int i = 0; i <= 400; ++i) {
      const Real a = Real(-2) + Real(i) / 100;
      e.push_back(error_alpha(ref, z, a, K, ctx).signed_error);
      scale = max(scale, abs(e.back()));
    }
    for (size_t i = 1; i < e.size(); ++i) worst = max(worst, abs(e[i] - e[i - 1]));
    CHECK(worst < scale / 10);
  }

  TEST_CASE("fig1 properties") {
    const PrecisionContext ctx{60};
    PrecisionGuard g(ctx);
    std::vector<Real> zs;
    for (int z = 2; z <= 16; z += 2) zs.emplace_back(z);
    auto rows = sweep_fig1(zs, ctx);
    std::vector<double> x, y;
    for (const auto& r : rows) {
      REQUIRE(r.ok);
      CHECK(r.log_stirling < r.log_alpha0);
      CHECK(r.log_stirling < r.log_alpha1);
      x.push_back(r.z.to_double());
      y.push_back(r.log_stirling.to_double());
    }
    CHECK(linear_fit(x, y).r2 > 0.99);
    CHECK(linear_fit(x, y).slope < 0);
  }

  TEST_CASE("serial and parallel sweeps agree exactly") {
    const PrecisionContext ctx{40};
    PrecisionGuard g(ctx);
    std::vector<Real> zs{Real(2), Real(5), Real(9)};
    auto s = sweep_fig1(zs, ctx, Exec::Serial), p = sweep_fig1(zs, ctx, Exec::Parallel);
    REQUIRE(s.size() == p.size());
    for (size_t i = 0; i < s.size(); ++i) {
      CHECK(s[i].log_stirling == p[i].log_stirling);
      CHECK(s[i].log_alpha0 == p[i].log_alpha0);
      CHECK(s[i].log_alpha1 == p[i].log_alpha1);
    }
    auto s2 = sweep_fig2({Real(4)}, Real(-1), Real(1), 101, ctx, Exec::Serial);
    auto p2 = sweep_fig2({Real(4)}, Real(-1), Real(1), 101, ctx, Exec::Parallel);
    REQUIRE(s2.size() == p2.size());
    for (size_t i = 0; i < s2.size(); ++i) CHECK(s2[i].log_error == p2[i].log_error);
    auto a = optimize_alpha(Real(6), k_star(Real(6)), Real(-1), Real(1), ctx.with_digits(45), 300, Exec::Serial);
    auto b = optimize_alpha(Real(6), k_star(Real(6)), Real(-1), Real(1), ctx.with_digits(45), 300, Exec::Parallel);
    CHECK(a.alpha_star == b.alpha_star);
  }

  TEST_CASE("linear fit") {
    auto f = linear_fit({1, 2, 3, 4}, {3, 5, 7, 9});
    CHECK(f.slope == doctest::Approx(2));
    CHECK(f.intercept == doctest::Approx(1));
    CHECK(f.r2 == doctest::Approx(1));
  }
}
