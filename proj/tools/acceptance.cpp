#include "acceptance.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "binet/binet_poly.hpp"
#include "binet/compare.hpp"
#include "binet/gamma.hpp"
#include "binet/laplace.hpp"
#include "binet/mu.hpp"
#include "binet/stieltjes.hpp"

namespace binet::acceptance {

namespace {

using Clock = std::chrono::steady_clock;

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

struct Check {
  bool ok = true;
  std::ostringstream msg;
  void fail(const std::string& what) {
    if (ok) msg << what;
    else if (msg.tellp() < 400) msg << "; " << what;
    ok = false;
  }
};

Outcome c1() {
  Check ck;
  const char* c_list[] = {"1/12", "0", "-1/360", "-1/120", "-5/168", "-11/84", "-3499/5040", "-1039/240", "-369689/11880"};
  const char* b_list[] = {"1/12", "1/12", "59/360", "29/60", "533/280", "1577/168", "280361/5040", "69311/180"};
  for (int m = 1; m <= 9; ++m)
    if (c_coefficient(m) != parse_rational(c_list[m - 1]))
      ck.fail("c_" + std::to_string(m) + " = " + to_string(c_coefficient(m)));
  for (int m = 1; m <= 8; ++m)
    if (beta_coefficient(m) != parse_rational(b_list[m - 1]))
      ck.fail("beta_" + std::to_string(m) + " = " + to_string(beta_coefficient(m)));
  if (ck.ok) ck.msg << "c_1..c_9 and beta_1..beta_8 exact";
  return {1, ck.ok, ck.msg.str()};
}

Outcome c2() {
  Check ck;
  const Rat alphas[] = {Rat(0), Rat(1), frac(1, 2), frac(-1, 3), Rat(2), Rat(10)};
  int compared = 0;
  for (const Rat& a : alphas) {
    for (int m = 1; m <= 40; ++m) {
      Rat h = b_eval_exact(m, a), t = b_theorem_sum(m, a), c = b_c_convolution(m, a);
      ++compared;
      if (h != t || h != c) ck.fail("b_" + std::to_string(m) + "(" + to_string(a) + ") formulas differ");
      if (m <= 25 && bernoulli_identity_check(m, a) != 0)
        ck.fail("Bernoulli identity residual nonzero at m=" + std::to_string(m) + ", alpha=" + to_string(a));
    }
  }
  if (ck.ok) ck.msg << compared << " (m, alpha) pairs agree exactly; Bernoulli residuals 0 for m<=25";
  return {2, ck.ok, ck.msg.str()};
}

Outcome c3() {
  Check ck;
  const PrecisionContext ctx{40};
  PrecisionGuard g(ctx);
  const Real tol = ten_pow(-25);
  for (int m = 2; m <= 60; ++m) {
    ZeroSet zs = zeros(m, ctx);
    if (static_cast<int>(zs.zeros.size()) != m - 1 || zs.sturm_count != m - 1)
      ck.fail("m=" + std::to_string(m) + ": " + std::to_string(zs.zeros.size()) + " zeros, Sturm count " +
              std::to_string(zs.sturm_count));
    Real s(0);
    for (const Real& x : zs.zeros) s += x;
    if (abs(s + Real(binomial(m - 1, 2))) > tol) ck.fail("sum of zeros off at m=" + std::to_string(m));
  }
  ZeroSet z72 = zeros(72, ctx);
  const double x1 = z72.zeros.front().to_double();
  if (std::fabs(x1 - 0.0963016) > 1e-6) ck.fail("xi_1(72) = " + fmt("%.9f", x1));
  for (int m : {8, 20, 40})
    if (middle_zero_remainder(m) != 0) ck.fail("middle zero does not divide b_" + std::to_string(m));
  if (ck.ok) ck.msg << "m<=60 certified; xi_1(72) = " << fmt("%.9f", x1) << "; middle zeros exact";
  return {3, ck.ok, ck.msg.str()};
}

Outcome c4() {
  Check ck;
  const PrecisionContext ctx{45};
  PrecisionGuard g(ctx);
  const Real tol = ten_pow(-30);
  double worst = -1e9;
  for (int zi : {1, 2, 5, 10}) {
    const Complex z(zi);
    std::vector<std::pair<std::string, MuResult>> r;
    r.emplace_back("oracle", mu_oracle(z, ctx));
    r.emplace_back("companion", mu_companion(z, 0, ctx));
    r.emplace_back("factorial", mu_factorial(z, Rat(0), 0, ctx));
    r.emplace_back("polygamma", mu_polygamma_series(z, 0, ctx));
    for (auto& [name, res] : r)
      if (!res.valid) ck.fail(name + " invalid at z=" + std::to_string(zi) + ": " + res.reason);
    for (size_t i = 0; i < r.size(); ++i)
      for (size_t j = i + 1; j < r.size(); ++j) {
        Real d = abs(r[i].second.value() - r[j].second.value());
        worst = std::max(worst, log10_abs(d));
        if (d > tol) ck.fail(r[i].first + " vs " + r[j].first + " at z=" + std::to_string(zi));
      }
  }
  if (ck.ok) ck.msg << "worst pairwise log10 difference " << fmt("%.1f", worst);
  return {4, ck.ok, ck.msg.str()};
}

Outcome c5() {
  Check ck;
  const PrecisionContext ctx{40};
  PrecisionGuard g(ctx);
  const Real tol = ten_pow(-(ctx.digits - 10));
  double worst = -1e9;
  auto need = [&](const std::optional<Real>& v, const std::string& what) {
    if (!v) {
      ck.fail(what + " skipped");
      return;
    }
    worst = std::max(worst, log10_abs(*v));
    if (*v > tol) ck.fail(what + " residual " + fmt("%.1f", log10_abs(*v)));
  };
  struct Pt {
    Complex z;
    const char* name;
    bool refl, dup, mul;
  };
  const Pt pts[] = {{Complex(Real("0.3")), "0.3", true, false, false},
                    {Complex(Real("0.7"), Real(2)), "0.7+2i", true, false, false},
                    {Complex(Real("1.3")), "1.3", false, true, false},
                    {Complex(Real("0.9")), "0.9", false, false, true}};
  for (const Pt& p : pts) {
    IdentityResiduals r = identity_residuals(p.z, ctx, 3);
    need(r.difference, std::string("difference at ") + p.name);
    if (p.refl) need(r.reflection, std::string("reflection at ") + p.name);
    if (p.dup) need(r.duplication, std::string("duplication at ") + p.name);
    if (p.mul) need(r.multiplication, std::string("multiplication n=3 at ") + p.name);
  }
  need(integral_mean_at_zero(ctx), "integral mean");
  if (ck.ok) ck.msg << "worst log10 residual " << fmt("%.1f", worst) << " (tolerance -30)";
  return {5, ck.ok, ck.msg.str()};
}

Outcome c6() {
  Check ck;
  const PrecisionContext ctx{40};
  PrecisionGuard g(ctx.plus(15));
  int cases = 0;
  for (int zi : {1, 2, 4, 8}) {
    const Real z(zi), ref = reference_mu(z, ctx);
    for (long K : {5, 10, 20}) {
      Real lo = factorial_partial(z, Real(1), K), hi = factorial_partial(z, Real(0), K);
      ++cases;
      if (!(lo < ref && ref < hi))
        ck.fail("z=" + std::to_string(zi) + ", K=" + std::to_string(K) + " not bracketed");
    }
  }
  if (ck.ok) ck.msg << cases << " cases strictly bracketed";
  return {6, ck.ok, ck.msg.str()};
}

double stirling_log_error() {
  const PrecisionContext ctx{60};
  PrecisionGuard g(ctx);
  return error_stirling(Real(10), k_star(Real(10)), ctx).log10_error.to_double();
}

Outcome c7() {
  const double e = stirling_log_error();
  const bool ok = std::fabs(e - (-28.5834)) <= 0.01;
  return {7, ok, "K*(10) = " + std::to_string(k_star(Real(10))) + ", log10 error " + fmt("%.4f", e)};
}

Outcome c8() {
  Check ck;
  const PrecisionContext ctx{60};
  PrecisionGuard g(ctx);
  const long K = k_star(Real(10));
  AlphaSearchResult r = optimize_alpha(Real(10), K, Real("0.09"), Real("0.10"), ctx);
  const double le = r.log10_error.to_double(), st = stirling_log_error();
  if (!(r.alpha_star >= Real("0.0949093943160158") && r.alpha_star <= Real("0.0949093943160159")))
    ck.fail("alpha* = " + format(r.alpha_star, 20) + " outside the window");
  if (!(le < -30)) ck.fail("log10 error " + fmt("%.2f", le) + " not below -30");
  if (!(le < st)) ck.fail("does not beat Stirling");
  ck.msg << (ck.ok ? "" : "; ") << "alpha* = " << format(r.alpha_star, 20) << ", log10 error " << fmt("%.2f", le)
         << " vs Stirling " << fmt("%.4f", st);
  return {8, ck.ok, ck.msg.str()};
}

Outcome c9() {
  Check ck;
  const PrecisionContext ctx{30};
  PrecisionGuard g(ctx);
  const Real e10 = abs(harmonic(10, 5, ctx).value.re - Real(harmonic_exact(10)));
  const Real e100 = abs(harmonic(100, 5, ctx).value.re - Real(harmonic_exact(100)));
  if (!(e10 < ten_pow(-6))) ck.fail("H_10 error " + fmt("%.2f", log10_abs(e10)));
  if (!(e100 < ten_pow(-11))) ck.fail("H_100 error " + fmt("%.2f", log10_abs(e100)));
  ck.msg << (ck.ok ? "" : "; ") << "log10 errors H_10 " << fmt("%.2f", log10_abs(e10)) << ", H_100 "
         << fmt("%.2f", log10_abs(e100));
  return {9, ck.ok, ck.msg.str()};
}

const char* const kStieltjesTable[22] = {
    "1.0",
    "0.5772156649015328606",
    "0.07281584548367672486",
    "-0.004845181596436159243",
    "-0.000342305736717224311",
    "0.00009689041939447083573",
    "-6.611031810842189181e-6",
    "-3.31624090875277236e-7",
    "1.0462094584479187422e-7",
    "-8.733218100273797361e-9",
    "9.478277782762358956e-11",
    "5.658421927608707966e-11",
    "-6.768689863513696656e-12",
    "3.492115936672031855e-13",
    "4.41042474175775338e-15",
    "-2.3997862217709991766e-15",
    "2.167731220072682855e-16",
    "-9.54446607636696516e-18",
    "-7.387676660538636498e-20",
    "4.800850782488065211e-20",
    "-4.139956737713305639e-21",
    "1.19168201593979951e-22",
};

Outcome c10() {
  Check ck;
  const PrecisionContext ctx{30};
  PrecisionGuard g(ctx);
  auto table = g_table(21, ctx);
  int matched = 0;
  for (int m = 0; m <= 21; ++m) {
    const Real want(kStieltjesTable[m]);
    const Real rel = abs(table->g[m] - want) / abs(want);
    if (rel < ten_pow(-15)) ++matched;
    else ck.fail("g_" + std::to_string(m) + " = " + format(table->g[m], 20) + " vs table " + kStieltjesTable[m]);
  }
  ck.msg << (ck.ok ? "" : "; ") << matched << "/22 entries to >= 15 digits";
  return {10, ck.ok, ck.msg.str()};
}

Outcome c11() {
  Check ck;
  const PrecisionContext ctx{30};
  PrecisionGuard g(ctx);
  std::ostringstream info;

  // (a) 1/(z-b) at z = 3, b = -1/2, beta = 5.
  auto e = exp_function(frac(-1, 2));
  const Complex want_a(Real(frac(2, 7)));
  for (int a : {0, 1, 2}) {
    LaplaceResult r = factorial_series_eval(Complex(3), Rat(a), Rat(5), 0, e, ctx);
    const double le = log10_abs(abs(r.eval.value - want_a));
    if (!(le < -20)) ck.fail("(a) alpha=" + std::to_string(a) + " log10 error " + fmt("%.1f", le));
    info << "(a) alpha=" << a << ": " << fmt("%.1f", le) << " ";
  }

  // (b) cosh sqrt t at z = 4 against its Laurent series.
  auto ml = mittag_leffler(2, 1);
  SeriesEvaluation laurent = laurent_eval(Complex(4), 40, ml, ctx);
  LaplaceResult rb = factorial_series_eval(Complex(4), Rat(0), Rat(8), 0, ml, ctx);
  const double lb = log10_abs(abs(rb.eval.value - laurent.value));
  if (!(lb < -12)) ck.fail("(b) log10 difference " + fmt("%.1f", lb));
  info << "(b) " << fmt("%.1f", lb) << " ";

  // (c) resummation of e^{-t/2} at t = 1.
  SeriesEvaluation rc = resum_f(Real(1), Rat(1), 0, e, ctx);
  const double lc = log10_abs(abs(rc.value - Complex(exp(Real(frac(-1, 2))))));
  if (!(lc < -18)) ck.fail("(c) log10 error " + fmt("%.1f", lc));
  info << "(c) " << fmt("%.1f", lc) << " ";

  // (d) exact g <-> f round trips.
  bool rt = true;
  std::vector<std::vector<Rat>> inputs;
  inputs.push_back(taylor_coeffs(exp_function(Rat(1)), 25));
  inputs.push_back(taylor_coeffs(reciprocal_one_plus(), 25));
  std::vector<Rat> mixed;
  for (int k = 0; k <= 25; ++k) mixed.push_back(frac((k * 7919) % 23 - 11, k * k + 3));
  inputs.push_back(mixed);
  for (const Rat& beta : {Rat(1), frac(5, 2), frac(1, 3)})
    for (const auto& f : inputs) {
      if (f_from_g(g_from_f(f, beta, 25), beta, 25) != f) rt = false;
      if (g_from_f(f_from_g(f, beta, 25), beta, 25) != f) rt = false;
    }
  if (!rt) ck.fail("(d) round trip not exact");
  info << "(d) " << (rt ? "exact" : "inexact");
  if (ck.ok) ck.msg << info.str();
  return {11, ck.ok, ck.msg.str()};
}

Outcome c12() {
  GrowthReport r = growth_checks(200, 500);
  std::string d = "c_m checks to m=200, partial sums to M=500";
  if (!r.ok) {
    d = std::to_string(r.failures.size()) + " failures";
    if (!r.failures.empty()) d += ", first: " + r.failures.front();
  }
  return {12, r.ok, d};
}

Outcome c13() {
  Check ck;
  const PrecisionContext ctx{60};
  PrecisionGuard g(ctx);
  std::vector<Real> zs;
  for (int z = 2; z <= 16; ++z) zs.emplace_back(z);
  auto rows = sweep_fig1(zs, ctx);
  std::vector<double> x, ys, y0, y1;
  for (const Fig1Row& r : rows) {
    if (!r.ok) {
      ck.fail("fig1 row failed: " + r.note);
      continue;
    }
    if (!(r.log_stirling < r.log_alpha0 && r.log_stirling < r.log_alpha1))
      ck.fail("Stirling not best at z=" + format(r.z, 3));
    x.push_back(r.z.to_double());
    ys.push_back(r.log_stirling.to_double());
    y0.push_back(r.log_alpha0.to_double());
    y1.push_back(r.log_alpha1.to_double());
  }
  const double r2s = linear_fit(x, ys).r2, r20 = linear_fit(x, y0).r2, r21 = linear_fit(x, y1).r2;
  if (!(r2s > 0.99 && r20 > 0.99 && r21 > 0.99)) ck.fail("fit R^2 below 0.99");

  auto f2 = sweep_fig2({Real(4)}, Real(-2), Real(2), 801, ctx);
  const long K = k_star(Real(4));
  std::vector<double> mins;
  for (size_t i : local_minima(f2)) mins.push_back(f2[i].alpha.to_double());
  ZeroSet zz = zeros(static_cast<int>(K), ctx);
  int near = 0;
  double worst = 0;
  for (size_t j = 0; j < 3 && j < zz.zeros.size(); ++j) {
    const double xi = zz.zeros[j].to_double();
    if (xi < -2 || xi > 2) continue;
    double best = 1e9;
    for (double a : mins) best = std::min(best, std::fabs(a - xi));
    worst = std::max(worst, best);
    if (best <= 0.05) ++near;
    else ck.fail("no fig2 minimum within 0.05 of xi_" + std::to_string(j + 1) + " = " + fmt("%.5f", xi));
  }
  if (near < 3) ck.fail("only " + std::to_string(near) + " of 3 zeros matched");
  ck.msg << (ck.ok ? "" : "; ") << "R^2 " << fmt("%.5f", r2s) << "/" << fmt("%.5f", r20) << "/" << fmt("%.5f", r21)
         << ", fig2 minima within " << fmt("%.4f", worst) << " of the zeros of b_" << K;
  return {13, ck.ok, ck.msg.str()};
}

}  // namespace

// Runtime budgets in seconds (0: none).
const double kLimit[13] = {1, 30, 120, 120, 0, 0, 30, 600, 0, 60, 0, 0, 0};

std::string line(const Outcome& o) {
  char head[64];
  std::snprintf(head, sizeof head, "criterion %2d %s (%.2f s) ", o.id, o.pass ? "PASS" : "FAIL", o.seconds);
  return head + o.detail;
}

std::vector<Outcome> run(int only, const std::function<void(const Outcome&)>& report) {
  using Fn = Outcome (*)();
  const Fn all[] = {c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11, c12, c13};
  std::vector<Outcome> out;
  for (int i = 1; i <= 13; ++i) {
    if (only && only != i) continue;
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = all[i - 1]();
    } catch (const std::exception& e) {
      o = {i, false, std::string("exception: ") + e.what()};
    }
    o.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    if (kLimit[i - 1] > 0 && o.seconds > kLimit[i - 1]) {
      o.pass = false;
      o.detail += "; over the " + fmt("%.0f", kLimit[i - 1]) + " s budget";
    }
    out.push_back(o);
    if (report) report(o);
  }
  return out;
}

}  // namespace binet::acceptance
