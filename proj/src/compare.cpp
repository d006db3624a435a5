#include "binet/compare.hpp"

#include <algorithm>
#include <cmath>

#include "binet/binet_poly.hpp"
#include "binet/mu.hpp"

namespace binet {

namespace {

PrecisionContext ref_ctx(const PrecisionContext& ctx) { return ctx.plus(15); }

Real safe_log10(const Real& e) {
  if (e.is_zero()) return Real(-static_cast<long>(bits_to_digits(working_bits())));
  return log10(e);
}

ErrorPoint make_point(const Real& z, long K, const Real& mu_ref, const Real& partial, std::string method) {
  ErrorPoint p;
  p.z = z;
  p.K = K;
  p.signed_error = mu_ref - partial;
  p.error = abs(p.signed_error);
  p.log10_error = safe_log10(p.error);
  p.method = std::move(method);
  return p;
}

}  // namespace

Real reference_mu(const Real& z, const PrecisionContext& ctx) {
  PrecisionContext r = ref_ctx(ctx);
  PrecisionGuard g(r);
  return mu_reference(Complex(z), r).re;
}

Real factorial_partial(const Real& z, const Real& alpha, long K) {
  Real sum(0), denom(1);
  const Real za = z + alpha;
  for (long m = 1; m <= K; ++m) {
    denom *= za + Real(m - 1);
    sum += p_coefficients(static_cast<int>(m))(alpha) / denom;
  }
  return sum;
}

Real stirling_partial(const Real& z, long K) {
  Real sum(0);
  const Real w = 1 / z;
  const Real w2 = w * w;
  Real pw = w;
  for (long m = 1; m <= K; ++m) {
    sum += pw * Real(bernoulli_number(2 * m) / Rat((2 * m - 1) * (2 * m)));
    pw *= w2;
  }
  return sum;
}

ErrorPoint error_alpha(const Real& mu_ref, const Real& z, const Real& alpha, long K, const PrecisionContext& ctx) {
  if (!(z > Real(0))) throw DomainError("error_alpha: needs z > 0");
  if (!(alpha > -z)) throw DomainError("error_alpha: needs alpha > -z");
  PrecisionGuard g(ref_ctx(ctx));
  ErrorPoint p = make_point(z, K, mu_ref, factorial_partial(z, alpha, K), "factorial");
  p.alpha = alpha;
  return p;
}

ErrorPoint error_alpha(const Real& z, const Real& alpha, long K, const PrecisionContext& ctx) {
  return error_alpha(reference_mu(z, ctx), z, alpha, K, ctx);
}

ErrorPoint error_stirling(const Real& mu_ref, const Real& z, long K, const PrecisionContext& ctx) {
  if (z.is_zero()) throw DomainError("error_stirling: needs z != 0");
  PrecisionGuard g(ref_ctx(ctx));
  return make_point(z, K, mu_ref, stirling_partial(z, K), "stirling");
}

ErrorPoint error_stirling(const Real& z, long K, const PrecisionContext& ctx) {
  return error_stirling(reference_mu(z, ctx), z, K, ctx);
}

AlphaSearchResult optimize_alpha(const Real& z, long K, const Real& lo, const Real& hi, const PrecisionContext& ctx,
                                 int points, Exec exec) {
  if (!(lo < hi)) throw DomainError("optimize_alpha: empty bracket");
  if (!(lo > -z)) throw DomainError("optimize_alpha: bracket leaves alpha > -z");
  if (points < 3) throw DomainError("optimize_alpha: need at least 3 grid points");
  const PrecisionContext work = ctx.digits >= 45 ? ctx : ctx.with_digits(45);
  const PrecisionContext rctx = ref_ctx(work);
  PrecisionGuard guard(rctx);
  const Real mu_ref = reference_mu(z, work);

  std::vector<Real> alphas(points);
  for (int i = 0; i < points; ++i) alphas[i] = lo + (hi - lo) * Real(i) / Real(points - 1);
  for (const Real& xi : zeros(static_cast<int>(K + 1), work).zeros)
    if (xi > lo && xi < hi) alphas.push_back(xi);
  std::sort(alphas.begin(), alphas.end(), [](const Real& a, const Real& b) { return a < b; });

  const long n = static_cast<long>(alphas.size());
  std::vector<Real> logs(n);
  auto eval = [&](const Real& a) {
    PrecisionGuard g(rctx);
    return safe_log10(abs(mu_ref - factorial_partial(z, a, K)));
  };
  // Warm the coefficient cache before threads share it.
  p_coefficients(static_cast<int>(K));
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i) logs[i] = eval(alphas[i]);
  } else {
    for (long i = 0; i < n; ++i) logs[i] = eval(alphas[i]);
  }

  AlphaSearchResult r;
  r.lo = lo;
  r.hi = hi;
  r.evaluations = n;
  long best = 0;
  for (long i = 1; i < n; ++i)
    if (logs[i] < logs[best]) best = i;
  if (best == 0 || best == n - 1) {
    r.flat = true;
    r.alpha_star = alphas[best];
    r.log10_error = logs[best];
    return r;
  }

  // Golden section on [alphas[best-1], alphas[best+1]].
  Real a = alphas[best - 1], b = alphas[best + 1];
  const Real invphi = (sqrt(Real(5)) - 1) / 2;
  Real c = b - (b - a) * invphi, d = a + (b - a) * invphi;
  Real fc = eval(c), fd = eval(d);
  r.evaluations += 2;
  const Real tol = ten_pow(-(work.digits + 5));
  Real best_a = alphas[best], best_f = logs[best];
  for (int it = 0; it < 400 && (b - a) > tol; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - (b - a) * invphi;
      fc = eval(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + (b - a) * invphi;
      fd = eval(d);
    }
    ++r.evaluations;
    if (fc < best_f) {
      best_f = fc;
      best_a = c;
    }
    if (fd < best_f) {
      best_f = fd;
      best_a = d;
    }
  }
  r.alpha_star = best_a;
  r.log10_error = best_f;
  return r;
}

std::vector<Fig1Row> sweep_fig1(const std::vector<Real>& z_list, const PrecisionContext& ctx, Exec exec) {
  const long n = static_cast<long>(z_list.size());
  std::vector<Fig1Row> rows(n);
  auto one = [&](long i) {
    PrecisionGuard g(ref_ctx(ctx));
    Fig1Row row;
    row.z = z_list[i];
    try {
      row.K = k_star(row.z);
      Real ref = reference_mu(row.z, ctx);
      row.log_stirling = error_stirling(ref, row.z, row.K, ctx).log10_error;
      row.log_alpha0 = error_alpha(ref, row.z, Real(0), row.K, ctx).log10_error;
      row.log_alpha1 = error_alpha(ref, row.z, Real(1), row.K, ctx).log10_error;
    } catch (const std::exception& e) {
      row.ok = false;
      row.note = e.what();
    }
    rows[i] = std::move(row);
  };
  if (exec == Exec::Parallel) {
    long kmax = 1;
    for (const Real& z : z_list)
      if (z > Real(0)) kmax = std::max(kmax, k_star(z));
    p_coefficients(static_cast<int>(kmax));
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) one(i);
  } else {
    for (long i = 0; i < n; ++i) one(i);
  }
  return rows;
}

std::vector<Fig2Row> sweep_fig2(const std::vector<Real>& z_list, const Real& lo, const Real& hi, int points,
                                const PrecisionContext& ctx, Exec exec) {
  if (points < 2) throw DomainError("sweep_fig2: need at least 2 points");
  const PrecisionContext rctx = ref_ctx(ctx);
  std::vector<Fig2Row> rows;
  for (const Real& z : z_list) {
    PrecisionGuard g(rctx);
    const long K = k_star(z);
    const Real ref = reference_mu(z, ctx);
    p_coefficients(static_cast<int>(K));
    const size_t base = rows.size();
    rows.resize(base + points);
    auto one = [&](long i) {
      PrecisionGuard gi(rctx);
      Fig2Row row;
      row.z = z;
      row.K = K;
      row.alpha = lo + (hi - lo) * Real(i) / Real(points - 1);
      try {
        row.log_error = error_alpha(ref, z, row.alpha, K, ctx).log10_error;
      } catch (const std::exception& e) {
        row.ok = false;
        row.note = e.what();
      }
      rows[base + i] = std::move(row);
    };
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
      for (long i = 0; i < points; ++i) one(i);
    } else {
      for (long i = 0; i < points; ++i) one(i);
    }
  }
  return rows;
}

std::vector<size_t> local_minima(const std::vector<Fig2Row>& rows) {
  std::vector<size_t> out;
  for (size_t i = 1; i + 1 < rows.size(); ++i) {
    if (!rows[i].ok || !rows[i - 1].ok || !rows[i + 1].ok) continue;
    if (rows[i].z != rows[i - 1].z || rows[i].z != rows[i + 1].z) continue;
    if (rows[i].log_error < rows[i - 1].log_error && rows[i].log_error < rows[i + 1].log_error) out.push_back(i);
  }
  return out;
}

LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
  LinearFit f;
  const size_t n = x.size();
  if (n < 2 || y.size() != n) return f;
  double mx = 0, my = 0;
  for (size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0, syy = 0;
  for (size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  f.r2 = syy == 0 ? 1 : sxy * sxy / (sxx * syy);
  return f;
}

}  // namespace binet
