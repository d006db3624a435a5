#include "binet/binet_poly.hpp"

#include <deque>
#include <map>
#include <memory>
#include <mutex>

namespace binet {

namespace {

Rat sign_rat(long e) { return (e % 2 == 0) ? Rat(1) : Rat(-1); }

std::mutex g_c_mu;
std::deque<Rat> g_c;  // g_c[m-1] = c_m

Rat compute_c(int m) {
  const auto& s1 = stirling1_table(m);
  Rat sum = 0;
  for (int k = 1; k <= m; ++k) sum += frac(k * s1(m, k), (k + 2) * (k + 1));
  return sign_rat(m - 1) * sum / (2 * m);
}

std::mutex g_p_mu;
std::map<int, std::unique_ptr<BinetPolynomial>> g_p;

}  // namespace

const Rat& c_coefficient(int m) {
  if (m < 1) throw DomainError("c_coefficient: need m >= 1");
  std::lock_guard<std::mutex> lock(g_c_mu);
  while (static_cast<int>(g_c.size()) < m) g_c.push_back(compute_c(static_cast<int>(g_c.size()) + 1));
  return g_c[m - 1];
}

Rat beta_coefficient(int m) { return b_eval_exact(m, Rat(1)); }

std::vector<Rat> p_by_stirling(int m) {
  if (m < 1) throw DomainError("p_coefficients: need m >= 1");
  const auto& s1 = stirling1_table(m);
  std::vector<Rat> p(m);
  for (int j = 0; j < m; ++j) {
    Rat sum = 0;
    for (int k = j + 1; k <= m; ++k) {
      // k!/(k+2-j)! as a rational
      Rat ratio = j >= 2 ? Rat(factorial(k) / factorial(k + 2 - j)) : frac(1, factorial(k + 2 - j) / factorial(k));
      sum += ratio * (k - j) * s1(m, k);
    }
    p[j] = sign_rat(m - 1 - j) * sum / (2 * m * factorial(j));
  }
  return p;
}

Rat p_entry(int j, int m) {
  if (m < 1 || j < 0 || j >= m) throw DomainError("p_entry: need 0 <= j < m");
  const auto& s1 = stirling1_table(m);
  Rat sum = 0;
  for (int l = j; l <= m - 1; ++l) {
    if (l == 0 && j == 0) {
      sum += c_coefficient(m);
      continue;
    }
    if (j == 0) continue;  // S_l^(0) = 0 for l > 0
    sum += Rat(binomial(m - 1, l) * s1(l, j)) * sign_rat(l - j) * c_coefficient(m - l);
  }
  return sum;
}

std::vector<Rat> p_by_convolution(int m) {
  if (m < 1) throw DomainError("p_coefficients: need m >= 1");
  std::vector<Rat> p(m);
  for (int j = 0; j < m; ++j) p[j] = p_entry(j, m);
  return p;
}

std::vector<Rat> p_by_closed_form(int m) {
  std::vector<Rat> p = p_by_stirling(m);
  if (m < 3) return p;
  const auto& s1 = stirling1_table(m);
  for (int j = 2; j < m; ++j) {
    Rat pre = sign_rat(m - j) / Rat(j * (j - 1) * m);
    Rat f1 = pre * (Rat((m - j + 1) * s1(m - 1, j - 2)) + Rat((j - 1) * s1(m - 1, j - 1)) * frac(m - 2, 2));
    Rat f2 = pre * (Rat((m - j + 1) * s1(m, j - 1)) + Rat(m * s1(m - 1, j - 1)) * frac(2 * m - j - 1, 2));
    if (f1 != f2) throw ConsistencyError("p closed forms disagree at m=" + std::to_string(m));
    p[j] = f1;
  }
  return p;
}

const BinetPolynomial& p_coefficients(int m) {
  if (m < 1) throw DomainError("p_coefficients: need m >= 1");
  {
    std::lock_guard<std::mutex> lock(g_p_mu);
    auto it = g_p.find(m);
    if (it != g_p.end()) return *it->second;
  }
  auto poly = std::make_unique<BinetPolynomial>();
  poly->m = m;
  poly->p = p_by_convolution(m);
  if (p_by_stirling(m) != poly->p || p_by_closed_form(m) != poly->p || poly->p.back() != Rat(1, 12))
    throw ConsistencyError("p_j(m) formulas disagree at m=" + std::to_string(m));
  std::lock_guard<std::mutex> lock(g_p_mu);
  auto& slot = g_p[m];
  if (!slot) slot = std::move(poly);
  return *slot;
}

Rat b_eval_exact(int m, const Rat& a) { return p_coefficients(m)(a); }

Rat b_theorem_sum(int m, const Rat& a) {
  if (m < 1) throw DomainError("b_theorem_sum: need m >= 1");
  const auto& s1 = stirling1_table(m);
  Rat am1 = a - 1;
  Rat half_minus_a = Rat(1, 2) - a;
  Rat sum = 0;
  Rat ap = a, bp = am1;  // a^{k+1}, (a-1)^{k+1}
  ap *= a;
  bp *= am1;
  for (int k = 1; k <= m; ++k) {
    Rat ap2 = ap * a, bp2 = bp * am1;
    Rat brace = (ap2 - bp2) / (k + 2) + half_minus_a * (ap - bp) / (k + 1);
    sum += brace * sign_rat(k - m) * s1(m, k);
    ap = ap2;
    bp = bp2;
  }
  return sum / m;
}

Rat b_c_convolution(int m, const Rat& a) {
  if (m < 1) throw DomainError("b_c_convolution: need m >= 1");
  Rat sum = 0;
  for (int k = 1; k <= m - 1; ++k) {
    Rat prod = 1;
    for (int j = 1; j <= m - k - 1; ++j) prod *= a + j;
    sum += Rat(binomial(m - 1, k - 1)) * prod * c_coefficient(k);
  }
  return c_coefficient(m) + a * sum;
}

std::vector<Rat> b_sequence(const Rat& a, int M) {
  std::vector<Rat> r(M + 1), b(M + 1);
  if (M >= 1) r[1] = 1;
  for (int n = 2; n <= M; ++n) r[n] = r[n - 1] * (a + (n - 1));  // prod_{j=1}^{n-1}(a+j)
  for (int m = 1; m <= M; ++m) {
    Rat sum = 0;
    for (int k = 1; k <= m - 1; ++k) sum += Rat(binomial(m - 1, k - 1)) * r[m - k] * c_coefficient(k);
    b[m] = c_coefficient(m) + a * sum;
  }
  return b;
}

Rat bernoulli_identity_check(int m, const Rat& a) {
  if (m < 1) throw DomainError("bernoulli_identity_check: need m >= 1");
  const auto& s1 = stirling1_table(m);
  Rat rhs = 0;
  for (int k = 0; k <= m - 1; ++k) {
    const Int& s = s1(m - 1, k);
    if (s == 0) continue;
    Rat inner = bernoulli_poly(k + 2, a) - rat_pow(a, k + 2) + frac(k + 2, 2) * rat_pow(a, k + 1);
    rhs += Rat(s) * sign_rat(k) * inner / ((k + 1) * (k + 2));
  }
  rhs *= sign_rat(m - 1);
  return b_eval_exact(m, a) - rhs;
}

Real c_by_quadrature_polynomial(int m, const PrecisionContext& ctx) {
  if (m < 1) throw DomainError("c_by_quadrature: need m >= 1");
  PrecisionGuard g(ctx);
  Integrand<Real> f = [m](const Real& u) {
    Real prod = (u - Real(Rat(1, 2))) * u;
    for (int k = 1; k < m; ++k) prod *= Real(k) - u;
    return prod;
  };
  return quadrature(f, Real(0), Real(1), ctx) / m;
}

Real c_by_quadrature_semi_infinite(int m, const PrecisionContext& ctx) {
  if (m < 2) throw DomainError("semi-infinite c_m integral: need m >= 2");
  PrecisionGuard g(ctx);
  const Real pi = const_pi();
  const Real hp = pi / 2;
  const Real hp2 = hp * hp;
  Integrand<Real> f = [&, m](const Real& x) {
    Real L = log(x);
    Real x2 = x * x;
    Real r2 = x2 + 1;
    Real th = acos(-1 / sqrt(r2));
    Real D = L * L + hp2;
    Real cm = cos(th * m), sm = sin(th * m);
    Real A = cm * ((L * L - hp2) / D + ((1 - x2) * L / 2 + hp * x) / r2);
    Real B = sm * (-pi * L / D + (x * L - (pi / 4) * (1 - x2)) / r2);
    Real scale = pow(r2, Real(m) / 2) * D;
    return (A + B) / scale;
  };
  Real v = quadrature(f, Real(0), Real(0), ctx, true) / pi;
  v *= Real(factorial(m - 1));
  return (m % 2 == 1) ? v : -v;
}

Real b_by_quadrature(int m, const Real& a, const PrecisionContext& ctx) {
  if (m < 1) throw DomainError("b_by_quadrature: need m >= 1");
  PrecisionGuard g(ctx);
  Real shift = Real(Rat(1, 2)) - a;
  Integrand<Real> f = [m, shift](const Real& x) {
    Real prod = x + shift;
    for (int k = 0; k < m; ++k) prod *= x + Real(k);
    return prod;
  };
  return quadrature(f, a - 1, a, ctx) / m;
}

Real egf_closed(const Real& a, const Real& u) {
  if (!(abs(u) < Real(1))) throw DomainError("egf: need |u| < 1");
  if (u.is_zero()) return Real(0);
  Real one_minus = 1 - u;
  Real L = log1p(-u);
  Real pa = pow(one_minus, -a);
  Real pa1 = pa * one_minus;
  return -(pa + pa1) / (2 * L) + (pa1 - pa) / (L * L);
}

Real egf_partial(const Real& a, const Real& u, int M) {
  Real sum(0), upow(1), fact(1);  // fact = (m-1)!
  for (int m = 1; m <= M; ++m) {
    upow *= u;
    if (m > 1) fact *= m - 1;
    sum += p_coefficients(m)(a) * upow / fact;
  }
  return sum;
}

namespace {

using Series = std::vector<Rat>;

Series mul(const Series& a, const Series& b, int n) {
  Series r(n + 1, Rat(0));
  for (int i = 0; i <= n && i < static_cast<int>(a.size()); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= n && j < static_cast<int>(b.size()); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

Series inverse(const Series& a, int n) {
  Series r(n + 1, Rat(0));
  r[0] = 1 / a[0];
  for (int k = 1; k <= n; ++k) {
    Rat s = 0;
    for (int j = 1; j <= k && j < static_cast<int>(a.size()); ++j) s += a[j] * r[k - j];
    r[k] = -s * r[0];
  }
  return r;
}

}  // namespace

std::vector<Rat> egf_series_exact(const Rat& a, int M) {
  int n = M + 1;
  // h(u) = -u/log(1-u) = 1/q, q = sum u^k/(k+1)
  Series q(n + 1);
  for (int k = 0; k <= n; ++k) q[k] = frac(1, k + 1);
  Series h = inverse(q, n);
  Series h2 = mul(h, h, n);
  Series bracket(n + 1);
  for (int k = 0; k <= n; ++k) bracket[k] = 2 * h[k] - (k > 0 ? h[k - 1] : Rat(0)) - 2 * h2[k];
  // divide by 2u; bracket[0] == 0
  Series core(M + 1);
  for (int k = 0; k <= M; ++k) core[k] = bracket[k + 1] / 2;
  // (1-u)^{-a} = sum C(a+k-1, k) u^k
  Series pw(M + 1);
  pw[0] = 1;
  for (int k = 1; k <= M; ++k) pw[k] = pw[k - 1] * (a + (k - 1)) / k;
  return mul(pw, core, M);
}

ZeroSet zeros(int m, const PrecisionContext& ctx) {
  if (m < 2) throw DomainError("zeros: need m >= 2");
  RootSet rs = real_roots_certified(p_coefficients(m).p, ctx);
  ZeroSet z;
  z.m = m;
  z.sturm_count = rs.sturm_total;
  z.zeros.assign(rs.roots.rbegin(), rs.roots.rend());
  return z;
}

Rat middle_zero_remainder(int m) {
  if (m < 2 || m % 2 != 0) throw DomainError("middle_zero_remainder: need even m >= 2");
  const auto& p = p_coefficients(m).p;
  Rat root(-(m / 2 - 1));
  // synthetic division; the final carry is the remainder
  Rat carry = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) carry = carry * root + *it;
  return carry;
}

GrowthReport growth_checks(int m_max, int partial_max) {
  if (m_max < 4) throw DomainError("growth_checks: need m_max >= 4");
  if (partial_max <= 0) partial_max = m_max;
  GrowthReport rep;
  rep.m_max = m_max;
  rep.partial_max = partial_max;
  auto fail = [&](const std::string& what, int m) {
    rep.ok = false;
    rep.failures.push_back(what + " at m=" + std::to_string(m));
  };
  Int fact = 2;  // (m-1)! at m = 3
  for (int m = 3; m <= m_max; ++m) {
    if (m > 3) fact *= m - 1;
    const Rat& c = c_coefficient(m);
    if (!(c < 0)) fail("c_m < 0", m);
    if (m > 3 && !(abs(c) > abs(c_coefficient(m - 1)))) fail("|c_m| increasing", m);
    if (!(c >= frac(-fact, 720))) fail("c_m >= -(m-1)!/720", m);
    if (m < m_max && !(c_coefficient(m + 1) >= c * m)) fail("c_{m+1} >= m c_m", m);
    if (!(abs(c) / fact < frac(1, m))) fail("|c_m|/(m-1)! < 1/m", m);
  }
  Rat partial = c_coefficient(1) + c_coefficient(2);
  fact = 1;
  for (int M = 3; M <= partial_max; ++M) {
    fact *= M - 1;
    Rat next = partial + c_coefficient(M) / fact;
    if (!(next > 0)) fail("partial sum positive", M);
    if (!(next < partial)) fail("partial sum decreasing", M);
    partial = next;
  }
  return rep;
}

Real asymptotic_estimate(int m, const Real& a) {
  if (m < 1) throw DomainError("asymptotic_estimate: need m >= 1");
  Real lead(1), plus(1), minus(1), gamma(0);
  Real half(Rat(1, 2));
  for (int k = 1; k <= m; ++k) {
    Real ka = a + k;
    lead *= 1 + a / k;
    plus *= 1 + half / ka;
    minus *= 1 - half / ka;
    gamma += 1 / ka;
  }
  return lead / (m + 1) * ((a + half) * plus + (a - half) * minus) / (2 * gamma);
}

}  // namespace binet
