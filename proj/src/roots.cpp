#include <algorithm>
#include <cmath>

#include "binet/numerics.hpp"

namespace binet {

Real horner(const std::vector<Rat>& coeffs, const Real& x) {
  Real r(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * x + Real(*it);
  return r;
}

Complex horner(const std::vector<Rat>& coeffs, const Complex& x) {
  Complex r(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * x + Complex(Real(*it));
  return r;
}

Rat horner(const std::vector<Rat>& coeffs, const Rat& x) {
  Rat r = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * x + *it;
  return r;
}

namespace {

using IPoly = std::vector<Int>;  // ascending

int degree(const IPoly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

void trim(IPoly& p) { p.resize(static_cast<size_t>(degree(p) + 1)); }

void make_primitive(IPoly& p) {
  Int g = 0;
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g > 1)
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

IPoly to_integer(const std::vector<Rat>& coeffs) {
  Int l = 1;
  for (const auto& c : coeffs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  IPoly p;
  for (const auto& c : coeffs) p.push_back(Int(c.get_num() * (l / c.get_den())));
  trim(p);
  make_primitive(p);
  return p;
}

IPoly derivative(const IPoly& p) {
  IPoly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

// Negated pseudo-remainder with its sign made equal to that of -rem(a, b).
IPoly neg_prem(IPoly a, const IPoly& b) {
  int db = degree(b);
  const Int& lb = b[db];
  int steps = 0;
  while (degree(a) >= db) {
    int da = degree(a);
    Int la = a[da];
    for (auto& c : a) c *= lb;
    for (int i = 0; i <= db; ++i) a[da - db + i] -= la * b[i];
    trim(a);
    ++steps;
    if (a.empty()) break;
  }
  // a = lb^steps * rem
  bool flip = (lb < 0) && ((steps % 2) == 1);
  for (auto& c : a) c = flip ? Int(c) : Int(-c);
  make_primitive(a);
  return a;
}

std::vector<IPoly> sturm_sequence(const IPoly& p) {
  std::vector<IPoly> seq{p, derivative(p)};
  make_primitive(seq[1]);
  while (degree(seq.back()) > 0) {
    IPoly r = neg_prem(seq[seq.size() - 2], seq.back());
    if (r.empty()) break;
    seq.push_back(std::move(r));
  }
  return seq;
}

// Sign of p(num/den), den > 0.
int sign_at(const IPoly& p, const Int& num, const Int& den) {
  int d = degree(p);
  if (d < 0) return 0;
  Int acc = p[d];
  Int dpow = 1;
  for (int i = d - 1; i >= 0; --i) {
    dpow *= den;
    acc = acc * num + p[i] * dpow;
  }
  return sgn(acc);
}

long variations(const std::vector<IPoly>& seq, const Rat& x) {
  long v = 0;
  int last = 0;
  for (const auto& p : seq) {
    int s = sign_at(p, x.get_num(), x.get_den());
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

Rat cauchy_bound(const IPoly& p) {
  int d = degree(p);
  Rat m = 0;
  for (int i = 0; i < d; ++i) {
    Rat q(abs(p[i]), abs(p[d]));
    if (q > m) m = q;
  }
  // Round up to a power of two so bisection points stay dyadic.
  Rat b = 1;
  while (b < m + 1) b *= 2;
  return b;
}

Real eval(const IPoly& p, const Real& x) {
  Real r(0);
  for (int i = degree(p); i >= 0; --i) r = r * x + Real(p[i]);
  return r;
}

Real eval_abs(const IPoly& p, const Real& x) {
  Real r(0), ax = abs(x);
  for (int i = degree(p); i >= 0; --i) r = r * ax + abs(Real(p[i]));
  return r;
}

// Refine the single simple root in (lo, hi), p(lo) p(hi) < 0.
Real refine(const IPoly& p, const IPoly& dp, Rat lo, Rat hi, const PrecisionContext& ctx) {
  int slo = sign_at(p, lo.get_num(), lo.get_den());
  // Exact bisection to a relative width of about 2^-24.
  for (int it = 0; it < 100000; ++it) {
    Rat w = hi - lo;
    Rat ref = abs(lo) > abs(hi) ? abs(lo) : abs(hi);
    if (ref < 1) ref = 1;
    if (w < ref / Rat(1 << 24)) break;
    Rat mid = (lo + hi) / 2;
    int s = sign_at(p, mid.get_num(), mid.get_den());
    if (s == 0) return Real(mid);
    if (s == slo)
      lo = mid;
    else
      hi = mid;
  }
  // Newton at a precision raised by the evaluation's cancellation.
  long extra = 0;
  {
    PrecisionGuard g(30);
    Real x = Real((lo + hi) / 2);
    Real cond = eval_abs(p, x) / max(abs(eval(dp, x)) * max(abs(x), Real(1)), ten_pow(-25));
    double c = log10_abs(cond);
    extra = c > 0 ? static_cast<long>(std::ceil(c)) + 5 : 5;
  }
  PrecisionGuard g(ctx.work_digits() + extra);
  Real a(lo), b(hi);
  Real x = (a + b) / 2;
  Real tol = ten_pow(-(ctx.work_digits() + 2));
  for (int it = 0; it < 400; ++it) {
    Real fx = eval(p, x);
    if (fx.is_zero()) break;
    if ((fx.sign() > 0) == (slo > 0))
      a = x;
    else
      b = x;
    Real dfx = eval(dp, x);
    Real nx = dfx.is_zero() ? (a + b) / 2 : x - fx / dfx;
    if (!(nx > a && nx < b)) nx = (a + b) / 2;
    Real step = abs(nx - x);
    x = nx;
    if (step <= tol * max(abs(x), Real(1))) break;
    if (b - a <= tol * max(abs(x), Real(1))) break;
  }
  PrecisionGuard back(ctx.work_digits());
  return Real(0) + x;
}

}  // namespace

long sturm_count(const std::vector<Rat>& coeffs, const Rat& lo, const Rat& hi) {
  IPoly p = to_integer(coeffs);
  if (p.empty()) throw DomainError("sturm_count: zero polynomial");
  auto seq = sturm_sequence(p);
  return variations(seq, lo) - variations(seq, hi);
}

RootSet real_roots_certified(const std::vector<Rat>& coeffs, const PrecisionContext& ctx) {
  IPoly p = to_integer(coeffs);
  if (p.empty()) throw DomainError("real_roots: zero polynomial");
  RootSet out;
  if (degree(p) == 0) return out;
  auto seq = sturm_sequence(p);
  if (degree(seq.back()) > 0) throw DomainError("real_roots: polynomial has repeated roots");
  IPoly dp = derivative(p);
  Rat bound = cauchy_bound(p);
  out.sturm_total = variations(seq, -bound) - variations(seq, bound);

  struct Piece {
    Rat lo, hi;  // roots strictly inside (lo, hi)
    long n;
  };
  auto is_root = [&](const Rat& x) { return sign_at(p, x.get_num(), x.get_den()) == 0; };
  std::vector<Piece> stack{{-bound, bound, out.sturm_total}};
  std::vector<std::pair<Rat, Rat>> isolated;
  while (!stack.empty()) {
    Piece pc = stack.back();
    stack.pop_back();
    if (pc.n == 0) continue;
    if (pc.n == 1 && !is_root(pc.lo) && !is_root(pc.hi)) {
      isolated.push_back({pc.lo, pc.hi});
      continue;
    }
    Rat mid = (pc.lo + pc.hi) / 2;
    long vlo = variations(seq, pc.lo), vmid = variations(seq, mid), vhi = variations(seq, pc.hi);
    bool mid_root = is_root(mid);
    if (mid_root) out.exact.push_back(mid);
    stack.push_back({pc.lo, mid, vlo - vmid - (mid_root ? 1 : 0)});
    stack.push_back({mid, pc.hi, vmid - vhi - (is_root(pc.hi) ? 1 : 0)});
  }

  PrecisionGuard g(ctx);
  for (const auto& q : out.exact) out.roots.push_back(Real(q));
  for (const auto& iv : isolated) out.roots.push_back(refine(p, dp, iv.first, iv.second, ctx));
  std::sort(out.roots.begin(), out.roots.end(), [](const Real& a, const Real& b) { return a < b; });
  return out;
}

std::vector<Real> real_roots(const std::vector<Rat>& coeffs, const PrecisionContext& ctx) {
  return real_roots_certified(coeffs, ctx).roots;
}

}  // namespace binet
