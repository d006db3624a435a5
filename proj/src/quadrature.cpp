#include <cmath>

#include "binet/numerics.hpp"

namespace binet {

namespace {

template <class V>
bool finite_value(const V& v);
template <>
bool finite_value<Real>(const Real& v) {
  return v.is_finite();
}
template <>
bool finite_value<Complex>(const Complex& v) {
  return v.re.is_finite() && v.im.is_finite();
}

// A node of a double-exponential rule: abscissa (possibly at both ends) and weight.
struct DeNode {
  Real x_lo, x_hi;  // tanh-sinh: symmetric pair; exp-sinh: unused x_lo
  Real w;
};

}  // namespace

template <class V>
QuadResult<V> tanh_sinh(const Integrand<V>& f, const Real& a, const Real& b, const PrecisionContext& ctx,
                        int max_levels) {
  PrecisionGuard guard(ctx);
  const Real half_pi = const_pi() / 2;
  const Real c = (a + b) / 2;
  const Real d = (b - a) / 2;
  const Real eps = ten_pow(-(ctx.work_digits() + 5));
  const Real tiny_dist = ten_pow(-3L * ctx.work_digits());

  long evals = 0;
  auto node = [&](const Real& t, DeNode& n) -> bool {
    Real u = half_pi * sinh(t);
    Real e = exp(u);
    Real ei = 1 / e;
    Real dist = 2 / (e * e + 1);  // 1 - tanh(u)
    if (dist < tiny_dist) return false;
    Real ch = e + ei;
    n.w = d * half_pi * cosh(t) * 4 / (ch * ch);
    n.x_hi = b - d * dist;
    n.x_lo = a + d * dist;
    return true;
  };

  // Fix the truncation point with a coarse scan.
  V center = f(c);
  ++evals;
  V total = center * (d * half_pi);
  Real l1 = abs(total);
  Real t_max(0);
  {
    int quiet = 0;
    for (int k = 1; k <= 400; ++k) {
      Real t = Real(k) / 4;
      DeNode n;
      if (!node(t, n)) break;
      V flo = f(n.x_lo), fhi = f(n.x_hi);
      V s = flo + fhi;
      evals += 2;
      if (!finite_value(s)) break;
      t_max = t;
      Real contrib = (abs(flo) + abs(fhi)) * n.w;
      Real scale = max(l1, Real(1) * ten_pow(-ctx.work_digits()));
      if (contrib < eps * scale) {
        if (++quiet >= 2) break;
      } else {
        quiet = 0;
      }
      if (contrib > l1) l1 = contrib;
    }
  }

  // Level l uses step 2^-l; level 0 nodes are the integers.
  total = center * (d * half_pi);
  Real abs_total = abs(total);
  auto add_nodes = [&](const Real& h, bool odd_only) {
    long kmax = static_cast<long>(std::ceil((t_max / h).to_double()));
    for (long k = 1; k <= kmax; ++k) {
      if (odd_only && k % 2 == 0) continue;
      Real t = h * Real(k);
      DeNode n;
      if (!node(t, n)) break;
      V flo = f(n.x_lo), fhi = f(n.x_hi);
      V s = flo + fhi;
      evals += 2;
      if (!finite_value(s)) break;
      total += s * n.w;
      abs_total += (abs(flo) + abs(fhi)) * n.w;
    }
  };

  QuadResult<V> res;
  Real h(1);
  add_nodes(h, false);
  V prev = total * h;
  Real tol_base = ten_pow(-ctx.digits);
  for (int level = 1; level <= max_levels; ++level) {
    h = h / 2;
    add_nodes(h, true);
    V cur = total * h;
    Real diff = abs(cur - prev);
    Real scale = max(abs(cur), abs_total * h);
    res.value = cur;
    res.error = diff;
    res.levels = level;
    res.evaluations = evals;
    if (level >= 3 && diff <= tol_base * scale) return res;
    prev = cur;
  }
  throw QuadratureError("tanh-sinh did not converge", Complex(res.value));
}

template <class V>
QuadResult<V> exp_sinh(const Integrand<V>& f, const Real& a, const PrecisionContext& ctx, int max_levels) {
  PrecisionGuard guard(ctx);
  const Real half_pi = const_pi() / 2;
  const Real eps = ten_pow(-(ctx.work_digits() + 5));
  long evals = 0;

  struct Eval {
    V s;
    Real w;
    bool ok;
  };
  auto at = [&](const Real& t) -> Eval {
    Real u = half_pi * sinh(t);
    Real e = exp(u);
    Eval r{V(0), half_pi * cosh(t) * e, true};
    if (!e.is_finite() || e.is_zero()) {
      r.ok = false;
      return r;
    }
    r.s = f(a + e);
    ++evals;
    r.ok = finite_value(r.s);
    return r;
  };

  Eval e0 = at(Real(0));
  Real l1 = abs(e0.s) * e0.w;
  Real t_lo(0), t_hi(0);
  for (int dir : {1, -1}) {
    int quiet = 0;
    for (int k = 1; k <= 400; ++k) {
      Real t = Real(dir * k) / 4;
      Eval ev = at(t);
      if (!ev.ok) break;
      (dir > 0 ? t_hi : t_lo) = t;
      Real contrib = abs(ev.s) * ev.w;
      if (contrib < eps * max(l1, ten_pow(-ctx.work_digits()))) {
        if (++quiet >= 2) break;
      } else {
        quiet = 0;
      }
      if (contrib > l1) l1 = contrib;
    }
  }

  V total = e0.s * e0.w;
  Real abs_total = abs(total);
  auto add_nodes = [&](const Real& h, bool odd_only) {
    for (int dir : {1, -1}) {
      const Real& lim = dir > 0 ? t_hi : t_lo;
      long kmax = static_cast<long>(std::ceil((abs(lim) / h).to_double()));
      for (long k = 1; k <= kmax; ++k) {
        if (odd_only && k % 2 == 0) continue;
        Eval ev = at(h * Real(dir * k));
        if (!ev.ok) break;
        total += ev.s * ev.w;
        abs_total += abs(ev.s) * ev.w;
      }
    }
  };

  QuadResult<V> res;
  Real h(1);
  add_nodes(h, false);
  V prev = total * h;
  Real tol_base = ten_pow(-ctx.digits);
  for (int level = 1; level <= max_levels; ++level) {
    h = h / 2;
    add_nodes(h, true);
    V cur = total * h;
    Real diff = abs(cur - prev);
    Real scale = max(abs(cur), abs_total * h);
    res.value = cur;
    res.error = diff;
    res.levels = level;
    res.evaluations = evals;
    if (level >= 3 && diff <= tol_base * scale) return res;
    prev = cur;
  }
  throw QuadratureError("exp-sinh did not converge", Complex(res.value));
}

template QuadResult<Real> tanh_sinh<Real>(const Integrand<Real>&, const Real&, const Real&,
                                          const PrecisionContext&, int);
template QuadResult<Complex> tanh_sinh<Complex>(const Integrand<Complex>&, const Real&, const Real&,
                                                const PrecisionContext&, int);
template QuadResult<Real> exp_sinh<Real>(const Integrand<Real>&, const Real&, const PrecisionContext&, int);
template QuadResult<Complex> exp_sinh<Complex>(const Integrand<Complex>&, const Real&, const PrecisionContext&,
                                               int);

Real quadrature(const Integrand<Real>& f, const Real& a, const Real& b, const PrecisionContext& ctx,
                bool b_infinite) {
  return b_infinite ? exp_sinh<Real>(f, a, ctx).value : tanh_sinh<Real>(f, a, b, ctx).value;
}

Complex quadrature(const Integrand<Complex>& f, const Real& a, const Real& b, const PrecisionContext& ctx,
                   bool b_infinite) {
  return b_infinite ? exp_sinh<Complex>(f, a, ctx).value : tanh_sinh<Complex>(f, a, b, ctx).value;
}

}  // namespace binet
