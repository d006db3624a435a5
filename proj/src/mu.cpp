#include "binet/mu.hpp"

#include <cmath>
#include <limits>

#include "binet/binet_poly.hpp"
#include "binet/stieltjes.hpp"

namespace binet {

namespace {

Complex nan_complex() {
  Real n(std::numeric_limits<double>::quiet_NaN());
  return Complex(n, n);
}

MuResult invalid(const std::string& method, const std::string& reason) {
  MuResult r;
  r.method = method;
  r.valid = false;
  r.reason = reason;
  r.eval.value = nan_complex();
  return r;
}

bool on_cut(const Complex& z) { return z.im.is_zero() && z.re <= Real(0); }

long shift_to(const Complex& z, double target) {
  double re = z.re.to_double();
  return re >= target ? 0 : static_cast<long>(std::ceil(target - re));
}

// Real part the adaptive factorial series is moved to before summing.
double factorial_target(const PrecisionContext& ctx) { return 1.5 * ctx.work_digits(); }
// Same for the adaptive companion series.
// Below Re z = 1 the companion terms grow; above, the decay improves slowly with |z|.
double companion_target(const PrecisionContext& ctx) { return 2.0 * ctx.work_digits() + 20; }
// |z| beyond which Stirling's optimum is below 10^-work.
double stirling_target(const PrecisionContext& ctx) { return (ctx.work_digits() + 5) * 2.302585 / (2 * 3.141593) + 2; }

MuResult with_shift(MuResult inner, const Complex& z, long n) {
  if (n > 0 && inner.valid) {
    inner.eval.value += forward_shift_sum(z, n);
    inner.shift = n;
  }
  return inner;
}

// b_m(alpha) for m = 1, 2, ... in order; exact for rational alpha.
class BinetStream {
 public:
  explicit BinetStream(const Rat& a) : exact_(true), a_(a) {}
  explicit BinetStream(const Complex& a) : exact_(false), ac_(a) {}

  Complex next() {
    ++m_;
    if (!exact_) return p_coefficients(m_)(ac_);
    if (a_ == 0) return Complex(Real(c_coefficient(m_)));
    // r[n] = prod_{j=1}^{n-1}(a+j); row = C(m-1, .)
    if (r_.empty()) r_.push_back(Rat(0));
    r_.push_back(r_.size() == 1 ? Rat(1) : r_.back() * (a_ + Rat(static_cast<long>(r_.size()) - 1)));
    std::vector<Int> row(m_);
    row[0] = 1;
    for (int k = 1; k < m_; ++k) row[k] = k < static_cast<int>(row_.size()) ? row_[k] + row_[k - 1] : Int(1);
    row_ = row;
    Rat sum = 0;
    for (int k = 1; k <= m_ - 1; ++k) sum += Rat(row_[k - 1]) * r_[m_ - k] * c_coefficient(k);
    return Complex(Real(c_coefficient(m_) + a_ * sum));
  }

 private:
  bool exact_;
  Rat a_;
  Complex ac_;
  int m_ = 0;
  std::vector<Rat> r_;
  std::vector<Int> row_;
};

MuResult factorial_core(const Complex& z, BinetStream stream, const Complex& alpha, long K,
                        const PrecisionContext& ctx, const std::string& label) {
  PrecisionGuard g(ctx);
  Complex zpa = z + alpha;
  Complex denom(1);
  TermGenerator gen = [&](long m) {
    denom *= zpa + Complex(Real(m - 1));
    return stream.next() / denom;
  };
  MuResult r;
  r.method = label;
  StopRule rule = K > 0 ? StopRule::fixed(K) : StopRule::tail(1, 100000);
  r.eval = sum_series(gen, rule, ctx);
  return r;
}

MuResult factorial_dispatch(const Complex& z, const Rat* alpha_q, const Complex& alpha, long K,
                            const PrecisionContext& ctx) {
  const std::string label = "factorial";
  if (!(z.re > Real(0))) return invalid(label, "needs Re z > 0");
  if (!(z.re + alpha.re > Real(0))) return invalid(label, "needs Re(alpha) > -Re z");
  PrecisionGuard g(ctx);
  long n = K > 0 ? 0 : shift_to(z, factorial_target(ctx));
  Complex zs = z + Complex(Real(n));
  BinetStream stream = alpha_q ? BinetStream(*alpha_q) : BinetStream(alpha);
  return with_shift(factorial_core(zs, std::move(stream), alpha, K, ctx, label), z, n);
}

}  // namespace

Complex forward_shift_sum(const Complex& z, long n) {
  Complex sum(0);
  Real half(frac(1, 2));
  for (long k = 0; k < n; ++k) {
    Complex w = z + Complex(Real(k));
    if (w.is_real()) {
      sum += Complex((w.re + half) * log1p(1 / w.re) - 1);
    } else {
      sum += (w + Complex(half)) * log(Complex(1) + reciprocal(w)) - Complex(1);
    }
  }
  return sum;
}

MuResult mu_factorial(const Complex& z, const Rat& alpha, long K, const PrecisionContext& ctx) {
  PrecisionGuard g(ctx);
  return factorial_dispatch(z, &alpha, Complex(Real(alpha)), K, ctx);
}

MuResult mu_factorial(const Complex& z, const Complex& alpha, long K, const PrecisionContext& ctx) {
  return factorial_dispatch(z, nullptr, alpha, K, ctx);
}

MuResult mu_stirling(const Complex& z, long K, const PrecisionContext& ctx) {
  if (z.re.is_zero() && z.im.is_zero()) return invalid("stirling", "needs z != 0");
  PrecisionGuard g(ctx);
  Complex w = reciprocal(z);
  Complex w2 = w * w;
  Complex pw = w;
  TermGenerator gen = [&](long m) {
    Complex t = pw * Real(bernoulli_number(2 * m) / Rat((2 * m - 1) * (2 * m)));
    pw *= w2;
    return t;
  };
  MuResult r;
  r.method = "stirling";
  r.eval = sum_series(gen, StopRule::fixed(K), ctx);
  return r;
}

Real stirling_term(long m, const Real& z) {
  return abs(Real(bernoulli_number(2 * m) / Rat((2 * m - 1) * (2 * m)))) / pow(z, 2 * m - 1);
}

long k_star(const Real& z) {
  if (!(z > Real(0))) throw DomainError("k_star: need z > 0");
  PrecisionGuard g(30);
  Real prev = stirling_term(1, z);
  for (long m = 1;; ++m) {
    Real next = stirling_term(m + 1, z);
    if (!(next < prev)) return m;
    prev = next;
  }
}

namespace {

// sum_{v=1}^{m-1} (v-1)! (-1)^{m-1-v} S2(m, v+1) w^v, evaluated with enough
// extra precision to absorb the cancellation; `extra` carries the last
// estimate between calls.
Complex companion_inner(int m, const Complex& w, long base_digits, long& extra) {
  const auto& s2 = stirling2_table(m + 1);
  for (int attempt = 0; attempt < 6; ++attempt) {
    PrecisionGuard g(base_digits + extra);
    Complex sum(0), wp(1);
    Real biggest(0);
    Int fact = 1;  // (v-1)!
    for (int v = 1; v <= m - 1; ++v) {
      if (v > 1) fact *= v - 1;
      wp *= w;
      Complex t = wp * Real(Int(fact * s2(m, v + 1)));
      if ((m - 1 - v) % 2 == 1) t = -t;
      sum += t;
      Real a = abs(t);
      if (a > biggest) biggest = a;
    }
    Real mag = abs(sum);
    double lost = mag.is_zero() ? 0 : log10_abs(biggest) - log10_abs(mag);
    if (lost < 0) lost = 0;
    long need = static_cast<long>(std::ceil(lost)) + 8;
    if (need <= extra) {
      PrecisionGuard back(base_digits);
      return Complex(Real(0) + sum.re, Real(0) + sum.im);
    }
    extra = need;
  }
  throw DomainError("companion: cancellation did not settle");
}

MuResult companion_core(const Complex& z, long M, const PrecisionContext& ctx) {
  PrecisionGuard g(ctx);
  Complex w = reciprocal(z);
  long extra = 10;
  int table_size = M > 0 ? static_cast<int>(M) : 64;
  auto table = g_table(table_size, ctx);
  long rising = 0;
  Real last_mag(0);
  TermGenerator gen = [&](long m) -> Complex {
    if (m < 2) return Complex(0);
    if (m >= static_cast<long>(table->g.size())) {
      table_size += 64;
      table = g_table(table_size, ctx);
    }
    Complex t = companion_inner(static_cast<int>(m), w, ctx.work_digits(), extra) * table->g[m];
    if (M == 0) {
      // persistent growth past the first few terms: the series is diverging at this precision
      Real mag = abs(t);
      rising = (m > 20 && mag > last_mag) ? rising + 1 : 0;
      last_mag = mag;
      if (rising >= 12) return nan_complex();
    }
    return t;
  };
  MuResult r;
  r.method = "companion";
  StopRule rule = M > 0 ? StopRule::fixed(M) : StopRule::tail(1, 300);
  r.eval = sum_series(gen, rule, ctx);
  if (M == 0 && r.eval.note == "non-finite term") r.eval.note = "diverging";
  return r;
}

}  // namespace

MuResult mu_companion(const Complex& z, long M, const PrecisionContext& ctx, bool shift) {
  if (on_cut(z)) return invalid("companion", "needs |arg z| < pi and z != 0");
  PrecisionGuard g(ctx);
  long n = (M == 0 && shift) ? shift_to(z, companion_target(ctx)) : 0;
  Complex zs = z + Complex(Real(n));
  return with_shift(companion_core(zs, M, ctx), z, n);
}

MuResult mu_taylor_small(const Complex& z, const PrecisionContext& ctx) {
  if (!(abs(z) < Real(1))) return invalid("taylor", "needs |z| < 1");
  if (on_cut(z)) return invalid("taylor", "z on the branch cut");
  PrecisionGuard g(ctx);
  Complex pw = z;
  TermGenerator gen = [&](long k) {
    pw *= z;
    Complex t = pw * (zeta_int(static_cast<int>(k), ctx) / k);
    return (k % 2 == 0) ? t : -t;
  };
  MuResult r;
  r.method = "taylor";
  r.eval = sum_series(gen, StopRule::tail(2, 100000), ctx);
  Complex lz = log(z);
  Real gamma = euler_gamma(ctx);
  Real half(frac(1, 2));
  r.eval.value += -z * (lz - Complex(1) + Complex(gamma)) - lz * half - Complex(log(2 * const_pi()) * half);
  return r;
}

namespace {

// (1/t)(coth(t/2) - 2/t), smooth with value 1/6 at t = 0.
class BinetKernel {
 public:
  BinetKernel() {
    // 2 B_{2k}/(2k)!, k >= 1, until negligible for t < 1
    const long digits = bits_to_digits(working_bits()) + 5;
    const Real eps = ten_pow(-digits);
    for (int k = 1;; ++k) {
      Real c(Rat(2) * bernoulli_number(2 * k) / Rat(factorial(2 * k)));
      coef_.push_back(c);
      if (abs(c) < eps) break;
    }
  }

  Real operator()(const Real& t) const {
    if (t < Real(1)) {
      Real t2 = t * t;
      Real sum(0);
      for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) sum = sum * t2 + *it;
      return sum;
    }
    Real e = exp(-t);
    return ((1 + e) / (1 - e) - 2 / t) / t;
  }

 private:
  std::vector<Real> coef_;
};

}  // namespace

MuResult mu_oracle(const Complex& z, const PrecisionContext& ctx) {
  if (!(z.re > Real(0))) return invalid("quadrature", "needs Re z > 0");
  PrecisionGuard g(ctx);
  BinetKernel kernel;
  MuResult r;
  r.method = "quadrature";
  Real half(frac(1, 2));
  if (z.is_real()) {
    Real x = z.re;
    Integrand<Real> f = [&](const Real& t) { return kernel(t) * exp(-x * t); };
    auto q = exp_sinh<Real>(f, Real(0), ctx);
    r.eval.value = Complex(q.value * half);
    r.eval.terms_used = q.evaluations;
    r.eval.tail_estimate = q.error;
  } else {
    Integrand<Complex> f = [&](const Real& t) {
      Real a = exp(-z.re * t);
      Real ph = z.im * t;
      return Complex(a * cos(ph), -a * sin(ph)) * kernel(t);
    };
    auto q = exp_sinh<Complex>(f, Real(0), ctx);
    r.eval.value = q.value * half;
    r.eval.terms_used = q.evaluations;
    r.eval.tail_estimate = q.error;
  }
  r.eval.last_term = Real(0);
  r.eval.converged = true;
  r.eval.note = "quadrature";
  return r;
}

namespace {

// zeta(s, a) for s = 2, 3, ... in turn: direct sum to a+M, then Euler-Maclaurin.
class HurwitzStream {
 public:
  HurwitzStream(const Complex& a, long digits) : digits_(digits) {
    double target = 0.5 * digits + 10;
    double re = a.re.to_double();
    M_ = re >= target ? 0 : static_cast<long>(std::ceil(target - re));
    for (long k = 0; k < M_; ++k) {
      Complex inv = reciprocal(a + Complex(Real(k)));
      inv_.push_back(inv);
      pw_.push_back(inv);  // (a+k)^-1; raised before use
    }
    aM_ = a + Complex(Real(M_));
    invM_ = reciprocal(aM_);
    pwM_ = invM_;
    const Real eps = ten_pow(-(digits + 5));
    for (int j = 1; j < 4 * digits; ++j) {
      Real c(bernoulli_number(2 * j) / Rat(factorial(2 * j)));
      bern_.push_back(c);
    }
    eps_ = eps;
  }

  // Returns zeta(s, a) for the next s, starting at s = 2.
  Complex next() {
    ++s_;
    Complex sum(0);
    for (size_t k = 0; k < pw_.size(); ++k) {
      pw_[k] *= inv_[k];
      sum += pw_[k];
    }
    pwM_ *= invM_;  // (a+M)^{-s}
    Complex tail = pwM_ * aM_ / Real(s_ - 1) + pwM_ * Real(frac(1, 2));
    // sum_j B_{2j}/(2j)! (s)_{2j-1} (a+M)^{-s-2j+1}
    Complex inv2 = invM_ * invM_;
    Complex pw = pwM_ * invM_;
    Real poch(s_);
    for (size_t j = 0; j < bern_.size(); ++j) {
      Complex t = pw * (bern_[j] * poch);
      tail += t;
      if (abs(t) < eps_ * abs(tail)) break;
      long jj = static_cast<long>(j) + 1;
      poch *= Real((s_ + 2 * jj - 1) * (s_ + 2 * jj));
      pw *= inv2;
    }
    return sum + tail;
  }

 private:
  long digits_;
  long s_ = 1;
  long M_ = 0;
  std::vector<Complex> inv_, pw_;
  Complex aM_, invM_, pwM_;
  std::vector<Real> bern_;
  Real eps_;
};

}  // namespace

Complex hurwitz_zeta(long s, const Complex& a, const PrecisionContext& ctx) {
  if (s < 2) throw DomainError("hurwitz_zeta: need s >= 2");
  if (!(a.re > Real(0))) throw DomainError("hurwitz_zeta: need Re a > 0");
  PrecisionGuard g(ctx);
  HurwitzStream hs(a, ctx.work_digits());
  Complex v;
  for (long k = 2; k <= s; ++k) v = hs.next();
  return v;
}

MuResult mu_polygamma_series(const Complex& z, long N, const PrecisionContext& ctx) {
  if (!(z.re > Real(0))) return invalid("polygamma", "needs Re z > 0");
  PrecisionGuard g(ctx);
  HurwitzStream hs(z + Complex(1), ctx.work_digits());
  TermGenerator gen = [&](long n) {
    Complex zeta = hs.next();  // zeta(n+1, z+1)
    return zeta * Real(frac(n, (n + 1) * (n + 2)) / 2);
  };
  MuResult r;
  r.method = "polygamma";
  StopRule rule = N > 0 ? StopRule::fixed(N) : StopRule::tail(1, 100000);
  r.eval = sum_series(gen, rule, ctx);
  return r;
}

Complex mu_auto(const Complex& z, const PrecisionContext& ctx) {
  if (on_cut(z)) throw DomainError("mu: z on the branch cut");
  PrecisionGuard g(ctx);
  const double target = stirling_target(ctx);
  long n = 0;
  Complex zs = z;
  while (abs(zs).to_double() < target) {
    zs += Complex(1);
    ++n;
  }
  long K = k_star(abs(zs));
  Complex v = mu_stirling(zs, K, ctx).eval.value;
  return v + forward_shift_sum(z, n);
}

Complex mu_reference(const Complex& z, const PrecisionContext& ctx) {
  if (z.is_real() && z.re >= Real(frac(1, 10))) {
    MuResult r = mu_oracle(z, ctx);
    if (r.valid) return r.eval.value;
  }
  MuResult r = mu_companion(z, 0, ctx, true);
  if (!r.valid) throw DomainError("mu_reference: " + r.reason);
  return r.eval.value;
}

Real mu_closed(ClosedPoint point, long n) {
  Real half(frac(1, 2));
  if (point == ClosedPoint::Half) return half * (1 - const_log2());
  if (n < 1) throw DomainError("mu_closed: need n >= 1");
  Real sum(0);
  for (long k = n; k <= 2 * n - 1; ++k) sum += log(Real(k));
  return sum - Real(n) * (log(Real(4 * n + 2)) - 1) + half * (const_log2() + 1);
}

IdentityResiduals identity_residuals(const Complex& z, const PrecisionContext& ctx, int n) {
  PrecisionGuard g(ctx);
  IdentityResiduals res;
  res.multiplication_n = n;
  Real half(frac(1, 2));
  const Complex one(1);
  auto mu = [&](const Complex& w) { return mu_reference(w, ctx); };
  if (on_cut(z) || on_cut(z + one)) {
    res.skipped.push_back("difference");
  } else {
    Complex rhs = (z + Complex(half)) * log(z / (z + one)) + one;
    res.difference = abs(mu(z + one) - mu(z) - rhs);
  }
  bool integer_like = z.is_real() && floor(z.re) == z.re;
  if (integer_like || on_cut(z) || on_cut(one - z)) {
    res.skipped.push_back("reflection");
  } else {
    Complex pi(const_pi());
    Complex rhs = one - mu(z) - log(Complex(2) * sin(pi * z)) - (z - Complex(half)) * log(z / (one - z));
    // The logs are principal, so off the real axis the sides may differ by 2 pi i k.
    Complex d = mu(one - z) - rhs;
    Real two_pi = 2 * const_pi();
    d.im -= two_pi * floor(d.im / two_pi + Real(frac(1, 2)));
    res.reflection = abs(d);
  }
  if (on_cut(z)) {
    res.skipped.push_back("duplication");
    res.skipped.push_back("multiplication");
  } else {
    Complex rhs = mu(z + Complex(half)) + mu(z) + z * log(one + reciprocal(Complex(2) * z)) - Complex(half);
    res.duplication = abs(mu(Complex(2) * z) - rhs);
    Complex sum = mu(z);
    for (int k = 1; k < n; ++k) {
      Complex zk = z + Complex(Real(frac(k, n)));
      sum += mu(zk) + (zk - Complex(half)) * log(zk);
    }
    sum -= Complex(Real(n - 1)) * (Complex(half) + z * log(z));
    res.multiplication = abs(mu(Complex(Real(n)) * z) - sum);
  }
  if (z.is_real() && z.re.is_zero()) {
    res.integral_mean = integral_mean_at_zero(ctx);
  } else if (on_cut(z)) {
    res.skipped.push_back("integral_mean");
  } else {
    Integrand<Complex> f = [&](const Real& s) { return mu_auto(z + Complex(s), ctx); };
    Complex integral = tanh_sinh<Complex>(f, Real(0), Real(1), ctx).value;
    Complex closed = (z * (z + one) * log(z / (z + one)) + z + Complex(half)) * half;
    res.integral_mean = abs(integral - closed);
  }
  return res;
}

Real integral_mean_at_zero(const PrecisionContext& ctx) {
  PrecisionGuard g(ctx);
  Integrand<Real> f = [&](const Real& t) { return mu_auto(Complex(t), ctx).re; };
  Real integral = tanh_sinh<Real>(f, Real(0), Real(1), ctx).value;
  return abs(integral - Real(frac(1, 4)));
}

Complex log_gamma(const Complex& z, const PrecisionContext& ctx) {
  if (!(z.re > Real(0))) throw DomainError("log_gamma: needs Re z > 0");
  PrecisionGuard g(ctx);
  Real half(frac(1, 2));
  return mu_auto(z, ctx) + (z - Complex(half)) * log(z) - z + Complex(log(2 * const_pi()) * half);
}

Complex hermite_term(long k, const Complex& z, const Rat& a) {
  Rat c = bernoulli_poly(static_cast<int>(k + 1), a) / Rat(k * (k + 1));
  if (k % 2 == 0) c = -c;
  return Complex(Real(c)) / pow(z, k);
}

Complex hermite_log_gamma(const Complex& z, const Rat& a, long K, const PrecisionContext& ctx) {
  PrecisionGuard g(ctx);
  Real half(frac(1, 2));
  Complex v = (z + Complex(Real(a - frac(1, 2)))) * log(z) - z + Complex(log(2 * const_pi()) * half);
  for (long k = 1; k <= K; ++k) v += hermite_term(k, z, a);
  return v;
}

BoundReport bound_check(const Complex& z, const PrecisionContext& ctx) {
  if (!(z.re > Real(0))) throw DomainError("bound_check: needs Re z > 0");
  PrecisionGuard g(ctx);
  BoundReport rep;
  rep.mu_abs = abs(mu_reference(z, ctx));
  rep.mu_re = mu_reference(Complex(z.re), ctx).re;
  rep.bound = 1 / (12 * z.re);
  Real slack = ten_pow(-(ctx.digits - 5));
  if (rep.mu_abs > rep.mu_re * (1 + slack)) {
    rep.ok = false;
    rep.detail = "|mu(z)| > mu(Re z)";
  }
  if (rep.mu_re > rep.bound) {
    rep.ok = false;
    rep.detail += (rep.detail.empty() ? "" : "; ") + std::string("mu(Re z) > 1/(12 Re z)");
  }
  return rep;
}

bool mu_decreasing_on(const std::vector<Real>& grid, const PrecisionContext& ctx) {
  PrecisionGuard g(ctx);
  Real prev(0);
  for (size_t i = 0; i < grid.size(); ++i) {
    Real v = mu_reference(Complex(grid[i]), ctx).re;
    if (!(v > Real(0))) return false;
    if (i > 0 && !(v < prev)) return false;
    prev = v;
  }
  return true;
}

}  // namespace binet
