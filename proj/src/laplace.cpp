#include "binet/laplace.hpp"

#include <cmath>

namespace binet {

namespace {

// Taylor sum of f at complex t; stops once terms fall below the working precision.
Complex taylor_sum(const TaylorFunction& f, const Complex& t) {
  const Real eps = ten_pow(-(bits_to_digits(working_bits()) + 2));
  Complex sum(0), pw(1);
  int quiet = 0;
  for (int k = 0; k < 5000; ++k) {
    Rat c = f.coeff(k);
    if (c != 0) {
      Complex term = pw * Real(c);
      sum += term;
      quiet = abs(term) <= eps * abs(sum) ? quiet + 1 : 0;
    } else {
      ++quiet;
    }
    if (quiet >= 4 && k > 8) break;
    pw *= t;
  }
  return sum;
}

// Incrementally extended g_m(beta) and phi_m(alpha, beta).
class PhiStream {
 public:
  PhiStream(const TaylorFunction& f, const Rat& alpha, const Rat& beta) : f_(f) {
    table_.alpha = alpha;
    table_.beta = beta;
  }

  const PhiTable& table() const { return table_; }

  void extend(int m_max) {
    int from = static_cast<int>(table_.phi.size());
    if (m_max < from) return;
    const auto& s1 = stirling1_table(m_max + 1);
    while (static_cast<int>(fk_.size()) <= m_max) {
      int k = static_cast<int>(fk_.size());
      // k! f_k beta^k
      fk_.push_back(Rat(factorial(k)) * f_.coeff(k) * rat_pow(table_.beta, k));
    }
    for (int m = from; m <= m_max; ++m) {
      Rat g = 0;
      if (m == 0) {
        g = fk_[0];
      } else {
        for (int k = 1; k <= m; ++k) {
          Int s = s1(m, k);
          if ((m - k) % 2 == 1) s = -s;
          g += fk_[k] * Rat(s);
        }
        g /= Rat(factorial(m));
      }
      table_.g.push_back(g);
      // r_n = (alpha)_n / n!
      if (rising_.empty()) {
        rising_.push_back(Rat(1));
      } else {
        long n = static_cast<long>(rising_.size());
        rising_.push_back(rising_.back() * (table_.alpha + Rat(n - 1)) / Rat(n));
      }
      Rat p = 0;
      for (int j = 0; j <= m; ++j) p += rising_[m - j] * table_.g[j];
      table_.phi.push_back(p);
    }
  }

 private:
  const TaylorFunction& f_;
  PhiTable table_;
  std::vector<Rat> fk_;
  std::vector<Rat> rising_;
};

}  // namespace

TaylorFunction exp_function(const Rat& b) {
  TaylorFunction f;
  f.name = "exp:b=" + to_string(b);
  f.coeff = [b](int k) -> Rat { return rat_pow(b, k) / Rat(factorial(k)); };
  f.abscissa = mpq_get_d(b.get_mpq_t());
  f.eval = [b](const Complex& t) { return exp(t * Real(b)); };
  return f;
}

TaylorFunction mittag_leffler(int a, int b) {
  if (a < 1 || b < 1) throw DomainError("mittag_leffler: integer a, b >= 1 only");
  TaylorFunction f;
  f.name = "ml:a=" + std::to_string(a) + ",b=" + std::to_string(b);
  f.coeff = [a, b](int k) -> Rat { return frac(1, factorial(b + static_cast<long>(a) * k - 1)); };
  // E_{a,b}(t) grows like exp(t^{1/a}); abscissa 1 covers a = 1, 0 otherwise.
  f.abscissa = a == 1 ? 1 : 0;
  if (a == 2 && b == 1) {
    f.eval = [](const Complex& t) {
      Complex s = sqrt(t);
      return (exp(s) + exp(-s)) * Real(frac(1, 2));
    };
  }
  return f;
}

TaylorFunction reciprocal_one_plus() {
  TaylorFunction f;
  f.name = "1/(1+t)";
  f.coeff = [](int k) -> Rat { return Rat(k % 2 == 0 ? 1 : -1); };
  f.radius = 1;
  f.eval = [](const Complex& t) { return reciprocal(Complex(1) + t); };
  return f;
}

TaylorFunction binet_integrand() {
  TaylorFunction f;
  f.name = "binet";
  // 1/(e^t-1) - 1/t + 1/2 = sum_{n>=2} B_n t^{n-1}/n!
  f.coeff = [](int k) -> Rat { return bernoulli_number(k + 2) / Rat(factorial(k + 2)); };
  f.radius = 2 * 3.141592653589793;
  f.eval = [](const Complex& t) {
    Complex inv = reciprocal(t);
    return (reciprocal(exp(t) - Complex(1)) - inv + Complex(Real(frac(1, 2)))) * inv;
  };
  return f;
}

TaylorFunction from_coefficients(std::vector<Rat> coeffs, std::string name) {
  TaylorFunction f;
  f.name = std::move(name);
  auto shared = std::make_shared<std::vector<Rat>>(std::move(coeffs));
  f.coeff = [shared](int k) -> Rat { return k < static_cast<int>(shared->size()) ? (*shared)[k] : Rat(0); };
  return f;
}

std::vector<Rat> taylor_coeffs(const TaylorFunction& f, int m_max) {
  std::vector<Rat> out(m_max + 1);
  for (int k = 0; k <= m_max; ++k) out[k] = f.coeff(k);
  return out;
}

std::vector<Rat> g_from_f(const std::vector<Rat>& f, const Rat& beta, int m_max) {
  if (static_cast<int>(f.size()) <= m_max) throw DomainError("g_from_f: not enough coefficients");
  const auto& s1 = stirling1_table(m_max + 1);
  std::vector<Rat> g(m_max + 1);
  g[0] = f[0];
  for (int m = 1; m <= m_max; ++m) {
    Rat sum = 0;
    for (int k = 1; k <= m; ++k) {
      Int s = s1(m, k);
      if ((m - k) % 2 == 1) s = -s;
      sum += Rat(factorial(k) * s) * f[k] * rat_pow(beta, k);
    }
    g[m] = sum / Rat(factorial(m));
  }
  return g;
}

std::vector<Rat> f_from_g(const std::vector<Rat>& g, const Rat& beta, int m_max) {
  if (static_cast<int>(g.size()) <= m_max) throw DomainError("f_from_g: not enough coefficients");
  const auto& s2 = stirling2_table(m_max + 1);
  std::vector<Rat> f(m_max + 1);
  f[0] = g[0];
  for (int m = 1; m <= m_max; ++m) {
    Rat sum = 0;
    for (int k = 1; k <= m; ++k) {
      Int s = factorial(k) * s2(m, k);
      if ((m - k) % 2 == 1) s = -s;
      sum += Rat(s) * g[k];
    }
    f[m] = sum / Rat(factorial(m)) / rat_pow(beta, m);
  }
  return f;
}

Rat phi(int m, const Rat& alpha, const Rat& beta, const TaylorFunction& f, PhiForm form) {
  if (m < 0) throw DomainError("phi: need m >= 0");
  if (beta <= 0) throw DomainError("phi: need beta > 0");
  if (form == PhiForm::Cauchy) {
    PhiStream s(f, alpha, beta);
    s.extend(m);
    return s.table().phi[m];
  }
  const auto& s1 = stirling1_table(m + 1);
  auto abs_s = [&](int k) {
    Int s = s1(m, k);
    return s < 0 ? Int(-s) : s;
  };
  std::vector<Rat> fb(m + 1);  // f_j beta^j
  for (int j = 0; j <= m; ++j) fb[j] = f.coeff(j) * rat_pow(beta, j);
  Rat sum = 0;
  if (form == PhiForm::DoubleStirling) {
    for (int k = 0; k <= m; ++k) {
      Rat inner = 0;
      for (int j = 0; j <= m - k; ++j) inner += Rat(factorial(k + j) * abs_s(k + j)) * fb[j];
      sum += inner * rat_pow(alpha, k) / Rat(factorial(k));
    }
  } else {
    // D_j = d^j/dt^j (f(t) e^{(alpha/beta) t}) at 0
    Rat ab = alpha / beta;
    for (int j = 0; j <= m; ++j) {
      Rat d = 0;
      for (int i = 0; i <= j; ++i) d += f.coeff(j - i) * rat_pow(ab, i) / Rat(factorial(i));
      d *= Rat(factorial(j));
      sum += d * Rat(abs_s(j)) * rat_pow(beta, j);
    }
  }
  return sum / Rat(factorial(m));
}

Complex phi_contour(int m, const Rat& alpha, const Rat& beta, const TaylorFunction& f, const PrecisionContext& ctx) {
  if (m < 0) throw DomainError("phi_contour: need m >= 0");
  if (beta <= 0) throw DomainError("phi_contour: need beta > 0");
  PrecisionGuard g(ctx);
  // Aliasing error ~ phi_{m+N} 2^{-N}.
  const int N = std::max(8 * m, static_cast<int>(std::ceil((ctx.work_digits() + 5) * 3.3219280948873623)) + 2 * m + 8);
  const Real half(frac(1, 2));
  const Real two_pi = 2 * const_pi();
  const Complex a{Real(alpha)};
  const Real b{beta};
  Complex sum(0);
  for (int k = 0; k < N; ++k) {
    Real th = two_pi * k / N;
    Complex w(half * cos(th), half * sin(th));
    Complex l = log(Complex(1) + w);
    Complex t = -(l * b);
    Complex fv = f.eval ? f.eval(t) : taylor_sum(f, t);
    sum += fv * exp(-(a * l)) / pow(w, static_cast<long>(m));
  }
  sum = sum / Real(N);
  return m % 2 == 0 ? sum : -sum;
}

PhiTable phi_table(const TaylorFunction& f, const Rat& alpha, const Rat& beta, int m_max) {
  if (beta <= 0) throw DomainError("phi_table: need beta > 0");
  PhiStream s(f, alpha, beta);
  s.extend(m_max);
  return s.table();
}

RadiusCheck radius_check(const std::vector<Rat>& g, int window) {
  RadiusCheck rc;
  int M = static_cast<int>(g.size()) - 1;
  if (M < window + 1) return rc;
  const double limit = 1 + 1e-3;
  int over = 0;
  for (int m = M - window + 1; m <= M; ++m) {
    if (g[m] == 0) continue;
    long e;
    double mant = mpq_get_d(g[m].get_mpq_t());
    double lg;
    if (mant != 0 && std::isfinite(mant)) {
      lg = std::log(std::fabs(mant));
    } else {
      // outside double range: go through the numerator and denominator
      double nd = mpz_get_d_2exp(&e, g[m].get_num_mpz_t());
      lg = std::log(std::fabs(nd)) + e * std::log(2.0);
      long e2;
      double dd = mpz_get_d_2exp(&e2, g[m].get_den_mpz_t());
      lg -= std::log(dd) + e2 * std::log(2.0);
    }
    double root = std::exp(lg / m);
    rc.worst_root = std::max(rc.worst_root, root);
    if (root > limit) ++over;
  }
  rc.tripped = over == window;
  return rc;
}

LaplaceResult factorial_series_eval(const Complex& z, const Rat& alpha, const Rat& beta, long K,
                                    const TaylorFunction& f, const PrecisionContext& ctx) {
  if (beta <= 0) throw DomainError("factorial_series_eval: need beta > 0");
  if (!(z.re > Real(f.abscissa))) throw DomainError("factorial_series_eval: needs Re z > abscissa");
  if (!(Real(alpha / beta) > -z.re)) throw DomainError("factorial_series_eval: needs alpha/beta > -Re z");
  PrecisionGuard g(ctx);
  PhiStream stream(f, alpha, beta);
  const Complex base = z * Real(beta) + Complex(Real(alpha));  // beta z + alpha
  Complex ratio = reciprocal(base);                            // m!/prod_{k<=m}(base+k)
  int have = -1;
  TermGenerator gen = [&](long m) {
    if (m > have) {
      have = std::max<int>(2 * have + 2, static_cast<int>(m) + 16);
      stream.extend(have);
    }
    if (m > 0) ratio = ratio * Real(m) / (base + Complex(Real(m)));
    return ratio * Real(stream.table().phi[m]);
  };
  StopRule rule = K > 0 ? StopRule::fixed(K, 0) : StopRule::tail(0, 4000);
  LaplaceResult r;
  r.eval = sum_series(gen, rule, ctx);
  r.eval.value = r.eval.value * Real(beta);
  auto gs = stream.table().g;
  if (static_cast<long>(gs.size()) > r.eval.terms_used) gs.resize(r.eval.terms_used);
  r.radius = radius_check(gs);
  return r;
}

SeriesEvaluation laurent_eval(const Complex& z, long K, const TaylorFunction& f, const PrecisionContext& ctx) {
  if (z.re.is_zero() && z.im.is_zero()) throw DomainError("laurent_eval: needs z != 0");
  PrecisionGuard g(ctx);
  Complex w = reciprocal(z);
  Complex pw = w;  // k! z^{-k-1}
  std::vector<Real> mags;
  TermGenerator gen = [&](long k) {
    if (k > 0) pw = pw * w * Real(k);
    Complex t = pw * Real(f.coeff(static_cast<int>(k)));
    mags.push_back(abs(t));
    return t;
  };
  SeriesEvaluation r = sum_series(gen, StopRule::fixed(K + 1, 0), ctx);
  size_t n = mags.size();
  if (n >= 3 && mags[n - 1] > mags[n - 2] && mags[n - 2] > mags[n - 3]) {
    r.converged = false;
    r.note = "diverging";
  }
  return r;
}

SeriesEvaluation resum_f(const Real& t, const Rat& alpha, long K, const TaylorFunction& f,
                         const PrecisionContext& ctx) {
  if (alpha <= 0) throw DomainError("resum_f: needs alpha > 0");
  if (t < Real(0)) throw DomainError("resum_f: needs t >= 0");
  PrecisionGuard g(ctx);
  PhiStream stream(f, alpha, Rat(1));
  Real x = -expm1(-t);
  Real pw(1);
  int have = -1;
  TermGenerator gen = [&](long m) {
    if (m > have) {
      have = std::max<int>(2 * have + 2, static_cast<int>(m) + 16);
      stream.extend(have);
    }
    if (m > 0) pw *= x;
    return Complex(pw * Real(stream.table().phi[m]));
  };
  StopRule rule = K > 0 || t.is_zero() ? StopRule::fixed(K + 1, 0) : StopRule::tail(0, 4000);
  SeriesEvaluation r = sum_series(gen, rule, ctx);
  r.value = r.value * exp(-Real(alpha) * t);
  return r;
}

}  // namespace binet
