#include "binet/gamma.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "binet/binet_poly.hpp"
#include "binet/mu.hpp"
#include "binet/stieltjes.hpp"

namespace binet {

namespace {

std::mutex columns_mu;
std::map<int, std::vector<Rat>> columns;

long shift_for(const Complex& z, const PrecisionContext& ctx) {
  double target = 1.5 * ctx.work_digits();
  double re = z.re.to_double();
  return re >= target ? 0 : static_cast<long>(std::ceil(target - re));
}

void require_right_half(const Complex& z, const char* who) {
  if (!(z.re > Real(0))) throw DomainError(std::string(who) + ": needs Re z > 0");
}

// sum_{m>=j+1} p_j(m) / prod_{k<m}(z+k), with the product
// advanced from m = 1.
SeriesEvaluation p_factorial_sum(int j, const Complex& z, long K, const PrecisionContext& ctx) {
  const long first = j + 1;
  Complex denom(1);
  for (long k = 0; k < first - 1; ++k) denom *= z + Complex(Real(k));
  int have = 0;
  const std::vector<Rat>* col = nullptr;
  TermGenerator gen = [&](long m) {
    if (m > have) {
      have = std::max<int>(2 * have, static_cast<int>(m) + 32);
      col = &p_column(j, have);
    }
    denom *= z + Complex(Real(m - 1));
    return Complex(Real((*col)[m])) / denom;
  };
  StopRule rule = K > 0 ? StopRule::fixed(K, first) : StopRule::tail(first, 20000);
  return sum_series(gen, rule, ctx);
}

}  // namespace

const std::vector<Rat>& p_column(int j, int m_max) {
  if (j < 0) throw DomainError("p_column: need j >= 0");
  std::lock_guard<std::mutex> lock(columns_mu);
  auto& col = columns[j];
  if (static_cast<int>(col.size()) > m_max) return col;
  int from = static_cast<int>(col.size());
  col.resize(m_max + 1);
  for (int m = from; m <= m_max; ++m) col[m] = m >= j + 1 ? p_entry(j, m) : Rat(0);
  return col;
}

SeriesEvaluation digamma_factorial(const Complex& z, long K, const PrecisionContext& ctx) {
  require_right_half(z, "digamma_factorial");
  PrecisionGuard g(ctx);
  long n = K > 0 ? 0 : shift_for(z, ctx);
  Complex zs = z + Complex(Real(n));
  SeriesEvaluation r = p_factorial_sum(1, zs, K > 0 ? K - 1 : 0, ctx);
  r.value = log(zs) - reciprocal(Complex(2) * zs) - r.value;
  for (long k = 0; k < n; ++k) r.value -= reciprocal(z + Complex(Real(k)));
  return r;
}

SeriesEvaluation digamma_asymptotic(const Complex& z, long K, const PrecisionContext& ctx) {
  if (z.re.is_zero() && z.im.is_zero()) throw DomainError("digamma_asymptotic: needs z != 0");
  PrecisionGuard g(ctx);
  Complex w2 = reciprocal(z * z);
  Complex pw(1);
  TermGenerator gen = [&](long m) {
    pw *= w2;
    return -(pw * Real(bernoulli_number(2 * m) / Rat(2 * m)));
  };
  SeriesEvaluation r = sum_series(gen, StopRule::fixed(K), ctx);
  r.value += log(z) - reciprocal(Complex(2) * z);
  return r;
}

Rat harmonic_exact(long n) {
  Rat h = 0;
  for (long k = 1; k <= n; ++k) h += frac(1, k);
  return h;
}

SeriesEvaluation harmonic(long n, long K, const PrecisionContext& ctx) {
  if (n < 1) throw DomainError("harmonic: need n >= 1");
  PrecisionGuard g(ctx);
  const auto& col = p_column(1, static_cast<int>(std::max(K, 2L)));
  // (n-1)!/(n-1+m)! = 1/prod_{k=0}^{m-1}(n+k)
  Rat sum = 0, prod = 1, last = 0;
  for (long m = 1; m <= K; ++m) {
    prod *= n + m - 1;
    if (m < 2) continue;
    last = col[m] / prod;
    sum += last;
  }
  SeriesEvaluation r;
  // The m-sum enters with a minus sign, as it does in the digamma series.
  r.value = Complex(log(Real(n)) + euler_gamma(ctx) + Real(frac(1, 2 * n)) - Real(sum));
  r.terms_used = K < 2 ? 0 : K - 1;
  r.last_term = abs(Real(last));
  r.tail_estimate = r.last_term;
  r.converged = true;
  r.note = "fixed";
  return r;
}

SeriesEvaluation polygamma_factorial(int n, const Complex& z, long K, const PrecisionContext& ctx) {
  if (n < 1) throw DomainError("polygamma_factorial: need n >= 1");
  require_right_half(z, "polygamma_factorial");
  PrecisionGuard g(ctx);
  long shift = K > 0 ? 0 : shift_for(z, ctx);
  Complex zs = z + Complex(Real(shift));
  SeriesEvaluation r = p_factorial_sum(n + 1, zs, K, ctx);
  Complex inner = pow(zs, -static_cast<long>(n)) + pow(zs, -static_cast<long>(n) - 1) * Real(frac(n, 2)) +
                  r.value * Real(static_cast<long>(n + 1) * n);
  Real lead(factorial(n - 1));
  if (n % 2 == 0) lead = -lead;
  r.value = inner * lead;
  if (shift > 0) {
    // psi^(n)(z) = psi^(n)(z+N) - (-1)^n n! sum_{k<N} (z+k)^{-n-1}
    Complex s(0);
    for (long k = 0; k < shift; ++k) s += pow(z + Complex(Real(k)), -static_cast<long>(n) - 1);
    Real c(factorial(n));
    if (n % 2 == 1) c = -c;
    r.value -= s * c;
  }
  return r;
}

SeriesEvaluation polygamma_reference(int n, const Complex& z, const PrecisionContext& ctx) {
  if (n < 1) throw DomainError("polygamma_reference: need n >= 1");
  require_right_half(z, "polygamma_reference");
  PrecisionGuard g(ctx);
  Real c(factorial(n));
  if (n % 2 == 0) c = -c;
  SeriesEvaluation r;
  r.value = hurwitz_zeta(n + 1, z, ctx) * c;
  r.converged = true;
  r.note = "euler-maclaurin";
  r.last_term = Real(0);
  r.tail_estimate = ten_pow(-ctx.work_digits());
  return r;
}

}  // namespace binet
