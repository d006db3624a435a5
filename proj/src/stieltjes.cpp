#include "binet/stieltjes.hpp"

#include <cmath>
#include <mutex>

#include "binet/exact.hpp"

namespace binet {

namespace {

// Euler-transform weights W_j = sum_{m=j}^{N} C(m-1,j-1) 2^{-m}
// = 2^{-N} sum_{i>=j} C(N,i), j = 1..N (index 0 unused).
std::vector<Real> euler_weights(int N) {
  std::vector<Int> row(N + 1);
  row[0] = 1;
  for (int i = 1; i <= N; ++i) row[i] = row[i - 1] * (N - i + 1) / i;
  std::vector<Real> w(N + 1);
  Int tail = 0;
  for (int j = N; j >= 1; --j) {
    tail += row[j];
    w[j] = ldexp(Real(tail), -N);
  }
  return w;
}

int terms_for(long digits) { return static_cast<int>(std::ceil(digits * 3.3219280948873623)) + 20; }

struct EtaBatch {
  std::vector<Real> eta;    // eta^(k)(1), k = 0..kmax
  std::vector<Real> scale;  // largest summand magnitude for each k
};

EtaBatch eta_batch(int kmax, int N) {
  auto w = euler_weights(N);
  EtaBatch b;
  b.eta.assign(kmax + 1, Real(0));
  b.scale.assign(kmax + 1, Real(0));
  for (int j = 1; j <= N; ++j) {
    Real x = log(Real(j));
    Real t = w[j] / j;
    if (j % 2 == 1) t = -t;  // (-1)^j
    for (int k = 0; k <= kmax; ++k) {
      b.eta[k] += t;
      Real a = abs(t);
      if (a > b.scale[k]) b.scale[k] = a;
      if (j == 1) break;  // log 1 = 0
      t *= x;
    }
  }
  for (int k = 0; k <= kmax; k += 2) b.eta[k] = -b.eta[k];  // overall (-1)^{k+1}
  return b;
}

// Raises N until batches at N and N+40 agree to 10^-rel relative in every
// entry; returns the larger batch.
EtaBatch eta_settled(int kmax, long rel, int& N) {
  // Rounding noise floor; cancellation is the caller's concern.
  const Real noise = ten_pow(-(bits_to_digits(working_bits()) - 3));
  for (int attempt = 0; attempt < 8; ++attempt) {
    EtaBatch b = eta_batch(kmax, N);
    EtaBatch b2 = eta_batch(kmax, N + 40);
    double worst = -1e300;
    for (int k = 0; k <= kmax; ++k) {
      Real diff = abs(b2.eta[k] - b.eta[k]);
      if (diff <= noise * b2.scale[k]) continue;
      worst = std::max(worst, log10_abs(diff / abs(b2.eta[k])));
    }
    if (worst <= -static_cast<double>(rel)) return b2;
    N += static_cast<int>(std::ceil((worst + rel) * 3.3219280948873623)) + 40;
  }
  throw DomainError("eta: Euler transform did not settle");
}

double lost_digits(const Real& scale, const Real& value) {
  if (value.is_zero()) return 0;
  double d = log10_abs(scale) - log10_abs(value);
  return d > 0 ? d : 0;
}

std::mutex g_tables_mu;
std::vector<std::shared_ptr<const ZetaTaylorTable>> g_tables;

}  // namespace

Real eta_derivative(int k, const PrecisionContext& ctx) {
  if (k < 0) throw DomainError("eta_derivative: need k >= 0");
  long work = ctx.work_digits() + 5;
  int N = terms_for(work);
  for (int attempt = 0; attempt < 4; ++attempt) {
    PrecisionGuard g(work);
    EtaBatch b = eta_settled(k, ctx.work_digits(), N);
    double lost = lost_digits(b.scale[k], b.eta[k]);
    long need = ctx.work_digits() + static_cast<long>(std::ceil(lost)) + 5;
    if (need > work) {
      work = need;
      continue;
    }
    PrecisionGuard out(ctx);
    return Real(0) + b.eta[k];
  }
  throw DomainError("eta_derivative: precision escalation failed");
}

std::shared_ptr<const ZetaTaylorTable> g_table(int m_max, const PrecisionContext& ctx) {
  if (m_max < 0) throw DomainError("g_table: need m_max >= 0");
  std::lock_guard<std::mutex> lock(g_tables_mu);
  for (const auto& t : g_tables)
    if (t->digits >= ctx.digits && static_cast<int>(t->g.size()) > m_max) return t;

  const int kmax = std::max(m_max, 1);
  long work = ctx.work_digits() + 10;
  int N = terms_for(work);
  double worst_g = 0;  // digits lost combining eta values into g
  for (int attempt = 0; attempt < 10; ++attempt) {
    PrecisionGuard guard(work);
    EtaBatch b = eta_settled(kmax, ctx.work_digits() + static_cast<long>(std::ceil(worst_g)), N);
    double worst_eta = 0;
    for (int k = 0; k <= kmax; ++k) worst_eta = std::max(worst_eta, lost_digits(b.scale[k], b.eta[k]));

    Real l2 = const_log2();
    std::vector<Real> l2pow(kmax + 1);  // log^{j-1} 2
    l2pow[0] = 1 / l2;
    for (int j = 1; j <= kmax; ++j) l2pow[j] = l2pow[j - 1] * l2;

    auto table = std::make_shared<ZetaTaylorTable>();
    table->g.assign(kmax + 1, Real(0));
    table->g[0] = 1;
    double worst = 0;
    for (int k = 1; k <= kmax; ++k) {
      Real sum(0), biggest(0);
      for (int j = 0; j <= k; ++j) {
        const Rat& B = bernoulli_number(j);
        if (B == 0) continue;
        Real t = Real(Rat(binomial(k, j)) * B) * b.eta[k - j] * l2pow[j];
        if (j % 2 == 1) t = -t;
        sum += t;
        Real a = abs(t);
        if (a > biggest) biggest = a;
      }
      table->g[k] = sum / Real(factorial(k));
      worst = std::max(worst, lost_digits(biggest, sum));
    }
    long need = ctx.work_digits() + static_cast<long>(std::ceil(worst + worst_eta)) + 5;
    if (need > work || worst > worst_g + 1) {
      work = std::max(work, need);
      worst_g = worst + 2;
      continue;
    }
    table->g.resize(m_max + 1);
    table->digits = ctx.digits;
    table->work_digits = static_cast<int>(work);
    table->max_cancellation = worst + worst_eta;
    g_tables.push_back(table);
    return table;
  }
  throw DomainError("g_table: precision escalation failed");
}

Real zeta_int(int k, const PrecisionContext& ctx) {
  if (k < 2) throw DomainError("zeta_int: need k >= 2");
  // Large k: the plain Dirichlet sum is short; tail < J^{1-k}/(k-1).
  const long w_digits = ctx.work_digits() + 5;
  double J = std::ceil(std::pow(10.0, static_cast<double>(w_digits) / (k - 1))) + 1;
  if (J <= 64) {
    PrecisionGuard g(w_digits);
    Real sum(0);
    for (int j = static_cast<int>(J); j >= 1; --j) sum += pow(Real(j), -static_cast<long>(k));
    PrecisionGuard out(ctx);
    return Real(0) + sum;
  }
  Real eta;
  {
    PrecisionGuard g(ctx.work_digits() + 5);
    int N = terms_for(ctx.work_digits() + 5);
    auto w = euler_weights(N);
    Real sum(0);
    for (int j = 1; j <= N; ++j) {
      Real t = w[j] / pow(Real(j), static_cast<long>(k));
      if (j % 2 == 0) t = -t;
      sum += t;
    }
    eta = sum / (1 - ldexp(Real(1), 1 - k));
  }
  PrecisionGuard out(ctx);
  return Real(0) + eta;
}

Real euler_gamma(const PrecisionContext& ctx) {
  auto t = g_table(1, ctx);
  PrecisionGuard out(ctx);
  return Real(0) + t->g[1];
}

}  // namespace binet
