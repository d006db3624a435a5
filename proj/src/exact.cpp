#include "binet/exact.hpp"

#include <deque>
#include <mutex>

namespace binet {

StirlingTable::StirlingTable(Kind kind, int max_m) : kind_(kind) {
  if (max_m < 0) throw DomainError("stirling table: negative size");
  rows_.resize(max_m + 1);
  rows_[0] = {Int(1)};
  for (int m = 0; m < max_m; ++m) {
    const auto& prev = rows_[m];
    auto& next = rows_[m + 1];
    next.assign(m + 2, Int(0));
    for (int k = 1; k <= m + 1; ++k) {
      Int v = prev[k - 1];
      if (k <= m) {
        if (kind == Kind::FirstSigned)
          v -= m * prev[k];
        else
          v += k * prev[k];
      }
      next[k] = std::move(v);
    }
  }
}

const Int& StirlingTable::operator()(int m, int k) const {
  if (m < 0 || k < 0 || k > m) throw DomainError("stirling index out of range");
  if (m > max_m()) throw DomainError("stirling table too small");
  return rows_[m][k];
}

namespace {

struct TableCache {
  std::mutex mu;
  std::deque<std::unique_ptr<StirlingTable>> tables;
};

const StirlingTable& cached_table(TableCache& cache, StirlingTable::Kind kind, int min_rows) {
  std::lock_guard<std::mutex> lock(cache.mu);
  if (cache.tables.empty() || cache.tables.back()->max_m() < min_rows) {
    int size = cache.tables.empty() ? 256 : cache.tables.back()->max_m();
    while (size < min_rows) size *= 2;
    cache.tables.push_back(std::make_unique<StirlingTable>(kind, size));
  }
  return *cache.tables.back();
}

TableCache g_s1, g_s2;

}  // namespace

const StirlingTable& stirling1_table(int min_rows) {
  return cached_table(g_s1, StirlingTable::Kind::FirstSigned, min_rows);
}

const StirlingTable& stirling2_table(int min_rows) {
  return cached_table(g_s2, StirlingTable::Kind::Second, min_rows);
}

Int stirling_first(int m, int k) {
  if (m < 0 || k < 0 || k > m) throw DomainError("stirling_first: need 0 <= k <= m");
  return stirling1_table(m)(m, k);
}

Int stirling_second(int m, int k) {
  if (m < 0 || k < 0 || k > m) throw DomainError("stirling_second: need 0 <= k <= m");
  return stirling2_table(m)(m, k);
}

Rat frac(const Int& n, const Int& d) {
  if (d == 0) throw DomainError("zero denominator");
  Rat q(n, d);
  q.canonicalize();
  return q;
}

Int binomial(long n, long k) {
  if (n < 0) throw DomainError("binomial: negative n");
  if (k < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Int factorial(long n) {
  if (n < 0) throw DomainError("factorial: negative argument");
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Rat rat_pow(const Rat& a, long e) {
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), a.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(r.get_den_mpz_t(), a.get_den_mpz_t(), static_cast<unsigned long>(e));
  r.canonicalize();
  return r;
}

namespace {
std::mutex g_bern_mu;
std::deque<Rat> g_bern{Rat(1)};
}  // namespace

// B_n = -1/(n+1) sum_{j<n} C(n+1,j) B_j. Deque keeps references stable.
const Rat& bernoulli_number(int n) {
  if (n < 0) throw DomainError("bernoulli_number: negative index");
  std::lock_guard<std::mutex> lock(g_bern_mu);
  while (static_cast<int>(g_bern.size()) <= n) {
    int k = static_cast<int>(g_bern.size());
    if (k > 1 && k % 2 == 1) {
      g_bern.emplace_back(0);
      continue;
    }
    Rat s = 0;
    for (int j = 0; j < k; ++j)
      if (j < 2 || j % 2 == 0) s += Rat(binomial(k + 1, j)) * g_bern[j];
    s /= -(k + 1);
    g_bern.push_back(s);
  }
  return g_bern[n];
}

Rat bernoulli_poly(int n, const Rat& a) {
  if (n < 0) throw DomainError("bernoulli_poly: negative index");
  // Horner in a over coefficients C(n,l) B_l a^{n-l}.
  Rat r = 0;
  for (int l = 0; l <= n; ++l) r = r * a + Rat(binomial(n, l)) * bernoulli_number(l);
  return r;
}

std::vector<Rat> log_quotient_coeffs(int n, int m_max) {
  if (n < 1) throw DomainError("log_quotient_coeffs: n >= 1 required");
  if (m_max < 0) return {};
  const auto& s1 = stirling1_table(m_max);
  std::vector<Rat> out(m_max + 1);
  for (int m = 0; m <= m_max; ++m) {
    Rat acc = 0;
    for (int k = 0; k <= m; ++k) {
      if (s1(m, k) == 0) continue;
      acc += frac(factorial(k) * s1(m, k), factorial(k + n));
    }
    acc.canonicalize();
    out[m] = acc;
  }
  return out;
}

std::string to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat parse_rational(const std::string& s) {
  std::string t;
  for (char c : s)
    if (c != ' ' && c != '\t' && c != '\r' && c != '\n') t += c;
  if (t.empty()) throw DomainError("empty rational");
  auto slash = t.find('/');
  if (slash != std::string::npos) {
    Rat r = parse_rational(t.substr(0, slash)) / parse_rational(t.substr(slash + 1));
    return r;
  }
  // decimal with optional exponent, parsed exactly
  size_t epos = t.find_first_of("eE");
  long exp10 = 0;
  std::string mant = t;
  if (epos != std::string::npos) {
    exp10 = std::stol(t.substr(epos + 1));
    mant = t.substr(0, epos);
  }
  bool neg = false;
  if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) {
    neg = mant[0] == '-';
    mant = mant.substr(1);
  }
  auto dot = mant.find('.');
  std::string digits = mant;
  if (dot != std::string::npos) {
    digits = mant.substr(0, dot) + mant.substr(dot + 1);
    exp10 -= static_cast<long>(mant.size() - dot - 1);
  }
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw DomainError("not a number: " + s);
  Rat r(Int(digits, 10));
  Int p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
  if (exp10 >= 0)
    r *= Rat(p10);
  else
    r /= Rat(p10);
  r.canonicalize();
  return neg ? Rat(-r) : r;
}

}  // namespace binet
