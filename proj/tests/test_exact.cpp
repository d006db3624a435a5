#include <doctest.h>

#include <functional>

#include "binet/exact.hpp"

using namespace binet;

namespace {

// Coefficients of prod_{j<m}(x - j) by repeated polynomial multiplication.
std::vector<Int> falling_poly(int m) {
  std::vector<Int> p{1};
  for (int j = 0; j < m; ++j) {
    std::vector<Int> q(p.size() + 1);
    for (size_t k = 0; k < p.size(); ++k) {
      q[k + 1] += p[k];
      q[k] -= Int(j) * p[k];
    }
    p = q;
  }
  return p;
}

// Set partitions of {0..n-1} into exactly k blocks, by enumerating restricted growth strings.
long count_partitions(int n, int k) {
  long count = 0;
  std::vector<int> a(n, 0);
  std::function<void(int, int)> go = [&](int i, int maxb) {
    if (i == n) {
      if (maxb + 1 == k) ++count;
      return;
    }
    for (int b = 0; b <= maxb + 1 && b < k; ++b) {
      a[i] = b;
      go(i + 1, std::max(maxb, b));
    }
  };
  if (n > 0) {
    a[0] = 0;
    go(1, 0);
  }
  return count;
}

// Power-series helpers on exact rationals, truncated at degree N.
using Series = std::vector<Rat>;
Series mul(const Series& a, const Series& b, int N) {
  Series c(N + 1, Rat(0));
  for (int i = 0; i <= N; ++i)
    for (int j = 0; i + j <= N; ++j) c[i + j] += a[i] * b[j];
  return c;
}
Series inverse(const Series& a, int N) {
  Series b(N + 1, Rat(0));
  b[0] = 1 / a[0];
  for (int n = 1; n <= N; ++n) {
    Rat s = 0;
    for (int k = 1; k <= n; ++k) s += a[k] * b[n - k];
    b[n] = -s / a[0];
  }
  return b;
}

}  // namespace

TEST_SUITE("exact_kernel") {
  TEST_CASE("first-kind Stirling numbers") {
    CHECK(stirling_first(1, 1) == 1);
    CHECK(stirling_first(3, 2) == -3);
    Int sum5 = 0;
    for (int k = 1; k <= 5; ++k) sum5 += stirling_first(5, k);
    CHECK(sum5 == 0);
    for (int m = 0; m <= 15; ++m) {
      auto p = falling_poly(m);
      for (int k = 0; k <= m; ++k) CHECK(stirling_first(m, k) == p[k]);
    }
  }

  TEST_CASE("second-kind Stirling numbers against brute-force partition counts") {
    CHECK(stirling_second(3, 2) == 3);
    CHECK(stirling_second(7, 7) == 1);
    for (int n = 1; n <= 9; ++n)
      for (int k = 1; k <= n; ++k) CHECK(stirling_second(n, k) == count_partitions(n, k));
  }

  TEST_CASE("row sums of the signed first kind vanish for m > 1") {
    const auto& S1 = stirling1_table(40);
    for (int m = 1; m <= 40; ++m) {
      Int s = 0;
      for (int k = 1; k <= m; ++k) s += S1(m, k);
      CHECK(s == (m == 1 ? 1 : 0));
    }
  }

  TEST_CASE("orthogonality of the two triangles") {
    for (int j = 0; j <= 30; ++j)
      for (int m = 0; m <= j; ++m) {
        Int s = 0;
        for (int k = m; k <= j; ++k) s += stirling_first(j, k) * stirling_second(k, m);
        CHECK(s == (m == j ? 1 : 0));
      }
  }

  TEST_CASE("binomial product of first-kind numbers") {
    // C(k+m, k) S(j, k+m) = sum_l C(j, l) S(l, k) S(j-l, m).
    for (int j = 0; j <= 20; ++j)
      for (int k = 0; k <= 12; ++k)
        for (int m = 0; k + m <= 12; ++m) {
          if (k + m > j) continue;
          Int rhs = 0;
          for (int l = k; l <= j - m; ++l) rhs += binomial(j, l) * stirling_first(l, k) * stirling_first(j - l, m);
          CHECK(binomial(k + m, k) * stirling_first(j, k + m) == rhs);
        }
  }

  TEST_CASE("Bernoulli numbers") {
    CHECK(bernoulli_number(0) == 1);
    CHECK(bernoulli_number(1) == frac(-1, 2));
    CHECK(bernoulli_number(2) == frac(1, 6));
    CHECK(bernoulli_number(7) == 0);
    CHECK(bernoulli_number(12) == frac(-691, 2730));
    for (int n = 0; n <= 30; ++n) CHECK(bernoulli_poly(n, Rat(0)) == bernoulli_number(n));
  }

  TEST_CASE("Bernoulli polynomials") {
    CHECK(bernoulli_poly(1, Rat(0)) == frac(-1, 2));
    CHECK(bernoulli_poly(2, Rat(0)) == frac(1, 6));
    CHECK(bernoulli_poly(3, frac(1, 2)) == 0);
    // B_n(a+1) - B_n(a) = n a^{n-1}.
    const Rat a = frac(2, 7);
    for (int n = 1; n <= 20; ++n) CHECK(bernoulli_poly(n, a + 1) - bernoulli_poly(n, a) == n * rat_pow(a, n - 1));
  }

  TEST_CASE("log quotient coefficients against power-series division") {
    CHECK(log_quotient_coeffs(1, 3)[0] == 1);
    CHECK(log_quotient_coeffs(1, 3)[1] == frac(1, 2));
    CHECK(log_quotient_coeffs(2, 3)[1] == frac(1, 6));
    // sum_m out[m] x^m/m! = ((1+x) - sum_{j<n} L^j/j!)/L^n with L = log(1+x) = x*Q(x).
    const int N = 25;
    for (int n = 1; n <= 4; ++n) {
      const int D = N + n + 1;
      Series Q(D + 1), L(D + 1, Rat(0));
      for (int k = 0; k <= D; ++k) Q[k] = frac(k % 2 ? -1 : 1, k + 1);
      for (int k = 1; k <= D; ++k) L[k] = Q[k - 1];
      Series num(D + 1, Rat(0)), Lj(D + 1, Rat(0));
      num[0] = 1;
      num[1] = 1;
      Lj[0] = 1;
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k <= D; ++k) num[k] -= Lj[k] / Rat(factorial(j));
        Lj = mul(Lj, L, D);
      }
      for (int k = 0; k < n; ++k) REQUIRE(num[k] == 0);
      Series shifted(D + 1, Rat(0)), Qn(D + 1, Rat(0));
      for (int k = n; k <= D; ++k) shifted[k - n] = num[k];
      Qn[0] = 1;
      for (int i = 0; i < n; ++i) Qn = mul(Qn, Q, D);
      Series ratio = mul(shifted, inverse(Qn, D), D);
      auto q = log_quotient_coeffs(n, N);
      for (int m = 0; m <= N; ++m) CHECK(q[m] == ratio[m] * Rat(factorial(m)));
    }
  }

  TEST_CASE("canonical rationals and parsing") {
    CHECK(to_string(frac(6, -4)) == "-3/2");
    CHECK(to_string(frac(4, 2)) == "2");
    CHECK(parse_rational("-369689/11880") == frac(-369689, 11880));
    CHECK(parse_rational("0.25") == frac(1, 4));
    CHECK(parse_rational("-1.5e-2") == frac(-3, 200));
    CHECK_THROWS_AS(frac(1, 0), DomainError);
    CHECK_THROWS_AS(parse_rational("abc"), DomainError);
  }
}
