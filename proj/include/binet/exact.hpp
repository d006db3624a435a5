// Exact integer/rational arithmetic and the combinatorial families built on it.
#pragma once

#include <gmpxx.h>

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace binet {

using Int = mpz_class;
using Rat = mpq_class;

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Triangular table of Stirling numbers, frozen after construction.
class StirlingTable {
 public:
  enum class Kind { FirstSigned, Second };

  StirlingTable(Kind kind, int max_m);

  Kind kind() const { return kind_; }
  int max_m() const { return static_cast<int>(rows_.size()) - 1; }
  const Int& operator()(int m, int k) const;
  const std::vector<Int>& row(int m) const { return rows_.at(m); }

 private:
  Kind kind_;
  std::vector<std::vector<Int>> rows_;
};

// Shared tables holding at least `min_rows` rows (default 256). A larger
// request builds a new table; references to older ones stay valid.
const StirlingTable& stirling1_table(int min_rows = 256);
const StirlingTable& stirling2_table(int min_rows = 256);

// Signed first kind: prod_{j<m}(x-j) = sum_k S(m,k) x^k.
Int stirling_first(int m, int k);
// Second kind: number of k-block partitions of an m-set.
Int stirling_second(int m, int k);

const Rat& bernoulli_number(int n);
Rat bernoulli_poly(int n, const Rat& a);

// n/d in lowest terms; d != 0.
Rat frac(const Int& n, const Int& d);

Int binomial(long n, long k);  // n >= 0
Int factorial(long n);
Rat rat_pow(const Rat& a, long e);  // e >= 0

// Taylor coefficients of the m-sum part of x/log^n(1+x), normalized to x^m/m!:
// out[m] = sum_{k=0}^{m} k! S(m,k)/(k+n)!, so out[0] = 1/n!.
std::vector<Rat> log_quotient_coeffs(int n, int m_max);

std::string to_string(const Rat& q);  // "num/den" or "num"
Rat parse_rational(const std::string& s);  // accepts "p/q", integers, decimals

}  // namespace binet
