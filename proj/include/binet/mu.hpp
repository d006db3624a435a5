// Evaluators of Binet's function mu(z) = log Gamma(z) - (z-1/2) log z + z - log(2 pi)/2
// and the identity/bound checkers that play them against each other.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "binet/ap.hpp"
#include "binet/exact.hpp"
#include "binet/numerics.hpp"

namespace binet {

struct MuResult {
  SeriesEvaluation eval;
  std::string method;
  bool valid = true;
  std::string reason;  // why valid is false
  long shift = 0;      // z was moved to z + shift with the forward difference

  const Complex& value() const { return eval.value; }
};

// Factorial expansion sum_m b_m(alpha)/prod_{k<m}(z+alpha+k). K = 0 means
// adaptive: z is first shifted to a large real part, then the tail rule runs.
MuResult mu_factorial(const Complex& z, const Rat& alpha, long K, const PrecisionContext& ctx);
MuResult mu_factorial(const Complex& z, const Complex& alpha, long K, const PrecisionContext& ctx);

// Stirling's asymptotic series with K terms.
MuResult mu_stirling(const Complex& z, long K, const PrecisionContext& ctx);
// Index of the smallest Stirling term (first local minimum of its magnitude).
long k_star(const Real& z);
// Magnitude of the m-th Stirling term at real z.
Real stirling_term(long m, const Real& z);

// Convergent companion series built on g_m(1). M = 0 means adaptive; with
// shift = true the adaptive mode first moves z to a large real part.
MuResult mu_companion(const Complex& z, long M, const PrecisionContext& ctx, bool shift = true);

// Power series about z = 0, |z| < 1.
MuResult mu_taylor_small(const Complex& z, const PrecisionContext& ctx);

// Binet's integral, exp-sinh quadrature over (0, inf).
MuResult mu_oracle(const Complex& z, const PrecisionContext& ctx);

// Double series over Hurwitz zeta values; N = 0 means adaptive.
MuResult mu_polygamma_series(const Complex& z, long N, const PrecisionContext& ctx);
// zeta(s, a) = sum_{k>=0} (a+k)^-s for integer s >= 2, Re a > 0.
Complex hurwitz_zeta(long s, const Complex& a, const PrecisionContext& ctx);

// Fast evaluator for arbitrary z off the cut: forward-difference shift, then
// Stirling at its optimum.
Complex mu_auto(const Complex& z, const PrecisionContext& ctx);
// Oracle policy: quadrature for real z >= 0.1, companion otherwise.
Complex mu_reference(const Complex& z, const PrecisionContext& ctx);

// sum_{k<n} [(z+k+1/2) log(1 + 1/(z+k)) - 1] = mu(z) - mu(z+n).
Complex forward_shift_sum(const Complex& z, long n);

enum class ClosedPoint { Half, NPlusHalf };
Real mu_closed(ClosedPoint point, long n = 0);

struct IdentityResiduals {
  std::optional<Real> difference, reflection, duplication, multiplication, integral_mean;
  int multiplication_n = 3;
  std::vector<std::string> skipped;
};
IdentityResiduals identity_residuals(const Complex& z, const PrecisionContext& ctx, int n = 3);
// |int_0^1 mu(t) dt - 1/4|.
Real integral_mean_at_zero(const PrecisionContext& ctx);

Complex log_gamma(const Complex& z, const PrecisionContext& ctx);
// K-term generalized Stirling series for log Gamma(z + a).
Complex hermite_log_gamma(const Complex& z, const Rat& a, long K, const PrecisionContext& ctx);
// The k-th term (-1)^{k-1} B_{k+1}(a)/(k(k+1) z^k).
Complex hermite_term(long k, const Complex& z, const Rat& a);

struct BoundReport {
  bool ok = true;
  Real mu_abs, mu_re, bound;  // |mu(z)|, mu(Re z), 1/(12 Re z)
  std::string detail;
};
BoundReport bound_check(const Complex& z, const PrecisionContext& ctx);
// mu strictly positive and decreasing on an ascending real grid.
bool mu_decreasing_on(const std::vector<Real>& grid, const PrecisionContext& ctx);

}  // namespace binet
