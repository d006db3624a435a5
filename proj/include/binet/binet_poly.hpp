// Coefficient families of the generalized factorial series of mu(z):
// c_m, beta_m, the Binet polynomials b_m(alpha) = sum_j p_j(m) alpha^j,
// their zeros, generating function and growth laws.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "binet/ap.hpp"
#include "binet/exact.hpp"
#include "binet/numerics.hpp"

namespace binet {

struct ConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

// c_m = b_m(0), m >= 1. Cached.
const Rat& c_coefficient(int m);
// beta_m = b_m(1).
Rat beta_coefficient(int m);

struct BinetPolynomial {
  int m = 0;
  std::vector<Rat> p;  // p[j] multiplies alpha^j, j = 0..m-1

  Rat operator()(const Rat& a) const { return horner(p, a); }
  Real operator()(const Real& a) const { return horner(p, a); }
  Complex operator()(const Complex& a) const { return horner(p, a); }
};

// Cached; every new m is computed three ways and compared exactly.
const BinetPolynomial& p_coefficients(int m);

// The individual formulas, exposed for cross-checks.
std::vector<Rat> p_by_stirling(int m);     // single Stirling sum per j
std::vector<Rat> p_by_convolution(int m);  // in terms of c_k
std::vector<Rat> p_by_closed_form(int m);  // j > 1 closed forms; j <= 1 entries copied from the Stirling sum
Rat p_entry(int j, int m);                 // one coefficient, O(m) from the c_k form

Rat b_eval_exact(int m, const Rat& a);  // Horner on p_coefficients
Rat b_theorem_sum(int m, const Rat& a);
Rat b_c_convolution(int m, const Rat& a);
// b_1(a) .. b_M(a) by the c_k convolution, O(M^2) in total. out[0] unused.
std::vector<Rat> b_sequence(const Rat& a, int M);
Rat bernoulli_identity_check(int m, const Rat& a);  // residual, exactly 0

// Quadrature forms.
Real c_by_quadrature_polynomial(int m, const PrecisionContext& ctx);  // over (0, 1)
Real c_by_quadrature_semi_infinite(int m, const PrecisionContext& ctx);  // over (0, inf), m >= 2
Real b_by_quadrature(int m, const Real& a, const PrecisionContext& ctx);

// Exponential generating function sum_m b_m(a) u^m/(m-1)!.
Real egf_closed(const Real& a, const Real& u);
Real egf_partial(const Real& a, const Real& u, int M);
// Taylor coefficients of the closed form, exact: out[m] = b_m(a)/(m-1)! for m >= 1.
std::vector<Rat> egf_series_exact(const Rat& a, int M);

struct ZeroSet {
  int m = 0;
  std::vector<Real> zeros;  // descending: xi_1 > xi_2 > ...
  long sturm_count = 0;
};
ZeroSet zeros(int m, const PrecisionContext& ctx);
// Remainder of b_m(alpha) / (alpha + m/2 - 1) for even m; 0 when the middle zero is exact.
Rat middle_zero_remainder(int m);

struct GrowthReport {
  bool ok = true;
  int m_max = 0;
  int partial_max = 0;
  std::vector<std::string> failures;
};
// Inequalities on c_m for 3 <= m <= m_max and on the partial sums
// sum_{m<=M} c_m/(m-1)! for 3 <= M <= partial_max (defaults to m_max).
GrowthReport growth_checks(int m_max, int partial_max = 0);

// Leading large-m estimate of b_{m+1}(1/2 + a)/m!.
Real asymptotic_estimate(int m, const Real& a);

}  // namespace binet
