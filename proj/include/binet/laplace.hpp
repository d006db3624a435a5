// Factorial series for Laplace transforms phi(z) = int_0^inf e^{-zt} f(t) dt,
// built from the Taylor coefficients f_k of f.
#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "binet/ap.hpp"
#include "binet/exact.hpp"
#include "binet/numerics.hpp"

namespace binet {

struct TaylorFunction {
  std::string name;
  std::function<Rat(int)> coeff;  // f_k = f^(k)(0)/k!
  double radius = std::numeric_limits<double>::infinity();
  double abscissa = 0;  // transform converges for Re z > abscissa
  // Optional closed form of f, used by the contour check; the Taylor sum is
  // used when absent.
  std::function<Complex(const Complex&)> eval;
};

TaylorFunction exp_function(const Rat& b);                // e^{bt}
TaylorFunction mittag_leffler(int a, int b);              // E_{a,b}(t), integer a, b >= 1
TaylorFunction reciprocal_one_plus();                     // 1/(1+t)
TaylorFunction binet_integrand();                         // (1/t)(1/(e^t-1) - 1/t + 1/2)
TaylorFunction from_coefficients(std::vector<Rat> coeffs, std::string name);  // zero beyond the list

std::vector<Rat> taylor_coeffs(const TaylorFunction& f, int m_max);

// Taylor coefficients of f(-beta log(1-u)) and back. Exact mutual inverses.
std::vector<Rat> g_from_f(const std::vector<Rat>& f, const Rat& beta, int m_max);
std::vector<Rat> f_from_g(const std::vector<Rat>& g, const Rat& beta, int m_max);

enum class PhiForm { DoubleStirling, Leibniz, Cauchy };

// phi_m(alpha, beta), the u^m coefficient of (1-u)^{-alpha} f(-beta log(1-u)).
Rat phi(int m, const Rat& alpha, const Rat& beta, const TaylorFunction& f, PhiForm form = PhiForm::Cauchy);
// Same by the trapezoidal rule on |w| = 1/2 of the Cauchy integral.
Complex phi_contour(int m, const Rat& alpha, const Rat& beta, const TaylorFunction& f, const PrecisionContext& ctx);

struct PhiTable {
  Rat alpha, beta;
  std::vector<Rat> g;    // g_m(beta)
  std::vector<Rat> phi;  // phi_m(alpha, beta)
};
PhiTable phi_table(const TaylorFunction& f, const Rat& alpha, const Rat& beta, int m_max);

// Advisory check of the radius >= 1 condition on g_m(beta): trips when
// |g_m|^{1/m} > 1 + 1e-3 for each of the last `window` indices.
struct RadiusCheck {
  bool tripped = false;
  double worst_root = 0;
};
RadiusCheck radius_check(const std::vector<Rat>& g, int window = 10);

struct LaplaceResult {
  SeriesEvaluation eval;
  RadiusCheck radius;
};

// beta sum_m m! phi_m / prod_{k=0}^{m} (beta z + alpha + k). K = 0: adaptive.
LaplaceResult factorial_series_eval(const Complex& z, const Rat& alpha, const Rat& beta, long K,
                                    const TaylorFunction& f, const PrecisionContext& ctx);

// sum_{k=0}^{K} k! f_k z^{-k-1}; note "diverging" when the terms grow at the end.
SeriesEvaluation laurent_eval(const Complex& z, long K, const TaylorFunction& f, const PrecisionContext& ctx);

// e^{-alpha t} sum_{m<=K} phi_m(alpha, 1) (1 - e^{-t})^m. K = 0: adaptive.
SeriesEvaluation resum_f(const Real& t, const Rat& alpha, long K, const TaylorFunction& f,
                         const PrecisionContext& ctx);

}  // namespace binet
