// Quadrature, series summation and real-root isolation.
#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "binet/ap.hpp"
#include "binet/exact.hpp"

namespace binet {

// ---- quadrature -------------------------------------------------------------

struct QuadratureError : std::runtime_error {
  Complex best;
  QuadratureError(const std::string& what, Complex b) : std::runtime_error(what), best(std::move(b)) {}
};

template <class V>
struct QuadResult {
  V value;
  Real error;  // |difference| between the last two levels
  int levels = 0;
  long evaluations = 0;
};

template <class V>
using Integrand = std::function<V(const Real&)>;

// Finite [a, b]: tanh-sinh.
template <class V>
QuadResult<V> tanh_sinh(const Integrand<V>& f, const Real& a, const Real& b, const PrecisionContext& ctx,
                        int max_levels = 14);
// Semi-infinite [a, inf): exp-sinh.
template <class V>
QuadResult<V> exp_sinh(const Integrand<V>& f, const Real& a, const PrecisionContext& ctx, int max_levels = 14);

// Dispatches on b: pass b_infinite=true for [a, inf).
Real quadrature(const Integrand<Real>& f, const Real& a, const Real& b, const PrecisionContext& ctx,
                bool b_infinite = false);
Complex quadrature(const Integrand<Complex>& f, const Real& a, const Real& b, const PrecisionContext& ctx,
                   bool b_infinite = false);

// ---- series -----------------------------------------------------------------

struct SeriesEvaluation {
  Complex value;
  long terms_used = 0;
  Real last_term;      // magnitude
  Real tail_estimate;  // magnitude
  bool converged = false;
  std::string note;
};

struct StopRule {
  enum class Kind { Fixed, Tail } kind = Kind::Tail;
  long terms = 0;           // Fixed: number of terms
  long first = 1;           // index of the first term
  long max_terms = 100000;  // Tail: cap
  double tol_log10 = 0;     // Tail: absolute target 10^tol_log10 when nonzero; else 10^-P relative

  static StopRule fixed(long k, long first = 1) {
    StopRule r;
    r.kind = Kind::Fixed;
    r.terms = k;
    r.first = first;
    return r;
  }
  static StopRule tail(long first = 1, long cap = 100000) {
    StopRule r;
    r.first = first;
    r.max_terms = cap;
    return r;
  }
};

// Terms are requested in increasing index order, so generators may keep state.
// In tail mode a non-finite term stops the sum unconverged (used to abort on divergence).
using TermGenerator = std::function<Complex(long)>;

// Tail rule: geometric ratio bound when the ratio settles below 1, else the
// polynomial-decay bound |t_m| m/(p-1) with p the local decay exponent.
SeriesEvaluation sum_series(const TermGenerator& term, const StopRule& rule, const PrecisionContext& ctx);

// Tail bound estimate from the last two term magnitudes at indices m-1, m.
Real tail_bound(const Real& prev, const Real& last, long m);

// ---- real roots -------------------------------------------------------------

// coeffs[j] multiplies x^j.
long sturm_count(const std::vector<Rat>& coeffs, const Rat& lo, const Rat& hi);  // roots in (lo, hi]

struct RootSet {
  std::vector<Real> roots;  // ascending
  long sturm_total = 0;     // Sturm count over the Cauchy bound interval
  std::vector<Rat> exact;   // roots hit exactly during bisection
};

RootSet real_roots_certified(const std::vector<Rat>& coeffs, const PrecisionContext& ctx);
std::vector<Real> real_roots(const std::vector<Rat>& coeffs, const PrecisionContext& ctx);

// Horner helpers.
Real horner(const std::vector<Rat>& coeffs, const Real& x);
Complex horner(const std::vector<Rat>& coeffs, const Complex& x);
Rat horner(const std::vector<Rat>& coeffs, const Rat& x);

}  // namespace binet
