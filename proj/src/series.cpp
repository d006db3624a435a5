#include <cmath>
#include <limits>

#include "binet/numerics.hpp"

namespace binet {

Real tail_bound(const Real& prev, const Real& last, long m) {
  if (last.is_zero()) return Real(0);
  if (prev.is_zero() || m < 2) return Real(std::numeric_limits<double>::infinity());
  Real r = last / prev;
  if (r >= Real(1)) return Real(std::numeric_limits<double>::infinity());
  Real geometric = last * r / (1 - r);
  Real p = log(prev / last) / log(Real(m) / Real(m - 1));
  if (p <= Real(1)) return Real(std::numeric_limits<double>::infinity());
  Real poly = last * Real(m) / (p - 1);
  return max(geometric, poly);
}

SeriesEvaluation sum_series(const TermGenerator& term, const StopRule& rule, const PrecisionContext& ctx) {
  PrecisionGuard guard(ctx);
  SeriesEvaluation ev;
  ev.value = Complex(0);
  if (rule.kind == StopRule::Kind::Fixed) {
    Real prev(0);
    for (long i = 0; i < rule.terms; ++i) {
      long m = rule.first + i;
      Complex t = term(m);
      ev.value += t;
      prev = ev.last_term;
      ev.last_term = abs(t);
      ++ev.terms_used;
    }
    ev.tail_estimate = ev.terms_used >= 2 ? tail_bound(prev, ev.last_term, rule.first + ev.terms_used - 1)
                                          : ev.last_term;
    ev.converged = false;  // fixed truncation makes no convergence claim
    ev.note = "fixed";
    return ev;
  }

  const Real rel = ten_pow(-ctx.digits);
  const Real abs_tol = rule.tol_log10 != 0 ? ten_pow(static_cast<long>(std::floor(rule.tol_log10))) : Real(0);
  Real m2(0), m1(0);  // magnitudes of the two previous terms
  int ok_run = 0;
  int zero_run = 0;
  for (long i = 0; i < rule.max_terms; ++i) {
    long m = rule.first + i;
    Complex t = term(m);
    if (!t.re.is_finite() || !t.im.is_finite()) {
      ev.converged = false;
      ev.note = "non-finite term";
      return ev;
    }
    ev.value += t;
    Real mag = abs(t);
    ++ev.terms_used;
    ev.last_term = mag;
    if (mag.is_zero()) {
      if (++zero_run >= 3) {
        ev.tail_estimate = Real(0);
        ev.converged = true;
        ev.note = "terminated";
        return ev;
      }
      continue;
    }
    zero_run = 0;
    if (i >= 2) {
      // Smooth over isolated small terms.
      Real last = max(mag, m1);
      Real prev = max(m1, m2);
      ev.tail_estimate = tail_bound(prev, last, m);
      Real tol = abs_tol.is_zero() ? rel * max(abs(ev.value), rel) : abs_tol;
      if (ev.tail_estimate.is_finite() && ev.tail_estimate <= tol) {
        if (++ok_run >= 3) {
          ev.converged = true;
          ev.note = "tail";
          return ev;
        }
      } else {
        ok_run = 0;
      }
    }
    m2 = m1;
    m1 = mag;
  }
  ev.converged = false;
  ev.note = "term cap reached";
  return ev;
}

}  // namespace binet
