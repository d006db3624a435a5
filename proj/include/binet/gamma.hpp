// Digamma, polygamma and harmonic numbers from the alpha = 0 factorial series.
#pragma once

#include "binet/ap.hpp"
#include "binet/exact.hpp"
#include "binet/numerics.hpp"

namespace binet {

// p_j(m) for m = 0..m_max (zero below m = j+1), cached per column.
const std::vector<Rat>& p_column(int j, int m_max);

// log z - 1/(2z) - sum_{m=2}^{K} p_1(m)/prod_{k<m}(z+k). K = 0: adaptive,
// with z first shifted up through psi(z+1) = psi(z) + 1/z.
SeriesEvaluation digamma_factorial(const Complex& z, long K, const PrecisionContext& ctx);
// log z - 1/(2z) - sum_{m=1}^{K} B_{2m}/(2m z^{2m}).
SeriesEvaluation digamma_asymptotic(const Complex& z, long K, const PrecisionContext& ctx);

// H_n = log n + gamma + 1/(2n) - sum_{m=2}^{K} (n-1)! p_1(m)/(n-1+m)!.
SeriesEvaluation harmonic(long n, long K, const PrecisionContext& ctx);
Rat harmonic_exact(long n);

// psi^(n)(z), n >= 1, factorial form; K counts terms of the m-sum (from m = n+2), 0 = adaptive.
SeriesEvaluation polygamma_factorial(int n, const Complex& z, long K, const PrecisionContext& ctx);
// n! (-1)^{n-1} sum_k (z+k)^{-(n+1)}.
SeriesEvaluation polygamma_reference(int n, const Complex& z, const PrecisionContext& ctx);

}  // namespace binet
