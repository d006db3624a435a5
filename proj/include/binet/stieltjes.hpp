// Taylor coefficients g_m of (s-1) zeta(s) about s = 1, and zeta at the
// integers, from Euler-transformed eta series.
#pragma once

#include <memory>
#include <vector>

#include "binet/ap.hpp"

namespace binet {

struct ZetaTaylorTable {
  std::vector<Real> g;  // g[0] = 1, g[1] = Euler's gamma, ...
  int digits = 0;       // relative accuracy target of every entry
  int work_digits = 0;  // precision the entries were computed at
  double max_cancellation = 0;  // digits lost in the worst entry
};

// k-th derivative of eta(s) = sum (-1)^{n-1} n^{-s} at s = 1.
Real eta_derivative(int k, const PrecisionContext& ctx);

// g_0..g_{m_max}, each to ctx.digits relative digits. Tables are cached and
// shared; a request covered by an earlier table reuses it.
std::shared_ptr<const ZetaTaylorTable> g_table(int m_max, const PrecisionContext& ctx);

// zeta(k), k >= 2.
Real zeta_int(int k, const PrecisionContext& ctx);

Real euler_gamma(const PrecisionContext& ctx);

}  // namespace binet
