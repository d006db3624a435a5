// Serial reference vs OpenMP for the figure sweeps and the alpha scan.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

#include "binet/binet_poly.hpp"
#include "binet/compare.hpp"
#include "binet/mu.hpp"

using namespace binet;

static double timed(const std::function<void()>& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int main() {
  const PrecisionContext ctx{60};
  PrecisionGuard g(ctx);
  std::printf("threads %d\n", omp_get_max_threads());

  std::vector<Real> zs;
  for (int z = 2; z <= 16; ++z) zs.emplace_back(z);
  // Warm the shared caches so both runs see the same state.
  sweep_fig1({Real(16)}, ctx, Exec::Serial);

  std::vector<Fig1Row> s1, p1;
  double ts = timed([&] { s1 = sweep_fig1(zs, ctx, Exec::Serial); });
  double tp = timed([&] { p1 = sweep_fig1(zs, ctx, Exec::Parallel); });
  bool same = s1.size() == p1.size();
  for (size_t i = 0; same && i < s1.size(); ++i)
    same = s1[i].log_stirling == p1[i].log_stirling && s1[i].log_alpha0 == p1[i].log_alpha0 &&
           s1[i].log_alpha1 == p1[i].log_alpha1;
  std::printf("fig1 z=2..16        serial %8.3f s  parallel %8.3f s  speedup %5.2f  identical %s\n", ts, tp, ts / tp,
              same ? "yes" : "NO");

  std::vector<Fig2Row> s2, p2;
  ts = timed([&] { s2 = sweep_fig2({Real(4), Real(10)}, Real(-2), Real(2), 2001, ctx, Exec::Serial); });
  tp = timed([&] { p2 = sweep_fig2({Real(4), Real(10)}, Real(-2), Real(2), 2001, ctx, Exec::Parallel); });
  same = s2.size() == p2.size();
  for (size_t i = 0; same && i < s2.size(); ++i) same = s2[i].log_error == p2[i].log_error;
  std::printf("fig2 z=4,10 x 2001  serial %8.3f s  parallel %8.3f s  speedup %5.2f  identical %s\n", ts, tp, ts / tp,
              same ? "yes" : "NO");

  AlphaSearchResult a, b;
  const long K = k_star(Real(10));
  ts = timed([&] { a = optimize_alpha(Real(10), K, Real(-3), Real(1), ctx, 20000, Exec::Serial); });
  tp = timed([&] { b = optimize_alpha(Real(10), K, Real(-3), Real(1), ctx, 20000, Exec::Parallel); });
  same = a.alpha_star == b.alpha_star && a.log10_error == b.log10_error;
  std::printf("alpha scan 20000    serial %8.3f s  parallel %8.3f s  speedup %5.2f  identical %s\n", ts, tp, ts / tp,
              same ? "yes" : "NO");
}
