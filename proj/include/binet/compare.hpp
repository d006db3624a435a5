// Truncation errors of the factorial and Stirling series against the
// reference mu, the alpha search, and the figure sweeps.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "binet/ap.hpp"

namespace binet {

enum class Exec { Serial, Parallel };

struct ErrorPoint {
  Real z;
  long K = 0;
  std::optional<Real> alpha;
  Real error;         // |mu(z) - partial sum|
  Real signed_error;  // mu(z) - partial sum (real z)
  Real log10_error;
  std::string method;
};

// Errors are computed at ctx.digits + 15 against mu_reference.
Real reference_mu(const Real& z, const PrecisionContext& ctx);
// sum_{m=1}^{K} b_m(alpha)/prod_{k<m}(z+alpha+k) and the Stirling partial sum, at the current precision.
Real factorial_partial(const Real& z, const Real& alpha, long K);
Real stirling_partial(const Real& z, long K);

ErrorPoint error_alpha(const Real& z, const Real& alpha, long K, const PrecisionContext& ctx);
ErrorPoint error_stirling(const Real& z, long K, const PrecisionContext& ctx);
// Same with a precomputed reference value (at >= ctx.digits + 15).
ErrorPoint error_alpha(const Real& mu_ref, const Real& z, const Real& alpha, long K, const PrecisionContext& ctx);
ErrorPoint error_stirling(const Real& mu_ref, const Real& z, long K, const PrecisionContext& ctx);

struct AlphaSearchResult {
  Real alpha_star;
  Real log10_error;
  Real lo, hi;
  long evaluations = 0;
  bool flat = false;  // no interior minimum: alpha_star is the better endpoint
};

// Grid scan (plus the zeros of b_{K+1} inside the bracket as seeds), then
// golden-section refinement of log|e_alpha| around the best grid point.
AlphaSearchResult optimize_alpha(const Real& z, long K, const Real& lo, const Real& hi, const PrecisionContext& ctx,
                                 int points = 2000, Exec exec = Exec::Parallel);

struct Fig1Row {
  Real z;
  long K = 0;  // K*(z)
  Real log_stirling, log_alpha0, log_alpha1;
  bool ok = true;
  std::string note;
};
std::vector<Fig1Row> sweep_fig1(const std::vector<Real>& z_list, const PrecisionContext& ctx,
                                Exec exec = Exec::Parallel);

struct Fig2Row {
  Real z, alpha;
  long K = 0;
  Real log_error;
  bool ok = true;
  std::string note;
};
// alpha on `points` equally spaced values in [lo, hi], K = K*(z).
std::vector<Fig2Row> sweep_fig2(const std::vector<Real>& z_list, const Real& lo, const Real& hi, int points,
                                const PrecisionContext& ctx, Exec exec = Exec::Parallel);

// Indices of strict local minima of log_error within one z block of a fig2 table.
std::vector<size_t> local_minima(const std::vector<Fig2Row>& rows);

struct LinearFit {
  double slope = 0, intercept = 0, r2 = 0;
};
LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace binet
