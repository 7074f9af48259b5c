#pragma once

// Globally adaptive Gauss-Kronrod (7/15) integration of complex integrands.

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

namespace qgs {

using cld = std::complex<long double>;

struct QuadratureOptions {
  long double abs_tol = 1e-10L;
  std::int64_t max_evaluations = 4'000'000;
};

struct QuadratureSum {
  cld value;
  long double est_error = 0;
  std::int64_t evaluations = 0;
};

/// Integrates f over consecutive panels [breaks[i], breaks[i+1]]. The panel
/// with the largest Kronrod error is bisected until the summed estimate is
/// below abs_tol. Throws NonConvergence when the budget runs out.
QuadratureSum integrate_panels(const std::function<cld(long double)>& f, const std::vector<long double>& breaks,
                               const QuadratureOptions& opt);

}  // namespace qgs
