#pragma once

#include "syzdepth/exact.hpp"

#include <optional>
#include <vector>

namespace syzdepth {

using Real = long double;

struct RegimeAPrediction {
  long n = 0;
  int k = 0;
  Real value = 0;
  /// n/2, (1/2) sqrt((k-1) n log n), (1/4) sqrt((k-1) n / log n) log log n
  Real terms[3] = {0, 0, 0};
};

/// Predicted standard graded Hilbert depth for fixed k and large n.
/// Natural logarithms; requires n >= 3 and k >= 1.
RegimeAPrediction predict_regimeA(long n, int k);

/// Location of the minimizing j, (1/2) sqrt((k-1) n log n) (1 - 1/log n),
/// without the lower order correction.
Real j_min_estimate(long n, int k);

/// l-sum over binom(n-s, k+j) as an exact fraction; requires s+j+k <= n.
Rational quotient_ratio(int n, int k, int s, long j);

/// The base f(alpha; beta, gamma) of the exponential growth ratio, with
/// 0^0 = 1. Domain: 0 <= alpha <= 1-beta-gamma, 0 < beta <= 1/2,
/// 0 <= gamma < 1-beta.
Real f_base(Real alpha, Real beta, Real gamma);

/// Larger root of the critical-point quadratic in alpha, if real.
std::optional<Real> alpha_crit(Real beta, Real gamma);

struct GammaSolution {
  Real beta = 0;
  Real gamma = 0;
  Real alpha0 = 0;
  /// f(alpha0) - 1 at the returned gamma.
  Real residual = 0;
  int iterations = 0;
  /// Grid points where f dropped below the analytic minimum.
  int guard_hits = 0;
};

/// min over admissible alpha of f(alpha; beta, gamma), and its argmin.
struct FMinimum {
  Real value;
  Real alpha;
  int guard_hits;
};
FMinimum f_minimum(Real beta, Real gamma);

/// Smallest gamma in [0, 1/2 - beta] with min_alpha f >= 1.
/// Throws std::runtime_error when no sign change exists in that interval.
GammaSolution solve_gamma(Real beta, Real tol = 1e-12L);

/// solve_gamma at beta = i / (2 steps), i = 1..steps.
std::vector<GammaSolution> gamma_curve(int steps, Real tol = 1e-12L, int threads = 1);

}  // namespace syzdepth
