#include "syzdepth/asymptotics.hpp"

#include "syzdepth/depth.hpp"
#include "syzdepth/parallel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace syzdepth {

namespace {

constexpr Real kDomainSlack = 1e-15L;
constexpr int kBracketGrid = 256;
constexpr int kGuardGrid = 1000;
constexpr int kMaxBisections = 400;

Real xlogx(Real x) { return x > 0 ? x * std::log(x) : 0.0L; }

}  // namespace

RegimeAPrediction predict_regimeA(long n, int k) {
  if (n < 3 || k < 1) throw std::domain_error("predict_regimeA: need n >= 3 and k >= 1");
  RegimeAPrediction p;
  p.n = n;
  p.k = k;
  const Real nn = static_cast<Real>(n);
  const Real km1 = static_cast<Real>(k - 1);
  const Real log_n = std::log(nn);
  p.terms[0] = nn / 2;
  p.terms[1] = std::sqrt(km1 * nn * log_n) / 2;
  p.terms[2] = std::sqrt(km1 * nn / log_n) * std::log(log_n) / 4;
  p.value = p.terms[0] + p.terms[1] + p.terms[2];
  return p;
}

Real j_min_estimate(long n, int k) {
  if (n < 3 || k < 1) throw std::domain_error("j_min_estimate: need n >= 3 and k >= 1");
  const Real nn = static_cast<Real>(n);
  const Real log_n = std::log(nn);
  return std::sqrt(static_cast<Real>(k - 1) * nn * log_n) / 2 * (1 - 1 / log_n);
}

Rational quotient_ratio(int n, int k, int s, long j) {
  if (k < 1 || s < 0 || j < 0 || s + j + k > n)
    throw std::domain_error("quotient_ratio: need k >= 1 and s + j + k <= n");
  const Int denominator = binomial(n - s, k + j);
  if (denominator == 0) throw std::domain_error("quotient_ratio: zero denominator");
  Rational q(inner_sum2(n, k, s, j), denominator);
  q.canonicalize();
  return q;
}

Real f_base(Real alpha, Real beta, Real gamma) {
  if (!(beta > 0 && beta <= 0.5L) || gamma < 0 || gamma >= 1 - beta || alpha < 0 ||
      alpha > 1 - beta - gamma + kDomainSlack)
    throw std::domain_error("f_base: arguments outside the admissible region");
  const Real rest = std::max<Real>(0, 1 - alpha - beta - gamma);
  const Real numerator = xlogx(alpha + gamma) + xlogx(alpha + beta) + xlogx(rest);
  const Real denominator =
      xlogx(alpha) + xlogx(beta) + xlogx(gamma) + xlogx(1 - beta) + xlogx(1 - gamma);
  return std::exp(numerator - denominator);
}

std::optional<Real> alpha_crit(Real beta, Real gamma) {
  const Real b = 1 - 2 * beta - 2 * gamma;
  const Real disc = b * b - 8 * beta * gamma;
  if (disc < 0) return std::nullopt;
  return (b + std::sqrt(disc)) / 4;
}

namespace {

FMinimum analytic_minimum(Real beta, Real gamma) {
  const Real right = 1 - beta - gamma;
  FMinimum best{f_base(0, beta, gamma), 0, 0};
  const Real at_right = f_base(right, beta, gamma);
  if (at_right < best.value) best = {at_right, right, 0};
  if (auto a = alpha_crit(beta, gamma); a && *a >= 0 && *a <= right) {
    const Real v = f_base(*a, beta, gamma);
    if (v < best.value) best = {v, *a, 0};
  }
  return best;
}

Real g(Real beta, Real gamma) { return analytic_minimum(beta, gamma).value - 1; }

}  // namespace

FMinimum f_minimum(Real beta, Real gamma) {
  FMinimum best = analytic_minimum(beta, gamma);
  const Real right = 1 - beta - gamma;
  for (int i = 1; i <= kGuardGrid; ++i) {
    const Real a = right * i / (kGuardGrid + 1);
    const Real v = f_base(a, beta, gamma);
    if (v < best.value * (1 - 1e-12L)) {
      ++best.guard_hits;
      best.value = v;
      best.alpha = a;
    }
  }
  return best;
}

GammaSolution solve_gamma(Real beta, Real tol) {
  if (!(beta > 0 && beta <= 0.5L)) throw std::domain_error("solve_gamma: need 0 < beta <= 1/2");
  if (!(tol > 0)) throw std::domain_error("solve_gamma: tol must be positive");
  GammaSolution sol;
  sol.beta = beta;

  auto finish = [&](Real gamma) {
    const FMinimum m = f_minimum(beta, gamma);
    sol.gamma = gamma;
    sol.alpha0 = m.alpha;
    sol.residual = m.value - 1;
    sol.guard_hits = m.guard_hits;
    return sol;
  };

  if (g(beta, 0) >= 0) return finish(0);

  const Real end = 0.5L - beta;
  Real lo = 0, hi = -1;
  for (int i = 1; i <= kBracketGrid; ++i) {
    const Real gamma = end * i / kBracketGrid;
    if (g(beta, gamma) >= 0) {
      hi = gamma;
      break;
    }
    lo = gamma;
  }
  if (hi < 0)
    throw std::runtime_error("solve_gamma: no sign change in [0, 1/2 - beta] for beta=" +
                             std::to_string(static_cast<double>(beta)));

  while (sol.iterations < kMaxBisections && (hi - lo > tol || g(beta, hi) > tol)) {
    const Real mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    if (g(beta, mid) >= 0)
      hi = mid;
    else
      lo = mid;
    ++sol.iterations;
  }
  return finish(hi);
}

std::vector<GammaSolution> gamma_curve(int steps, Real tol, int threads) {
  if (steps < 2) throw std::domain_error("gamma_curve: steps must be >= 2");
  std::vector<GammaSolution> out(static_cast<std::size_t>(steps));
  parallel_for(out.size(), threads, [&](std::size_t i) {
    const Real beta = static_cast<Real>(i + 1) / (2 * static_cast<Real>(steps));
    out[i] = solve_gamma(beta, tol);
  });
  return out;
}

}  // namespace syzdepth
