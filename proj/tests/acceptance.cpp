// Acceptance run: one PASS/FAIL line per criterion, with wall time against
// the budget. Exit status is the number of failed criteria.

#include "syzdepth/asymptotics.hpp"
#include "syzdepth/depth.hpp"
#include "syzdepth/koszul.hpp"
#include "syzdepth/multigraded.hpp"
#include "syzdepth/parallel.hpp"
#include "syzdepth/report.hpp"
#include "syzdepth/stanley.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <thread>

using namespace syzdepth;

namespace {

Subset S(std::initializer_list<int> e) { return Subset::of(std::vector<int>(e)); }

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (out.ok && elapsed > budget_s) {
    std::ostringstream why;
    why << "over budget (" << budget_s << " s)";
    out.fail(why.str());
  }
  if (!out.ok) ++failures;
  std::printf("[%s] %2d %s (%.2f s)%s%s\n", out.ok ? "PASS" : "FAIL", id, title, elapsed,
              out.detail.empty() ? "" : ": ", out.detail.c_str());
  std::fflush(stdout);
}

std::string cell(int n, int k) { return "(" + std::to_string(n) + "," + std::to_string(k) + ")"; }

// n - ceil((n-k)/(k+1))
int upper_formula(int n, int k) { return n - (n - k + (k + 1) - 1) / (k + 1); }

}  // namespace

int main() {
  const int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

  criterion(1, "closed form hdepth(n,1) = floor((n+1)/2), n <= 40", 1, [] {
    Outcome o;
    for (int n = 1; n <= 40; ++n)
      if (hdepth_std(n, 1).hdepth != (n + 1) / 2) o.fail("mismatch at " + cell(n, 1));
    return o;
  });

  criterion(2, "upper range hdepth = n-1 for floor(n/2) <= k < n, hdepth(n,n) = n, n <= 30", 10, [] {
    Outcome o;
    for (int n = 1; n <= 30; ++n) {
      for (int k = n / 2; k < n; ++k)
        if (k >= 1 && hdepth_std(n, k).hdepth != n - 1) o.fail("mismatch at " + cell(n, k));
      if (hdepth_std(n, n).hdepth != n) o.fail("mismatch at " + cell(n, n));
    }
    return o;
  });

  criterion(3, "hdepth = n - ceil((n-k)/(k+1)) for n <= 22; fails at n = 23 exactly for k = 3,4,5", 60, [] {
    Outcome o;
    for (int n = 2; n <= 22; ++n)
      for (int k = 1; k < n / 2; ++k)
        if (hdepth_std(n, k).hdepth != upper_formula(n, k)) o.fail("mismatch at " + cell(n, k));
    std::string failing;
    for (int k = 1; k < 23 / 2; ++k)
      if (hdepth_std(23, k).hdepth != upper_formula(23, k)) failing += std::to_string(k);
    if (failing != "345") o.fail("n = 23 fails for k in {" + failing + "}");
    return o;
  });

  criterion(4, "t-sum equals prefix-sum expansion (n <= 40), t-sum equals l-sum (n <= 30)", 60, [] {
    Outcome o;
    long checked = 0;
    for (int n = 1; n <= 40; ++n)
      for (int k = 1; k <= n; ++k)
        for (int s = 0; s <= n; ++s) {
          const auto e = expand_quotient(numerator_std(n, k), s, n);
          for (long j = 0; j <= n - k; ++j, ++checked)
            if (coeff_sum1(n, k, s, j) != e[static_cast<std::size_t>(j)])
              o.fail("sum1 differs at n=" + std::to_string(n) + " k=" + std::to_string(k) +
                     " s=" + std::to_string(s) + " j=" + std::to_string(j));
        }
    for (int n = 1; n <= 30; ++n)
      for (int k = 1; k <= n; ++k)
        for (int s = 0; s + k <= n; ++s)
          for (long j = 0; j <= n - s - k; ++j, ++checked)
            if (coeff_sum1(n, k, s, j) != coeff_sum2(n, k, s, j))
              o.fail("sum2 differs at n=" + std::to_string(n) + " k=" + std::to_string(k) +
                     " s=" + std::to_string(s) + " j=" + std::to_string(j));
    if (o.ok) o.detail = std::to_string(checked) + " coefficients";
    return o;
  });

  criterion(5, "hdepth monotone in k and positivity monotone in s, n <= 25", 60, [] {
    Outcome o;
    for (int n = 1; n <= 25; ++n) {
      for (int k = 1; k < n; ++k)
        if (hdepth_std(n, k).hdepth > hdepth_std(n, k + 1).hdepth) o.fail("k-monotonicity at " + cell(n, k));
      for (int k = 1; k <= n; ++k) {
        bool prev = false;
        for (int s = 0; s <= n; ++s) {
          const bool p = positivity(n, k, s).positive();
          if (prev && !p) o.fail("s-monotonicity at " + cell(n, k) + " s=" + std::to_string(s));
          prev = p;
        }
      }
    }
    return o;
  });

  criterion(6, "multigraded decompositions verify for n <= 16, multigraded hdepth n-1", 120, [] {
    Outcome o;
    int verified = 0, lex_fallbacks = 0;
    for (int n = 2; n <= 16; ++n)
      for (int k = n / 2; k < n; ++k) {
        if (k < 1) continue;
        for (Strategy s : {Strategy::scd, Strategy::max_matching, Strategy::lex_greedy}) {
          const Decomposition d = build_upper_decomposition(n, k, s);
          if (s == Strategy::lex_greedy && d.fell_back) {
            ++lex_fallbacks;
            continue;
          }
          const auto v = verify_hilbert_decomposition(d);
          if (!v.accepted) o.fail(std::string(strategy_name(s)) + " rejected at " + cell(n, k) + ": " + v.message);
          ++verified;
        }
        const auto cert = hdepth_multi_upper(n, k);
        if (cert.hdepth != n - 1 || cert.negative_coeff >= 0 ||
            !verify_hilbert_decomposition(cert.decomposition).accepted)
          o.fail("certificate failed at " + cell(n, k));
      }
    if (o.ok)
      o.detail = std::to_string(verified) + " decompositions, lex fell back at " +
                 std::to_string(lex_fallbacks) + " cells";
    return o;
  });

  criterion(7, "M(5,2) hooks accepted with depth 4; 14[23] rejected at 1234", 5, [] {
    Outcome o;
    const Decomposition d = build_upper_decomposition(5, 2, Strategy::lex_greedy);
    const auto m3 = level_injection(5, 3, Strategy::lex_greedy);
    const auto m5 = level_injection(5, 5, Strategy::lex_greedy);
    if (!m3 || !m5 || m3->image.at(S({2, 4, 5})) != S({2, 4}) || m3->image.at(S({3, 4, 5})) != S({3, 4}) ||
        m5->image.at(S({1, 2, 3, 4, 5})) != S({1, 2, 3, 4}))
      o.fail("lex injection differs from the worked example");
    HookAssignment h = default_hooks(d);
    h[S({1, 2, 3, 4})] = make_hook(5, S({1, 2, 3, 4}), S({1, 2}));
    h[S({1, 2, 3, 5})] = make_hook(5, S({1, 2, 3, 5}), S({1, 5}));
    h[S({1, 2, 4, 5})] = make_hook(5, S({1, 2, 4, 5}), S({1, 4}));
    h[S({1, 3, 4, 5})] = make_hook(5, S({1, 3, 4, 5}), S({1, 3}));
    h[S({2, 3, 4, 5})] = make_hook(5, S({2, 3, 4, 5}), S({2, 3}));
    const StanleyReport good = verify_stanley(d, h);
    if (!good.accepted || good.certified_depth != 4) o.fail("example hooks not accepted with depth 4");
    h[S({1, 2, 3, 4})] = make_hook(5, S({1, 2, 3, 4}), S({2, 3}));
    const StanleyReport bad = verify_stanley(d, h);
    if (bad.accepted || bad.failing_degree != S({1, 2, 3, 4})) o.fail("14[23] not rejected at 1234");
    return o;
  });

  criterion(8, "boundary^2 = 0 for n <= 6; generic_rank({12,13,23}) = 2", 5, [] {
    Outcome o;
    for (int n = 2; n <= 6; ++n)
      for (int k = 2; k <= n; ++k)
        if (!boundary_squared_zero(n, k)) o.fail("boundary^2 != 0 at " + cell(n, k));
    if (generic_rank({S({1, 2}), S({1, 3}), S({2, 3})}, 3) != 2) o.fail("generic rank is not 2");
    return o;
  });

  criterion(9, "gamma(1/2) = 0; |f(alpha0)-1| <= 1e-10 and 0 < gamma <= 1/2-beta; curve deterministic", 5,
            [threads] {
              Outcome o;
              if (solve_gamma(0.5L).gamma != 0) o.fail("gamma(1/2) != 0");
              Real worst = 0;
              for (int i = 1; i <= 9; ++i) {
                const Real beta = i * 0.05L;
                const GammaSolution s = solve_gamma(beta);
                worst = std::max(worst, std::fabs(s.residual));
                if (std::fabs(s.residual) > 1e-10L || !(s.gamma > 0) || s.gamma > 0.5L - beta)
                  o.fail("beta = " + std::to_string(static_cast<double>(beta)));
              }
              const std::string a = curve_text(gamma_curve(100, 1e-12L, 1));
              const std::string b = curve_text(gamma_curve(100, 1e-12L, threads));
              if (a != b || sha256_hex(a) != sha256_hex(curve_text(gamma_curve(100, 1e-12L, 1))))
                o.fail("curve not deterministic");
              if (o.ok) {
                char buf[64];
                std::snprintf(buf, sizeof buf, "max |f(alpha0)-1| = %.2Le", worst);
                o.detail = buf;
              }
              return o;
            });

  criterion(10, "k = 2, n in {1e3,1e4,1e5}: n/2 < hdepth within bounds", 600, [threads] {
    Outcome o;
    const std::vector<int> ns = {1000, 10000, 100000};
    std::vector<DepthResult> results(ns.size());
    parallel_for(ns.size(), threads, [&](std::size_t i) { results[i] = hdepth_std(ns[i], 2); });
    std::ostringstream ratios;
    for (const auto& r : results) {
      if (!(2 * r.hdepth > r.n) || r.hdepth < bound_lower(r.n, 2) || r.hdepth > bound_upper(r.n, 2))
        o.fail("bounds violated at n = " + std::to_string(r.n));
      const double n = r.n;
      const double ratio = (r.hdepth - n / 2) / (0.5 * std::sqrt(n * std::log(n)));
      char buf[64];
      std::snprintf(buf, sizeof buf, "%sn=%d hdepth=%d ratio=%.4f", ratios.tellp() ? "; " : "", r.n,
                    r.hdepth, ratio);
      ratios << buf;
    }
    if (o.ok) o.detail = ratios.str();
    return o;
  });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures;
}
