#pragma once

#include "syzdepth/exact.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace syzdepth {

// Coefficients of Q_{n,k}(T) / (1-T)^s. The coefficient of T^{j+k} is
//
//   (-1)^j binom(n-s, k+j) + I(n,k,s,j)
//
// where the inner sum I has two closed forms: a t-sum of length s and an
// l-sum of length k. The l-sum form is only used for 0 <= j <= n-s-k.

/// t-sum form; valid for every j >= 0.
Int coeff_sum1(int n, int k, int s, long j);

/// l-sum form; throws std::domain_error outside 0 <= j <= n-s-k.
Int coeff_sum2(int n, int k, int s, long j);

/// The inner sums alone (without the alternating binomial term).
Int inner_sum1(int n, int k, int s, long j);
Int inner_sum2(int n, int k, int s, long j);

/// Walks j = 0, 1, ... and yields the coefficient of T^{j+k} in
/// Q_{n,k}/(1-T)^s, updating every binomial incrementally with one small
/// multiplication and one exact small division per step.
///
/// Stays within 0 <= j <= last(); last() is max(0, n-s-k).
class CoefficientScanner {
 public:
  enum class Form { t_sum, l_sum };

  CoefficientScanner(int n, int k, int s);

  long j() const { return j_; }
  long last() const { return last_; }
  Form form() const { return form_; }
  bool done() const { return j_ >= last_; }

  /// Coefficient at the current j.
  Int value() const;
  /// Moves to j + 1; precondition !done().
  void advance();

 private:
  int n_, k_, s_;
  long j_ = 0;
  long last_;
  Form form_;
  Int isolated_;          // binom(n-s, k+j)
  std::vector<Int> a_;    // t-sum: binom(n-t, k-1), constant in j
  std::vector<Int> b_;    // t-sum: binom(s-t+j, s-t)
  std::vector<Int> c_;    // l-sum: binom(j+l, l)
  std::vector<Int> d_;    // l-sum: binom(n-s-j-l-1, k-l-1)
  std::vector<Int> e_;    // l-sum: binom(s+j+l, s-1)
};

enum class Verdict { positive, negative };

struct PositivityReport {
  int n = 0, k = 0, s = 0;
  Verdict verdict = Verdict::positive;
  std::optional<long> witness_j;
  std::optional<Int> witness_coeff;
  /// Largest j that was examined. Beyond n-s-k the alternating term vanishes
  /// and every coefficient is a sum of nonnegative terms.
  long checked_range = 0;

  bool positive() const { return verdict == Verdict::positive; }
};

struct ScanOptions {
  /// Even j carry a nonnegative alternating term, so only odd j can fail.
  bool odd_only = true;
};

/// Decides whether Q_{n,k}(T)/(1-T)^s has only nonnegative coefficients.
PositivityReport positivity(int n, int k, int s, ScanOptions options = {});

/// Same verdict, decided on the prefix-sum expansion of numerator_std.
PositivityReport positivity_oracle(int n, int k, int s);

/// Raised when the search bracket or the boundary re-verification disagrees
/// with monotonicity of positivity in s.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct DepthResult {
  int n = 0, k = 0;
  int hdepth = 0;
  int min_u = 0;
  int lower_bound = 0;
  int upper_bound = 0;
  PositivityReport witness_positive;
  std::optional<PositivityReport> witness_negative;
};

/// Standard graded Hilbert depth of M(n,k), 1 <= k <= n.
DepthResult hdepth_std(int n, int k);

/// Linear scan over u using the prefix-sum oracle. Intended for small n.
DepthResult hdepth_std_oracle(int n, int k);

/// floor((n+k)/2)
int bound_lower(int n, int k);
/// n - ceil((n-k)/(k+1)) for k < floor(n/2); n-1 up to k < n; n at k = n.
int bound_upper(int n, int k);
/// Known closed forms: k = 1, floor(n/2) <= k < n, and k = n.
std::optional<int> closed_form(int n, int k);

}  // namespace syzdepth
