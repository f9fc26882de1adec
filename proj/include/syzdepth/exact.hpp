#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace syzdepth {

using Int = mpz_class;
using Rational = mpq_class;

/// Binomial coefficients over nonnegative tops.
///
/// Rows 0..cache_rows() of Pascal's triangle are built once in the
/// constructor and never mutated afterwards, so one provider can be shared
/// read-only between worker threads. Arguments beyond the cache go through
/// GMP's direct evaluator.
class BinomialProvider {
 public:
  static constexpr int kDefaultCacheRows = 1024;

  explicit BinomialProvider(int cache_rows = kDefaultCacheRows);

  /// binomial(a, b) for a >= 0; zero when b < 0 or b > a.
  /// Throws std::domain_error for a < 0.
  Int operator()(long a, long b) const;

  /// Uncached evaluation, same contract as operator().
  static Int direct(long a, long b);

  /// Pascal-recurrence value; requires 0 <= a <= cache_rows().
  const Int& cached(long a, long b) const;

  int cache_rows() const { return cache_rows_; }

  /// Process-wide provider. The first call fixes its size; configure() must
  /// run before any other use to take effect.
  static const BinomialProvider& shared();
  static void configure(int cache_rows);

 private:
  int cache_rows_;
  // rows_[a] holds binomial(a, b) for 0 <= b <= a / 2.
  std::vector<std::vector<Int>> rows_;
};

/// Shorthand for BinomialProvider::shared()(a, b).
Int binomial(long a, long b);

/// Univariate Laurent polynomial with integer coefficients and dense storage.
/// Stored coefficient runs never start or end with zero; the zero
/// polynomial has no coefficients and offset 0.
class UniLaurent {
 public:
  UniLaurent() = default;
  UniLaurent(long offset, std::vector<Int> coeffs);

  long offset() const { return offset_; }
  long max_degree() const { return offset_ + static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Int>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of T^degree, zero outside the stored range.
  Int coeff(long degree) const;
  Int evaluate_at_one() const;

  bool operator==(const UniLaurent& other) const = default;

 private:
  void normalize();

  long offset_ = 0;
  std::vector<Int> coeffs_;
};

/// Numerator of the standard graded Hilbert series of M(n,k):
/// sum_{j=k}^{n} (-1)^{j-k} binom(n,j) T^j.
UniLaurent numerator_std(int n, int k);

/// Coefficients of q(T) / (1-T)^s for degrees q.offset() .. d_max, obtained
/// by s successive prefix-sum passes.
std::vector<Int> expand_quotient(const UniLaurent& q, int s, long d_max);

}  // namespace syzdepth
