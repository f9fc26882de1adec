#pragma once

#include "syzdepth/exact.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace syzdepth {

using Exponent = std::vector<std::uint16_t>;

/// Sparse polynomial in X_1..X_n with integer coefficients. Terms are kept
/// in lexicographic exponent order; the leading term is the largest.
class MPoly {
 public:
  explicit MPoly(int n = 0) : n_(n) {}

  static MPoly constant(int n, const Int& c);
  /// c * X_i, i is 1-based.
  static MPoly variable(int n, int i, long c = 1);

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Exponent, Int>& terms() const { return terms_; }

  void add_term(const Exponent& e, const Int& c);

  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly operator-() const;
  bool operator==(const MPoly& o) const = default;

  /// Value at an integer point modulo p (p < 2^32).
  std::uint64_t evaluate_mod(const std::vector<std::uint64_t>& point, std::uint64_t p) const;

  std::string to_string() const;

 private:
  int n_;
  std::map<Exponent, Int> terms_;
};

/// Quotient a / b; throws std::domain_error if b does not divide a exactly.
MPoly exact_divide(const MPoly& a, const MPoly& b);

/// Rank over the fraction field by fraction-free (Bareiss) elimination with
/// full pivoting. The matrix is taken by value and destroyed.
int bareiss_rank(std::vector<std::vector<MPoly>> matrix);

}  // namespace syzdepth
