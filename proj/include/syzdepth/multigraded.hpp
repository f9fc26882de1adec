#pragma once

#include "syzdepth/exact.hpp"
#include "syzdepth/matching.hpp"
#include "syzdepth/subsets.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace syzdepth {

/// Default cap on n for squarefree multigraded computations (2^n supports).
inline constexpr int kDefaultMultiCap = 24;

/// Squarefree polynomial in T_1..T_n: subset -> integer coefficient.
/// Zero coefficients are never stored. Coefficients stay bounded by the
/// number of subsets, so 64 bits suffice.
class SqfPoly {
 public:
  explicit SqfPoly(int n) : n_(n) {}

  int n() const { return n_; }
  const std::unordered_map<Subset, std::int64_t>& terms() const { return terms_; }
  std::int64_t coeff(Subset s) const;
  void add(Subset s, std::int64_t c);

  /// Lexicographically first subset on which the two polynomials differ.
  std::optional<Subset> first_difference(const SqfPoly& other) const;

  /// Substitute T_i = T for every i.
  UniLaurent specialize() const;

  bool operator==(const SqfPoly& other) const {
    return n_ == other.n_ && terms_ == other.terms_;
  }

 private:
  int n_;
  std::unordered_map<Subset, std::int64_t> terms_;
};

/// Q(n,k) = sigma_{n,k} - sigma_{n,k+1} + ... + (-1)^{n-k} sigma_{n,n}.
SqfPoly numerator_multi(int n, int k, int cap = kDefaultMultiCap);

/// One summand K[F'](-F) of a Hilbert decomposition. F' is {1..n} or
/// {1..n} minus `removed`, and removed is never in `shift`.
struct HilbertPiece {
  Subset shift;
  std::optional<int> removed;

  Subset free_vars(int n) const {
    return removed ? Subset::full(n).without(*removed) : Subset::full(n);
  }
  /// Whether this piece has a basis element in every multidegree with the
  /// given support.
  bool covers_support(Subset support) const {
    return shift.subset_of(support) && !(removed && support.contains(*removed));
  }
};

struct Decomposition {
  int n = 0;
  int k = 0;
  Strategy strategy = Strategy::scd;
  /// Set when some lex_greedy level had to fall back to max_matching.
  bool fell_back = false;
  std::vector<HilbertPiece> pieces;
};

/// The decomposition Q(n,k) = sum T^F - sum T^F T_p over even levels k+j,
/// built from the level injections Y_{k+j+1} -> Y_{k+j}.
/// Requires floor(n/2) <= k < n.
Decomposition build_upper_decomposition(int n, int k, Strategy strategy,
                                        int cap = kDefaultMultiCap);

/// Same construction with caller-supplied injections, keyed by level u.
Decomposition decomposition_from_matchings(int n, int k, const std::vector<Matching>& matchings);

struct HilbertVerification {
  bool accepted = false;
  std::optional<Subset> mismatch_subset;
  std::optional<std::vector<int>> mismatch_multidegree;
  std::string message;
};

/// Exact numerator identity plus a Hilbert function spot check over
/// multidegrees in {0,1,2}^n (exhaustive for n <= 7, sampled otherwise).
HilbertVerification verify_hilbert_decomposition(const Decomposition& d);

/// Numerator of the decomposition: sum over pieces of T^F (1 - T_p).
SqfPoly decomposition_numerator(const Decomposition& d);

struct MultigradedCertificate {
  int hdepth = 0;
  Decomposition decomposition;
  Subset negative_witness;
  std::int64_t negative_coeff = 0;
};

/// Multigraded Hilbert depth n-1 for floor(n/2) <= k < n, with a verified
/// decomposition of depth >= n-1 and a negative numerator coefficient.
MultigradedCertificate hdepth_multi_upper(int n, int k, Strategy strategy = Strategy::scd,
                                          int cap = kDefaultMultiCap);

}  // namespace syzdepth
