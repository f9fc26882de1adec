#pragma once

#include "syzdepth/exact.hpp"
#include "syzdepth/polynomial.hpp"
#include "syzdepth/subsets.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace syzdepth {

/// Element of the free module wedge^h R^n: a finite sum of terms
/// c * X^mu * e_H with |H| = h.
class KoszulElem {
 public:
  using Key = std::pair<Exponent, Subset>;

  explicit KoszulElem(int n) : n_(n) {}

  /// The basis element e_S.
  static KoszulElem basis(int n, Subset s);

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, Int>& terms() const { return terms_; }
  void add(const Exponent& mu, Subset h, const Int& c);

  bool operator==(const KoszulElem& o) const = default;
  std::string to_string() const;

 private:
  int n_;
  std::map<Key, Int> terms_;
};

/// Koszul differential: e_{i_1..i_k} -> sum_t (-1)^{t+1} X_{i_t} e_{..without i_t..}.
KoszulElem boundary(const KoszulElem& x);

/// w_G = boundary(e_G), the generator of M(n,|G|) indexed by G.
KoszulElem koszul_generator(Subset g, int n);

/// boundary(boundary(e_S)) == 0 for every size-k subset S; requires 2 <= k <= n.
bool boundary_squared_zero(int n, int k);

/// An order G_1, ..., G_m in which every G_i contributes an element missing
/// from G_1 u ... u G_{i-1}, given as indices into gs. Such an order certifies
/// linear independence of the w_G over R when k >= 2. For k = 1 only a
/// single generator is accepted.
///
/// Found by peeling: some set must own an element no other remaining set
/// contains; removing it never destroys another set's private element, so
/// the peeling succeeds iff an order exists.
std::optional<std::vector<std::size_t>> union_chain_criterion(const std::vector<Subset>& gs);

/// Rank of {w_G : G in gs} over the fraction field of R, by exact Bareiss
/// elimination over R. A randomized specialization is run first and must
/// not exceed the exact rank.
int generic_rank(const std::vector<Subset>& gs, int n);

/// Rank after substituting random residues for X_1..X_n modulo a few
/// 31-bit primes (maximum over trials). Always a lower bound on generic_rank.
int specialization_rank(const std::vector<Subset>& gs, int n, std::uint64_t seed = 1,
                        int trials = 2);

/// Coefficient matrix of the w_G: one row per G, columns indexed by the
/// (k-1)-subsets that occur.
std::vector<std::vector<MPoly>> generator_matrix(const std::vector<Subset>& gs, int n);

}  // namespace syzdepth
