#pragma once

#include "syzdepth/multigraded.hpp"
#include "syzdepth/polynomial.hpp"

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace syzdepth {

/// The element mu * w_G attached to a piece with shift F; mu * X^G = X^F.
struct Hook {
  Exponent mu;
  Subset generator;
};

/// Hooks keyed by piece shift (shifts are unique within a decomposition).
using HookAssignment = std::map<Subset, Hook>;

/// Hook mu = X^{F \ G}, w_G for a piece with shift F.
Hook make_hook(int n, Subset shift, Subset generator);

/// Hooks for the pieces of level k (their own generators), the only choice there.
HookAssignment default_hooks(const Decomposition& d);

struct StanleyReport {
  bool accepted = false;
  std::optional<int> certified_depth;
  std::optional<Subset> failing_degree;
  std::vector<Subset> dependent_family;
  /// Squarefree degrees decided by the union-chain order vs. by exact rank.
  int chain_certified = 0;
  int rank_certified = 0;
  std::string message;
};

/// Generators of the hooks whose pieces reach the squarefree degree S.
std::vector<Subset> family_at(const Decomposition& d, const HookAssignment& h, Subset degree);

/// Checks that hooking every piece turns the Hilbert decomposition into a
/// Stanley decomposition: for each squarefree degree S, the generators of the
/// pieces reaching S must be linearly independent over R.
StanleyReport verify_stanley(const Decomposition& d, const HookAssignment& h);

struct HookSearchResult {
  enum class Status { found, exhausted, timeout };
  Status status = Status::exhausted;
  std::optional<HookAssignment> hooks;
  long nodes = 0;
};

/// Deterministic backtracking over hook choices, lowest level first and
/// generators in lexicographic order, pruning on the independence test at
/// every squarefree degree the new piece reaches.
HookSearchResult search_hooks(const Decomposition& d, std::chrono::duration<double> budget);

}  // namespace syzdepth
