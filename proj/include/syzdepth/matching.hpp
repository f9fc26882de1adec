#pragma once

#include "syzdepth/subsets.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace syzdepth {

enum class Strategy { lex_greedy, scd, max_matching };

std::string_view strategy_name(Strategy s);
/// Accepts "lex", "lex_greedy", "scd", "matching", "max_matching".
Strategy parse_strategy(std::string_view name);

/// An injection Y_u -> Y_{u-1} sending every size-u subset to one of its
/// (u-1)-subsets.
struct Matching {
  int n = 0;
  int u = 0;
  Strategy strategy = Strategy::scd;
  std::unordered_map<Subset, Subset> image;  // preimage -> image

  /// Inverse lookup: the preimage of a (u-1)-subset, if matched.
  std::unordered_map<Subset, Subset> inverse() const;
};

/// Checks totality on Y_u, the covering relation and injectivity. Returns an
/// empty string when all hold, else a description of the first violation.
std::string check_matching(const Matching& m);

/// Builds the level injection with the requested strategy. Requires
/// n/2 < u <= n. lex_greedy may run out of unused divisors; it then returns
/// nullopt. scd and max_matching always succeed in range.
std::optional<Matching> level_injection(int n, int u, Strategy strategy);

/// level_injection, falling back to max_matching when lex_greedy fails. The
/// returned Matching records the strategy that actually produced it.
Matching level_injection_with_fallback(int n, int u, Strategy strategy);

/// Maximum bipartite matching (Hopcroft-Karp). Left vertices 0..left-1 with
/// adjacency lists into 0..right-1. Returns match_left (right index or -1).
std::vector<int> hopcroft_karp(int left, int right, const std::vector<std::vector<int>>& adj);

}  // namespace syzdepth
