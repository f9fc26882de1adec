#include "syzdepth/matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <unordered_set>

namespace syzdepth {

namespace {

void check_range(int n, int u) {
  if (n < 1 || n > kMaxVariables) throw std::domain_error("level_injection: n out of range");
  if (u > n || 2 * u <= n)
    throw std::domain_error("level_injection: need n/2 < u <= n (n=" + std::to_string(n) +
                            ", u=" + std::to_string(u) + ")");
}

// Lexicographically smallest first: dropping a larger element leaves a
// lexicographically smaller tuple.
std::vector<Subset> divisors_lex(Subset s) {
  auto elems = s.elements();
  std::vector<Subset> out;
  out.reserve(elems.size());
  for (auto it = elems.rbegin(); it != elems.rend(); ++it) out.push_back(s.without(*it));
  return out;
}

std::optional<Matching> lex_greedy(int n, int u) {
  Matching m{n, u, Strategy::lex_greedy, {}};
  std::unordered_set<Subset> used;
  for (Subset s : level(n, u)) {
    bool placed = false;
    for (Subset d : divisors_lex(s)) {
      if (used.insert(d).second) {
        m.image.emplace(s, d);
        placed = true;
        break;
      }
    }
    if (!placed) return std::nullopt;
  }
  return m;
}

// Bracketing: read positions 1..n, a non-member opens and a member closes.
// Unmatched members are the ones that can leave the chain; dropping the
// rightmost of them is the step down the symmetric chain.
std::optional<int> chain_predecessor(Subset s, int n) {
  std::vector<int> open;
  std::optional<int> rightmost_unmatched;
  for (int i = 1; i <= n; ++i) {
    if (!s.contains(i)) {
      open.push_back(i);
    } else if (!open.empty()) {
      open.pop_back();
    } else {
      rightmost_unmatched = i;
    }
  }
  return rightmost_unmatched;
}

Matching scd(int n, int u) {
  Matching m{n, u, Strategy::scd, {}};
  for (Subset s : level(n, u)) {
    auto p = chain_predecessor(s, n);
    if (!p) throw std::logic_error("scd: subset " + s.label() + " has no chain predecessor");
    m.image.emplace(s, s.without(*p));
  }
  return m;
}

Matching max_matching(int n, int u) {
  const auto upper = level(n, u);
  const auto lower = level(n, u - 1);
  std::unordered_map<Subset, int> lower_index;
  lower_index.reserve(lower.size());
  for (std::size_t i = 0; i < lower.size(); ++i) lower_index.emplace(lower[i], static_cast<int>(i));

  std::vector<std::vector<int>> adj(upper.size());
  for (std::size_t i = 0; i < upper.size(); ++i)
    for (int e : upper[i].elements()) adj[i].push_back(lower_index.at(upper[i].without(e)));

  const auto match = hopcroft_karp(static_cast<int>(upper.size()), static_cast<int>(lower.size()), adj);
  Matching m{n, u, Strategy::max_matching, {}};
  for (std::size_t i = 0; i < upper.size(); ++i) {
    if (match[i] < 0)
      throw std::logic_error("max_matching: no perfect matching of Y_" + std::to_string(u));
    m.image.emplace(upper[i], lower[static_cast<std::size_t>(match[i])]);
  }
  return m;
}

}  // namespace

std::string_view strategy_name(Strategy s) {
  switch (s) {
    case Strategy::lex_greedy: return "lex";
    case Strategy::scd: return "scd";
    case Strategy::max_matching: return "matching";
  }
  return "?";
}

Strategy parse_strategy(std::string_view name) {
  if (name == "lex" || name == "lex_greedy") return Strategy::lex_greedy;
  if (name == "scd") return Strategy::scd;
  if (name == "matching" || name == "max_matching") return Strategy::max_matching;
  throw std::invalid_argument("unknown strategy '" + std::string(name) + "'");
}

std::unordered_map<Subset, Subset> Matching::inverse() const {
  std::unordered_map<Subset, Subset> out;
  out.reserve(image.size());
  for (const auto& [from, to] : image) out.emplace(to, from);
  return out;
}

std::string check_matching(const Matching& m) {
  const auto domain = level(m.n, m.u);
  if (m.image.size() != domain.size()) return "matching is not total on Y_" + std::to_string(m.u);
  std::unordered_set<Subset> seen;
  for (Subset s : domain) {
    auto it = m.image.find(s);
    if (it == m.image.end()) return "subset " + s.label() + " is unmatched";
    const Subset img = it->second;
    if (!img.subset_of(s) || img.size() != s.size() - 1)
      return "image " + img.label() + " does not divide " + s.label();
    if (!seen.insert(img).second) return "image " + img.label() + " used twice";
  }
  return {};
}

std::optional<Matching> level_injection(int n, int u, Strategy strategy) {
  check_range(n, u);
  switch (strategy) {
    case Strategy::lex_greedy: return lex_greedy(n, u);
    case Strategy::scd: return scd(n, u);
    case Strategy::max_matching: return max_matching(n, u);
  }
  return std::nullopt;
}

Matching level_injection_with_fallback(int n, int u, Strategy strategy) {
  if (auto m = level_injection(n, u, strategy)) return std::move(*m);
  return *level_injection(n, u, Strategy::max_matching);
}

std::vector<int> hopcroft_karp(int left, int right, const std::vector<std::vector<int>>& adj) {
  constexpr int kInf = std::numeric_limits<int>::max();
  std::vector<int> match_left(static_cast<std::size_t>(left), -1);
  std::vector<int> match_right(static_cast<std::size_t>(right), -1);
  std::vector<int> dist(static_cast<std::size_t>(left));

  auto bfs = [&] {
    std::queue<int> queue;
    for (int v = 0; v < left; ++v) {
      if (match_left[v] < 0) {
        dist[v] = 0;
        queue.push(v);
      } else {
        dist[v] = kInf;
      }
    }
    bool found = false;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      for (int w : adj[v]) {
        const int next = match_right[w];
        if (next < 0) {
          found = true;
        } else if (dist[next] == kInf) {
          dist[next] = dist[v] + 1;
          queue.push(next);
        }
      }
    }
    return found;
  };

  // Iterative DFS along the layered graph.
  std::vector<std::size_t> edge_pos(static_cast<std::size_t>(left));
  auto dfs = [&](int root) {
    std::vector<int> stack{root};
    while (!stack.empty()) {
      const int v = stack.back();
      if (edge_pos[v] == adj[v].size()) {
        dist[v] = kInf;
        stack.pop_back();
        continue;
      }
      const int w = adj[v][edge_pos[v]++];
      const int next = match_right[w];
      if (next < 0) {
        // augment along the stack
        int free_right = w;
        for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
          const int prev = match_left[*it];
          match_left[*it] = free_right;
          match_right[free_right] = *it;
          free_right = prev;
        }
        return true;
      }
      if (dist[next] == dist[v] + 1) stack.push_back(next);
    }
    return false;
  };

  while (bfs()) {
    std::fill(edge_pos.begin(), edge_pos.end(), 0);
    for (int v = 0; v < left; ++v)
      if (match_left[v] < 0) dfs(v);
  }
  return match_left;
}

}  // namespace syzdepth
