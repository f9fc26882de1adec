#include "syzdepth/matching.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>

using namespace syzdepth;

namespace {

Subset S(std::initializer_list<int> e) { return Subset::of(std::vector<int>(e)); }

}  // namespace

TEST_CASE("subset basics") {
  const Subset a = S({1, 3, 4});
  CHECK(a.size() == 3);
  CHECK(a.label() == "134");
  CHECK(a.contains(3));
  CHECK_FALSE(a.contains(2));
  CHECK(a.without(3) == S({1, 4}));
  CHECK(S({1, 4}).subset_of(a));
  CHECK(level(5, 2).size() == 10);
  CHECK(level(5, 2).front() == S({1, 2}));
  CHECK(level(5, 2).back() == S({4, 5}));
  const auto l = level(6, 3);
  for (std::size_t i = 1; i < l.size(); ++i) REQUIRE(Subset::lex_less(l[i - 1], l[i]));
}

TEST_CASE("strategy names") {
  CHECK(parse_strategy("lex") == Strategy::lex_greedy);
  CHECK(parse_strategy("scd") == Strategy::scd);
  CHECK(parse_strategy("matching") == Strategy::max_matching);
  CHECK(strategy_name(Strategy::max_matching) == "matching");
  CHECK_THROWS(parse_strategy("greedy"));
}

TEST_CASE("lex greedy reproduces the M(5,2) injection") {
  const auto m3 = level_injection(5, 3, Strategy::lex_greedy);
  REQUIRE(m3);
  const std::map<std::string, std::string> expected = {
      {"123", "12"}, {"124", "14"}, {"125", "15"}, {"134", "13"}, {"135", "35"},
      {"145", "45"}, {"234", "23"}, {"235", "25"}, {"245", "24"}, {"345", "34"}};
  for (const auto& [from, to] : m3->image) CHECK(expected.at(from.label()) == to.label());
  CHECK(m3->image.size() == expected.size());
  const auto m5 = level_injection(5, 5, Strategy::lex_greedy);
  REQUIRE(m5);
  CHECK(m5->image.at(S({1, 2, 3, 4, 5})) == S({1, 2, 3, 4}));
}

TEST_CASE("injections are valid for n <= 16") {
  for (int n = 1; n <= 16; ++n)
    for (int u = n / 2 + 1; u <= n; ++u) {
      for (Strategy s : {Strategy::scd, Strategy::max_matching}) {
        const auto m = level_injection(n, u, s);
        REQUIRE(m);
        REQUIRE(check_matching(*m) == "");
      }
      const Matching m = level_injection_with_fallback(n, u, Strategy::lex_greedy);
      REQUIRE(check_matching(m) == "");
    }
}

TEST_CASE("injections outside the domain are rejected") {
  CHECK_THROWS(level_injection(6, 3, Strategy::scd));
  CHECK_THROWS(level_injection(6, 7, Strategy::scd));
}

TEST_CASE("check_matching detects violations") {
  Matching m = *level_injection(5, 3, Strategy::scd);
  m.image[S({1, 2, 3})] = S({4, 5});
  CHECK(check_matching(m) != "");
  Matching dup = *level_injection(5, 3, Strategy::scd);
  dup.image[S({1, 2, 3})] = S({1, 2});
  dup.image[S({1, 2, 4})] = S({1, 2});
  CHECK(check_matching(dup) != "");
  Matching partial = *level_injection(5, 3, Strategy::scd);
  partial.image.erase(S({3, 4, 5}));
  CHECK(check_matching(partial) != "");
}

TEST_CASE("Hopcroft-Karp") {
  // Perfect matching exists only via augmenting paths.
  const std::vector<std::vector<int>> adj = {{0, 1}, {0}, {1, 2}};
  const auto match = hopcroft_karp(3, 3, adj);
  CHECK(match == std::vector<int>{1, 0, 2});
  const auto partial = hopcroft_karp(2, 1, {{0}, {0}});
  CHECK(std::count(partial.begin(), partial.end(), -1) == 1);
}
