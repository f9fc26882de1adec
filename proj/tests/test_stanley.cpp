#include "syzdepth/koszul.hpp"
#include "syzdepth/serialize.hpp"
#include "syzdepth/stanley.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace syzdepth;

namespace {

Subset S(std::initializer_list<int> e) { return Subset::of(std::vector<int>(e)); }

Subset relabel(Subset s, const std::vector<int>& perm) {
  std::vector<int> out;
  for (int e : s.elements()) out.push_back(perm[e - 1]);
  return Subset::of(out);
}

// The hooks printed in the worked M(5,2) example.
HookAssignment example_hooks(const Decomposition& d) {
  HookAssignment h = default_hooks(d);
  h[S({1, 2, 3, 4})] = make_hook(5, S({1, 2, 3, 4}), S({1, 2}));
  h[S({1, 2, 3, 5})] = make_hook(5, S({1, 2, 3, 5}), S({1, 5}));
  h[S({1, 2, 4, 5})] = make_hook(5, S({1, 2, 4, 5}), S({1, 4}));
  h[S({1, 3, 4, 5})] = make_hook(5, S({1, 3, 4, 5}), S({1, 3}));
  h[S({2, 3, 4, 5})] = make_hook(5, S({2, 3, 4, 5}), S({2, 3}));
  return h;
}

}  // namespace

TEST_CASE("Koszul differential squares to zero") {
  for (int n = 2; n <= 6; ++n)
    for (int k = 2; k <= n; ++k) REQUIRE(boundary_squared_zero(n, k));
  const KoszulElem w = koszul_generator(S({1, 2}), 3);
  CHECK(w.terms().size() == 2);
  CHECK(boundary(w).is_zero());
}

TEST_CASE("generic rank") {
  CHECK(generic_rank({S({1, 2}), S({1, 3}), S({2, 3})}, 3) == 2);
  CHECK(generic_rank({S({1, 2}), S({1, 3})}, 3) == 2);
  CHECK(generic_rank({S({1, 2, 3}), S({1, 2, 4}), S({1, 3, 4}), S({2, 3, 4})}, 4) == 3);
  CHECK(generic_rank({}, 4) == 0);
}

TEST_CASE("union chain criterion") {
  const auto order = union_chain_criterion({S({2, 4}), S({3, 4}), S({1, 2})});
  REQUIRE(order);
  CHECK(order->size() == 3);
  CHECK_FALSE(union_chain_criterion({S({1, 2}), S({1, 3}), S({2, 3})}));
  CHECK(union_chain_criterion({S({1, 5}), S({1, 4}), S({1, 3}), S({2, 3})}));
  CHECK(union_chain_criterion({S({1, 2})}));
  // Variables are dependent over R although their unions grow.
  CHECK_FALSE(union_chain_criterion({S({1}), S({2})}));
  CHECK(generic_rank({S({1}), S({2})}, 2) == 1);
}

TEST_CASE("union chain implies full generic rank") {
  std::mt19937_64 rng(20240601);
  int certified = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const int k = 1 + static_cast<int>(rng() % 3);
    if (k > n) continue;
    auto lvl = level(n, k);
    std::shuffle(lvl.begin(), lvl.end(), rng);
    const std::size_t m = 1 + rng() % std::min<std::size_t>(lvl.size(), 5);
    const std::vector<Subset> gs(lvl.begin(), lvl.begin() + static_cast<long>(m));
    const int rank = generic_rank(gs, n);
    REQUIRE(rank <= static_cast<int>(m));
    REQUIRE(specialization_rank(gs, n) <= rank);
    if (union_chain_criterion(gs)) {
      ++certified;
      REQUIRE(rank == static_cast<int>(m));
    }
  }
  CHECK(certified > 50);
}

TEST_CASE("rank is invariant under reordering and relabeling") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 3);
    const int k = 2 + static_cast<int>(rng() % 2);
    auto lvl = level(n, k);
    std::shuffle(lvl.begin(), lvl.end(), rng);
    std::vector<Subset> gs(lvl.begin(), lvl.begin() + std::min<long>(5, static_cast<long>(lvl.size())));
    const int rank = generic_rank(gs, n);
    std::vector<Subset> shuffled = gs;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    REQUIRE(generic_rank(shuffled, n) == rank);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Subset> relabeled;
    for (Subset g : gs) relabeled.push_back(relabel(g, perm));
    REQUIRE(generic_rank(relabeled, n) == rank);
  }
}

TEST_CASE("Bareiss rank and exact division") {
  const MPoly x = MPoly::variable(2, 1), y = MPoly::variable(2, 2);
  CHECK(exact_divide(x * x - y * y, x - y) == x + y);
  CHECK_THROWS(exact_divide(x * x + y, x - y));
  CHECK(bareiss_rank({{x, y}, {x * x, x * y}}) == 1);
  CHECK(bareiss_rank({{x, y}, {y, x}}) == 2);
  CHECK(bareiss_rank({{MPoly(2), MPoly(2)}}) == 0);
}

TEST_CASE("example hooks give a Stanley decomposition of M(5,2) of depth 4") {
  const Decomposition d = build_upper_decomposition(5, 2, Strategy::lex_greedy);
  const StanleyReport r = verify_stanley(d, example_hooks(d));
  CHECK(r.accepted);
  CHECK(*r.certified_depth == 4);
  CHECK(family_at(d, example_hooks(d), S({1, 2, 3, 4, 5})).size() == 4);
}

TEST_CASE("the dependent hook 14[23] is rejected at 1234") {
  const Decomposition d = build_upper_decomposition(5, 2, Strategy::lex_greedy);
  HookAssignment h = example_hooks(d);
  h[S({1, 2, 3, 4})] = make_hook(5, S({1, 2, 3, 4}), S({2, 3}));
  const StanleyReport r = verify_stanley(d, h);
  CHECK_FALSE(r.accepted);
  REQUIRE(r.failing_degree);
  CHECK(*r.failing_degree == S({1, 2, 3, 4}));
  std::vector<Subset> family = r.dependent_family;
  std::sort(family.begin(), family.end());
  std::vector<Subset> expected = {S({2, 4}), S({3, 4}), S({2, 3})};
  std::sort(expected.begin(), expected.end());
  CHECK(family == expected);
}

TEST_CASE("M(2,1) with its own generators has Stanley depth 1") {
  const Decomposition d = build_upper_decomposition(2, 1, Strategy::scd);
  const StanleyReport r = verify_stanley(d, default_hooks(d));
  CHECK(r.accepted);
  CHECK(*r.certified_depth == 1);
}

TEST_CASE("malformed hook assignments are rejected") {
  const Decomposition d = build_upper_decomposition(5, 2, Strategy::lex_greedy);
  HookAssignment missing = example_hooks(d);
  missing.erase(S({2, 3, 4, 5}));
  CHECK_FALSE(verify_stanley(d, missing).accepted);
  HookAssignment wrong_degree = example_hooks(d);
  wrong_degree[S({2, 3, 4, 5})].mu = Exponent{0, 0, 0, 1, 0};
  CHECK_FALSE(verify_stanley(d, wrong_degree).accepted);
  CHECK_THROWS(make_hook(5, S({1, 2, 3}), S({4, 5})));
}

TEST_CASE("hook JSON round trip") {
  const Decomposition d = build_upper_decomposition(5, 2, Strategy::lex_greedy);
  const HookAssignment h = example_hooks(d);
  const HookAssignment back = hooks_from_json(Json::parse(to_json(h).dump()), 5);
  REQUIRE(back.size() == h.size());
  for (const auto& [shift, hook] : h) {
    CHECK(back.at(shift).mu == hook.mu);
    CHECK(back.at(shift).generator == hook.generator);
  }
}

TEST_CASE("hook search certifies Stanley depth n-1 for k = n-3") {
  for (int n = 5; n <= 8; ++n) {
    const Decomposition d = build_upper_decomposition(n, n - 3, Strategy::lex_greedy);
    const auto found = search_hooks(d, std::chrono::seconds(60));
    REQUIRE(found.status == HookSearchResult::Status::found);
    const StanleyReport r = verify_stanley(d, *found.hooks);
    REQUIRE(r.accepted);
    CHECK(*r.certified_depth == n - 1);
  }
}

TEST_CASE("hook search is deterministic") {
  const Decomposition d = build_upper_decomposition(6, 3, Strategy::scd);
  const auto a = search_hooks(d, std::chrono::seconds(60));
  const auto b = search_hooks(d, std::chrono::seconds(60));
  REQUIRE(a.hooks);
  CHECK(to_json(*a.hooks) == to_json(*b.hooks));
  CHECK(a.nodes == b.nodes);
}
