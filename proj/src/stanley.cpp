#include "syzdepth/stanley.hpp"

#include "syzdepth/koszul.hpp"

#include <algorithm>
#include <stdexcept>

namespace syzdepth {

namespace {

// Linear independence over R of the generators w_G. A union-chain order
// settles it combinatorially; a full-rank specialization is a certificate as
// well (a nonvanishing minor at a point is a nonzero minor); otherwise the
// exact rank decides.
enum class Independence { chain, rank, dependent };

Independence independence(const std::vector<Subset>& family, int n, bool allow_specialization) {
  if (union_chain_criterion(family)) return Independence::chain;
  const int size = static_cast<int>(family.size());
  if (allow_specialization && specialization_rank(family, n) == size) return Independence::rank;
  return generic_rank(family, n) == size ? Independence::rank : Independence::dependent;
}

std::vector<Subset> supersets_within(Subset base, Subset allowed) {
  std::vector<Subset> out;
  const std::uint32_t free_bits = allowed.minus(base).bits();
  std::uint32_t sub = free_bits;
  while (true) {
    out.push_back(Subset(base.bits() | sub));
    if (sub == 0) break;
    sub = (sub - 1) & free_bits;
  }
  return out;
}

}  // namespace

Hook make_hook(int n, Subset shift, Subset generator) {
  if (!generator.subset_of(shift))
    throw std::invalid_argument("hook generator " + generator.label() + " does not divide " +
                                shift.label());
  Exponent mu(static_cast<std::size_t>(n), 0);
  for (int i : shift.minus(generator).elements()) mu[static_cast<std::size_t>(i - 1)] = 1;
  return Hook{mu, generator};
}

HookAssignment default_hooks(const Decomposition& d) {
  HookAssignment h;
  for (const auto& piece : d.pieces)
    if (piece.shift.size() == d.k) h.emplace(piece.shift, make_hook(d.n, piece.shift, piece.shift));
  return h;
}

std::vector<Subset> family_at(const Decomposition& d, const HookAssignment& h, Subset degree) {
  std::vector<Subset> family;
  for (const auto& piece : d.pieces)
    if (piece.covers_support(degree)) family.push_back(h.at(piece.shift).generator);
  return family;
}

StanleyReport verify_stanley(const Decomposition& d, const HookAssignment& h) {
  StanleyReport report;
  const auto hilbert = verify_hilbert_decomposition(d);
  if (!hilbert.accepted) {
    report.message = "not a Hilbert decomposition: " + hilbert.message;
    return report;
  }

  for (const auto& piece : d.pieces) {
    auto it = h.find(piece.shift);
    if (it == h.end()) {
      report.failing_degree = piece.shift;
      report.message = "no hook for piece " + piece.shift.label();
      return report;
    }
    const Hook& hook = it->second;
    bool compatible = hook.generator.size() == d.k && hook.mu.size() == static_cast<std::size_t>(d.n) &&
                      hook.generator.subset_of(piece.shift);
    for (int i = 1; compatible && i <= d.n; ++i) {
      const int degree = hook.mu[static_cast<std::size_t>(i - 1)] + (hook.generator.contains(i) ? 1 : 0);
      compatible = degree == (piece.shift.contains(i) ? 1 : 0);
    }
    if (!compatible) {
      report.failing_degree = piece.shift;
      report.message = "hook for piece " + piece.shift.label() + " has the wrong degree";
      return report;
    }
  }

  for (int size = d.k; size <= d.n; ++size) {
    for (Subset degree : level(d.n, size)) {
      auto family = family_at(d, h, degree);
      if (family.empty()) continue;
      switch (independence(family, d.n, false)) {
        case Independence::chain: ++report.chain_certified; break;
        case Independence::rank: ++report.rank_certified; break;
        case Independence::dependent:
          report.failing_degree = degree;
          report.dependent_family = std::move(family);
          report.message = "generators at squarefree degree " + degree.label() +
                           " are linearly dependent";
          return report;
      }
    }
  }

  int depth = d.n;
  for (const auto& piece : d.pieces) depth = std::min(depth, piece.free_vars(d.n).size());
  report.accepted = true;
  report.certified_depth = depth;
  return report;
}

HookSearchResult search_hooks(const Decomposition& d, std::chrono::duration<double> budget) {
  using clock = std::chrono::steady_clock;
  const auto deadline = clock::now() + std::chrono::duration_cast<clock::duration>(budget);

  std::vector<std::size_t> order(d.pieces.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return d.pieces[a].shift.size() < d.pieces[b].shift.size();
  });

  struct Slot {
    Subset shift;
    std::vector<Subset> candidates;
    std::vector<Subset> degrees;  // squarefree degrees the piece reaches
  };
  std::vector<Slot> slots;
  for (std::size_t i : order) {
    const auto& piece = d.pieces[i];
    Slot slot{piece.shift, {}, {}};
    for (Subset g : level(d.n, d.k))
      if (g.subset_of(piece.shift)) slot.candidates.push_back(g);
    slot.degrees = supersets_within(piece.shift, piece.free_vars(d.n));
    slots.push_back(std::move(slot));
  }

  std::map<Subset, std::vector<Subset>> at_degree;  // assigned generators per degree
  std::vector<std::size_t> choice(slots.size(), 0);
  HookSearchResult result;

  auto fits = [&](const Slot& slot, Subset g) {
    for (Subset degree : slot.degrees) {
      auto family = at_degree[degree];
      family.push_back(g);
      if (independence(family, d.n, true) == Independence::dependent) return false;
    }
    return true;
  };
  auto place = [&](const Slot& slot, Subset g) {
    for (Subset degree : slot.degrees) at_degree[degree].push_back(g);
  };
  auto unplace = [&](const Slot& slot) {
    for (Subset degree : slot.degrees) at_degree[degree].pop_back();
  };

  std::size_t depth = 0;
  while (true) {
    if (depth == slots.size()) {
      HookAssignment hooks;
      for (std::size_t i = 0; i < slots.size(); ++i)
        hooks.emplace(slots[i].shift,
                      make_hook(d.n, slots[i].shift, slots[i].candidates[choice[i] - 1]));
      result.status = HookSearchResult::Status::found;
      result.hooks = std::move(hooks);
      return result;
    }
    if (clock::now() > deadline) {
      result.status = HookSearchResult::Status::timeout;
      return result;
    }
    const Slot& slot = slots[depth];
    bool advanced = false;
    while (choice[depth] < slot.candidates.size()) {
      const Subset g = slot.candidates[choice[depth]++];
      ++result.nodes;
      if (fits(slot, g)) {
        place(slot, g);
        ++depth;
        advanced = true;
        break;
      }
    }
    if (advanced) continue;
    choice[depth] = 0;
    if (depth == 0) {
      result.status = HookSearchResult::Status::exhausted;
      return result;
    }
    --depth;
    unplace(slots[depth]);
  }
}

}  // namespace syzdepth
