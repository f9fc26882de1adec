#include "syzdepth/koszul.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace syzdepth {

KoszulElem KoszulElem::basis(int n, Subset s) {
  KoszulElem x(n);
  x.add(Exponent(static_cast<std::size_t>(n), 0), s, Int(1));
  return x;
}

void KoszulElem::add(const Exponent& mu, Subset h, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(Key{mu, h}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::string KoszulElem::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : terms_) {
    const auto& [mu, h] = key;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const Int mag = c < 0 ? Int(-c) : c;
    if (mag != 1) out += mag.get_str();
    for (std::size_t i = 0; i < mu.size(); ++i) {
      if (mu[i] == 0) continue;
      out += "X" + std::to_string(i + 1);
      if (mu[i] > 1) out += "^" + std::to_string(mu[i]);
    }
    out += "e" + h.label();
  }
  return out;
}

KoszulElem boundary(const KoszulElem& x) {
  KoszulElem out(x.n());
  for (const auto& [key, c] : x.terms()) {
    const auto& [mu, h] = key;
    int position = 0;
    for (int i : h.elements()) {
      ++position;
      Exponent shifted = mu;
      ++shifted[static_cast<std::size_t>(i - 1)];
      out.add(shifted, h.without(i), position % 2 == 1 ? c : Int(-c));
    }
  }
  return out;
}

KoszulElem koszul_generator(Subset g, int n) {
  if (g.empty()) throw std::domain_error("koszul_generator: |G| must be >= 1");
  if (!g.subset_of(Subset::full(n))) throw std::domain_error("koszul_generator: G not in {1..n}");
  return boundary(KoszulElem::basis(n, g));
}

bool boundary_squared_zero(int n, int k) {
  if (k < 2 || k > n) throw std::domain_error("boundary_squared_zero: need 2 <= k <= n");
  for (Subset s : level(n, k))
    if (!boundary(koszul_generator(s, n)).is_zero()) return false;
  return true;
}

std::optional<std::vector<std::size_t>> union_chain_criterion(const std::vector<Subset>& gs) {
  // For k = 1 the generators are the variables themselves, of rank 1 in R.
  if (gs.size() > 1 && gs.front().size() < 2) return std::nullopt;
  std::vector<std::size_t> remaining(gs.size());
  for (std::size_t i = 0; i < gs.size(); ++i) remaining[i] = i;
  std::vector<std::size_t> peeled;
  while (!remaining.empty()) {
    bool progress = false;
    for (std::size_t pos = 0; pos < remaining.size(); ++pos) {
      Subset others;
      for (std::size_t q = 0; q < remaining.size(); ++q)
        if (q != pos) others = others | gs[remaining[q]];
      if (!gs[remaining[pos]].subset_of(others)) {
        peeled.push_back(remaining[pos]);
        remaining.erase(remaining.begin() + static_cast<long>(pos));
        progress = true;
        break;
      }
    }
    if (!progress) return std::nullopt;
  }
  std::reverse(peeled.begin(), peeled.end());
  return peeled;
}

std::vector<std::vector<MPoly>> generator_matrix(const std::vector<Subset>& gs, int n) {
  std::vector<Subset> columns;
  std::vector<KoszulElem> rows;
  rows.reserve(gs.size());
  for (Subset g : gs) {
    rows.push_back(koszul_generator(g, n));
    for (const auto& [key, c] : rows.back().terms()) columns.push_back(key.second);
  }
  std::sort(columns.begin(), columns.end());
  columns.erase(std::unique(columns.begin(), columns.end()), columns.end());

  std::vector<std::vector<MPoly>> matrix(gs.size(), std::vector<MPoly>(columns.size(), MPoly(n)));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& [key, c] : rows[r].terms()) {
      const auto col = static_cast<std::size_t>(
          std::lower_bound(columns.begin(), columns.end(), key.second) - columns.begin());
      matrix[r][col].add_term(key.first, c);
    }
  }
  return matrix;
}

namespace {

int rank_mod_p(std::vector<std::vector<std::uint64_t>> a, std::uint64_t p) {
  auto power = [p](std::uint64_t base, std::uint64_t exp) {
    std::uint64_t result = 1;
    base %= p;
    while (exp) {
      if (exp & 1) result = result * base % p;
      base = base * base % p;
      exp >>= 1;
    }
    return result;
  };
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[rank], a[pivot]);
    const std::uint64_t inv = power(a[rank][c], p - 2);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r][c] == 0) continue;
      const std::uint64_t factor = a[r][c] * inv % p;
      for (std::size_t cc = c; cc < cols; ++cc)
        a[r][cc] = (a[r][cc] + (p - factor) * a[rank][cc]) % p;
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

}  // namespace

int specialization_rank(const std::vector<Subset>& gs, int n, std::uint64_t seed, int trials) {
  static constexpr std::uint64_t kPrimes[] = {2147483647ULL, 2147483629ULL, 2147483587ULL,
                                              2147483579ULL};
  if (gs.empty()) return 0;
  const auto matrix = generator_matrix(gs, n);
  std::mt19937_64 rng(seed);
  int best = 0;
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t p = kPrimes[static_cast<std::size_t>(t) % std::size(kPrimes)];
    std::uniform_int_distribution<std::uint64_t> draw(1, p - 1);
    std::vector<std::uint64_t> point(static_cast<std::size_t>(n));
    for (auto& x : point) x = draw(rng);
    std::vector<std::vector<std::uint64_t>> values(matrix.size());
    for (std::size_t r = 0; r < matrix.size(); ++r)
      for (const auto& entry : matrix[r]) values[r].push_back(entry.evaluate_mod(point, p));
    best = std::max(best, rank_mod_p(std::move(values), p));
  }
  return best;
}

int generic_rank(const std::vector<Subset>& gs, int n) {
  if (gs.empty()) return 0;
  const int lower = specialization_rank(gs, n);
  const int exact = bareiss_rank(generator_matrix(gs, n));
  if (lower > exact)
    throw std::logic_error("generic_rank: specialization rank exceeds exact rank");
  return exact;
}

}  // namespace syzdepth
