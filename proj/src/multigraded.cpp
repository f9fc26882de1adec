#include "syzdepth/multigraded.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace syzdepth {

namespace {

void check_cap(const char* op, int n, int cap) {
  if (n < 1 || n > cap || n > kMaxVariables)
    throw std::domain_error(std::string(op) + ": n=" + std::to_string(n) +
                            " exceeds the multigraded cap " + std::to_string(cap));
}

void check_upper_range(const char* op, int n, int k) {
  if (k < n / 2 || k >= n)
    throw std::domain_error(std::string(op) + ": need floor(n/2) <= k < n (n=" +
                            std::to_string(n) + ", k=" + std::to_string(k) + ")");
}

std::int64_t expected_dimension(int support_size, int k) {
  if (support_size == 0) return 0;
  return binomial(support_size - 1, k - 1).get_si();
}

}  // namespace

std::int64_t SqfPoly::coeff(Subset s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? 0 : it->second;
}

void SqfPoly::add(Subset s, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<Subset> SqfPoly::first_difference(const SqfPoly& other) const {
  std::optional<Subset> best;
  auto consider = [&](Subset s) {
    if (coeff(s) != other.coeff(s) && (!best || Subset::lex_less(s, *best))) best = s;
  };
  for (const auto& [s, c] : terms_) consider(s);
  for (const auto& [s, c] : other.terms_) consider(s);
  return best;
}

UniLaurent SqfPoly::specialize() const {
  std::vector<Int> coeffs(static_cast<std::size_t>(n_) + 1);
  for (const auto& [s, c] : terms_) coeffs[static_cast<std::size_t>(s.size())] += Int(static_cast<long>(c));
  return UniLaurent(0, std::move(coeffs));
}

SqfPoly numerator_multi(int n, int k, int cap) {
  check_cap("numerator_multi", n, cap);
  if (k < 1 || k > n) throw std::domain_error("numerator_multi: need 1 <= k <= n");
  SqfPoly q(n);
  for (int d = k; d <= n; ++d) {
    const std::int64_t sign = (d - k) % 2 == 0 ? 1 : -1;
    for (Subset s : level(n, d)) q.add(s, sign);
  }
  return q;
}

Decomposition decomposition_from_matchings(int n, int k, const std::vector<Matching>& matchings) {
  check_upper_range("build_upper_decomposition", n, k);
  Decomposition d;
  d.n = n;
  d.k = k;
  for (int lvl = k; lvl <= n; lvl += 2) {
    std::unordered_map<Subset, Subset> preimage;
    if (lvl + 1 <= n) {
      auto it = std::find_if(matchings.begin(), matchings.end(),
                             [&](const Matching& m) { return m.u == lvl + 1; });
      if (it == matchings.end())
        throw std::invalid_argument("missing injection for level " + std::to_string(lvl + 1));
      preimage = it->inverse();
    }
    for (Subset f : level(n, lvl)) {
      HilbertPiece piece{f, std::nullopt};
      if (auto it = preimage.find(f); it != preimage.end())
        piece.removed = it->second.minus(f).elements().front();
      d.pieces.push_back(piece);
    }
  }
  return d;
}

Decomposition build_upper_decomposition(int n, int k, Strategy strategy, int cap) {
  check_cap("build_upper_decomposition", n, cap);
  check_upper_range("build_upper_decomposition", n, k);
  std::vector<Matching> matchings;
  bool fell_back = false;
  for (int u = k + 1; u <= n; u += 2) {
    matchings.push_back(level_injection_with_fallback(n, u, strategy));
    fell_back = fell_back || matchings.back().strategy != strategy;
  }
  Decomposition d = decomposition_from_matchings(n, k, matchings);
  d.strategy = strategy;
  d.fell_back = fell_back;
  return d;
}

SqfPoly decomposition_numerator(const Decomposition& d) {
  SqfPoly q(d.n);
  for (const auto& piece : d.pieces) {
    q.add(piece.shift, 1);
    if (piece.removed) q.add(piece.shift.with(*piece.removed), -1);
  }
  return q;
}

HilbertVerification verify_hilbert_decomposition(const Decomposition& d) {
  HilbertVerification out;
  for (const auto& piece : d.pieces) {
    if (piece.removed && (*piece.removed < 1 || *piece.removed > d.n ||
                          piece.shift.contains(*piece.removed))) {
      out.mismatch_subset = piece.shift;
      out.message = "piece " + piece.shift.label() + " removes an invalid variable";
      return out;
    }
  }

  const SqfPoly expected = numerator_multi(d.n, d.k);
  const SqfPoly actual = decomposition_numerator(d);
  if (auto diff = actual.first_difference(expected)) {
    out.mismatch_subset = *diff;
    out.message = "numerator mismatch at T^{" + diff->label() + "}: decomposition gives " +
                  std::to_string(actual.coeff(*diff)) + ", expected " +
                  std::to_string(expected.coeff(*diff));
    return out;
  }

  // Hilbert function spot check on multidegrees in {0,1,2}^n.
  auto check_degree = [&](const std::vector<int>& a) {
    Subset support;
    for (int i = 0; i < d.n; ++i)
      if (a[i] > 0) support = support.with(i + 1);
    std::int64_t count = 0;
    for (const auto& piece : d.pieces) {
      bool inside = piece.shift.subset_of(support);
      if (inside && piece.removed) inside = a[*piece.removed - 1] == 0;
      count += inside ? 1 : 0;
    }
    if (count != expected_dimension(support.size(), d.k)) {
      out.mismatch_multidegree = a;
      out.message = "Hilbert function mismatch: " + std::to_string(count) + " pieces, expected " +
                    std::to_string(expected_dimension(support.size(), d.k));
      return false;
    }
    return true;
  };

  std::vector<int> a(static_cast<std::size_t>(d.n), 0);
  if (d.n <= 7) {
    while (true) {
      if (!check_degree(a)) return out;
      int i = 0;
      while (i < d.n && a[i] == 2) a[i++] = 0;
      if (i == d.n) break;
      ++a[i];
    }
  } else {
    std::mt19937_64 rng(0x5eed0000ULL + static_cast<unsigned>(d.n * 64 + d.k));
    std::uniform_int_distribution<int> digit(0, 2);
    for (int sample = 0; sample < 512; ++sample) {
      for (auto& x : a) x = digit(rng);
      if (!check_degree(a)) return out;
    }
  }

  out.accepted = true;
  return out;
}

MultigradedCertificate hdepth_multi_upper(int n, int k, Strategy strategy, int cap) {
  MultigradedCertificate cert;
  cert.decomposition = build_upper_decomposition(n, k, strategy, cap);
  const auto verdict = verify_hilbert_decomposition(cert.decomposition);
  if (!verdict.accepted)
    throw std::runtime_error("hdepth_multi_upper: decomposition rejected: " + verdict.message);
  for (const auto& piece : cert.decomposition.pieces) {
    if (piece.free_vars(n).size() < n - 1)
      throw std::runtime_error("hdepth_multi_upper: piece of depth below n-1");
  }
  // T^{1..k+1} has coefficient -1, so the numerator is not positive and the
  // module is not free.
  std::vector<int> first(static_cast<std::size_t>(k) + 1);
  for (int i = 0; i <= k; ++i) first[i] = i + 1;
  cert.negative_witness = Subset::of(first);
  cert.negative_coeff = numerator_multi(n, k, cap).coeff(cert.negative_witness);
  if (cert.negative_coeff >= 0)
    throw std::runtime_error("hdepth_multi_upper: expected a negative numerator coefficient");
  cert.hdepth = n - 1;
  return cert;
}

}  // namespace syzdepth
