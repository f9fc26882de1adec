#include "syzdepth/exact.hpp"

#include <atomic>
#include <algorithm>
#include <stdexcept>
#include <string>

namespace syzdepth {

namespace {

std::atomic<int> g_configured_rows{BinomialProvider::kDefaultCacheRows};

}  // namespace

BinomialProvider::BinomialProvider(int cache_rows) : cache_rows_(cache_rows) {
  if (cache_rows < 0) throw std::invalid_argument("binomial cache size must be >= 0");
  rows_.resize(static_cast<std::size_t>(cache_rows) + 1);
  rows_[0] = {Int(1)};
  for (int a = 1; a <= cache_rows; ++a) {
    const auto& prev = rows_[a - 1];
    auto& row = rows_[a];
    row.resize(static_cast<std::size_t>(a / 2) + 1);
    row[0] = 1;
    for (int b = 1; b <= a / 2; ++b) {
      // binom(a-1, b) lives at index min(b, a-1-b) of the previous row
      const int mirrored = std::min(b, a - 1 - b);
      row[b] = prev[b - 1] + prev[mirrored];
    }
  }
}

const Int& BinomialProvider::cached(long a, long b) const {
  if (a < 0 || a > cache_rows_ || b < 0 || b > a)
    throw std::out_of_range("binomial cache lookup out of range");
  return rows_[a][std::min(b, a - b)];
}

Int BinomialProvider::direct(long a, long b) {
  if (a < 0) throw std::domain_error("binomial: negative top " + std::to_string(a));
  if (b < 0 || b > a) return 0;
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return out;
}

Int BinomialProvider::operator()(long a, long b) const {
  if (a < 0) throw std::domain_error("binomial: negative top " + std::to_string(a));
  if (b < 0 || b > a) return 0;
  if (a <= cache_rows_) return rows_[a][std::min(b, a - b)];
  return direct(a, b);
}

const BinomialProvider& BinomialProvider::shared() {
  static const BinomialProvider provider(g_configured_rows.load());
  return provider;
}

void BinomialProvider::configure(int cache_rows) {
  if (cache_rows < 0) throw std::invalid_argument("binomial cache size must be >= 0");
  g_configured_rows.store(cache_rows);
}

Int binomial(long a, long b) { return BinomialProvider::shared()(a, b); }

UniLaurent::UniLaurent(long offset, std::vector<Int> coeffs)
    : offset_(offset), coeffs_(std::move(coeffs)) {
  normalize();
}

void UniLaurent::normalize() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    offset_ = 0;
    return;
  }
  std::size_t end = coeffs_.size();
  while (coeffs_[end - 1] == 0) --end;
  coeffs_.erase(coeffs_.begin() + static_cast<long>(end), coeffs_.end());
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
  offset_ += static_cast<long>(lead);
}

Int UniLaurent::coeff(long degree) const {
  if (degree < offset_ || degree > max_degree()) return 0;
  return coeffs_[static_cast<std::size_t>(degree - offset_)];
}

Int UniLaurent::evaluate_at_one() const {
  Int sum = 0;
  for (const auto& c : coeffs_) sum += c;
  return sum;
}

UniLaurent numerator_std(int n, int k) {
  if (n < 1 || k < 0 || k > n)
    throw std::domain_error("numerator_std: need n >= 1 and 0 <= k <= n");
  std::vector<Int> coeffs;
  coeffs.reserve(static_cast<std::size_t>(n - k) + 1);
  for (int j = k; j <= n; ++j) {
    Int c = binomial(n, j);
    if ((j - k) % 2 != 0) c = -c;
    coeffs.push_back(std::move(c));
  }
  return UniLaurent(k, std::move(coeffs));
}

std::vector<Int> expand_quotient(const UniLaurent& q, int s, long d_max) {
  if (s < 0) throw std::domain_error("expand_quotient: s must be >= 0");
  if (d_max < q.offset()) throw std::domain_error("expand_quotient: d_max below offset");
  std::vector<Int> series;
  series.reserve(static_cast<std::size_t>(d_max - q.offset()) + 1);
  for (long d = q.offset(); d <= d_max; ++d) series.push_back(q.coeff(d));
  for (int pass = 0; pass < s; ++pass) {
    for (std::size_t i = 1; i < series.size(); ++i) series[i] += series[i - 1];
  }
  return series;
}

}  // namespace syzdepth
