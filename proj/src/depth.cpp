#include "syzdepth/depth.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace syzdepth {

namespace {

void check_nks(const char* op, int n, int k, int s) {
  if (n < 1 || k < 1 || k > n || s < 0 || s > n)
    throw std::domain_error(std::string(op) + ": need 1 <= k <= n and 0 <= s <= n (n=" +
                            std::to_string(n) + ", k=" + std::to_string(k) +
                            ", s=" + std::to_string(s) + ")");
}

void check_nk(const char* op, int n, int k) {
  if (n < 1 || k < 1 || k > n)
    throw std::domain_error(std::string(op) + ": need 1 <= k <= n (n=" + std::to_string(n) +
                            ", k=" + std::to_string(k) + ")");
}

Int alternating_term(int n, int k, int s, long j) {
  Int term = binomial(n - s, k + j);
  if (j % 2 != 0) term = -term;
  return term;
}

void mul_div(Int& x, unsigned long num, unsigned long den) {
  mpz_mul_ui(x.get_mpz_t(), x.get_mpz_t(), num);
  mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), den);
}

}  // namespace

Int inner_sum1(int n, int k, int s, long j) {
  check_nks("coeff_sum1", n, k, s);
  if (j < 0) throw std::domain_error("coeff_sum1: j must be >= 0");
  Int sum = 0;
  for (int t = 1; t <= s; ++t) sum += binomial(n - t, k - 1) * binomial(s - t + j, s - t);
  return sum;
}

Int coeff_sum1(int n, int k, int s, long j) {
  return alternating_term(n, k, s, j) + inner_sum1(n, k, s, j);
}

Int inner_sum2(int n, int k, int s, long j) {
  check_nks("coeff_sum2", n, k, s);
  if (j < 0 || j > n - s - k)
    throw std::domain_error("coeff_sum2: j=" + std::to_string(j) +
                            " outside the validated range 0..n-s-k");
  Int sum = 0;
  if (s == 0) return sum;  // binom(., s-1) vanishes
  for (int l = 0; l < k; ++l) {
    sum += binomial(j + l, l) * binomial(n - s - j - l - 1, k - l - 1) *
           binomial(s + j + l, s - 1);
  }
  return sum;
}

Int coeff_sum2(int n, int k, int s, long j) {
  return alternating_term(n, k, s, j) + inner_sum2(n, k, s, j);
}

CoefficientScanner::CoefficientScanner(int n, int k, int s)
    : n_(n), k_(k), s_(s), last_(std::max(0, n - s - k)) {
  check_nks("CoefficientScanner", n, k, s);
  form_ = (k < s && n - s - k >= 0) ? Form::l_sum : Form::t_sum;
  isolated_ = binomial(n - s, k);
  if (form_ == Form::t_sum) {
    for (int t = 1; t <= s; ++t) {
      a_.push_back(binomial(n - t, k - 1));
      b_.emplace_back(1);
    }
  } else {
    for (int l = 0; l < k; ++l) {
      c_.emplace_back(1);
      d_.push_back(binomial(n - s - l - 1, k - l - 1));
      e_.push_back(binomial(s + l, s - 1));
    }
  }
}

Int CoefficientScanner::value() const {
  Int sum = j_ % 2 == 0 ? isolated_ : Int(-isolated_);
  Int product;
  if (form_ == Form::t_sum) {
    for (std::size_t i = 0; i < a_.size(); ++i) {
      mpz_mul(product.get_mpz_t(), a_[i].get_mpz_t(), b_[i].get_mpz_t());
      sum += product;
    }
  } else {
    for (std::size_t l = 0; l < c_.size(); ++l) {
      mpz_mul(product.get_mpz_t(), c_[l].get_mpz_t(), d_[l].get_mpz_t());
      mpz_mul(product.get_mpz_t(), product.get_mpz_t(), e_[l].get_mpz_t());
      sum += product;
    }
  }
  return sum;
}

void CoefficientScanner::advance() {
  if (done()) throw std::out_of_range("CoefficientScanner: advanced past n-s-k");
  const auto j = static_cast<unsigned long>(j_);
  const auto n = static_cast<unsigned long>(n_);
  const auto k = static_cast<unsigned long>(k_);
  const auto s = static_cast<unsigned long>(s_);
  mul_div(isolated_, n - s - k - j, k + j + 1);
  if (form_ == Form::t_sum) {
    for (unsigned long t = 1; t <= s; ++t) mul_div(b_[t - 1], s - t + j + 1, j + 1);
  } else {
    for (unsigned long l = 0; l < k; ++l) {
      mul_div(c_[l], j + l + 1, j + 1);
      const unsigned long top = n - s - j - l - 1;
      mul_div(d_[l], top - (k - l - 1), top);
      mul_div(e_[l], s + j + l + 1, j + l + 2);
    }
  }
  ++j_;
}

PositivityReport positivity(int n, int k, int s, ScanOptions options) {
  check_nks("positivity", n, k, s);
  PositivityReport report{n, k, s, Verdict::positive, std::nullopt, std::nullopt, 0};
  CoefficientScanner scan(n, k, s);
  report.checked_range = scan.last();
  while (true) {
    if (!options.odd_only || scan.j() % 2 != 0) {
      Int c = scan.value();
      if (c < 0) {
        report.verdict = Verdict::negative;
        report.witness_j = scan.j();
        report.witness_coeff = std::move(c);
        return report;
      }
    }
    if (scan.done()) break;
    scan.advance();
  }
  return report;
}

PositivityReport positivity_oracle(int n, int k, int s) {
  check_nks("positivity_oracle", n, k, s);
  PositivityReport report{n, k, s, Verdict::positive, std::nullopt, std::nullopt, n - k};
  const auto series = expand_quotient(numerator_std(n, k), s, n);
  for (std::size_t j = 0; j < series.size(); ++j) {
    if (series[j] < 0) {
      report.verdict = Verdict::negative;
      report.witness_j = static_cast<long>(j);
      report.witness_coeff = series[j];
      break;
    }
  }
  return report;
}

int bound_lower(int n, int k) {
  check_nk("bound_lower", n, k);
  return (n + k) / 2;
}

int bound_upper(int n, int k) {
  check_nk("bound_upper", n, k);
  if (k == n) return n;
  if (k >= n / 2) return n - 1;
  const int excess = n - k;
  return n - (excess + k) / (k + 1);  // ceil(excess / (k+1))
}

std::optional<int> closed_form(int n, int k) {
  check_nk("closed_form", n, k);
  if (k == n) return n;
  if (k >= n / 2) return n - 1;
  if (k == 1) return (n + 1) / 2;
  return std::nullopt;
}

DepthResult hdepth_std(int n, int k) {
  check_nk("hdepth_std", n, k);
  DepthResult result;
  result.n = n;
  result.k = k;
  result.lower_bound = bound_lower(n, k);
  result.upper_bound = bound_upper(n, k);

  if (k == n) {
    result.hdepth = n;
    result.min_u = 0;
    result.witness_positive = positivity(n, k, 0);
    if (!result.witness_positive.positive())
      throw InconsistencyError("hdepth_std: free module numerator is not positive");
    return result;
  }

  std::map<int, PositivityReport> reports;
  auto check = [&](int s) -> const PositivityReport& {
    auto it = reports.find(s);
    if (it == reports.end()) it = reports.emplace(s, positivity(n, k, s)).first;
    return it->second;
  };

  int lo = 1;
  int hi = n - result.lower_bound;
  if (!check(hi).positive())
    throw InconsistencyError("hdepth_std(" + std::to_string(n) + "," + std::to_string(k) +
                             "): not positive at the bracket end s=" + std::to_string(hi));
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    if (check(mid).positive())
      hi = mid;
    else
      lo = mid + 1;
  }

  result.min_u = hi;
  result.hdepth = n - hi;
  result.witness_positive = check(hi);
  result.witness_negative = check(hi - 1);
  if (!result.witness_positive.positive() || result.witness_negative->positive())
    throw InconsistencyError("hdepth_std: boundary re-verification failed at s=" +
                             std::to_string(hi));
  if (result.hdepth < result.lower_bound || result.hdepth > result.upper_bound)
    throw InconsistencyError("hdepth_std: result outside [lower, upper] bracket");
  return result;
}

DepthResult hdepth_std_oracle(int n, int k) {
  check_nk("hdepth_std_oracle", n, k);
  DepthResult result;
  result.n = n;
  result.k = k;
  result.lower_bound = bound_lower(n, k);
  result.upper_bound = bound_upper(n, k);
  std::optional<PositivityReport> previous;
  for (int u = 0; u <= n; ++u) {
    auto report = positivity_oracle(n, k, u);
    if (report.positive()) {
      result.min_u = u;
      result.hdepth = n - u;
      result.witness_positive = std::move(report);
      result.witness_negative = std::move(previous);
      return result;
    }
    previous = std::move(report);
  }
  throw InconsistencyError("hdepth_std_oracle: no positive quotient up to s=n");
}

}  // namespace syzdepth
