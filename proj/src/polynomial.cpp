#include "syzdepth/polynomial.hpp"

#include <stdexcept>

namespace syzdepth {

MPoly MPoly::constant(int n, const Int& c) {
  MPoly p(n);
  p.add_term(Exponent(static_cast<std::size_t>(n), 0), c);
  return p;
}

MPoly MPoly::variable(int n, int i, long c) {
  if (i < 1 || i > n) throw std::out_of_range("MPoly::variable: index out of range");
  MPoly p(n);
  Exponent e(static_cast<std::size_t>(n), 0);
  e[static_cast<std::size_t>(i - 1)] = 1;
  p.add_term(e, Int(c));
  return p;
}

void MPoly::add_term(const Exponent& e, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly MPoly::operator+(const MPoly& o) const {
  MPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

MPoly MPoly::operator-() const {
  MPoly out(n_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

MPoly MPoly::operator-(const MPoly& o) const {
  MPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

MPoly MPoly::operator*(const MPoly& o) const {
  MPoly out(n_);
  Exponent e(static_cast<std::size_t>(n_));
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

std::uint64_t MPoly::evaluate_mod(const std::vector<std::uint64_t>& point, std::uint64_t p) const {
  std::uint64_t total = 0;
  for (const auto& [e, c] : terms_) {
    Int reduced = c % Int(static_cast<unsigned long>(p));
    if (reduced < 0) reduced += static_cast<unsigned long>(p);
    std::uint64_t term = reduced.get_ui();
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int r = 0; r < e[i]; ++r) term = term * point[i] % p;
    total = (total + term) % p;
  }
  return total;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      mono += "X" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    const bool negative = c < 0;
    const Int mag = negative ? Int(-c) : c;
    if (!out.empty()) out += negative ? " - " : " + ";
    else if (negative) out += "-";
    if (mono.empty() || mag != 1) out += mag.get_str();
    out += mono;
  }
  return out;
}

MPoly exact_divide(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw std::domain_error("exact_divide: division by zero");
  MPoly quotient(a.n());
  MPoly rest = a;
  const auto& [lead_e, lead_c] = *b.terms().rbegin();
  while (!rest.is_zero()) {
    const auto& [re, rc] = *rest.terms().rbegin();
    Exponent e(re.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (re[i] < lead_e[i]) throw std::domain_error("exact_divide: not divisible");
      e[i] = static_cast<std::uint16_t>(re[i] - lead_e[i]);
    }
    if (!mpz_divisible_p(rc.get_mpz_t(), lead_c.get_mpz_t()))
      throw std::domain_error("exact_divide: coefficient not divisible");
    MPoly term(a.n());
    term.add_term(e, rc / lead_c);
    quotient = quotient + term;
    rest = rest - term * b;
  }
  return quotient;
}

int bareiss_rank(std::vector<std::vector<MPoly>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m.front().size();
  if (rows == 0 || cols == 0) return 0;
  const int n = m.front().front().n();
  MPoly previous = MPoly::constant(n, Int(1));
  std::size_t rank = 0;
  while (rank < rows && rank < cols) {
    // pivot: the nonzero entry with the fewest terms
    std::size_t pr = rows, pc = cols, best = 0;
    for (std::size_t r = rank; r < rows; ++r) {
      for (std::size_t c = rank; c < cols; ++c) {
        const std::size_t size = m[r][c].term_count();
        if (size != 0 && (pr == rows || size < best)) {
          pr = r;
          pc = c;
          best = size;
        }
      }
    }
    if (pr == rows) break;
    std::swap(m[rank], m[pr]);
    if (pc != rank)
      for (auto& row : m) std::swap(row[rank], row[pc]);

    const MPoly& pivot = m[rank][rank];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t c = rank + 1; c < cols; ++c) {
        MPoly cross = pivot * m[r][c] - m[r][rank] * m[rank][c];
        m[r][c] = exact_divide(cross, previous);
      }
      m[r][rank] = MPoly(n);
    }
    previous = m[rank][rank];
    ++rank;
  }
  return static_cast<int>(rank);
}

}  // namespace syzdepth
