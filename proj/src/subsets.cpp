#include "syzdepth/subsets.hpp"

#include <algorithm>
#include <stdexcept>

namespace syzdepth {

Subset Subset::of(const std::vector<int>& elements) {
  std::uint32_t bits = 0;
  for (int e : elements) {
    if (e < 1 || e > kMaxVariables)
      throw std::out_of_range("subset element " + std::to_string(e) + " out of range");
    bits |= 1u << (e - 1);
  }
  return Subset(bits);
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint32_t rest = bits_; rest != 0; rest &= rest - 1)
    out.push_back(std::countr_zero(rest) + 1);
  return out;
}

std::string Subset::label() const {
  const auto elems = elements();
  const bool wide = !elems.empty() && elems.back() > 9;
  std::string out;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (wide && i > 0) out += ',';
    out += std::to_string(elems[i]);
  }
  return out;
}

bool Subset::lex_less(Subset a, Subset b) {
  const auto ea = a.elements();
  const auto eb = b.elements();
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

std::vector<Subset> level(int n, int u) {
  if (n < 0 || n > kMaxVariables) throw std::out_of_range("level: n out of range");
  std::vector<Subset> out;
  if (u < 0 || u > n) return out;
  // combinations in lexicographic order
  std::vector<int> combo(static_cast<std::size_t>(u));
  for (int i = 0; i < u; ++i) combo[i] = i + 1;
  while (true) {
    out.push_back(Subset::of(combo));
    int i = u - 1;
    while (i >= 0 && combo[i] == n - u + i + 1) --i;
    if (i < 0) break;
    ++combo[i];
    for (int m = i + 1; m < u; ++m) combo[m] = combo[m - 1] + 1;
  }
  return out;
}

}  // namespace syzdepth
