#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace syzdepth {

/// Largest ambient variable count handled by the bitmask representation.
inline constexpr int kMaxVariables = 31;

/// A subset of {1..n}, i.e. a squarefree monomial T^F. Element i is bit i-1.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint32_t bits) : bits_(bits) {}

  static Subset of(const std::vector<int>& elements);
  static constexpr Subset full(int n) {
    return Subset(n >= 32 ? ~0u : ((std::uint32_t{1} << n) - 1));
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int element) const { return (bits_ >> (element - 1)) & 1u; }
  constexpr bool subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }

  constexpr Subset with(int element) const { return Subset(bits_ | (1u << (element - 1))); }
  constexpr Subset without(int element) const { return Subset(bits_ & ~(1u << (element - 1))); }
  constexpr Subset operator|(Subset o) const { return Subset(bits_ | o.bits_); }
  constexpr Subset operator&(Subset o) const { return Subset(bits_ & o.bits_); }
  constexpr Subset minus(Subset o) const { return Subset(bits_ & ~o.bits_); }

  /// Sorted 1-based members.
  std::vector<int> elements() const;
  /// Members concatenated, e.g. "245"; elements above 9 are comma separated.
  std::string label() const;

  /// Order on sorted member tuples, e.g. 12 < 123 < 13 < 2.
  static bool lex_less(Subset a, Subset b);

  constexpr auto operator<=>(const Subset&) const = default;

 private:
  std::uint32_t bits_ = 0;
};

/// All size-u subsets of {1..n} in lexicographic order of their sorted tuples.
std::vector<Subset> level(int n, int u);

}  // namespace syzdepth

template <>
struct std::hash<syzdepth::Subset> {
  std::size_t operator()(syzdepth::Subset s) const noexcept { return s.bits(); }
};
