#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace dirdom::bits {

inline constexpr std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

// Low n bits set; n may be 64.
inline constexpr std::uint64_t low_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

inline int popcount(std::uint64_t m) { return std::popcount(m); }

inline bool test(std::uint64_t m, int i) { return (m >> i) & 1; }

inline int lowest(std::uint64_t m) { return std::countr_zero(m); }

inline std::vector<int> to_vector(std::uint64_t m) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(popcount(m)));
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

inline std::uint64_t from_vector(std::span<const int> ids) {
  std::uint64_t m = 0;
  for (int v : ids) m |= bit(v);
  return m;
}

// Deterministic order on vertex sets: S precedes T when the smallest vertex
// of the symmetric difference lies in S. Used for all witness tie-breaking.
inline bool set_less(std::uint64_t a, std::uint64_t b) {
  if (a == b) return false;
  return test(a, lowest(a ^ b));
}

template <class F>
void for_each_bit(std::uint64_t m, F&& f) {
  while (m) {
    f(std::countr_zero(m));
    m &= m - 1;
  }
}

}  // namespace dirdom::bits
