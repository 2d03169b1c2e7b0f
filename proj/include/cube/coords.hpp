#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace cube {

// A subset of the coordinate ground set [n], packed so that bit (i-1)
// stands for coordinate i. Distinct from SubsetIdx (the bitmap position
// of a subset inside a SetFamily), where coordinate 1 is most significant.
using Coords = std::uint32_t;

inline constexpr int kMaxDim = 12;

inline constexpr bool coords_contains(Coords s, int i) { return (s >> (i - 1)) & 1u; }
inline constexpr Coords coords_singleton(int i) { return 1u << (i - 1); }
inline constexpr int coords_count(Coords s) { return std::popcount(s); }

inline Coords coords_from(std::initializer_list<int> elems, int n) {
  Coords s = 0;
  for (int i : elems) {
    if (i < 1 || i > n) throw std::out_of_range("coordinate out of range");
    s |= coords_singleton(i);
  }
  return s;
}

inline Coords coords_from(const std::vector<int>& elems, int n) {
  Coords s = 0;
  for (int i : elems) {
    if (i < 1 || i > n) throw std::out_of_range("coordinate out of range");
    if (coords_contains(s, i)) throw std::invalid_argument("duplicate coordinate");
    s |= coords_singleton(i);
  }
  return s;
}

inline std::vector<int> coords_elements(Coords s, int n) {
  std::vector<int> out;
  for (int i = 1; i <= n; ++i)
    if (coords_contains(s, i)) out.push_back(i);
  return out;
}

// Bitmap position of subset S: index(S) = sum_{i in S} 2^{n-i}.
// Coordinate 1 is most significant, so numeric order of indices is the
// lexicographic order on subsets.
using SubsetIdx = std::uint32_t;

inline constexpr SubsetIdx index_of(int n, Coords s) {
  SubsetIdx idx = 0;
  for (int i = 1; i <= n; ++i)
    if (coords_contains(s, i)) idx |= SubsetIdx{1} << (n - i);
  return idx;
}

inline constexpr Coords coords_at(int n, SubsetIdx idx) {
  Coords s = 0;
  for (int i = 1; i <= n; ++i)
    if ((idx >> (n - i)) & 1u) s |= coords_singleton(i);
  return s;
}

}  // namespace cube
