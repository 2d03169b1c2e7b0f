#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cube/coords.hpp"
#include "cube/dyadic.hpp"

namespace cube {

// A subset of P([n]) stored as a 2^n-bit membership bitmap, n <= 12.
// Bit index(S) (see coords.hpp) records whether S is a member, so the
// bitmap read as an integer is monotone in the lexicographic order.
class SetFamily {
 public:
  explicit SetFamily(int n);

  static SetFamily from_sets(int n, const std::vector<std::vector<int>>& sets);
  static SetFamily from_indices(int n, const std::vector<SubsetIdx>& indices);
  // n <= 6 only: the whole bitmap in one word, bit k = subset with index k.
  static SetFamily from_mask64(int n, std::uint64_t mask);
  static SetFamily empty(int n) { return SetFamily(n); }
  static SetFamily full(int n);
  // All sets containing coordinate j.
  static SetFamily dictatorship(int n, int j);

  int dim() const { return n_; }
  std::uint32_t universe_size() const { return 1u << n_; }
  std::uint64_t size() const;

  bool contains_index(SubsetIdx idx) const {
    return (words_[idx >> 6] >> (idx & 63)) & 1u;
  }
  bool contains(Coords s) const { return contains_index(index_of(n_, s)); }
  void insert_index(SubsetIdx idx) { words_[idx >> 6] |= std::uint64_t{1} << (idx & 63); }
  void erase_index(SubsetIdx idx) { words_[idx >> 6] &= ~(std::uint64_t{1} << (idx & 63)); }
  void insert(Coords s) { insert_index(index_of(n_, s)); }
  void erase(Coords s) { erase_index(index_of(n_, s)); }

  const std::vector<std::uint64_t>& words() const { return words_; }
  std::uint64_t mask64() const;  // n <= 6 only

  Dyadic measure() const;                       // |F| / 2^n
  std::uint64_t edge_boundary_size() const;     // |dF|
  Dyadic total_influence() const;               // |dF| / 2^{n-1}
  Dyadic influence(int i) const;                // Inf_i[F]
  std::uint64_t pivotal_count(int i) const;     // |I_i(F)|
  SetFamily pivotal_family(int i) const;        // I_i(F)
  SetFamily slice(Coords B, Coords C) const;    // F_B^C on [n]\B, re-indexed
  bool is_increasing() const;
  SetFamily complement() const;                 // P([n]) \ F

  // The two terms of the influence decomposition over S:
  // (E_{B~P(S)} I[F_S^B],  sum_{i in S} Inf_i[F]); they sum to I[F].
  std::pair<Dyadic, Dyadic> decompose_influence(Coords S) const;

  std::uint64_t symmetric_difference_size(const SetFamily& other) const;
  bool is_subset_of(const SetFamily& other) const;

  friend bool operator==(const SetFamily& a, const SetFamily& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }
  // Total order on bitmaps of equal dimension (big-endian word compare).
  static bool mask_less(const SetFamily& a, const SetFamily& b);

 private:
  int n_;
  std::vector<std::uint64_t> words_;
};

struct SliceStats {
  Dyadic mu_plus, mu_minus;    // mu_i^+, mu_i^-
  Dyadic eps_plus, eps_minus;  // eps_i^+, eps_i^-
};

struct SliceStats2 {
  Dyadic mu_pp, mu_pm, mu_mp, mu_mm;  // mu_{i,j}^{++}, ...
  Dyadic eps_pp;                      // eps_{i,j}^{++}
};

SliceStats slice_stats(const SetFamily& F, int i);
SliceStats2 slice_stats2(const SetFamily& F, int i, int j);

}  // namespace cube
