#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cube/coords.hpp"
#include "cube/set_family.hpp"

namespace cube {

// An automorphism of Q_n: G = X_D(pi(F)), i.e. permute coordinates by pi,
// then flip membership on the coordinates in D.
struct CubeAutomorphism {
  std::vector<int> pi;  // pi[k] = image of coordinate k+1, values in [n]
  Coords flips = 0;     // D

  static CubeAutomorphism identity(int n);
};

bool operator==(const CubeAutomorphism& a, const CubeAutomorphism& b);

SetFamily apply_automorphism(const CubeAutomorphism& a, const SetFamily& F);
Coords apply_to_set(const CubeAutomorphism& a, Coords s, int n);

// (a * b) acts as first b, then a.
CubeAutomorphism compose(const CubeAutomorphism& a, const CubeAutomorphism& b);
CubeAutomorphism inverse(const CubeAutomorphism& a);

// Exact canonicalization enumerates the full group of order n! * 2^n,
// so it is gated at n <= 6 and fails loudly above that.
inline constexpr int kMaxExactSymmetryDim = 6;

// All n! * 2^n automorphisms, in a fixed deterministic order.
const std::vector<CubeAutomorphism>& full_group(int n);

// Minimum-mask image of F over the full group; equal canonical forms
// characterize weak isomorphism.
SetFamily canonical_form(const SetFamily& F);

// Witness (pi, D) with G = X_D(pi(F)), if one exists.
std::optional<CubeAutomorphism> weak_isomorphism_witness(const SetFamily& F,
                                                         const SetFamily& G);
bool are_weakly_isomorphic(const SetFamily& F, const SetFamily& G);

// Precomputed images (as 2^n-bit masks, n <= 6) of the lex segment of
// size m, deduplicated; shared across workers once built.
class LexClassImages {
 public:
  LexClassImages(int n, std::uint64_t m);
  // min |F Delta G| over G weakly isomorphic to lex_segment(n, m).
  std::uint64_t dist_to(std::uint64_t family_mask) const;
  const std::vector<std::uint64_t>& images() const { return images_; }

 private:
  std::vector<std::uint64_t> images_;
};

// min |F Delta G| over all G weakly isomorphic to lex_segment(n, |F|).
std::uint64_t dist_to_lex_class(const SetFamily& F);

}  // namespace cube
