#pragma once

#include <cstdint>

#include "cube/coords.hpp"
#include "cube/dyadic.hpp"
#include "cube/set_family.hpp"

namespace cube {

// S > T iff min(S Delta T) in S. Throws if S == T.
bool lex_greater(Coords S, Coords T);

// The m largest subsets of [n] in the lexicographic ordering.
SetFamily lex_segment(int n, std::uint64_t m);

// I[L_mu], computed by the halving recursion
//   I[L_mu] = 1/2 I[L_{2mu}] + 2mu      (mu <= 1/2)
//   I[L_mu] = I[L_{1-mu}]               (mu > 1/2)
// with memoization on reduced dyadics. Requires mu in [0,1].
Dyadic lex_influence(Dyadic mu);

// |dL| for the lex segment of size m in Q_n: lex_influence(m/2^n) * 2^{n-1}.
// This is the extremal benchmark g_n(m).
std::uint64_t lex_boundary(int n, std::uint64_t m);

// mu = 2^{-j} + r with j >= 2 and 0 < r <= 2^{-j}. For mu = 2^{-j+1}
// exactly, the endpoint r = 2^{-j} is chosen. Requires mu in (0, 1/2].
struct MeasureDecomposition {
  int j;
  Dyadic r;
};
MeasureDecomposition decompose_measure(Dyadic mu);

// mu_i^-(L_mu): 0 for i <= j-1, 2r for i = j, >= mu/2 for i >= j+1.
// Computed arithmetically; exact for every dyadic mu in (0, 1/2].
Dyadic lex_slice_profile(Dyadic mu, int i);

// eps = I[F] - I[L_{mu(F)}] >= 0.
Dyadic stability_gap(const SetFamily& F);

}  // namespace cube
