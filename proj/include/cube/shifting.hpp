#pragma once

#include <utility>
#include <vector>

#include "cube/coords.hpp"
#include "cube/set_family.hpp"

namespace cube {

// The compression operator S_{ST}. Requires S and T disjoint. Implemented
// slice-wise via the identities
//   G_{S+T}^S = F_{S+T}^S /\ F_{S+T}^T,   G_{S+T}^T = F_{S+T}^S \/ F_{S+T}^T,
// with all other slices over S+T unchanged.
SetFamily shift(const SetFamily& F, Coords S, Coords T);

// Member-by-member form of the same operator, kept as a differential
// testing oracle for the slice-wise implementation.
SetFamily shift_elementwise(const SetFamily& F, Coords S, Coords T);

// (S_{0,n} o ... o S_{0,1})(F): the monotonization pipeline. The result is
// increasing, has the same size, and no coordinate influence grows.
SetFamily monotonize_all(const SetFamily& F);

// S_{n,i}(F) = F for each i in [n-1], and F upward-closed in coordinate n.
bool is_n_stable(const SetFamily& F);

// S_{n,n-1}(... S_{n,2}(S_{n,1}(F))). Requires F increasing.
SetFamily n_stabilize(const SetFamily& F);

// The shift cascade driving an increasing family with mu <= 1/2 into the
// dictatorship D_1: stage k applies S_{W,{1}} over all k-subsets W of
// {2,...,n} to a fixed point. Returns the successive stage results;
// back() is contained in D_1.
std::vector<SetFamily> cascade_to_dictatorship(const SetFamily& F);

// For A != B both n-pivotal in an increasing n-stable F:
//   F_1 = (F \ {A}) u {B \ {n}},  F_2 = (F \ {B}) u {A \ {n}}.
// At least one has a strictly smaller edge boundary; both have strictly
// fewer n-pivotal sets.
std::pair<SetFamily, SetFamily> pivotal_exchange(const SetFamily& F, Coords A, Coords B);

}  // namespace cube
