#pragma once

#include <array>
#include <string>

#include "cube/dyadic.hpp"
#include "cube/set_family.hpp"

namespace cube {

// A fractional lexicographic family of order k (k = 1 or 2): a map from
// P([k]) to dyadics in [0,1], standing for a family whose slices over the
// first k coordinates are lex segments of the prescribed measures.
// values[b] is indexed by the coordinate bitmask b (bit i-1 = coordinate i).
struct FracLexFamily {
  int order = 1;
  std::array<Dyadic, 4> values{};

  // L_{mu-, mu+}: values(emptyset) = mu-, values({1}) = mu+.
  static FracLexFamily order1(Dyadic mu_minus, Dyadic mu_plus);
  static FracLexFamily order2(Dyadic v_empty, Dyadic v1, Dyadic v2, Dyadic v12);

  Dyadic measure() const;  // average of the values
  Dyadic mu_minus(int i) const;  // mu_i^-: average of values over B without i
};

// The associated family on [order + m]: slice over each B is the lex
// segment of measure values[B]. Requires every 2^m * value integral.
SetFamily associate(const FracLexFamily& L, int m);

// I[L], computed from the influence decomposition over the first k
// coordinates; equals total_influence(associate(L, m)) for every valid m.
Dyadic frac_influence(const FracLexFamily& L);

struct BoundReport {
  bool in_regime = false;
  std::string regime;  // which hypothesis branch applied, or "out of regime"
  bool j_equals_1 = false;  // flagged: decomposition hit j = 1
  Dyadic lhs, rhs, slack;   // slack = lhs - rhs; the bound holds iff slack >= 0
};

// Order-1 lower bounds: I[L_{mu-,mu+}] >= I[L_mu] + 2 mu-   (mu- <= r)
//                       I[L_{mu-,mu+}] >= I[L_mu] + 2/3 mu- (3r <= mu- <= mu/2)
// with mu = (mu- + mu+)/2 in (0, 1/2].
BoundReport check_order1_bound(Dyadic mu_minus, Dyadic mu_plus);

// Order-2 lower bound: I[L] >= I[L_mu] + r/2 under
// r <= mu_1^-(L) <= 3r, r <= mu_2^-(L) <= 3r, r <= mu/6.
BoundReport check_order2_bound(const FracLexFamily& L);

}  // namespace cube
