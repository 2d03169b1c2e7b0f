#include "cube/fraclex.hpp"

#include <stdexcept>

#include "cube/lex.hpp"

namespace cube {

namespace {

Dyadic abs_diff(Dyadic a, Dyadic b) { return a > b ? a - b : b - a; }

void validate_unit(Dyadic v, const char* what) {
  if (v.is_negative() || v > Dyadic{1})
    throw std::domain_error(std::string(what) + " outside [0,1]");
}

}  // namespace

FracLexFamily FracLexFamily::order1(Dyadic mu_minus, Dyadic mu_plus) {
  validate_unit(mu_minus, "mu_minus");
  validate_unit(mu_plus, "mu_plus");
  FracLexFamily f;
  f.order = 1;
  f.values[0] = mu_minus;
  f.values[1] = mu_plus;
  return f;
}

FracLexFamily FracLexFamily::order2(Dyadic v_empty, Dyadic v1, Dyadic v2, Dyadic v12) {
  for (Dyadic v : {v_empty, v1, v2, v12}) validate_unit(v, "value");
  FracLexFamily f;
  f.order = 2;
  f.values = {v_empty, v1, v2, v12};
  return f;
}

Dyadic FracLexFamily::measure() const {
  int cells = 1 << order;
  Dyadic sum;
  for (int b = 0; b < cells; ++b) sum += values[b];
  return Dyadic::from_ratio(1, order) * sum;
}

Dyadic FracLexFamily::mu_minus(int i) const {
  if (i < 1 || i > order) throw std::out_of_range("mu_minus: coordinate out of range");
  Dyadic sum;
  int cells = 1 << order;
  for (int b = 0; b < cells; ++b)
    if (!((b >> (i - 1)) & 1)) sum += values[b];
  return Dyadic::from_ratio(1, order - 1) * sum;
}

SetFamily associate(const FracLexFamily& L, int m) {
  int k = L.order;
  int cells = 1 << k;
  for (int b = 0; b < cells; ++b)
    if (L.values[b].log_den() > m)
      throw std::invalid_argument("associate: m too small to realize every value");
  int n = k + m;
  if (n > kMaxDim) throw std::invalid_argument("associate: dimension too large");
  SetFamily out(n);
  for (int b = 0; b < cells; ++b) {
    // Coordinates 1..k are the most significant index bits; within the
    // subcube fixed to pattern b, the slice is the top index range.
    Dyadic v = L.values[b];
    std::uint64_t count = static_cast<std::uint64_t>(v.numerator()) << (m - v.log_den());
    Coords B = static_cast<Coords>(b);
    SubsetIdx high = index_of(k, B) << m;
    std::uint64_t block = std::uint64_t{1} << m;
    for (std::uint64_t low = block - count; low < block; ++low)
      out.insert_index(high | static_cast<SubsetIdx>(low));
  }
  return out;
}

Dyadic frac_influence(const FracLexFamily& L) {
  const auto& v = L.values;
  if (L.order == 1)
    return lex_influence(v[0]).half() + lex_influence(v[1]).half() + abs_diff(v[0], v[1]);
  // Influence decomposition over the first two coordinates: the four slice
  // influences plus the edge terms between adjacent cells.
  Dyadic slice_term;
  for (int b = 0; b < 4; ++b) slice_term += lex_influence(v[b]);
  Dyadic edge_term = abs_diff(v[1], v[0]) + abs_diff(v[2], v[0]) +
                     abs_diff(v[3], v[1]) + abs_diff(v[3], v[2]);
  return Dyadic::from_ratio(1, 2) * slice_term + edge_term.half();
}

namespace {

// Decomposition extended to (0,1]: mu > 1/2 maps to j = 1, flagged.
struct ExtendedDecomposition {
  int j;
  Dyadic r;
  bool j1;
};

ExtendedDecomposition decompose_extended(Dyadic mu) {
  if (mu > Dyadic::from_ratio(1, 1))
    return {1, mu - Dyadic::from_ratio(1, 1), true};
  MeasureDecomposition d = decompose_measure(mu);
  return {d.j, d.r, false};
}

}  // namespace

BoundReport check_order1_bound(Dyadic mu_minus, Dyadic mu_plus) {
  validate_unit(mu_minus, "mu_minus");
  validate_unit(mu_plus, "mu_plus");
  if (mu_minus > mu_plus) throw std::domain_error("check_order1_bound: mu_minus > mu_plus");
  Dyadic mu = (mu_minus + mu_plus).half();
  if (!(mu > Dyadic{0})) throw std::domain_error("check_order1_bound: mu must be positive");
  ExtendedDecomposition d = decompose_extended(mu);

  BoundReport rep;
  rep.j_equals_1 = d.j1;
  rep.lhs = frac_influence(FracLexFamily::order1(mu_minus, mu_plus));
  Dyadic base = lex_influence(mu);
  if (!d.j1 && mu_minus <= d.r) {
    rep.in_regime = true;
    rep.regime = "mu_minus <= r";
    rep.rhs = base + mu_minus.twice();
  } else if (Dyadic{3} * d.r <= mu_minus && mu_minus.twice() <= mu) {
    rep.in_regime = true;
    rep.regime = "3r <= mu_minus <= mu/2";
    // 2/3 mu_minus is not dyadic; the comparison is scaled by 3, so the
    // reported slack is 3*(lhs - I[L_mu]) - 2*mu_minus, exact and >= 0
    // iff the bound holds.
    rep.rhs = base;
    rep.slack = Dyadic{3} * (rep.lhs - base) - mu_minus.twice();
    return rep;
  } else {
    rep.regime = "out of regime";
    rep.rhs = base;
    rep.slack = rep.lhs - rep.rhs;
    return rep;
  }
  rep.slack = rep.lhs - rep.rhs;
  return rep;
}

BoundReport check_order2_bound(const FracLexFamily& L) {
  if (L.order != 2) throw std::invalid_argument("check_order2_bound: order must be 2");
  BoundReport rep;
  Dyadic mu = L.measure();
  if (!(mu > Dyadic{0}) || mu > Dyadic::from_ratio(1, 1)) {
    rep.regime = "out of regime";
    return rep;
  }
  MeasureDecomposition d = decompose_measure(mu);
  Dyadic m1 = L.mu_minus(1);
  Dyadic m2 = L.mu_minus(2);
  Dyadic three_r = Dyadic{3} * d.r;
  bool hyp = d.r <= m1 && m1 <= three_r && d.r <= m2 && m2 <= three_r &&
             Dyadic{6} * d.r <= mu;  // r <= mu/6 with c = 1/6
  rep.lhs = frac_influence(L);
  rep.rhs = lex_influence(mu) + d.r.half();
  rep.slack = rep.lhs - rep.rhs;
  if (!hyp) {
    rep.regime = "out of regime";
    return rep;
  }
  rep.in_regime = true;
  rep.regime = "r <= mu_1^-,mu_2^- <= 3r, r <= mu/6";
  return rep;
}

}  // namespace cube
