#include "cube/lex.hpp"

#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace cube {

bool lex_greater(Coords S, Coords T) {
  if (S == T) throw std::invalid_argument("lex_greater: S == T");
  Coords d = S ^ T;
  Coords lowest = d & (~d + 1);  // min(S Delta T) as a singleton
  return (S & lowest) != 0;
}

SetFamily lex_segment(int n, std::uint64_t m) {
  SetFamily f(n);
  std::uint64_t u = f.universe_size();
  if (m > u) throw std::out_of_range("lex_segment: size out of range");
  // Indices coincide with lex order, so the segment is the top index range.
  for (std::uint64_t idx = u - m; idx < u; ++idx)
    f.insert_index(static_cast<SubsetIdx>(idx));
  return f;
}

namespace {

Dyadic lex_influence_memo(Dyadic mu, std::unordered_map<std::uint64_t, Dyadic>& memo) {
  if (mu.is_zero() || mu == Dyadic{1}) return Dyadic{0};
  std::uint64_t key = (std::uint64_t{static_cast<std::uint32_t>(mu.log_den())} << 32) |
                      static_cast<std::uint32_t>(mu.numerator());
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Dyadic result;
  if (mu > Dyadic::from_ratio(1, 1)) {
    result = lex_influence_memo(Dyadic{1} - mu, memo);
  } else {
    result = lex_influence_memo(mu.twice(), memo).half() + mu.twice();
  }
  memo.emplace(key, result);
  return result;
}

}  // namespace

Dyadic lex_influence(Dyadic mu) {
  if (mu.is_negative() || mu > Dyadic{1})
    throw std::domain_error("lex_influence: mu outside [0,1]");
  thread_local std::unordered_map<std::uint64_t, Dyadic> memo;
  return lex_influence_memo(mu, memo);
}

std::uint64_t lex_boundary(int n, std::uint64_t m) {
  if (n < 1 || m > (std::uint64_t{1} << n)) throw std::out_of_range("lex_boundary: bad arguments");
  Dyadic edges = lex_influence(Dyadic::from_ratio(static_cast<long long>(m), n));
  // I[L] * 2^{n-1} is an integer edge count.
  long long num = edges.numerator();
  int ld = edges.log_den();
  if (ld > n - 1) throw std::logic_error("lex_boundary: non-integral edge count");
  return static_cast<std::uint64_t>(num) << (n - 1 - ld);
}

MeasureDecomposition decompose_measure(Dyadic mu) {
  if (!(mu > Dyadic{0}) || mu > Dyadic::from_ratio(1, 1))
    throw std::domain_error("decompose_measure: mu outside (0, 1/2]");
  // j is the unique integer with 2^{-j} < mu <= 2^{-j+1}; powers of two
  // land on the r = 2^{-j} endpoint.
  int j = 1;
  while (!(dyadic_pow2_inv(j) < mu)) ++j;
  return {j, mu - dyadic_pow2_inv(j)};
}

Dyadic lex_slice_profile(Dyadic mu, int i) {
  if (!(mu > Dyadic{0}) || mu > Dyadic::from_ratio(1, 1))
    throw std::domain_error("lex_slice_profile: mu outside (0, 1/2]");
  if (i < 1) throw std::out_of_range("lex_slice_profile: coordinate out of range");
  // mu_i^-(L_mu) by peeling coordinate 1:
  //   i = 1:       max(2mu - 1, 0)
  //   mu <= 1/2:   1/2 * mu_{i-1}^-(L_{2mu})
  //   mu > 1/2:    1/2 + 1/2 * mu_{i-1}^-(L_{2mu-1})
  Dyadic half = Dyadic::from_ratio(1, 1);
  Dyadic acc_scale{1};
  Dyadic acc_offset{0};
  while (i > 1) {
    if (mu > half) {
      acc_offset += acc_scale * half;
      mu = mu.twice() - Dyadic{1};
    } else {
      mu = mu.twice();
    }
    acc_scale = acc_scale.half();
    --i;
    if (mu.is_zero()) return acc_offset;
    if (mu == Dyadic{1}) return acc_offset + acc_scale;
  }
  Dyadic base = mu > half ? mu.twice() - Dyadic{1} : Dyadic{0};
  return acc_offset + acc_scale * base;
}

Dyadic stability_gap(const SetFamily& F) {
  return F.total_influence() - lex_influence(F.measure());
}

}  // namespace cube
