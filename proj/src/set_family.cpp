#include "cube/set_family.hpp"

#include <bit>
#include <stdexcept>

#include "cube/lex.hpp"

namespace cube {

SetFamily::SetFamily(int n) : n_(n) {
  if (n < 1 || n > kMaxDim) throw std::invalid_argument("SetFamily: dimension out of range");
  words_.assign(((std::size_t{1} << n) + 63) / 64, 0);
}

SetFamily SetFamily::from_sets(int n, const std::vector<std::vector<int>>& sets) {
  SetFamily f(n);
  for (const auto& s : sets) {
    SubsetIdx idx = index_of(n, coords_from(s, n));
    if (f.contains_index(idx)) throw std::invalid_argument("duplicate subset");
    f.insert_index(idx);
  }
  return f;
}

SetFamily SetFamily::from_indices(int n, const std::vector<SubsetIdx>& indices) {
  SetFamily f(n);
  for (SubsetIdx idx : indices) {
    if (idx >= f.universe_size()) throw std::out_of_range("subset index out of range");
    if (f.contains_index(idx)) throw std::invalid_argument("duplicate subset");
    f.insert_index(idx);
  }
  return f;
}

SetFamily SetFamily::from_mask64(int n, std::uint64_t mask) {
  if (n > 6) throw std::invalid_argument("from_mask64: dimension > 6");
  SetFamily f(n);
  if (n < 6) mask &= (std::uint64_t{1} << (1u << n)) - 1;
  f.words_[0] = mask;
  return f;
}

SetFamily SetFamily::full(int n) {
  SetFamily f(n);
  std::uint32_t u = f.universe_size();
  for (std::uint32_t idx = 0; idx < u; ++idx) f.insert_index(idx);
  return f;
}

SetFamily SetFamily::dictatorship(int n, int j) {
  if (j < 1 || j > n) throw std::out_of_range("coordinate out of range");
  SetFamily f(n);
  std::uint32_t u = f.universe_size();
  for (std::uint32_t idx = 0; idx < u; ++idx)
    if ((idx >> (n - j)) & 1u) f.insert_index(idx);
  return f;
}

std::uint64_t SetFamily::size() const {
  std::uint64_t c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

std::uint64_t SetFamily::mask64() const {
  if (n_ > 6) throw std::logic_error("mask64: dimension > 6");
  return words_[0];
}

Dyadic SetFamily::measure() const {
  return Dyadic::from_ratio(static_cast<long long>(size()), n_);
}

std::uint64_t SetFamily::pivotal_count(int i) const {
  if (i < 1 || i > n_) throw std::out_of_range("coordinate out of range");
  std::uint32_t stride = 1u << (n_ - i);
  std::uint64_t c = 0;
  std::uint32_t u = universe_size();
  for (std::uint32_t idx = 0; idx < u; ++idx)
    if (contains_index(idx) && !contains_index(idx ^ stride)) ++c;
  return c;
}

std::uint64_t SetFamily::edge_boundary_size() const {
  std::uint64_t c = 0;
  for (int i = 1; i <= n_; ++i) c += pivotal_count(i);
  return c;
}

Dyadic SetFamily::total_influence() const {
  return Dyadic::from_ratio(static_cast<long long>(edge_boundary_size()), n_ - 1);
}

Dyadic SetFamily::influence(int i) const {
  return Dyadic::from_ratio(static_cast<long long>(pivotal_count(i)), n_ - 1);
}

SetFamily SetFamily::pivotal_family(int i) const {
  if (i < 1 || i > n_) throw std::out_of_range("coordinate out of range");
  std::uint32_t stride = 1u << (n_ - i);
  SetFamily out(n_);
  std::uint32_t u = universe_size();
  for (std::uint32_t idx = 0; idx < u; ++idx)
    if (contains_index(idx) && !contains_index(idx ^ stride)) out.insert_index(idx);
  return out;
}

SetFamily SetFamily::slice(Coords B, Coords C) const {
  if ((C & ~B) != 0) throw std::invalid_argument("slice: C not contained in B");
  int nb = coords_count(B);
  if (nb >= n_) throw std::invalid_argument("slice: B must be a proper subset of [n]");
  int m = n_ - nb;
  SetFamily out(m);
  std::uint32_t u = universe_size();
  for (std::uint32_t idx = 0; idx < u; ++idx) {
    if (!contains_index(idx)) continue;
    Coords s = coords_at(n_, idx);
    if ((s & B) != C) continue;
    // Re-index [n]\B to 1..m preserving relative order.
    Coords rest = s & ~B;
    Coords out_s = 0;
    int k = 0;
    for (int i = 1; i <= n_; ++i) {
      if (coords_contains(B, i)) continue;
      ++k;
      if (coords_contains(rest, i)) out_s |= coords_singleton(k);
    }
    out.insert_index(index_of(m, out_s));
  }
  return out;
}

bool SetFamily::is_increasing() const {
  std::uint32_t u = universe_size();
  for (std::uint32_t idx = 0; idx < u; ++idx) {
    if (!contains_index(idx)) continue;
    for (int i = 1; i <= n_; ++i) {
      std::uint32_t stride = 1u << (n_ - i);
      if (!(idx & stride) && !contains_index(idx | stride)) return false;
    }
  }
  return true;
}

SetFamily SetFamily::complement() const {
  SetFamily out(n_);
  std::uint32_t u = universe_size();
  for (std::uint32_t idx = 0; idx < u; ++idx)
    if (!contains_index(idx)) out.insert_index(idx);
  return out;
}

std::pair<Dyadic, Dyadic> SetFamily::decompose_influence(Coords S) const {
  int k = coords_count(S);
  Dyadic influence_sum;
  for (int i = 1; i <= n_; ++i)
    if (coords_contains(S, i)) influence_sum += influence(i);
  if (k == n_) {
    // All slices are 0-dimensional; the expectation term vanishes.
    return {Dyadic{0}, influence_sum};
  }
  if (k == 0) return {total_influence(), Dyadic{0}};
  // Sum I[F_S^B] over the 2^k choices of B.
  Dyadic total;
  std::vector<int> elems = coords_elements(S, n_);
  for (std::uint32_t b = 0; b < (1u << k); ++b) {
    Coords B = 0;
    for (int t = 0; t < k; ++t)
      if ((b >> t) & 1u) B |= coords_singleton(elems[t]);
    total += slice(S, B).total_influence();
  }
  return {Dyadic::from_ratio(1, k) * total, influence_sum};
}

std::uint64_t SetFamily::symmetric_difference_size(const SetFamily& other) const {
  if (n_ != other.n_) throw std::invalid_argument("dimension mismatch");
  std::uint64_t c = 0;
  for (std::size_t w = 0; w < words_.size(); ++w)
    c += std::popcount(words_[w] ^ other.words_[w]);
  return c;
}

bool SetFamily::is_subset_of(const SetFamily& other) const {
  if (n_ != other.n_) throw std::invalid_argument("dimension mismatch");
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] & ~other.words_[w]) return false;
  return true;
}

bool SetFamily::mask_less(const SetFamily& a, const SetFamily& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("dimension mismatch");
  for (std::size_t w = a.words_.size(); w-- > 0;) {
    if (a.words_[w] != b.words_[w]) return a.words_[w] < b.words_[w];
  }
  return false;
}

SliceStats slice_stats(const SetFamily& F, int i) {
  int n = F.dim();
  if (i < 1 || i > n) throw std::out_of_range("coordinate out of range");
  Coords B = coords_singleton(i);
  SetFamily up = F.slice(B, B);
  SetFamily down = F.slice(B, 0);
  SliceStats s;
  s.mu_plus = up.measure();
  s.mu_minus = down.measure();
  s.eps_plus = up.total_influence() - lex_influence(s.mu_plus);
  s.eps_minus = down.total_influence() - lex_influence(s.mu_minus);
  return s;
}

SliceStats2 slice_stats2(const SetFamily& F, int i, int j) {
  int n = F.dim();
  if (i < 1 || i > n || j < 1 || j > n) throw std::out_of_range("coordinate out of range");
  if (i == j) throw std::invalid_argument("slice_stats2: coordinates must be distinct");
  Coords B = coords_singleton(i) | coords_singleton(j);
  SetFamily pp = F.slice(B, B);
  SliceStats2 s;
  s.mu_pp = pp.measure();
  s.mu_pm = F.slice(B, coords_singleton(i)).measure();
  s.mu_mp = F.slice(B, coords_singleton(j)).measure();
  s.mu_mm = F.slice(B, 0).measure();
  s.eps_pp = pp.total_influence() - lex_influence(s.mu_pp);
  return s;
}

}  // namespace cube
