#include "cube/symmetry.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace cube {

CubeAutomorphism CubeAutomorphism::identity(int n) {
  CubeAutomorphism a;
  a.pi.resize(n);
  std::iota(a.pi.begin(), a.pi.end(), 1);
  a.flips = 0;
  return a;
}

bool operator==(const CubeAutomorphism& a, const CubeAutomorphism& b) {
  return a.pi == b.pi && a.flips == b.flips;
}

Coords apply_to_set(const CubeAutomorphism& a, Coords s, int n) {
  Coords out = 0;
  for (int i = 1; i <= n; ++i)
    if (coords_contains(s, i)) out |= coords_singleton(a.pi[i - 1]);
  return out ^ a.flips;
}

SetFamily apply_automorphism(const CubeAutomorphism& a, const SetFamily& F) {
  int n = F.dim();
  if (static_cast<int>(a.pi.size()) != n)
    throw std::invalid_argument("apply_automorphism: dimension mismatch");
  SetFamily out(n);
  std::uint32_t u = F.universe_size();
  for (std::uint32_t idx = 0; idx < u; ++idx)
    if (F.contains_index(idx))
      out.insert_index(index_of(n, apply_to_set(a, coords_at(n, idx), n)));
  return out;
}

CubeAutomorphism compose(const CubeAutomorphism& a, const CubeAutomorphism& b) {
  int n = static_cast<int>(a.pi.size());
  if (b.pi.size() != a.pi.size()) throw std::invalid_argument("compose: dimension mismatch");
  // (a*b)(S) = X_{D_a}(pi_a(X_{D_b}(pi_b(S)))) = X_{D_a ^ pi_a(D_b)}(pi_a(pi_b(S)))
  CubeAutomorphism c;
  c.pi.resize(n);
  for (int i = 1; i <= n; ++i) c.pi[i - 1] = a.pi[b.pi[i - 1] - 1];
  Coords mapped = 0;
  for (int i = 1; i <= n; ++i)
    if (coords_contains(b.flips, i)) mapped |= coords_singleton(a.pi[i - 1]);
  c.flips = a.flips ^ mapped;
  return c;
}

CubeAutomorphism inverse(const CubeAutomorphism& a) {
  int n = static_cast<int>(a.pi.size());
  CubeAutomorphism inv;
  inv.pi.resize(n);
  for (int i = 1; i <= n; ++i) inv.pi[a.pi[i - 1] - 1] = i;
  Coords mapped = 0;
  for (int i = 1; i <= n; ++i)
    if (coords_contains(a.flips, i)) mapped |= coords_singleton(inv.pi[i - 1]);
  inv.flips = mapped;
  return inv;
}

namespace {

struct GroupTables {
  std::vector<CubeAutomorphism> autos;
  // index_maps[g][idx] = image subset index under autos[g]
  std::vector<std::vector<std::uint16_t>> index_maps;
};

const GroupTables& group_tables(int n) {
  if (n < 1 || n > kMaxExactSymmetryDim)
    throw std::invalid_argument("symmetry: dimension too large for exact group enumeration");
  static std::mutex mu;
  static std::map<int, GroupTables> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  GroupTables t;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::uint32_t u = 1u << n;
  do {
    for (Coords d = 0; d < (1u << n); ++d) {
      CubeAutomorphism a;
      a.pi = perm;
      a.flips = d;
      std::vector<std::uint16_t> map(u);
      for (std::uint32_t idx = 0; idx < u; ++idx)
        map[idx] = static_cast<std::uint16_t>(index_of(n, apply_to_set(a, coords_at(n, idx), n)));
      t.autos.push_back(std::move(a));
      t.index_maps.push_back(std::move(map));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return cache.emplace(n, std::move(t)).first->second;
}

std::uint64_t map_mask(std::uint64_t mask, const std::vector<std::uint16_t>& map,
                       std::uint32_t u) {
  std::uint64_t out = 0;
  while (mask) {
    std::uint32_t idx = static_cast<std::uint32_t>(std::countr_zero(mask));
    mask &= mask - 1;
    out |= std::uint64_t{1} << map[idx];
  }
  (void)u;
  return out;
}

}  // namespace

const std::vector<CubeAutomorphism>& full_group(int n) { return group_tables(n).autos; }

SetFamily canonical_form(const SetFamily& F) {
  int n = F.dim();
  const GroupTables& t = group_tables(n);
  std::uint32_t u = F.universe_size();
  std::uint64_t mask = F.mask64();
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  for (const auto& map : t.index_maps)
    best = std::min(best, map_mask(mask, map, u));
  return SetFamily::from_mask64(n, best);
}

std::optional<CubeAutomorphism> weak_isomorphism_witness(const SetFamily& F,
                                                         const SetFamily& G) {
  if (F.dim() != G.dim()) throw std::invalid_argument("dimension mismatch");
  const GroupTables& t = group_tables(F.dim());
  std::uint32_t u = F.universe_size();
  std::uint64_t fm = F.mask64(), gm = G.mask64();
  for (std::size_t g = 0; g < t.autos.size(); ++g)
    if (map_mask(fm, t.index_maps[g], u) == gm) return t.autos[g];
  return std::nullopt;
}

bool are_weakly_isomorphic(const SetFamily& F, const SetFamily& G) {
  return weak_isomorphism_witness(F, G).has_value();
}

LexClassImages::LexClassImages(int n, std::uint64_t m) {
  const GroupTables& t = group_tables(n);
  std::uint32_t u = 1u << n;
  SetFamily L = [&] {
    SetFamily seg(n);
    for (std::uint64_t idx = u - m; idx < u; ++idx)
      seg.insert_index(static_cast<SubsetIdx>(idx));
    return seg;
  }();
  std::uint64_t lm = L.mask64();
  images_.reserve(t.index_maps.size());
  for (const auto& map : t.index_maps) images_.push_back(map_mask(lm, map, u));
  std::sort(images_.begin(), images_.end());
  images_.erase(std::unique(images_.begin(), images_.end()), images_.end());
}

std::uint64_t LexClassImages::dist_to(std::uint64_t family_mask) const {
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  for (std::uint64_t img : images_)
    best = std::min<std::uint64_t>(best, std::popcount(family_mask ^ img));
  return best;
}

std::uint64_t dist_to_lex_class(const SetFamily& F) {
  // The group is closed under inverses, so minimizing over images of L
  // equals minimizing over images of F.
  LexClassImages images(F.dim(), F.size());
  return images.dist_to(F.mask64());
}

}  // namespace cube
