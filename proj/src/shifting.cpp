#include "cube/shifting.hpp"

#include <stdexcept>
#include <string>

namespace cube {

SetFamily shift(const SetFamily& F, Coords S, Coords T) {
  if (S & T) throw std::invalid_argument("shift: S and T must be disjoint");
  int n = F.dim();
  SubsetIdx bitsU = index_of(n, S | T);
  SubsetIdx bitsS = index_of(n, S);
  SubsetIdx bitsT = index_of(n, T);
  SetFamily G = F;
  std::uint32_t u = F.universe_size();
  for (std::uint32_t idx = 0; idx < u; ++idx) {
    if ((idx & bitsU) != bitsS) continue;
    std::uint32_t partner = (idx & ~bitsU) | bitsT;
    bool in_s = F.contains_index(idx);
    bool in_t = F.contains_index(partner);
    if (in_s && !in_t) {
      G.erase_index(idx);
      G.insert_index(partner);
    }
  }
  return G;
}

SetFamily shift_elementwise(const SetFamily& F, Coords S, Coords T) {
  if (S & T) throw std::invalid_argument("shift: S and T must be disjoint");
  int n = F.dim();
  SetFamily G(n);
  std::uint32_t u = F.universe_size();
  for (std::uint32_t idx = 0; idx < u; ++idx) {
    if (!F.contains_index(idx)) continue;
    Coords A = coords_at(n, idx);
    Coords image = (A & ~S) | T;
    if ((A & S) == S && (A & T) == 0 && !F.contains(image))
      G.insert(image);
    else
      G.insert_index(idx);
  }
  return G;
}

SetFamily monotonize_all(const SetFamily& F) {
  SetFamily G = F;
  for (int i = 1; i <= F.dim(); ++i) G = shift(G, 0, coords_singleton(i));
  return G;
}

bool is_n_stable(const SetFamily& F) {
  int n = F.dim();
  for (int i = 1; i < n; ++i)
    if (!(shift(F, coords_singleton(n), coords_singleton(i)) == F)) return false;
  std::uint32_t u = F.universe_size();
  for (std::uint32_t idx = 0; idx < u; ++idx)
    if (F.contains_index(idx) && !F.contains_index(idx | 1u)) return false;
  return true;
}

SetFamily n_stabilize(const SetFamily& F) {
  if (!F.is_increasing()) throw std::invalid_argument("n_stabilize: family must be increasing");
  int n = F.dim();
  SetFamily G = F;
  for (int i = 1; i < n; ++i) G = shift(G, coords_singleton(n), coords_singleton(i));
  return G;
}

std::vector<SetFamily> cascade_to_dictatorship(const SetFamily& F) {
  if (!F.is_increasing())
    throw std::invalid_argument("cascade_to_dictatorship: family must be increasing");
  if (F.measure() > Dyadic::from_ratio(1, 1))
    throw std::invalid_argument("cascade_to_dictatorship: measure must be <= 1/2");
  int n = F.dim();
  std::vector<SetFamily> stages;
  SetFamily G = F;
  if (n == 1) {
    stages.push_back(G);
    return stages;
  }
  // Stage k runs S_{W,1} over every k-subset W of {2,...,n} (colex order)
  // until the family is stable under all of them; every move strictly
  // increases the index sum, so each stage terminates.
  for (int k = 1; k <= n - 1; ++k) {
    bool moved = true;
    while (moved) {
      moved = false;
      for (Coords W = 0; W < (Coords{1} << n); ++W) {
        if ((W & 1u) || coords_count(W) != k) continue;
        SetFamily next = shift(G, W, coords_singleton(1));
        if (!(next == G)) {
          G = next;
          moved = true;
        }
      }
    }
    stages.push_back(G);
  }
  return stages;
}

std::pair<SetFamily, SetFamily> pivotal_exchange(const SetFamily& F, Coords A, Coords B) {
  int n = F.dim();
  if (!F.is_increasing()) throw std::invalid_argument("pivotal_exchange: family must be increasing");
  if (!is_n_stable(F)) throw std::invalid_argument("pivotal_exchange: family must be n-stable");
  if (A == B) throw std::invalid_argument("pivotal_exchange: A and B must differ");
  Coords nbit = coords_singleton(n);
  auto check_pivotal = [&](Coords X, const char* name) {
    if (!F.contains(X) || F.contains(X ^ nbit))
      throw std::invalid_argument(std::string("pivotal_exchange: ") + name +
                                  " is not n-pivotal in F");
  };
  check_pivotal(A, "A");
  check_pivotal(B, "B");

  SetFamily F1 = F;
  F1.erase(A);
  F1.insert(B & ~nbit);
  SetFamily F2 = F;
  F2.erase(B);
  F2.insert(A & ~nbit);
  return {F1, F2};
}

}  // namespace cube
