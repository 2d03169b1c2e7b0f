#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "cube/coords.hpp"
#include "cube/dyadic.hpp"
#include "cube/fraclex.hpp"
#include "cube/lex.hpp"
#include "cube/search.hpp"
#include "cube/set_family.hpp"
#include "cube/shifting.hpp"
#include "cube/symmetry.hpp"

using namespace cube;

namespace {

// Definition-level boundary count: unordered pairs (A, A^i) with exactly one
// endpoint inside.
std::uint64_t boundary_oracle(const SetFamily& F) {
  std::uint64_t count = 0;
  int n = F.dim();
  for (SubsetIdx idx = 0; idx < F.universe_size(); ++idx) {
    if (!F.contains_index(idx)) continue;
    for (int i = 1; i <= n; ++i) {
      SubsetIdx other = idx ^ (SubsetIdx{1} << (n - i));
      if (!F.contains_index(other)) ++count;
    }
  }
  return count;
}

SetFamily random_family(int n, std::mt19937_64& rng, double density = 0.5) {
  SetFamily F(n);
  std::bernoulli_distribution coin(density);
  for (SubsetIdx idx = 0; idx < F.universe_size(); ++idx)
    if (coin(rng)) F.insert_index(idx);
  return F;
}

std::uint64_t orbit_size(const SetFamily& F) {
  std::set<std::uint64_t> images;
  for (const CubeAutomorphism& a : full_group(F.dim()))
    images.insert(apply_automorphism(a, F).mask64());
  return images.size();
}

// Number of weak-isomorphism classes of size-m families on [n], by the
// cycle-counting (Burnside) formula over the induced action on P([n]).
std::vector<std::uint64_t> class_counts_by_size(int n) {
  std::uint64_t universe = std::uint64_t{1} << n;
  std::vector<std::uint64_t> totals(universe + 1, 0);
  const auto& group = full_group(n);
  for (const CubeAutomorphism& a : group) {
    // cycle type of the action on subsets
    std::vector<bool> seen(universe, false);
    std::vector<std::uint64_t> cycle_lengths;
    for (SubsetIdx start = 0; start < universe; ++start) {
      if (seen[start]) continue;
      std::uint64_t len = 0;
      Coords s = coords_at(n, start);
      SubsetIdx cur = start;
      do {
        seen[cur] = true;
        ++len;
        s = apply_to_set(a, s, n);
        cur = index_of(n, s);
      } while (cur != start);
      cycle_lengths.push_back(len);
    }
    // fixed m-subsets of the ground set = coeff of x^m in prod (1 + x^len)
    std::vector<std::uint64_t> poly{1};
    for (std::uint64_t len : cycle_lengths) {
      std::vector<std::uint64_t> next(std::min<std::size_t>(poly.size() + len, universe + 1), 0);
      for (std::size_t d = 0; d < poly.size(); ++d) {
        next[d] += poly[d];
        if (d + len <= universe) next[d + len] += poly[d];
      }
      poly = std::move(next);
    }
    for (std::size_t m = 0; m < poly.size(); ++m) totals[m] += poly[m];
  }
  for (auto& t : totals) t /= group.size();
  return totals;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("dyadic arithmetic is exact and reduced") {
  Dyadic a = Dyadic::from_ratio(3, 3);   // 3/8
  Dyadic b = Dyadic::from_ratio(1, 2);   // 1/4
  CHECK(a + b == Dyadic::from_ratio(5, 3));
  CHECK(a - b == Dyadic::from_ratio(1, 3));
  CHECK(a * b == Dyadic::from_ratio(3, 5));
  CHECK(Dyadic::from_ratio(4, 3) == Dyadic::from_ratio(1, 1));
  CHECK(Dyadic::from_ratio(4, 3).log_den() == 1);
  CHECK(Dyadic::from_ratio(0, 7) == Dyadic{0});
  CHECK(a.half() == Dyadic::from_ratio(3, 4));
  CHECK(a.twice() == Dyadic::from_ratio(3, 2));
  CHECK(b < a);
  CHECK(-a < b);
  CHECK((a - a).is_zero());
}

TEST_CASE("dyadic string round trip") {
  for (Dyadic d : {Dyadic{0}, Dyadic{5}, Dyadic{-3}, Dyadic::from_ratio(7, 5),
                   Dyadic::from_ratio(-11, 8)}) {
    CHECK(Dyadic::parse(d.str()) == d);
  }
  CHECK(Dyadic::parse("3/2^3") == Dyadic::from_ratio(3, 3));
  CHECK(Dyadic::parse("6/2^3") == Dyadic::from_ratio(3, 2));  // reduced on parse
  CHECK_THROWS(Dyadic::parse("0.5"));
  CHECK_THROWS(Dyadic::parse("3/2^"));
  CHECK_THROWS(Dyadic::parse("x/2^3"));
}

TEST_CASE("subset index order is lexicographic order") {
  int n = 4;
  std::vector<Coords> subsets;
  for (Coords s = 0; s < (1u << n); ++s) subsets.push_back(s);
  std::vector<Coords> by_comparator = subsets;
  std::sort(by_comparator.begin(), by_comparator.end(),
            [&](Coords x, Coords y) { return lex_greater(x, y); });
  std::vector<Coords> by_index = subsets;
  std::sort(by_index.begin(), by_index.end(),
            [&](Coords x, Coords y) { return index_of(n, x) > index_of(n, y); });
  CHECK(by_comparator == by_index);
  for (Coords s : subsets) CHECK(coords_at(n, index_of(n, s)) == s);
}

TEST_CASE("edge boundary matches the definition-level count") {
  std::mt19937_64 rng(12345);
  for (int n : {2, 3, 4, 5}) {
    for (int rep = 0; rep < 50; ++rep) {
      SetFamily F = random_family(n, rng);
      CHECK(F.edge_boundary_size() == boundary_oracle(F));
      // influences sum to total influence, pivotal counts sum to |dF|
      Dyadic sum;
      std::uint64_t psum = 0;
      for (int i = 1; i <= n; ++i) {
        sum += F.influence(i);
        psum += F.pivotal_count(i);
        CHECK(F.pivotal_count(i) == F.pivotal_family(i).size());
      }
      CHECK(sum == F.total_influence());
      CHECK(psum == F.edge_boundary_size());
    }
  }
}

TEST_CASE("slices and the influence decomposition") {
  std::mt19937_64 rng(777);
  for (int rep = 0; rep < 40; ++rep) {
    int n = 5;
    SetFamily F = random_family(n, rng);
    for (Coords S = 0; S < (1u << n); ++S) {
      auto [expectation, influence_sum] = F.decompose_influence(S);
      CHECK(expectation + influence_sum == F.total_influence());
    }
    // slice measures average to the family measure
    for (int i = 1; i <= n; ++i) {
      SliceStats st = slice_stats(F, i);
      CHECK((st.mu_minus + st.mu_plus).half() == F.measure());
    }
  }
}

TEST_CASE("slice of a lex segment is a lex segment") {
  for (int n : {3, 4, 5}) {
    for (std::uint64_t m = 0; m <= (std::uint64_t{1} << n); ++m) {
      SetFamily L = lex_segment(n, m);
      for (int i = 1; i <= n; ++i) {
        SliceStats st = slice_stats(L, i);
        CHECK(st.eps_plus.is_zero());
        CHECK(st.eps_minus.is_zero());
      }
    }
  }
}

TEST_CASE("lex influence agrees with segment boundaries") {
  CHECK(lex_segment(3, 3).edge_boundary_size() == 5);
  CHECK(lex_boundary(3, 3) == 5);
  CHECK(lex_segment(3, 3).influence(1) == Dyadic::from_ratio(3, 2));
  for (int n : {1, 2, 3, 4, 5}) {
    for (std::uint64_t m = 0; m <= (std::uint64_t{1} << n); ++m) {
      Dyadic mu = Dyadic::from_ratio(static_cast<long long>(m), n);
      CHECK(lex_influence(mu) == lex_segment(n, m).total_influence());
      CHECK(lex_boundary(n, m) == lex_segment(n, m).edge_boundary_size());
    }
  }
  CHECK(lex_influence(Dyadic::from_ratio(3, 3)) == Dyadic::from_ratio(5, 2));
  CHECK(lex_influence(Dyadic::from_ratio(1, 1)) == Dyadic{1});
  // symmetry around 1/2
  std::mt19937_64 rng(99);
  for (int rep = 0; rep < 200; ++rep) {
    long long num = static_cast<long long>(rng() % 1025);
    Dyadic mu = Dyadic::from_ratio(num, 10);
    CHECK(lex_influence(mu) == lex_influence(Dyadic{1} - mu));
  }
}

TEST_CASE("measure decomposition") {
  auto check = [](Dyadic mu, int j, Dyadic r) {
    MeasureDecomposition d = decompose_measure(mu);
    CHECK(d.j == j);
    CHECK(d.r == r);
    CHECK(dyadic_pow2_inv(d.j) + d.r == mu);
    CHECK(!d.r.is_negative());
    CHECK(d.r > Dyadic{0});
    CHECK(d.r <= dyadic_pow2_inv(d.j));
  };
  check(Dyadic::from_ratio(1, 2), 3, Dyadic::from_ratio(1, 3));
  check(Dyadic::from_ratio(1, 1), 2, Dyadic::from_ratio(1, 2));
  check(Dyadic::from_ratio(3, 3), 2, Dyadic::from_ratio(1, 3));
  check(Dyadic::from_ratio(5, 4), 2, Dyadic::from_ratio(1, 4));
  check(Dyadic::from_ratio(1, 5), 6, Dyadic::from_ratio(1, 6));
  CHECK_THROWS(decompose_measure(Dyadic{0}));
  CHECK_THROWS(decompose_measure(Dyadic::from_ratio(5, 3)));
}

TEST_CASE("lex slice profile matches slice measures") {
  for (int n : {4, 5, 6}) {
    for (std::uint64_t m = 1; m <= (std::uint64_t{1} << (n - 1)); ++m) {
      SetFamily L = lex_segment(n, m);
      Dyadic mu = L.measure();
      MeasureDecomposition d = decompose_measure(mu);
      for (int i = 1; i <= n; ++i) {
        Dyadic prof = lex_slice_profile(mu, i);
        CHECK(prof == slice_stats(L, i).mu_minus);
        if (i <= d.j - 1) CHECK(prof.is_zero());
        if (i == d.j) CHECK(prof == d.r.twice());
        if (i >= d.j + 1) CHECK(prof >= mu.half());
      }
    }
  }
}

TEST_CASE("stability gap is nonnegative and zero exactly on lex images") {
  int n = 3;
  for (std::uint64_t mask = 0; mask < 256; ++mask) {
    SetFamily F = SetFamily::from_mask64(n, mask);
    Dyadic gap = stability_gap(F);
    CHECK(!gap.is_negative());
    bool is_lex_image = dist_to_lex_class(F) == 0;
    CHECK(gap.is_zero() == is_lex_image);
  }
}

TEST_CASE("automorphism group structure") {
  for (int n : {1, 2, 3, 4}) {
    const auto& group = full_group(n);
    std::uint64_t order = 1;
    for (int k = 2; k <= n; ++k) order *= k;
    order <<= n;
    CHECK(group.size() == order);
    std::set<std::uint64_t> distinct;
    SetFamily probe = lex_segment(n, (std::uint64_t{1} << n) / 2 + (n > 1 ? 1 : 0));
    for (const auto& a : group) distinct.insert(apply_automorphism(a, probe).mask64());
    CHECK(!distinct.empty());
  }
  std::mt19937_64 rng(4242);
  const auto& group = full_group(4);
  for (int rep = 0; rep < 100; ++rep) {
    const auto& a = group[rng() % group.size()];
    const auto& b = group[rng() % group.size()];
    SetFamily F = random_family(4, rng);
    // (a*b)(F) = a(b(F)), inverse undoes, invariants preserved
    CHECK(apply_automorphism(compose(a, b), F) ==
          apply_automorphism(a, apply_automorphism(b, F)));
    CHECK(apply_automorphism(inverse(a), apply_automorphism(a, F)) == F);
    SetFamily G = apply_automorphism(a, F);
    CHECK(G.size() == F.size());
    CHECK(G.edge_boundary_size() == F.edge_boundary_size());
  }
}

TEST_CASE("canonical form characterizes weak isomorphism") {
  std::mt19937_64 rng(31337);
  const auto& group = full_group(4);
  for (int rep = 0; rep < 30; ++rep) {
    SetFamily F = random_family(4, rng);
    SetFamily C = canonical_form(F);
    CHECK(canonical_form(C) == C);
    CHECK(C.mask64() <= F.mask64());
    const auto& a = group[rng() % group.size()];
    SetFamily G = apply_automorphism(a, F);
    CHECK(canonical_form(G) == C);
    CHECK(are_weakly_isomorphic(F, G));
    auto w = weak_isomorphism_witness(F, G);
    REQUIRE(w.has_value());
    CHECK(apply_automorphism(*w, F) == G);
  }
  // different sizes are never isomorphic
  CHECK(!are_weakly_isomorphic(lex_segment(3, 2), lex_segment(3, 3)));
  CHECK(!weak_isomorphism_witness(lex_segment(3, 2), lex_segment(3, 3)).has_value());
}

TEST_CASE("distance to the lex class") {
  for (int n : {2, 3, 4}) {
    std::mt19937_64 rng(n);
    const auto& group = full_group(n);
    for (std::uint64_t m = 0; m <= (std::uint64_t{1} << n); ++m) {
      SetFamily L = lex_segment(n, m);
      const auto& a = group[rng() % group.size()];
      CHECK(dist_to_lex_class(apply_automorphism(a, L)) == 0);
    }
  }
  SetFamily F = make_tightness_family(4, 4, 2);
  CHECK(F.edge_boundary_size() - lex_boundary(4, F.size()) == 2);
  CHECK(dist_to_lex_class(F) == 4);
}

TEST_CASE("shift operators agree with the element-wise definition") {
  std::mt19937_64 rng(5150);
  for (int rep = 0; rep < 60; ++rep) {
    int n = 4;
    SetFamily F = random_family(n, rng);
    for (Coords S = 0; S < (1u << n); ++S) {
      for (Coords T = 0; T < (1u << n); ++T) {
        if (S & T) continue;
        SetFamily G = shift(F, S, T);
        CHECK(G == shift_elementwise(F, S, T));
        CHECK(G.size() == F.size());
      }
    }
  }
}

TEST_CASE("shift slice identities") {
  std::mt19937_64 rng(8080);
  int n = 4;
  for (int rep = 0; rep < 40; ++rep) {
    SetFamily F = random_family(n, rng);
    Coords S = coords_from({1, 3}, n);
    Coords T = coords_from({2}, n);
    SetFamily G = shift(F, S, T);
    Coords U = S | T;
    SetFamily FS = F.slice(U, S), FT = F.slice(U, T);
    // G^S = F^S /\ F^T, G^T = F^S \/ F^T, all other slices unchanged
    SetFamily GS = G.slice(U, S), GT = G.slice(U, T);
    for (SubsetIdx k = 0; k < GS.universe_size(); ++k) {
      CHECK(GS.contains_index(k) == (FS.contains_index(k) && FT.contains_index(k)));
      CHECK(GT.contains_index(k) == (FS.contains_index(k) || FT.contains_index(k)));
    }
    for (Coords B = 0; B < (1u << n); ++B) {
      if ((B | U) != U || B == S || B == T) continue;
      CHECK(G.slice(U, B) == F.slice(U, B));
    }
  }
}

TEST_CASE("monotonization decreases every influence") {
  // exhaustive at n = 3
  for (std::uint64_t mask = 0; mask < 256; ++mask) {
    SetFamily F = SetFamily::from_mask64(3, mask);
    for (int i = 1; i <= 3; ++i) {
      SetFamily G = shift(F, 0, coords_singleton(i));
      for (int j = 1; j <= 3; ++j) CHECK(G.influence(j) <= F.influence(j));
      CHECK(G.total_influence() <= F.total_influence());
    }
    SetFamily M = monotonize_all(F);
    CHECK(M.is_increasing());
    CHECK(M.size() == F.size());
    CHECK(M.total_influence() <= F.total_influence());
  }
}

TEST_CASE("conditional influence monotonicity under lower-order stability") {
  // |S| >= |T| and stability under all S' with |S'| = |S|-1 forces
  // I[shift] <= I[F]; without the hypothesis the inequality can fail.
  int n = 4;
  bool found_unhypothesized_failure = false;
  for (std::uint64_t mask = 0; mask < 65536; mask += 57) {  // deterministic subsample
    SetFamily F = SetFamily::from_mask64(n, mask);
    for (Coords S = 0; S < (1u << n); ++S) {
      for (Coords T = 0; T < (1u << n); ++T) {
        if ((S & T) || coords_count(S) < coords_count(T)) continue;
        bool stable = true;
        for (Coords Sp = S; Sp; Sp = (Sp - 1) & S) {
          if (coords_count(Sp) != coords_count(S) - 1) continue;
          if (!(shift(F, Sp, T) == F)) stable = false;
        }
        if (coords_count(S) >= 1) {
          Coords zero = 0;
          if (coords_count(zero) == coords_count(S) - 1 && !(shift(F, zero, T) == F))
            stable = false;
        }
        SetFamily G = shift(F, S, T);
        if (stable) {
          CHECK(G.total_influence() <= F.total_influence());
        } else if (G.total_influence() > F.total_influence()) {
          found_unhypothesized_failure = true;
        }
      }
    }
  }
  CHECK(found_unhypothesized_failure);
}

TEST_CASE("n-stabilization") {
  SetFamily D3 = SetFamily::dictatorship(3, 3);
  SetFamily R = n_stabilize(D3);
  CHECK(is_n_stable(R));
  CHECK(R.size() == D3.size());
  // exhaustive: n_stabilize yields n-stable for all increasing n=3 families
  for (std::uint64_t mask = 0; mask < 256; ++mask) {
    SetFamily F = SetFamily::from_mask64(3, mask);
    if (!F.is_increasing()) continue;
    SetFamily G = n_stabilize(F);
    CHECK(is_n_stable(G));
    CHECK(G.size() == F.size());
  }
  CHECK_THROWS(n_stabilize(SetFamily::from_sets(3, {{3}})));
}

TEST_CASE("single forced shift move") {
  SetFamily F = SetFamily::from_sets(2, {{2}});
  SetFamily G = shift(F, coords_singleton(2), coords_singleton(1));
  CHECK(G == SetFamily::from_sets(2, {{1}}));
}

TEST_CASE("stabilization trims at most the n-pivotal sets") {
  std::mt19937_64 rng(1618);
  for (int rep = 0; rep < 40; ++rep) {
    SetFamily F = monotonize_all(random_family(4, rng));
    SetFamily S = n_stabilize(F);
    CHECK(F.symmetric_difference_size(S) <= 2 * F.pivotal_count(4));
  }
}

TEST_CASE("cascade to the dictatorship") {
  {
    auto stages = cascade_to_dictatorship(SetFamily::dictatorship(3, 2));
    CHECK(stages.back() == SetFamily::dictatorship(3, 1));
  }
  {
    // already inside D_1 and stable under every stage shift: fixed throughout
    SetFamily F = SetFamily::dictatorship(3, 1);
    for (const SetFamily& stage : cascade_to_dictatorship(F)) CHECK(stage == F);
  }
  for (std::uint64_t mask = 0; mask < 256; ++mask) {
    SetFamily F = SetFamily::from_mask64(3, mask);
    if (!F.is_increasing() || F.measure() > Dyadic::from_ratio(1, 1)) continue;
    auto stages = cascade_to_dictatorship(F);
    REQUIRE(stages.size() == 2);
    const SetFamily& last = stages.back();
    CHECK(last.is_subset_of(SetFamily::dictatorship(3, 1)));
    CHECK(last.size() == F.size());
    CHECK(last.total_influence() <= F.total_influence());
    for (int i = 2; i <= 3; ++i)
      CHECK(slice_stats(last, i).mu_minus >= slice_stats(F, i).mu_minus);
  }
  CHECK_THROWS(cascade_to_dictatorship(SetFamily::full(3)));
}

TEST_CASE("pivotal exchange") {
  // Exhaustive over increasing n-stable n=3 families with two n-pivotal sets.
  int n = 3;
  Coords nbit = coords_singleton(n);
  std::uint64_t cases = 0;
  for (std::uint64_t mask = 0; mask < 256; ++mask) {
    SetFamily F = SetFamily::from_mask64(n, mask);
    if (!F.is_increasing() || !is_n_stable(F)) continue;
    SetFamily piv = F.pivotal_family(n);
    std::vector<Coords> pivotal;
    for (SubsetIdx idx = 0; idx < piv.universe_size(); ++idx)
      if (piv.contains_index(idx) && F.contains_index(idx)) pivotal.push_back(coords_at(n, idx));
    for (std::size_t x = 0; x < pivotal.size(); ++x) {
      for (std::size_t y = x + 1; y < pivotal.size(); ++y) {
        Coords A = pivotal[x], B = pivotal[y];
        auto [F1, F2] = pivotal_exchange(F, A, B);
        ++cases;
        CHECK(F1 == [&] {
          SetFamily G = F;
          G.erase(A);
          G.insert(B & ~nbit);
          return G;
        }());
        CHECK(std::min(F1.edge_boundary_size(), F2.edge_boundary_size()) <
              F.edge_boundary_size());
        CHECK(F1.pivotal_count(n) < F.pivotal_count(n));
        CHECK(F2.pivotal_count(n) < F.pivotal_count(n));
      }
    }
  }
  CHECK(cases > 0);
  CHECK_THROWS(pivotal_exchange(SetFamily::dictatorship(3, 1),
                                coords_from({1}, 3), coords_from({1, 2}, 3)));
}

TEST_CASE("fractional lex associated families") {
  // order-1 trivia
  for (int m : {1, 2, 3}) {
    CHECK(associate(FracLexFamily::order1(Dyadic{0}, Dyadic{1}), m) ==
          SetFamily::dictatorship(1 + m, 1));
    CHECK(associate(FracLexFamily::order1(Dyadic{1}, Dyadic{1}), m) == SetFamily::full(1 + m));
  }
  SetFamily A = associate(
      FracLexFamily::order1(Dyadic::from_ratio(1, 2), Dyadic::from_ratio(3, 2)), 2);
  CHECK(A.size() == 4);
  CHECK(A.slice(coords_singleton(1), 0) == lex_segment(2, 1));
  CHECK(A.slice(coords_singleton(1), coords_singleton(1)) == lex_segment(2, 3));
  CHECK_THROWS(associate(FracLexFamily::order1(Dyadic::from_ratio(1, 3), Dyadic{1}), 2));
}

TEST_CASE("fractional influence closed forms") {
  CHECK(frac_influence(FracLexFamily::order1(Dyadic{0}, Dyadic{1})) == Dyadic{1});
  CHECK(frac_influence(FracLexFamily::order1(Dyadic::from_ratio(1, 2),
                                             Dyadic::from_ratio(3, 2))) ==
        Dyadic::from_ratio(3, 1));
  CHECK(frac_influence(FracLexFamily::order1(Dyadic::from_ratio(1, 4),
                                             Dyadic::from_ratio(9, 4))) ==
        Dyadic::from_ratio(11, 3));
  // padding independence, both orders
  std::mt19937_64 rng(2718);
  for (int rep = 0; rep < 30; ++rep) {
    Dyadic v[4];
    for (auto& x : v) x = Dyadic::from_ratio(static_cast<long long>(rng() % 17), 4);
    FracLexFamily L1 = FracLexFamily::order1(v[0], v[1]);
    FracLexFamily L2 = FracLexFamily::order2(v[0], v[1], v[2], v[3]);
    for (int m = 4; m <= 8; ++m) {
      CHECK(frac_influence(L1) == associate(L1, m).total_influence());
      CHECK(frac_influence(L2) == associate(L2, m).total_influence());
      // measure and mu_i^- agree with the associated family
      CHECK(L2.measure() == associate(L2, m).measure());
      CHECK(L2.mu_minus(1) == slice_stats(associate(L2, m), 1).mu_minus);
      CHECK(L2.mu_minus(2) == slice_stats(associate(L2, m), 2).mu_minus);
    }
  }
}

TEST_CASE("order-1 lower bound checker") {
  BoundReport eq = check_order1_bound(Dyadic::from_ratio(1, 4), Dyadic::from_ratio(9, 4));
  CHECK(eq.in_regime);
  CHECK(eq.regime == "mu_minus <= r");
  CHECK(eq.lhs == Dyadic::from_ratio(11, 3));
  CHECK(eq.slack.is_zero());

  BoundReport zero = check_order1_bound(Dyadic{0}, Dyadic::from_ratio(1, 1));
  CHECK(zero.in_regime);
  CHECK(!zero.slack.is_negative());

  BoundReport out = check_order1_bound(Dyadic::from_ratio(15, 5), Dyadic::from_ratio(17, 5));
  CHECK(!out.in_regime);

  CHECK_THROWS(check_order1_bound(Dyadic::from_ratio(3, 2), Dyadic::from_ratio(1, 2)));
  CHECK_THROWS(check_order1_bound(Dyadic{0}, Dyadic{0}));
}

TEST_CASE("order-2 lower bound checker gates its hypotheses") {
  // L equal to a pure lex profile usually fails the window hypotheses
  FracLexFamily L = FracLexFamily::order2(Dyadic{0}, Dyadic{0}, Dyadic{0},
                                          Dyadic::from_ratio(1, 1));
  BoundReport r = check_order2_bound(L);
  CHECK(!r.in_regime);
  CHECK(r.regime == "out of regime");
  CHECK_THROWS(check_order2_bound(FracLexFamily::order1(Dyadic{0}, Dyadic{1})));
}

TEST_CASE("enumeration matches the Burnside class counts") {
  for (int n : {2, 3}) {
    auto counts = class_counts_by_size(n);
    std::uint64_t universe = std::uint64_t{1} << n;
    for (std::uint64_t m = 0; m <= universe; ++m) {
      auto classes = enumerate_families(n, m);
      CHECK(classes.size() == counts[m]);
      std::uint64_t covered = 0;
      for (const SetFamily& F : classes) {
        CHECK(canonical_form(F) == F);
        CHECK(F.size() == m);
        covered += orbit_size(F);
      }
      CHECK(covered == binomial(universe, m));
    }
  }
  CHECK_THROWS(enumerate_families(7, 1));
}

TEST_CASE("isoperimetric verification at n = 3") {
  IsoReport r = verify_iso_and_uniqueness(3);
  CHECK(r.exhaustive);
  CHECK(r.families_checked == 256);
  CHECK(r.ok());
  CHECK(r.equality_cases > 0);
}

TEST_CASE("stability table at n = 3") {
  StabilityTable t = stability_table(3);
  for (const auto& e : t.entries) {
    if (e.l == 0) CHECK(e.s == 0);
  }
  // monotone in l within each m
  for (std::size_t k = 1; k < t.entries.size(); ++k) {
    if (t.entries[k].m == t.entries[k - 1].m) CHECK(t.entries[k].s >= t.entries[k - 1].s);
  }
  // best ratio <= 2 at n = 3
  CHECK(t.best_ratio_dist <= 2 * t.best_ratio_excess);
  std::string csv = t.to_csv();
  CHECK(csv.rfind("n,m,l,s\n", 0) == 0);
}

TEST_CASE("conjectured stability constant at n = 3") {
  ConjectureReport ok = verify_conjecture(3, Dyadic{2});
  CHECK(ok.ok());
  CHECK(ok.families_checked == 256);
  ConjectureReport degenerate = verify_conjecture(3, Dyadic{0});
  CHECK(!degenerate.ok());
}

TEST_CASE("tightness families") {
  SetFamily F = make_tightness_family(4, 4, 2);
  CHECK(F.size() == 7);
  std::uint64_t excess = F.edge_boundary_size() - lex_boundary(4, F.size());
  CHECK(excess == 2);
  CHECK(dist_to_lex_class(F) == 4);
  for (auto [n, s, t] : std::vector<std::array<int, 3>>{{5, 4, 2}, {5, 5, 2}, {5, 5, 3}}) {
    SetFamily G = make_tightness_family(n, s, t);
    std::uint64_t ex = G.edge_boundary_size() - lex_boundary(n, G.size());
    CHECK(dist_to_lex_class(G) == 2 * ex);
  }
  CHECK_THROWS(make_tightness_family(4, 3, 2));
  CHECK_THROWS(make_tightness_family(4, 4, 1));
}

TEST_CASE("remark family closed forms") {
  RemarkFamilyChecks c = check_remark_family(4, 4);
  CHECK(c.all_match());
  CHECK(c.mu == Dyadic::from_ratio(3, 3));
  CHECK(c.influence == Dyadic::from_ratio(3, 1));
  CHECK(c.lex_influence_mu == Dyadic::from_ratio(5, 2));
  CHECK(c.mu1_minus == Dyadic::from_ratio(1, 2));
  CHECK(c.eps1_plus == Dyadic::from_ratio(1, 1));
  CHECK(check_remark_family(6, 5).all_match());
  for (int t = 4; t <= 6; ++t)
    CHECK(make_remark_family(t, t).measure() ==
          Dyadic::from_ratio(1, 2) + dyadic_pow2_inv(t - 1));
  CHECK_THROWS(make_remark_family(3, 3));
}

TEST_CASE("remark family defeats the codimension-1 case") {
  // With c2 = 4 every codimension-1 candidate over all weakly isomorphic
  // images exceeds eps, while the {1,2}-subcube case holds with c2 = 1.
  SetFamily F = make_remark_family(4, 4);
  Dyadic eps = stability_gap(F);
  CHECK(eps == Dyadic::from_ratio(1, 2));
  Dyadic c2{4};
  for (int i = 1; i <= 4; ++i) {
    SliceStats st = slice_stats(F, i);
    CHECK(c2 * st.mu_minus + st.eps_plus.half() > eps);
    CHECK(c2 * st.mu_plus + st.eps_minus.half() > eps);
  }
  Coords B = coords_from({1, 2}, 4);
  SetFamily S = F.slice(B, B);
  Dyadic outside = F.measure() - S.measure().half().half();
  CHECK(Dyadic{1} * outside + stability_gap(S).half().half() <= eps);
}

TEST_CASE("dichotomy sweep runs exhaustively at n = 3") {
  Prop41Report r = verify_prop41_dichotomy(3);
  CHECK(r.families_checked > 0);
  REQUIRE(!r.entries.empty());
  // larger c2 can only shrink the feasible c1 region
  for (std::size_t g = 0; g < r.entries.size(); ++g) {
    if (!r.entries[g].unconstrained) {
      CHECK(!r.entries[g].tight_mu.is_zero());
      CHECK(!r.entries[g].tight_witness.empty());
    }
  }
}

TEST_CASE("fraclex grid sweeps at reduced resolution") {
  FracLexGridReport r = verify_fraclex_grids(6, 4);
  CHECK(r.ok());
  CHECK(r.order1_in_regime > 0);
  CHECK(r.order2_in_regime > 0);
  CHECK(r.order1_equality_case_hit);
  CHECK(!r.order1_min_slack.is_negative());
  CHECK(!r.order2_min_slack.is_negative());
}

TEST_CASE("bootstrapping inequalities at n = 3") {
  BootstrapReport r = verify_bootstrapping(3);
  CHECK(r.single_coord_cases > 0);
  CHECK(r.trichotomy_cases > 0);
  CHECK(r.ok());
}

TEST_CASE("family JSON round trip") {
  std::mt19937_64 rng(606);
  for (int n : {1, 3, 4, 6}) {
    for (int rep = 0; rep < 20; ++rep) {
      SetFamily F = random_family(n, rng);
      SetFamily G = family_from_json(family_to_json(F));
      CHECK(G == F);
    }
  }
  SetFamily H = family_from_json(R"({"n": 4, "sets": ["1100", "0011"]})");
  CHECK(H.size() == 2);
  CHECK(H.contains(coords_from({1, 2}, 4)));
  CHECK(H.contains(coords_from({3, 4}, 4)));
  SetFamily M = family_from_json(R"({"n": 2, "mask_hex": "9"})");
  CHECK(M.size() == 2);
  CHECK(M.contains_index(0));
  CHECK(M.contains_index(3));
  CHECK_THROWS(family_from_json(R"({"sets": ["01"]})"));
  CHECK_THROWS(family_from_json(R"({"n": 2, "sets": ["011"]})"));
  CHECK_THROWS(family_from_json(R"({"n": 1, "mask_hex": "4"})"));
}

TEST_CASE("parallel reduction is deterministic") {
  VerifierConfig one;
  one.jobs = 1;
  VerifierConfig four;
  four.jobs = 4;
  ConjectureReport a = verify_conjecture(3, Dyadic{2}, one);
  ConjectureReport b = verify_conjecture(3, Dyadic{2}, four);
  CHECK(a.best_ratio_dist == b.best_ratio_dist);
  CHECK(a.best_ratio_excess == b.best_ratio_excess);
  CHECK(a.best_witness == b.best_witness);
  IsoReport ia = verify_iso_and_uniqueness(3, one);
  IsoReport ib = verify_iso_and_uniqueness(3, four);
  CHECK(ia.families_checked == ib.families_checked);
  CHECK(ia.equality_cases == ib.equality_cases);
  CHECK(ia.violations == ib.violations);
}
