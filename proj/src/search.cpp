#include "cube/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstddef>
#include <memory>
#include <mutex>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

#include <json.hpp>

#include "cube/fraclex.hpp"
#include "cube/lex.hpp"
#include "cube/symmetry.hpp"

namespace cube {

namespace {

// Fixed work partitioning: the chunk layout depends only on the range, never
// on the worker count, and partial results are merged in chunk order. This
// makes reports byte-identical across --jobs settings.
template <class Result, class ChunkFn>
std::vector<Result> run_chunked(std::uint64_t lo, std::uint64_t hi, int jobs,
                                ChunkFn chunk_fn) {
  std::uint64_t len = hi - lo;
  std::uint64_t chunk = std::max<std::uint64_t>(1, (len + 127) / 128);
  std::size_t n_chunks = len == 0 ? 0 : static_cast<std::size_t>((len + chunk - 1) / chunk);
  std::vector<Result> parts(n_chunks);
  if (n_chunks == 0) return parts;
  jobs = std::max(1, jobs);
  if (jobs == 1) {
    for (std::size_t c = 0; c < n_chunks; ++c) {
      std::uint64_t a = lo + c * chunk;
      parts[c] = chunk_fn(a, std::min(hi, a + chunk));
    }
    return parts;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t c = next.fetch_add(1);
      if (c >= n_chunks) return;
      std::uint64_t a = lo + c * chunk;
      parts[c] = chunk_fn(a, std::min(hi, a + chunk));
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return parts;
}

std::string serialize_mask(int n, std::uint64_t mask) {
  return family_to_json(SetFamily::from_mask64(n, mask));
}

std::vector<std::uint64_t> lex_boundaries(int n) {
  std::vector<std::uint64_t> out((std::uint64_t{1} << n) + 1);
  for (std::uint64_t m = 0; m <= (std::uint64_t{1} << n); ++m)
    out[m] = lex_boundary(n, m);
  return out;
}

std::vector<LexClassImages> all_lex_images(int n) {
  std::vector<LexClassImages> out;
  out.reserve((std::size_t{1} << n) + 1);
  for (std::uint64_t m = 0; m <= (std::uint64_t{1} << n); ++m) out.emplace_back(n, m);
  return out;
}

// Deterministic sampled mask stream for n = 5, 6.
std::vector<std::uint64_t> sample_masks(int n, const VerifierConfig& config) {
  std::mt19937_64 rng(config.seed);
  std::uint64_t universe = std::uint64_t{1} << n;
  std::vector<std::uint64_t> masks(config.sample_count);
  for (auto& m : masks) {
    m = rng();
    if (universe < 64) m &= (std::uint64_t{1} << universe) - 1;
  }
  return masks;
}

}  // namespace

std::vector<SetFamily> enumerate_families(int n, std::uint64_t m,
                                          const VerifierConfig& config) {
  if (n < 1 || n > 5) throw std::invalid_argument("enumerate_families: n must be in 1..5");
  std::uint64_t universe = std::uint64_t{1} << n;
  if (m > universe) throw std::invalid_argument("enumerate_families: m exceeds 2^n");
  std::vector<SetFamily> out;
  if (n <= 4) {
    std::uint64_t total = std::uint64_t{1} << universe;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      if (static_cast<std::uint64_t>(std::popcount(mask)) != m) continue;
      SetFamily F = SetFamily::from_mask64(n, mask);
      if (canonical_form(F).mask64() == mask) out.push_back(std::move(F));
    }
    return out;
  }
  // n = 5: seeded streaming through canonical-form dedup, capped; not a
  // complete class enumeration.
  std::mt19937_64 rng(config.seed);
  std::vector<int> idx(universe);
  for (std::uint64_t i = 0; i < universe; ++i) idx[i] = static_cast<int>(i);
  std::vector<std::uint64_t> seen;
  std::uint64_t attempts = config.orbit_cap_per_size * 20 + 100;
  for (std::uint64_t a = 0; a < attempts && seen.size() < config.orbit_cap_per_size; ++a) {
    std::shuffle(idx.begin(), idx.end(), rng);
    std::uint64_t mask = 0;
    for (std::uint64_t k = 0; k < m; ++k) mask |= std::uint64_t{1} << idx[k];
    std::uint64_t canon = canonical_form(SetFamily::from_mask64(n, mask)).mask64();
    if (std::find(seen.begin(), seen.end(), canon) == seen.end()) seen.push_back(canon);
  }
  std::sort(seen.begin(), seen.end());
  for (std::uint64_t canon : seen) out.push_back(SetFamily::from_mask64(n, canon));
  return out;
}

IsoReport verify_iso_and_uniqueness(int n, const VerifierConfig& config) {
  if (n < 1 || n > 6)
    throw std::invalid_argument("verify_iso_and_uniqueness: n must be in 1..6");
  IsoReport report;
  report.n = n;

  std::vector<std::uint64_t> lexb = lex_boundaries(n);
  struct Part {
    std::uint64_t checked = 0, equal = 0;
    std::vector<std::uint64_t> bad;
  };

  if (n <= 4) {
    report.exhaustive = true;
    std::vector<LexClassImages> images = all_lex_images(n);
    std::uint64_t total = std::uint64_t{1} << (std::uint64_t{1} << n);
    auto parts = run_chunked<Part>(0, total, config.jobs, [&](std::uint64_t a, std::uint64_t b) {
      Part p;
      for (std::uint64_t mask = a; mask < b; ++mask) {
        ++p.checked;
        SetFamily F = SetFamily::from_mask64(n, mask);
        std::uint64_t bd = F.edge_boundary_size();
        std::uint64_t m = F.size();
        if (bd < lexb[m]) {
          p.bad.push_back(mask);
        } else if (bd == lexb[m]) {
          ++p.equal;
          if (images[m].dist_to(mask) != 0) p.bad.push_back(mask);
        }
      }
      return p;
    });
    for (const Part& p : parts) {
      report.families_checked += p.checked;
      report.equality_cases += p.equal;
      for (std::uint64_t mask : p.bad) report.violations.push_back(serialize_mask(n, mask));
    }
    return report;
  }

  std::vector<std::uint64_t> masks = sample_masks(n, config);
  // Equality is rare among random masks; lex images are built on demand.
  std::vector<std::unique_ptr<LexClassImages>> images((std::size_t{1} << n) + 1);
  std::mutex images_mu;
  auto images_for = [&](std::uint64_t m) -> const LexClassImages& {
    std::lock_guard<std::mutex> lock(images_mu);
    if (!images[m]) images[m] = std::make_unique<LexClassImages>(n, m);
    return *images[m];
  };
  auto parts = run_chunked<Part>(0, masks.size(), config.jobs, [&](std::uint64_t a, std::uint64_t b) {
    Part p;
    for (std::uint64_t k = a; k < b; ++k) {
      std::uint64_t mask = masks[k];
      ++p.checked;
      SetFamily F = SetFamily::from_mask64(n, mask);
      std::uint64_t bd = F.edge_boundary_size();
      std::uint64_t m = F.size();
      if (bd < lexb[m]) {
        p.bad.push_back(mask);
      } else if (bd == lexb[m]) {
        ++p.equal;
        if (images_for(m).dist_to(mask) != 0) p.bad.push_back(mask);
      }
    }
    return p;
  });
  for (const Part& p : parts) {
    report.families_checked += p.checked;
    report.equality_cases += p.equal;
    for (std::uint64_t mask : p.bad) report.violations.push_back(serialize_mask(n, mask));
  }
  return report;
}

namespace {

// Exhaustive sweep record stream for n <= 4: size, boundary excess and
// distance to the lex class, one callback per family mask.
struct SweepPart {
  // max dist per (m, exact excess); flattened lazily by the callers
  std::vector<std::vector<std::uint64_t>> max_dist;  // [m][excess]
  std::uint64_t best_dist = 0, best_excess = 1;
  std::uint64_t best_mask = 0;
  bool has_best = false;
  std::uint64_t checked = 0;
  std::vector<std::uint64_t> counterexamples;
};

// a/b > c/d for nonnegative integers with positive denominators.
bool ratio_greater(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
  return a * d > c * b;
}

SweepPart merge_sweep(std::vector<SweepPart> parts, std::uint64_t sizes) {
  SweepPart acc;
  acc.max_dist.resize(sizes);
  for (SweepPart& p : parts) {
    acc.checked += p.checked;
    for (std::uint64_t m = 0; m < p.max_dist.size(); ++m) {
      auto& dst = acc.max_dist[m];
      auto& src = p.max_dist[m];
      if (src.size() > dst.size()) dst.resize(src.size(), 0);
      for (std::size_t l = 0; l < src.size(); ++l) dst[l] = std::max(dst[l], src[l]);
    }
    if (p.has_best &&
        (!acc.has_best || ratio_greater(p.best_dist, p.best_excess, acc.best_dist, acc.best_excess))) {
      acc.has_best = true;
      acc.best_dist = p.best_dist;
      acc.best_excess = p.best_excess;
      acc.best_mask = p.best_mask;
    }
    for (std::uint64_t mask : p.counterexamples) acc.counterexamples.push_back(mask);
  }
  return acc;
}

SweepPart exhaustive_sweep(int n, const VerifierConfig& config,
                           std::optional<Dyadic> conjecture_C) {
  std::vector<std::uint64_t> lexb = lex_boundaries(n);
  std::vector<LexClassImages> images = all_lex_images(n);
  std::uint64_t sizes = (std::uint64_t{1} << n) + 1;
  std::uint64_t total = std::uint64_t{1} << (std::uint64_t{1} << n);
  auto parts = run_chunked<SweepPart>(0, total, config.jobs, [&](std::uint64_t a, std::uint64_t b) {
    SweepPart p;
    p.max_dist.resize(sizes);
    for (std::uint64_t mask = a; mask < b; ++mask) {
      ++p.checked;
      SetFamily F = SetFamily::from_mask64(n, mask);
      std::uint64_t m = F.size();
      std::uint64_t excess = F.edge_boundary_size() - lexb[m];
      std::uint64_t dist = images[m].dist_to(mask);
      auto& row = p.max_dist[m];
      if (row.size() <= excess) row.resize(excess + 1, 0);
      row[excess] = std::max(row[excess], dist);
      if (excess > 0 &&
          (!p.has_best || ratio_greater(dist, excess, p.best_dist, p.best_excess))) {
        p.has_best = true;
        p.best_dist = dist;
        p.best_excess = excess;
        p.best_mask = mask;
      }
      if (conjecture_C &&
          Dyadic{static_cast<long long>(dist)} >
              *conjecture_C * Dyadic{static_cast<long long>(excess)})
        p.counterexamples.push_back(mask);
    }
    return p;
  });
  return merge_sweep(std::move(parts), sizes);
}

}  // namespace

std::string StabilityTable::to_csv() const {
  std::string out = "n,m,l,s\n";
  for (const STableEntry& e : entries)
    out += std::to_string(e.n) + "," + std::to_string(e.m) + "," + std::to_string(e.l) +
           "," + std::to_string(e.s) + "\n";
  return out;
}

StabilityTable stability_table(int n, const VerifierConfig& config) {
  if (n < 1 || n > 4) throw std::invalid_argument("stability_table: n must be in 1..4");
  SweepPart acc = exhaustive_sweep(n, config, std::nullopt);
  StabilityTable table;
  table.n = n;
  for (std::uint64_t m = 0; m < acc.max_dist.size(); ++m) {
    std::uint64_t running = 0;
    const auto& row = acc.max_dist[m];
    for (std::uint64_t l = 0; l < std::max<std::size_t>(row.size(), 1); ++l) {
      if (l < row.size()) running = std::max(running, row[l]);
      table.entries.push_back({n, m, l, running});
    }
  }
  if (acc.has_best) {
    table.best_ratio_dist = acc.best_dist;
    table.best_ratio_excess = acc.best_excess;
    table.best_witness = serialize_mask(n, acc.best_mask);
  }
  return table;
}

ConjectureReport verify_conjecture(int n, Dyadic C, const VerifierConfig& config) {
  if (n < 1 || n > 4) throw std::invalid_argument("verify_conjecture: n must be in 1..4");
  SweepPart acc = exhaustive_sweep(n, config, C);
  ConjectureReport report;
  report.n = n;
  report.C = C;
  report.families_checked = acc.checked;
  if (acc.has_best) {
    report.best_ratio_dist = acc.best_dist;
    report.best_ratio_excess = acc.best_excess;
    report.best_witness = serialize_mask(n, acc.best_mask);
  }
  for (std::uint64_t mask : acc.counterexamples)
    report.counterexamples.push_back(serialize_mask(n, mask));
  return report;
}

SetFamily make_tightness_family(int n, int s, int t) {
  if (t < 2 || s < t + 2 || s > n || n > kMaxDim)
    throw std::invalid_argument("make_tightness_family: need t >= 2 and t+2 <= s <= n");
  Coords head = 0, tail = 0;
  for (int i = 1; i <= t; ++i) head |= coords_singleton(i);
  for (int i = 1; i <= t - 2; ++i) tail |= coords_singleton(i);
  for (int i = t + 1; i <= s; ++i) tail |= coords_singleton(i);
  SetFamily F(n);
  Coords universe = static_cast<Coords>((std::uint64_t{1} << n) - 1);
  for (Coords S = 0;; ++S) {
    if ((S & head) == head || (S & tail) == tail) F.insert(S);
    if (S == universe) break;
  }
  return F;
}

SetFamily make_remark_family(int n, int t) {
  if (t < 4 || t > n || n > kMaxDim)
    throw std::invalid_argument("make_remark_family: need 4 <= t <= n");
  Coords pair12 = coords_singleton(1) | coords_singleton(2);
  Coords middle = 0;
  for (int i = 3; i <= t; ++i) middle |= coords_singleton(i);
  SetFamily F(n);
  Coords universe = static_cast<Coords>((std::uint64_t{1} << n) - 1);
  for (Coords S = 0;; ++S) {
    if (((S & pair12) == pair12 && (S & middle) != 0) || (S & middle) == middle) F.insert(S);
    if (S == universe) break;
  }
  return F;
}

bool RemarkFamilyChecks::all_match() const {
  return mu == mu_expected && influence == influence_expected &&
         lex_influence_mu == lex_influence_expected && mu1_minus == mu1_minus_expected &&
         eps1_plus == eps1_plus_expected;
}

RemarkFamilyChecks check_remark_family(int n, int t) {
  SetFamily F = make_remark_family(n, t);
  RemarkFamilyChecks c;
  Dyadic pt = dyadic_pow2_inv(t);  // 2^-t
  c.mu = F.measure();
  c.mu_expected = Dyadic::from_ratio(1, 2) + dyadic_pow2_inv(t - 1);
  c.influence = F.total_influence();
  c.influence_expected = Dyadic{1} + Dyadic{8 * t - 24} * pt;
  c.lex_influence_mu = lex_influence(c.mu);
  c.lex_influence_expected = Dyadic{1} + Dyadic{4 * t - 12} * pt;
  SliceStats st = slice_stats(F, 1);
  c.mu1_minus = st.mu_minus;
  c.mu1_minus_expected = Dyadic{4} * pt;
  c.eps1_plus = st.eps_plus;
  c.eps1_plus_expected = Dyadic{8 * t - 24} * pt;
  return c;
}

namespace {

// Candidate (x, y) pairs such that the two structural cases, ranged over all
// families weakly isomorphic to F, are exactly { c2*x + y <= eps }:
//  codim 1:  x = mu_i^{s},       y = eps_i^{-s} / 2
//  codim 2:  x = mu - mu_slice/4, y = eps_slice / 4   (per signed pair slice)
std::vector<std::pair<Dyadic, Dyadic>> dichotomy_candidates(const SetFamily& F) {
  int n = F.dim();
  Dyadic mu = F.measure();
  std::vector<std::pair<Dyadic, Dyadic>> cands;
  for (int i = 1; i <= n; ++i) {
    SliceStats st = slice_stats(F, i);
    cands.emplace_back(st.mu_minus, st.eps_plus.half());
    cands.emplace_back(st.mu_plus, st.eps_minus.half());
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      Coords B = coords_singleton(i) | coords_singleton(j);
      for (int ci = 0; ci < 2; ++ci) {
        for (int cj = 0; cj < 2; ++cj) {
          Coords C = (ci ? coords_singleton(i) : 0u) | (cj ? coords_singleton(j) : 0u);
          SetFamily S = F.slice(B, C);
          Dyadic outside = mu - S.measure().half().half();
          cands.emplace_back(outside, stability_gap(S).half().half());
        }
      }
    }
  }
  return cands;
}

}  // namespace

Prop41Report verify_prop41_dichotomy(int n, const VerifierConfig& config) {
  if (n < 1 || n > 4)
    throw std::invalid_argument("verify_prop41_dichotomy: n must be in 1..4");
  Prop41Report report;
  report.n = n;
  const std::vector<Dyadic>& grid = config.c2_grid;

  struct Tight {
    bool found = false;
    Dyadic eps, mu;
    std::uint64_t mask = 0;
  };
  struct Part {
    std::uint64_t checked = 0;
    std::vector<Tight> tight;  // per c2
  };

  Dyadic half = Dyadic::from_ratio(1, 1);
  std::uint64_t total = std::uint64_t{1} << (std::uint64_t{1} << n);
  auto parts = run_chunked<Part>(0, total, config.jobs, [&](std::uint64_t a, std::uint64_t b) {
    Part p;
    p.tight.resize(grid.size());
    for (std::uint64_t mask = a; mask < b; ++mask) {
      SetFamily F = SetFamily::from_mask64(n, mask);
      Dyadic mu = F.measure();
      if (mu.is_zero() || mu > half) continue;
      ++p.checked;
      Dyadic eps = stability_gap(F);
      auto cands = dichotomy_candidates(F);
      for (std::size_t g = 0; g < grid.size(); ++g) {
        bool holds = false;
        for (const auto& [x, y] : cands) {
          if (grid[g] * x + y <= eps) {
            holds = true;
            break;
          }
        }
        if (holds) continue;
        // A violator: the dichotomy fails, so admissible c1 must exclude it,
        // i.e. c1 < eps/mu. Track the smallest such ratio.
        Tight& t = p.tight[g];
        if (!t.found || eps * t.mu < t.eps * mu) {
          t.found = true;
          t.eps = eps;
          t.mu = mu;
          t.mask = mask;
        }
      }
    }
    return p;
  });

  std::vector<Tight> tight(grid.size());
  for (const Part& p : parts) {
    report.families_checked += p.checked;
    for (std::size_t g = 0; g < grid.size(); ++g) {
      const Tight& t = p.tight[g];
      if (!t.found) continue;
      Tight& acc = tight[g];
      if (!acc.found || t.eps * acc.mu < acc.eps * t.mu) acc = t;
    }
  }
  for (std::size_t g = 0; g < grid.size(); ++g) {
    Prop41Entry e;
    e.c2 = grid[g];
    if (tight[g].found) {
      e.unconstrained = false;
      e.tight_eps = tight[g].eps;
      e.tight_mu = tight[g].mu;
      e.tight_witness = serialize_mask(n, tight[g].mask);
    }
    report.entries.push_back(std::move(e));
  }
  return report;
}

FracLexGridReport verify_fraclex_grids(int log_den1, int log_den2,
                                       const VerifierConfig& config) {
  (void)config;
  if (log_den1 < 1 || log_den1 > 12 || log_den2 < 1 || log_den2 > 8)
    throw std::invalid_argument("verify_fraclex_grids: grid resolution out of range");
  FracLexGridReport report;

  Dyadic eq_lo = Dyadic::from_ratio(1, 4), eq_hi = Dyadic::from_ratio(9, 4);
  long long D1 = 1LL << log_den1;
  bool have_min1 = false;
  for (long long a = 0; a <= D1; ++a) {
    for (long long b = a; b <= D1; ++b) {
      if (a + b == 0) continue;
      Dyadic lo = Dyadic::from_ratio(a, log_den1);
      Dyadic hi = Dyadic::from_ratio(b, log_den1);
      ++report.order1_points;
      BoundReport r = check_order1_bound(lo, hi);
      if (!r.in_regime) continue;
      ++report.order1_in_regime;
      if (r.slack.is_negative()) ++report.order1_violations;
      if (!have_min1 || r.slack < report.order1_min_slack) {
        have_min1 = true;
        report.order1_min_slack = r.slack;
      }
      if (lo == eq_lo && hi == eq_hi && r.slack.is_zero()) report.order1_equality_case_hit = true;
    }
  }

  // Order-2 grid: integer pre-filter in units of 1/2^{log_den2+2} keeps the
  // 65^4-ish scan cheap; the exact checker runs only on hypothesis hits.
  long long D2 = 1LL << log_den2;
  long long unit = 4 * D2;  // mu in units of 1/(4*D2)
  std::vector<long long> r_units(2 * D2 + 1, -1);
  for (long long s = 1; s <= 2 * D2; ++s) {
    // Unique j with 2^-j < mu <= 2^-(j-1); powers of two land on the
    // endpoint r = 2^-j.
    int j = 1;
    while ((unit >> j) >= s) ++j;
    if (j < 2) continue;
    r_units[s] = s - (unit >> j);
  }
  bool have_min2 = false;
  for (long long v0 = 0; v0 <= D2; ++v0) {
    for (long long v1 = 0; v1 <= D2; ++v1) {
      for (long long v2 = 0; v2 <= D2; ++v2) {
        for (long long v3 = 0; v3 <= D2; ++v3) {
          ++report.order2_points;
          long long s = v0 + v1 + v2 + v3;
          if (s < 1 || s > 2 * D2 || r_units[s] < 0) continue;
          long long ru = r_units[s];
          long long m1 = 2 * (v0 + v2), m2 = 2 * (v0 + v1);
          if (!(ru <= m1 && m1 <= 3 * ru && ru <= m2 && m2 <= 3 * ru && 6 * ru <= s)) continue;
          FracLexFamily L = FracLexFamily::order2(
              Dyadic::from_ratio(v0, log_den2), Dyadic::from_ratio(v1, log_den2),
              Dyadic::from_ratio(v2, log_den2), Dyadic::from_ratio(v3, log_den2));
          BoundReport r = check_order2_bound(L);
          if (!r.in_regime) continue;
          ++report.order2_in_regime;
          if (r.slack.is_negative()) ++report.order2_violations;
          if (!have_min2 || r.slack < report.order2_min_slack) {
            have_min2 = true;
            report.order2_min_slack = r.slack;
          }
        }
      }
    }
  }
  return report;
}

BootstrapReport verify_bootstrapping(int n, const VerifierConfig& config) {
  if (n < 1 || n > 4)
    throw std::invalid_argument("verify_bootstrapping: n must be in 1..4");
  BootstrapReport report;
  report.n = n;

  struct Part {
    std::uint64_t c_single = 0, v_single = 0, c_tri = 0, v_tri = 0;
  };
  Dyadic half = Dyadic::from_ratio(1, 1);
  std::uint64_t total = std::uint64_t{1} << (std::uint64_t{1} << n);
  auto parts = run_chunked<Part>(0, total, config.jobs, [&](std::uint64_t a, std::uint64_t b) {
    Part p;
    for (std::uint64_t mask = a; mask < b; ++mask) {
      SetFamily F = SetFamily::from_mask64(n, mask);
      Dyadic mu = F.measure();
      if (mu.is_zero() || mu > half) continue;
      MeasureDecomposition d = decompose_measure(mu);
      Dyadic eps = stability_gap(F);
      for (int i = 1; i <= n; ++i) {
        SliceStats st = slice_stats(F, i);
        if (!(st.mu_minus <= d.r)) continue;
        ++p.c_single;
        if (st.mu_minus.twice() + st.eps_plus.half() > eps) ++p.v_single;
      }
      if (n >= 2) {
        SliceStats s1 = slice_stats(F, 1);
        SliceStats s2 = slice_stats(F, 2);
        if (s1.mu_minus <= s2.mu_minus && Dyadic{6} * s2.mu_minus <= mu) {
          ++p.c_tri;
          // Thirds are not dyadic; each disjunct is cross-multiplied.
          bool d1 = Dyadic{4} * s2.mu_minus + Dyadic{3} * s2.eps_plus <= Dyadic{6} * eps;
          bool d2 = s1.mu_minus.twice() + s1.eps_plus.half() <= eps;
          SetFamily S = F.slice(coords_singleton(1) | coords_singleton(2),
                                coords_singleton(1) | coords_singleton(2));
          Dyadic outside = mu - S.measure().half().half();
          bool d3 = Dyadic{2} * outside + Dyadic{3} * stability_gap(S) <= Dyadic{12} * eps;
          if (!d1 && !d2 && !d3) ++p.v_tri;
        }
      }
    }
    return p;
  });
  for (const Part& p : parts) {
    report.single_coord_cases += p.c_single;
    report.single_coord_violations += p.v_single;
    report.trichotomy_cases += p.c_tri;
    report.trichotomy_violations += p.v_tri;
  }
  return report;
}

std::string family_to_json(const SetFamily& F) {
  nlohmann::json j;
  j["n"] = F.dim();
  std::vector<std::string> sets;
  for (SubsetIdx idx = 0; idx < F.universe_size(); ++idx) {
    if (!F.contains_index(idx)) continue;
    Coords s = coords_at(F.dim(), idx);
    std::string bits(F.dim(), '0');
    for (int i = 1; i <= F.dim(); ++i)
      if (coords_contains(s, i)) bits[i - 1] = '1';
    sets.push_back(std::move(bits));
  }
  j["sets"] = std::move(sets);
  return j.dump();
}

SetFamily family_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw std::invalid_argument("family literal: missing integer \"n\"");
  int n = j["n"].get<int>();
  if (n < 1 || n > kMaxDim) throw std::invalid_argument("family literal: n out of range");
  SetFamily F(n);
  if (j.contains("sets")) {
    for (const auto& entry : j["sets"]) {
      std::string bits = entry.get<std::string>();
      if (static_cast<int>(bits.size()) != n)
        throw std::invalid_argument("family literal: set string must have length n");
      Coords s = 0;
      for (int i = 1; i <= n; ++i) {
        if (bits[i - 1] == '1')
          s |= coords_singleton(i);
        else if (bits[i - 1] != '0')
          throw std::invalid_argument("family literal: set strings are over {0,1}");
      }
      F.insert(s);
    }
    return F;
  }
  if (j.contains("mask_hex")) {
    std::string hex = j["mask_hex"].get<std::string>();
    if (hex.rfind("0x", 0) == 0 || hex.rfind("0X", 0) == 0) hex = hex.substr(2);
    if (hex.empty()) throw std::invalid_argument("family literal: empty mask_hex");
    std::uint32_t bit = 0;
    for (auto it = hex.rbegin(); it != hex.rend(); ++it, bit += 4) {
      char c = *it;
      int v;
      if (c >= '0' && c <= '9')
        v = c - '0';
      else if (c >= 'a' && c <= 'f')
        v = c - 'a' + 10;
      else if (c >= 'A' && c <= 'F')
        v = c - 'A' + 10;
      else
        throw std::invalid_argument("family literal: bad hex digit");
      for (int k = 0; k < 4; ++k) {
        if (!((v >> k) & 1)) continue;
        if (bit + k >= F.universe_size())
          throw std::invalid_argument("family literal: mask_hex wider than 2^n bits");
        F.insert_index(bit + k);
      }
    }
    return F;
  }
  throw std::invalid_argument("family literal: need \"sets\" or \"mask_hex\"");
}

}  // namespace cube
