#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cube/dyadic.hpp"
#include "cube/set_family.hpp"

namespace cube {

struct VerifierConfig {
  int jobs = 1;
  std::uint64_t seed = 0;
  Dyadic conjecture_C = Dyadic{2};
  std::uint64_t sample_count = 100000;   // for sampled dimensions (n >= 5)
  std::uint64_t orbit_cap_per_size = 20000;  // n = 5 streamed orbit enumeration
  // Candidate constants for the structural dichotomy sweep.
  std::vector<Dyadic> c2_grid = {Dyadic{2},
                                 Dyadic{1},
                                 Dyadic::from_ratio(1, 1),
                                 Dyadic::from_ratio(1, 2),
                                 Dyadic::from_ratio(1, 3),
                                 Dyadic::from_ratio(1, 4)};
};

// One representative per weak-isomorphism class of size-m families.
// Exhaustive for n <= 4; n = 5 streams seeded random families through
// canonical-form dedup up to a per-size cap (coverage not guaranteed).
std::vector<SetFamily> enumerate_families(int n, std::uint64_t m,
                                          const VerifierConfig& config = {});

struct IsoReport {
  int n = 0;
  std::uint64_t families_checked = 0;
  std::uint64_t equality_cases = 0;  // families with |dF| = |dL|
  bool exhaustive = false;
  std::vector<std::string> violations;  // serialized offending families
  bool ok() const { return violations.empty(); }
};

// I[F] >= I[L_{mu(F)}] for every family, and gap 0 => weakly isomorphic
// to the lex segment. Exhaustive for n <= 4, sampled for n = 5, 6.
IsoReport verify_iso_and_uniqueness(int n, const VerifierConfig& config = {});

struct STableEntry {
  int n;
  std::uint64_t m;
  std::uint64_t l;  // boundary excess bound
  std::uint64_t s;  // worst distance to the lex class
};

struct StabilityTable {
  int n = 0;
  std::vector<STableEntry> entries;
  // max over families with excess l > 0 of dist/l, as an exact fraction.
  std::uint64_t best_ratio_dist = 0, best_ratio_excess = 1;
  std::optional<std::string> best_witness;  // serialized maximizing family
  std::string to_csv() const;
};

StabilityTable stability_table(int n, const VerifierConfig& config = {});

struct ConjectureReport {
  int n = 0;
  Dyadic C;
  std::uint64_t families_checked = 0;
  std::uint64_t best_ratio_dist = 0, best_ratio_excess = 1;
  std::optional<std::string> best_witness;
  std::vector<std::string> counterexamples;  // dist > C * excess
  bool ok() const { return counterexamples.empty(); }
};

// dist_to_lex_class(F) <= C * (|dF| - |dL|) for every family. Exhaustive
// for n <= 4. Counterexamples are findings, not errors.
ConjectureReport verify_conjecture(int n, Dyadic C, const VerifierConfig& config = {});

// F_{n,s,t} = {S : [t] c S} u {S : [t-2] u {t+1,...,s} c S}.
// Requires t >= 2 and t + 2 <= s <= n.
SetFamily make_tightness_family(int n, int s, int t);

// {S : {1,2} c S, S n {3,...,t} != 0} u {S : {3,...,t} c S}.
// Requires 4 <= t <= n.
SetFamily make_remark_family(int n, int t);

struct RemarkFamilyChecks {
  Dyadic mu, mu_expected;
  Dyadic influence, influence_expected;          // 1 + 8t 2^-t - 24 2^-t
  Dyadic lex_influence_mu, lex_influence_expected;  // 1 + 4t 2^-t - 12 2^-t
  Dyadic mu1_minus, mu1_minus_expected;          // 4 * 2^-t
  Dyadic eps1_plus, eps1_plus_expected;          // 8t 2^-t - 24 2^-t
  bool all_match() const;
};
RemarkFamilyChecks check_remark_family(int n, int t);

struct Prop41Entry {
  Dyadic c2;
  // Supremum of admissible c1 for this c2: the dichotomy holds for every
  // family with eps <= c1 * mu iff c1 < sup (as the exact fraction
  // eps_num / mu_den of the tightest violating family). Empty means no
  // violating family exists at this n.
  bool unconstrained = true;
  Dyadic tight_eps, tight_mu;  // tightest violator: c1 must stay below eps/mu
  std::string tight_witness;
};

struct Prop41Report {
  int n = 0;
  std::uint64_t families_checked = 0;
  std::vector<Prop41Entry> entries;
};

// Empirical feasible (c1, c2) region for the codimension-1/2 dichotomy,
// exhaustive over all families with 0 < mu <= 1/2 at n <= 4.
Prop41Report verify_prop41_dichotomy(int n, const VerifierConfig& config = {});

struct FracLexGridReport {
  std::uint64_t order1_points = 0, order1_in_regime = 0, order1_violations = 0;
  bool order1_equality_case_hit = false;  // (1/16, 9/16) with slack exactly 0
  std::uint64_t order2_points = 0, order2_in_regime = 0, order2_violations = 0;
  Dyadic order1_min_slack, order2_min_slack;
  bool ok() const { return order1_violations == 0 && order2_violations == 0; }
};

// Bound sweeps over the full dyadic grids: order 1 with denominator
// 2^log_den1 (default 2^8), order 2 with 2^log_den2 (default 2^6).
FracLexGridReport verify_fraclex_grids(int log_den1 = 8, int log_den2 = 6,
                                       const VerifierConfig& config = {});

struct BootstrapReport {
  int n = 0;
  std::uint64_t single_coord_cases = 0, single_coord_violations = 0;
  std::uint64_t trichotomy_cases = 0, trichotomy_violations = 0;
  bool ok() const { return single_coord_violations == 0 && trichotomy_violations == 0; }
};

// The two bootstrapping inequalities, exhaustive over all families at n.
BootstrapReport verify_bootstrapping(int n, const VerifierConfig& config = {});

// JSON family literal: {"n": 4, "sets": ["1100", ...]} (character i-1 is
// coordinate i) or {"n": 4, "mask_hex": "..."} in the index convention.
std::string family_to_json(const SetFamily& F);
SetFamily family_from_json(const std::string& text);

}  // namespace cube
