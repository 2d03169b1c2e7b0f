#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cube/coords.hpp"
#include "cube/dyadic.hpp"
#include "cube/lex.hpp"
#include "cube/search.hpp"
#include "cube/set_family.hpp"
#include "cube/shifting.hpp"
#include "cube/symmetry.hpp"

using nlohmann::json;
using namespace cube;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

SetFamily load_family(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open family file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return family_from_json(buf.str());
}

json family_json(const SetFamily& F) { return json::parse(family_to_json(F)); }

Coords parse_coords(const std::string& csv, int n) {
  std::vector<int> elems;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    elems.push_back(std::stoi(tok));
  }
  return coords_from(elems, n);
}

int default_jobs() {
  if (const char* env = std::getenv("CUBE_ISO_JOBS")) {
    int j = std::atoi(env);
    if (j >= 1) return j;
  }
  return 1;
}

void emit(const json& record) { std::cout << record.dump() << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact edge-isoperimetry toolkit for the discrete cube"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "append human-readable summaries");

  int lex_n = 0;
  std::uint64_t lex_m = 0;
  auto* cmd_lex = app.add_subcommand("lex", "initial lex segment and its boundary");
  cmd_lex->add_option("n", lex_n)->required();
  cmd_lex->add_option("m", lex_m)->required();

  std::string family_path;
  auto* cmd_boundary = app.add_subcommand("boundary", "edge boundary of a family");
  cmd_boundary->add_option("file", family_path)->required();

  int coord = 0;
  auto* cmd_influence = app.add_subcommand("influence", "total or per-coordinate influence");
  cmd_influence->add_option("file", family_path)->required();
  cmd_influence->add_option("--coord", coord, "coordinate i for Inf_i");

  std::string s_csv, t_csv;
  auto* cmd_shift = app.add_subcommand("shift", "apply the compression S_{ST}");
  cmd_shift->add_option("file", family_path)->required();
  cmd_shift->add_option("--S", s_csv, "comma-separated coordinates of S")->default_val("");
  cmd_shift->add_option("--T", t_csv, "comma-separated coordinates of T")->default_val("");

  auto* cmd_dist = app.add_subcommand("dist", "distance to the lex weak-isomorphism class");
  cmd_dist->add_option("file", family_path)->required();

  std::string verify_what;
  int verify_n = 4;
  std::string conjecture_c = "2/2^0";
  std::uint64_t seed = 0;
  int jobs = default_jobs();
  auto* cmd_verify = app.add_subcommand("verify", "batch verification suites");
  cmd_verify->add_option("suite", verify_what)
      ->required()
      ->check(CLI::IsMember({"iso", "uniqueness", "conjecture", "prop41", "fraclex"}));
  cmd_verify->add_option("--n", verify_n);
  cmd_verify->add_option("--C", conjecture_c, "conjecture constant as num/2^k or integer");
  cmd_verify->add_option("--seed", seed);
  cmd_verify->add_option("--jobs", jobs);

  int stable_n = 4;
  auto* cmd_stable = app.add_subcommand("stable", "s(n,m,l) stability table as CSV");
  cmd_stable->add_option("n", stable_n)->required();

  std::string example_kind, example_params;
  auto* cmd_example = app.add_subcommand("example", "constructed example families");
  cmd_example->add_option("kind", example_kind)
      ->required()
      ->check(CLI::IsMember({"tightness", "remark"}));
  cmd_example->add_option("--params", example_params, "tightness: n,s,t  remark: n,t")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      app.exit(e);
      return kExitPass;
    }
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*cmd_lex) {
      SetFamily L = lex_segment(lex_n, lex_m);
      json rec;
      rec["family"] = family_json(L);
      rec["boundary"] = lex_boundary(lex_n, lex_m);
      rec["influence"] = lex_influence(L.measure()).str();
      emit(rec);
      if (pretty)
        std::cout << "# lex(" << lex_n << ", " << lex_m << "): boundary "
                  << lex_boundary(lex_n, lex_m) << "\n";
      return kExitPass;
    }
    if (*cmd_boundary) {
      SetFamily F = load_family(family_path);
      json rec;
      rec["n"] = F.dim();
      rec["size"] = F.size();
      rec["boundary"] = F.edge_boundary_size();
      rec["lex_boundary"] = lex_boundary(F.dim(), F.size());
      emit(rec);
      return kExitPass;
    }
    if (*cmd_influence) {
      SetFamily F = load_family(family_path);
      json rec;
      rec["n"] = F.dim();
      if (cmd_influence->count("--coord")) {
        rec["coord"] = coord;
        rec["influence"] = F.influence(coord).str();
      } else {
        rec["influence"] = F.total_influence().str();
      }
      emit(rec);
      return kExitPass;
    }
    if (*cmd_shift) {
      SetFamily F = load_family(family_path);
      Coords S = parse_coords(s_csv, F.dim());
      Coords T = parse_coords(t_csv, F.dim());
      emit(family_json(shift(F, S, T)));
      return kExitPass;
    }
    if (*cmd_dist) {
      SetFamily F = load_family(family_path);
      json rec;
      rec["n"] = F.dim();
      rec["size"] = F.size();
      rec["dist"] = dist_to_lex_class(F);
      rec["boundary_excess"] = F.edge_boundary_size() - lex_boundary(F.dim(), F.size());
      emit(rec);
      return kExitPass;
    }
    if (*cmd_verify) {
      VerifierConfig config;
      config.jobs = jobs;
      config.seed = seed;
      if (verify_what == "iso" || verify_what == "uniqueness") {
        IsoReport r = verify_iso_and_uniqueness(verify_n, config);
        json rec;
        rec["suite"] = verify_what;
        rec["n"] = r.n;
        rec["families_checked"] = r.families_checked;
        rec["equality_cases"] = r.equality_cases;
        rec["exhaustive"] = r.exhaustive;
        rec["violations"] = r.violations.size();
        emit(rec);
        for (const std::string& v : r.violations) {
          json bad;
          bad["violation"] = json::parse(v);
          emit(bad);
        }
        if (pretty)
          std::cout << "# " << r.families_checked << " families, " << r.violations.size()
                    << " violations\n";
        return r.ok() ? kExitPass : kExitCounterexample;
      }
      if (verify_what == "conjecture") {
        Dyadic C = conjecture_c.find('/') == std::string::npos
                       ? Dyadic{std::stoll(conjecture_c)}
                       : Dyadic::parse(conjecture_c);
        ConjectureReport r = verify_conjecture(verify_n, C, config);
        json rec;
        rec["suite"] = "conjecture";
        rec["n"] = r.n;
        rec["C"] = r.C.str();
        rec["families_checked"] = r.families_checked;
        rec["max_ratio_dist"] = r.best_ratio_dist;
        rec["max_ratio_excess"] = r.best_ratio_excess;
        if (r.best_witness) rec["max_ratio_witness"] = json::parse(*r.best_witness);
        rec["counterexamples"] = r.counterexamples.size();
        emit(rec);
        for (const std::string& c : r.counterexamples) {
          json bad;
          bad["counterexample"] = json::parse(c);
          emit(bad);
        }
        if (pretty)
          std::cout << "# max dist/excess = " << r.best_ratio_dist << "/"
                    << r.best_ratio_excess << "\n";
        return r.ok() ? kExitPass : kExitCounterexample;
      }
      if (verify_what == "prop41") {
        Prop41Report r = verify_prop41_dichotomy(verify_n, config);
        for (const Prop41Entry& e : r.entries) {
          json rec;
          rec["suite"] = "prop41";
          rec["n"] = r.n;
          rec["families_checked"] = r.families_checked;
          rec["c2"] = e.c2.str();
          if (e.unconstrained) {
            rec["c1_sup"] = "unconstrained";
          } else {
            rec["c1_sup_eps"] = e.tight_eps.str();
            rec["c1_sup_mu"] = e.tight_mu.str();
            rec["tight_witness"] = json::parse(e.tight_witness);
          }
          emit(rec);
        }
        return kExitPass;
      }
      // fraclex
      FracLexGridReport r = verify_fraclex_grids(8, 6, config);
      json rec;
      rec["suite"] = "fraclex";
      rec["order1_points"] = r.order1_points;
      rec["order1_in_regime"] = r.order1_in_regime;
      rec["order1_violations"] = r.order1_violations;
      rec["order1_min_slack"] = r.order1_min_slack.str();
      rec["order1_equality_case_hit"] = r.order1_equality_case_hit;
      rec["order2_points"] = r.order2_points;
      rec["order2_in_regime"] = r.order2_in_regime;
      rec["order2_violations"] = r.order2_violations;
      rec["order2_min_slack"] = r.order2_min_slack.str();
      emit(rec);
      return r.ok() ? kExitPass : kExitCounterexample;
    }
    if (*cmd_stable) {
      StabilityTable t = stability_table(stable_n);
      std::cout << t.to_csv();
      if (pretty)
        std::cout << "# best dist/excess ratio: " << t.best_ratio_dist << "/"
                  << t.best_ratio_excess << "\n";
      return kExitPass;
    }
    if (*cmd_example) {
      std::vector<int> params;
      std::stringstream ss(example_params);
      std::string tok;
      while (std::getline(ss, tok, ',')) params.push_back(std::stoi(tok));
      if (example_kind == "tightness") {
        if (params.size() != 3) throw std::runtime_error("tightness needs --params n,s,t");
        SetFamily F = make_tightness_family(params[0], params[1], params[2]);
        std::uint64_t excess = F.edge_boundary_size() - lex_boundary(F.dim(), F.size());
        std::uint64_t dist = dist_to_lex_class(F);
        json rec;
        rec["family"] = family_json(F);
        rec["boundary_excess"] = excess;
        rec["dist"] = dist;
        rec["dist_equals_twice_excess"] = (dist == 2 * excess);
        emit(rec);
        return dist == 2 * excess ? kExitPass : kExitCounterexample;
      }
      if (params.size() != 2) throw std::runtime_error("remark needs --params n,t");
      RemarkFamilyChecks c = check_remark_family(params[0], params[1]);
      json rec;
      rec["family"] = family_json(make_remark_family(params[0], params[1]));
      rec["mu"] = c.mu.str();
      rec["influence"] = c.influence.str();
      rec["lex_influence"] = c.lex_influence_mu.str();
      rec["mu1_minus"] = c.mu1_minus.str();
      rec["eps1_plus"] = c.eps1_plus.str();
      rec["matches_closed_forms"] = c.all_match();
      emit(rec);
      return c.all_match() ? kExitPass : kExitCounterexample;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
