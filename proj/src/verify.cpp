#include "skel/verify.hpp"

#include <algorithm>
#include <cctype>

#include "skel/parallel.hpp"

namespace skel {

std::string status_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Inconclusive: return "inconclusive";
    case CheckStatus::Skipped: return "skipped";
  }
  return "unknown";
}

namespace {

CheckResult make(const std::string& name, bool pass, json details) {
  return {name, pass ? CheckStatus::Pass : CheckStatus::Fail, std::move(details)};
}

json conjecture_status(bool pass, bool conclusive) {
  return conclusive ? json(pass ? "pass" : "fail") : json("inconclusive");
}

CheckStatus conjecture_check_status(bool pass, bool conclusive) {
  if (!conclusive) return CheckStatus::Inconclusive;
  return pass ? CheckStatus::Pass : CheckStatus::Fail;
}

}  // namespace

VerifyReport run_verify(const MonomialIdeal& ideal, const RunOptions& options) {
  if (ideal.is_unit()) throw PreconditionError("verify: the unit ideal is not a valid input");
  const int n = ideal.arity();
  const MonomialIdeal ring = MonomialIdeal::unit(n);
  const MonomialIdeal zero(n);
  const ExponentVector g = options.g_override.value_or(skeleton_admissible_g(ideal));

  VerifyReport report;
  report.ideal = to_json(ideal);
  report.g = to_json(g);
  report.config = json{{"field", options.field.name()},
                       {"budget_points", options.budget.max_poset_points},
                       {"time_limit_ms", options.budget.time_limit_ms}};

  // Eq. (1): poset dimension equals the combinatorial oracle.
  CharacteristicPoset full = build_poset(ideal, ring, g);
  const int dim_poset = dimension_from_poset(full);
  const int dim_oracle = dimension_oracle(ideal);
  report.checks.push_back(make("eq1-dimension", dim_poset == dim_oracle,
                               json{{"dim_poset", dim_poset}, {"dim_oracle", dim_oracle}}));

  // Lemma 1.1: rho(b) <= d for every b in the enlarged box with x^b outside I.
  {
    ExponentVector enlarged =
        sum(g, ExponentVector(std::vector<int>(static_cast<std::size_t>(n), 1)));
    int max_rho = -1;
    for (const auto& b : box_points(enlarged)) {
      if (!ideal.contains(b)) max_rho = std::max(max_rho, rho(b, g));
    }
    report.checks.push_back(make("lemma11-rho-bound", max_rho <= dim_poset,
                                 json{{"max_rho", max_rho}, {"dim", dim_poset}}));
  }

  // Skeleton chain: dimensions, nesting, and (I_{d-1})_j = I_j.
  SkeletonChain chain = skeleton_chain(ideal, g);
  {
    bool pass = chain.ideals[static_cast<std::size_t>(chain.d)] == ideal;
    bool nested = true, consistent = true;
    for (int j = chain.d; j >= 1; --j) {
      const auto& smaller = chain.ideals[static_cast<std::size_t>(j)];
      const auto& larger = chain.ideals[static_cast<std::size_t>(j - 1)];
      nested = nested && larger.contains_ideal(smaller) && !(larger == smaller);
    }
    if (chain.d >= 1) {
      const auto& next = chain.ideals[static_cast<std::size_t>(chain.d) - 1];
      for (int j = 0; j <= chain.d - 1; ++j) {
        consistent =
            consistent && skeleton_ideal(next, g, j) == chain.ideals[static_cast<std::size_t>(j)];
      }
    }
    pass = pass && nested && consistent;
    report.checks.push_back(make(
        "skeleton-chain", pass,
        json{{"d", chain.d},
             {"nested", nested},
             {"consistent", consistent},
             {"chain", chain_report_json(chain, true, false)["skeletons"]}}));
  }

  // Depths of every S/I_j, shared by the next three checks.
  std::vector<int> level_depth(static_cast<std::size_t>(chain.d) + 1, 0);
  for (int j = 0; j <= chain.d; ++j) {
    level_depth[static_cast<std::size_t>(j)] =
        betti_table(chain.ideals[static_cast<std::size_t>(j)], ring, options.field, options.jobs)
            .depth();
  }
  const int depth_full = level_depth[static_cast<std::size_t>(chain.d)];

  // Theorem 1.3: each layer is a direct sum of cyclic CM modules of dim j.
  {
    bool pass = true;
    json per_layer = json::array();
    for (int j = chain.d; j >= 0; --j) {
      std::vector<LayerSummand> summands = layer_decomposition(ideal, g, j);
      const MonomialIdeal& base = chain.ideals[static_cast<std::size_t>(j)];
      MonomialIdeal upper = j >= 1 ? chain.ideals[static_cast<std::size_t>(j) - 1] : ring;
      bool layer_ok = !summands.empty();
      for (const auto& s : summands) {
        layer_ok = layer_ok && z_set(s.b_min, g) == s.z_vars &&
                   static_cast<int>(s.z_vars.size()) == j;
        for (const auto& m : s.ann.generators()) {
          for (int k : s.z_vars) layer_ok = layer_ok && m[k] == 0;
        }
        for (int k : y_set(s.b_min, g)) {
          std::vector<int> e(static_cast<std::size_t>(n), 0);
          e[static_cast<std::size_t>(k)] = g[k] - s.b_min[k];
          layer_ok = layer_ok && s.ann.contains(ExponentVector(std::move(e)));
        }
        // the cyclic summand S/M_iS is CM of dimension j
        layer_ok = layer_ok && dimension_oracle(s.ann) == j;
        layer_ok =
            layer_ok && betti_table(s.ann, ring, options.field, options.jobs).depth() == j;
      }
      DirectSumReport ds = verify_layer_direct_sum(ideal, g, j, summands);
      layer_ok = layer_ok && ds.direct && ds.covers;
      // the layer module itself: depth = dim = j
      int layer_depth = betti_table(base, upper, options.field, options.jobs).depth();
      int layer_dim = module_dimension(base, upper);
      layer_ok = layer_ok && layer_depth == j && layer_dim == j;

      json summands_json = json::array();
      for (const auto& s : summands) {
        json z = json::array();
        for (int v : s.z_vars) z.push_back(v + 1);
        json m = json::array();
        for (const auto& u : s.ann.generators()) m.push_back(to_json(u));
        summands_json.push_back(
            json{{"b", to_json(s.b_min)}, {"Z", std::move(z)}, {"M", std::move(m)}});
      }
      per_layer.push_back(json{{"j", j},
                               {"summands", std::move(summands_json)},
                               {"direct", ds.direct},
                               {"covers", ds.covers},
                               {"layer_depth", layer_depth},
                               {"layer_dim", layer_dim}});
      pass = pass && layer_ok;
    }
    report.checks.push_back(make("theorem13-layers", pass, json{{"layers", std::move(per_layer)}}));
  }

  // Corollary 1.5: depth via Cohen-Macaulay skeletons.
  {
    int dvs = depth_via_skeletons(ideal, g, options.field);
    bool pass = dvs == depth_full;
    json per_level = json::array();
    for (int j = 0; j <= chain.d; ++j) {
      bool cm = level_depth[static_cast<std::size_t>(j)] == j;
      if (j <= depth_full) pass = pass && cm;
      per_level.push_back(
          json{{"j", j}, {"depth", level_depth[static_cast<std::size_t>(j)]}, {"cm", cm}});
    }
    report.checks.push_back(make("cor15-depth-via-skeletons", pass,
                                 json{{"depth_via_skeletons", dvs},
                                      {"depth_homological", depth_full},
                                      {"levels", std::move(per_level)}}));
  }

  // Corollary 1.6: depth is monotone along the chain.
  {
    bool pass = true;
    for (int j = 1; j <= chain.d; ++j) {
      pass = pass && level_depth[static_cast<std::size_t>(j) - 1] <=
                         level_depth[static_cast<std::size_t>(j)];
      pass = pass && level_depth[static_cast<std::size_t>(j)] <= depth_full;
    }
    report.checks.push_back(
        make("cor16-depth-monotone", pass, json{{"depths", json(level_depth)}}));
  }

  // Corollary 1.4: depth(I_j/I) >= j+1 for all j < d.
  {
    bool pass = true;
    json modules = json::array();
    for (int j = 0; j <= chain.d - 1; ++j) {
      int module_depth =
          betti_table(ideal, chain.ideals[static_cast<std::size_t>(j)], options.field,
                      options.jobs)
              .depth();
      pass = pass && module_depth >= j + 1;
      modules.push_back(json{{"j", j}, {"depth", module_depth}, {"bound", j + 1}});
    }
    report.checks.push_back(make("cor14-module-depth", pass, json{{"modules", std::move(modules)}}));
  }

  // Proposition 2.2: sdepth S/I >= sdepth S/I_j, with the completed witness.
  SdepthMonotonicityReport monotonicity =
      check_sdepth_skeleton_monotonicity(ideal, g, options.budget);
  {
    bool completed_values_match = true;
    json steps = json::array();
    for (const auto& step : monotonicity.steps) {
      completed_values_match =
          completed_values_match && step.completed_rho == step.sdepth_skeleton.value;
      steps.push_back(json{{"j", step.j},
                           {"sdepth_skeleton", step.sdepth_skeleton.value},
                           {"certified", step.sdepth_skeleton.optimal},
                           {"holds", step.holds},
                           {"completed_valid", step.completed_valid},
                           {"completed_rho", step.completed_rho},
                           {"completed", partition_json(g, step.completed)}});
    }
    bool pass = monotonicity.pass && completed_values_match;
    report.checks.push_back(
        {"prop22-sdepth-monotonicity",
         monotonicity.conclusive ? (pass ? CheckStatus::Pass : CheckStatus::Fail)
                                 : CheckStatus::Inconclusive,
         json{{"sdepth", monotonicity.sdepth_full.value},
              {"certified", monotonicity.sdepth_full.optimal},
              {"steps", std::move(steps)}}});
  }

  // Stanley's conjecture for this ideal.
  {
    StanleyConjectureReport stanley =
        check_stanley_conjecture(ideal, g, options.field, options.budget);
    report.checks.push_back({"stanley-conjecture",
                             conjecture_check_status(stanley.pass, stanley.conclusive),
                             json{{"depth", stanley.depth},
                                  {"sdepth", stanley.sdepth.value},
                                  {"certified", stanley.sdepth.optimal},
                                  {"witness", partition_json(g, stanley.sdepth.witness)}}});
  }

  // Proposition 2.4: hreg(D(P)) = sigma(P) on the sdepth witness.
  {
    const Partition& witness = monotonicity.sdepth_full.witness;
    SigmaReport sig = sigma(full, witness);
    StanleyDecomposition dec = partition_to_decomposition(full, witness);
    int hreg_of_dec = 0;
    for (const auto& space : dec.spaces) {
      hreg_of_dec = std::max(hreg_of_dec, space.root.total_degree());
    }
    ExponentVector bound =
        sum(g, ExponentVector(std::vector<int>(static_cast<std::size_t>(n), 1)));
    DecompositionCheck dc = validate_decomposition_in_box(ideal, ring, dec, bound);
    bool pass = dc.valid && hreg_of_dec == sig.value;
    report.checks.push_back(make("prop24-hreg-sigma-identity", pass,
                                 json{{"sigma", sig.value},
                                      {"hreg_of_decomposition", hreg_of_dec},
                                      {"decomposition_valid", dc.valid},
                                      {"decomposition", to_json(dec)}}));
  }

  // Jahan's conjecture with the truncation chain and Eisenbud-Goto scan.
  if (ideal.is_zero()) {
    report.checks.push_back(
        {"jahan-conjecture", CheckStatus::Skipped, json{{"reason", "zero ideal"}}});
  } else {
    JahanConjectureReport jahan = check_jahan_conjecture(ideal, options.field, options.budget);
    bool pass = jahan.pass && (!jahan.truncation_scan_ran || jahan.truncation_scan_matches);
    bool conclusive = jahan.conclusive && jahan.truncation_scan_ran;
    json steps = json::array();
    for (const auto& step : jahan.chain) {
      if (step.conclusive) {
        pass = pass && step.holds;
      } else {
        conclusive = false;
      }
      steps.push_back(json{{"j", step.j},
                           {"hreg_truncation", step.hreg_truncation.value},
                           {"certified", step.hreg_truncation.optimal},
                           {"holds", step.holds}});
    }
    report.checks.push_back({"jahan-conjecture", conjecture_check_status(pass, conclusive),
                             json{{"hreg", jahan.hreg_ideal.value},
                                  {"certified", jahan.hreg_ideal.optimal},
                                  {"reg", jahan.reg},
                                  {"truncation_scan_ran", jahan.truncation_scan_ran},
                                  {"linear_truncation_degree", jahan.linear_truncation_degree},
                                  {"reg_at_linear_truncation", jahan.reg_at_linear_truncation},
                                  {"truncation_scan_matches", jahan.truncation_scan_matches},
                                  {"chain", std::move(steps)}}});
  }

  // Euler characteristic of the Betti table against inclusion-exclusion.
  {
    std::size_t gen_count = ideal.generators().size();
    if (gen_count > 20) {
      report.checks.push_back({"betti-euler", CheckStatus::Skipped,
                               json{{"reason", "too many generators for inclusion-exclusion"}}});
    } else {
      bool pass = true;
      const std::pair<const MonomialIdeal*, const MonomialIdeal*> modules[] = {{&ideal, &ring},
                                                                               {&zero, &ideal}};
      for (const auto& [inner_ptr, outer_ptr] : modules) {
        const MonomialIdeal& inner = *inner_ptr;
        const MonomialIdeal& outer = *outer_ptr;
        if (outer.is_zero()) continue;
        BettiTable table = betti_table(inner, outer, options.field, options.jobs);
        for (const auto& a : lcm_lattice_degrees({inner, outer})) {
          long long alternating = 0;
          for (const auto& e : table.entries) {
            if (e.degree == a) alternating += (e.i % 2 == 0) ? e.rank : -e.rank;
          }
          pass = pass && alternating == hilbert_numerator_coefficient(inner, outer, a);
        }
      }
      report.checks.push_back(make("betti-euler", pass, json::object()));
    }
  }

  // Field independence: Q versus F_32003 (a mismatch is a finding, exit 3).
  {
    BettiTable rational = betti_table(ideal, ring, FieldConfig::rationals(), options.jobs);
    BettiTable modular = betti_table(ideal, ring, FieldConfig::prime(32003), options.jobs);
    bool match = rational.entries.size() == modular.entries.size();
    for (std::size_t i = 0; match && i < rational.entries.size(); ++i) {
      match = rational.entries[i].i == modular.entries[i].i &&
              rational.entries[i].degree == modular.entries[i].degree &&
              rational.entries[i].rank == modular.entries[i].rank;
    }
    report.checks.push_back({"field-independence",
                             match ? CheckStatus::Pass : CheckStatus::Inconclusive,
                             json{{"match", match}}});
  }

  // Closing conjecture: generator-rooted partition for linear-resolution ideals.
  if (ideal.is_zero() || !has_linear_resolution(ideal, options.field)) {
    report.checks.push_back({"generator-rooted-partition", CheckStatus::Skipped,
                             json{{"reason", "ideal has no linear resolution"}}});
  } else {
    GeneratorRootedResult rooted =
        generator_rooted_partition(ideal, generator_join(ideal), options.budget);
    json details{{"status", rooted.status == WitnessStatus::Found
                                ? "found"
                                : (rooted.status == WitnessStatus::None ? "none" : "unknown")}};
    if (rooted.status == WitnessStatus::Found) {
      details["witness"] = partition_json(generator_join(ideal), rooted.witness);
    }
    if (rooted.status == WitnessStatus::None) {
      details["finding"] = "no generator-rooted partition exists for the minimal g";
    }
    report.checks.push_back({"generator-rooted-partition",
                             rooted.status == WitnessStatus::Unknown ? CheckStatus::Inconclusive
                                                                     : CheckStatus::Pass,
                             std::move(details)});
  }

  return report;
}

int VerifyReport::exit_code() const {
  bool inconclusive = false;
  for (const auto& check : checks) {
    if (check.status == CheckStatus::Fail) return 1;
    if (check.status == CheckStatus::Inconclusive) inconclusive = true;
  }
  return inconclusive ? 3 : 0;
}

json to_json(const VerifyReport& report) {
  json checks = json::array();
  for (const auto& check : report.checks) {
    checks.push_back(json{
        {"name", check.name}, {"status", status_string(check.status)}, {"details", check.details}});
  }
  return json{{"ideal", report.ideal},
              {"g", report.g},
              {"config", report.config},
              {"checks", std::move(checks)},
              {"exit", report.exit_code()}};
}

std::string to_text(const VerifyReport& report) {
  std::string out;
  for (const auto& check : report.checks) {
    std::string status = status_string(check.status);
    for (auto& ch : status) ch = static_cast<char>(std::toupper(ch));
    out += status;
    out.append(status.size() < 14 ? 14 - status.size() : 1, ' ');
    out += check.name + "\n";
  }
  int code = report.exit_code();
  out += code == 0 ? "all checks passed\n"
                   : (code == 1 ? "FAILURE: at least one theorem check failed\n"
                                : "inconclusive: at least one check hit its search budget\n");
  return out;
}

ScanSummary run_scan(const ScanOptions& options, std::ostream& out) {
  ScanSummary summary;
  // instance seeds are drawn sequentially so the stream is reproducible
  SplitMix64 seeder(options.seed);
  std::vector<std::uint64_t> seeds(options.count);
  std::vector<int> arities(options.count);
  for (std::size_t i = 0; i < options.count; ++i) {
    seeds[i] = seeder.next();
    arities[i] = options.arity.value_or(2 + static_cast<int>(seeder.below(4)));
  }
  auto lines = parallel_map<std::string>(options.count, options.jobs, [&](std::size_t i) {
    MonomialIdeal ideal = random_ideal(seeds[i], arities[i], options.max_gens, options.max_exp);
    ExponentVector g = skeleton_admissible_g(ideal);
    StanleyConjectureReport stanley =
        check_stanley_conjecture(ideal, g, options.field, options.budget);
    JahanConjectureReport jahan = check_jahan_conjecture(ideal, options.field, options.budget);
    bool jahan_pass = jahan.pass && (!jahan.truncation_scan_ran || jahan.truncation_scan_matches);
    bool jahan_conclusive = jahan.conclusive && jahan.truncation_scan_ran;
    for (const auto& step : jahan.chain) {
      if (step.conclusive) {
        jahan_pass = jahan_pass && step.holds;
      } else {
        jahan_conclusive = false;
      }
    }
    json line{{"i", i},
              {"seed", seeds[i]},
              {"n", ideal.arity()},
              {"gens", to_json(ideal)["gens"]},
              {"depth", stanley.depth},
              {"sdepth", stanley.sdepth.value},
              {"sdepth_certified", stanley.sdepth.optimal},
              {"stanley", conjecture_status(stanley.pass, stanley.conclusive)},
              {"reg", jahan.reg},
              {"hreg", jahan.hreg_ideal.value},
              {"hreg_certified", jahan.hreg_ideal.optimal},
              {"jahan", conjecture_status(jahan_pass, jahan_conclusive)}};
    return line.dump();
  });
  for (std::size_t i = 0; i < lines.size(); ++i) {
    out << lines[i] << "\n";
    ++summary.lines;
    json line = json::parse(lines[i]);
    bool violated = line["stanley"] == "fail" || line["jahan"] == "fail";
    if (line["stanley"] == "inconclusive" || line["jahan"] == "inconclusive") {
      ++summary.inconclusive;
    }
    if (violated) {
      ++summary.violations;
      out << "CONJECTURE VIOLATION at instance " << i << " (seed " << line["seed"]
          << "): a certified counterexample was found; halting scan\n";
      break;
    }
  }
  return summary;
}

}  // namespace skel
