#include <chrono>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "skel/verify.hpp"

namespace {

using skel::json;

struct CommonOptions {
  std::string file;
  std::string g_text;
  std::string field_text = "q";
  unsigned jobs = 1;
  std::size_t budget_points = 200;
  long long time_limit_ms = 0;
  unsigned long long budget_nodes = 2000000;
  bool json_output = false;
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool needs_file = true) {
  if (needs_file) cmd->add_option("file", opts.file, "ideal file (ring/gen format)")->required();
  cmd->add_option("--g", opts.g_text, "cap vector a1,...,an (default: per-command minimal g)");
  cmd->add_option("--field", opts.field_text, "coefficient field: q or fp:P (default q)");
  cmd->add_option("--jobs", opts.jobs, "worker threads (never changes reported numbers)");
  cmd->add_option("--budget-points", opts.budget_points, "poset size cap for exact searches");
  cmd->add_option("--time-limit-ms", opts.time_limit_ms, "search time limit, 0 = unlimited");
  cmd->add_option("--budget-nodes", opts.budget_nodes,
                  "search node cap, 0 = unlimited (deterministic, unlike the time limit)");
  cmd->add_flag("--json", opts.json_output, "machine-readable JSON output");
}

skel::ExponentVector parse_g(const std::string& text) {
  std::vector<int> entries;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    entries.push_back(std::stoi(token));
  }
  return skel::ExponentVector(std::move(entries));
}

skel::MonomialIdeal load(const CommonOptions& opts) {
  skel::ParsedIdeal parsed = skel::load_ideal_file(opts.file);
  for (const auto& warning : parsed.warnings) {
    std::cerr << "warning: " << warning << "\n";
  }
  return parsed.ideal;
}

skel::RunOptions run_options(const CommonOptions& opts) {
  skel::RunOptions run;
  run.field = skel::FieldConfig::parse(opts.field_text);
  run.budget = {opts.budget_points, opts.time_limit_ms, opts.budget_nodes};
  run.jobs = opts.jobs == 0 ? 1 : opts.jobs;
  if (!opts.g_text.empty()) run.g_override = parse_g(opts.g_text);
  return run;
}

void emit(const json& doc, bool json_output, const std::string& text) {
  if (json_output) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

long long elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - start)
      .count();
}

int cmd_dim(const CommonOptions& opts) {
  skel::MonomialIdeal ideal = load(opts);
  skel::RunOptions run = run_options(opts);
  skel::ExponentVector g = run.g_override.value_or(skel::generator_join(ideal));
  auto poset = skel::build_poset(ideal, skel::MonomialIdeal::unit(ideal.arity()), g);
  if (poset.empty()) std::cerr << "warning: empty poset (zero module), dimension -1\n";
  int dim_poset = skel::dimension_from_poset(poset);
  int dim_oracle = skel::dimension_oracle(ideal);
  json doc{{"ideal", skel::to_json(ideal)},
           {"g", skel::to_json(g)},
           {"dim_poset", dim_poset},
           {"dim_oracle", dim_oracle},
           {"agree", dim_poset == dim_oracle}};
  std::string text = "dim S/I = " + std::to_string(dim_poset) + " (characteristic poset), " +
                     std::to_string(dim_oracle) + " (combinatorial oracle)\n";
  emit(doc, opts.json_output, text);
  return dim_poset == dim_oracle ? 0 : 1;
}

int cmd_depth(const CommonOptions& opts) {
  skel::MonomialIdeal ideal = load(opts);
  skel::RunOptions run = run_options(opts);
  skel::ExponentVector g = run.g_override.value_or(skel::skeleton_admissible_g(ideal));
  skel::MonomialIdeal ring = skel::MonomialIdeal::unit(ideal.arity());
  skel::BettiTable table = skel::betti_table(ideal, ring, run.field, run.jobs);
  int homological = table.depth();
  int via_skeletons = skel::depth_via_skeletons(ideal, g, run.field);
  json doc{{"ideal", skel::to_json(ideal)},
           {"g", skel::to_json(g)},
           {"field", run.field.name()},
           {"depth", homological},
           {"pdim", table.projective_dimension()},
           {"depth_via_skeletons", via_skeletons},
           {"agree", homological == via_skeletons}};
  std::string text = "depth S/I = " + std::to_string(homological) + " (Auslander-Buchsbaum), " +
                     std::to_string(via_skeletons) + " (Cohen-Macaulay skeletons)\n";
  emit(doc, opts.json_output, text);
  return homological == via_skeletons ? 0 : 1;
}

int cmd_sdepth(const CommonOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  skel::MonomialIdeal ideal = load(opts);
  skel::RunOptions run = run_options(opts);
  skel::ExponentVector g = run.g_override.value_or(skel::generator_join(ideal));
  skel::SdepthResult result =
      skel::sdepth(ideal, skel::MonomialIdeal::unit(ideal.arity()), g, run.budget);
  json doc = skel::to_json(result, g);
  doc["ideal"] = skel::to_json(ideal);
  std::string text = "sdepth S/I = " + std::to_string(result.value) +
                     (result.optimal ? " (certified optimum)"
                                     : " (lower bound; upper bound " +
                                           std::to_string(result.upper_bound) + ")") +
                     ", " + std::to_string(result.witness.intervals.size()) + " intervals, " +
                     std::to_string(result.stats.nodes) + " nodes, " +
                     std::to_string(elapsed_ms(start)) + " ms\n";
  emit(doc, opts.json_output, text);
  return result.optimal ? 0 : 3;
}

int cmd_hreg(const CommonOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  skel::MonomialIdeal ideal = load(opts);
  skel::RunOptions run = run_options(opts);
  skel::ExponentVector g = run.g_override.value_or(skel::generator_join(ideal));
  skel::HregResult result =
      skel::hreg(skel::MonomialIdeal(ideal.arity()), ideal, g, run.budget);
  json doc = skel::to_json(result, g);
  doc["ideal"] = skel::to_json(ideal);
  std::string text = "hreg I = " + std::to_string(result.value) +
                     (result.optimal ? " (certified optimum)" : " (upper bound)") + ", " +
                     std::to_string(result.stats.nodes) + " nodes, " +
                     std::to_string(elapsed_ms(start)) + " ms\n";
  emit(doc, opts.json_output, text);
  return result.optimal ? 0 : 3;
}

int cmd_reg(const CommonOptions& opts) {
  skel::MonomialIdeal ideal = load(opts);
  skel::RunOptions run = run_options(opts);
  skel::BettiTable table =
      skel::betti_table(skel::MonomialIdeal(ideal.arity()), ideal, run.field, run.jobs);
  int reg = table.regularity();
  bool linear = skel::has_linear_resolution(ideal, run.field);
  int truncation = skel::min_linear_truncation_degree(ideal, run.field);
  json doc{{"ideal", skel::to_json(ideal)},
           {"field", run.field.name()},
           {"reg", reg},
           {"linear_resolution", linear},
           {"min_linear_truncation", truncation},
           {"eisenbud_goto_matches", truncation == reg},
           {"betti", skel::to_json(table)}};
  std::string text = "reg I = " + std::to_string(reg) +
                     (linear ? " (linear resolution)" : "") + "; I_{>=j} turns linear at j = " +
                     std::to_string(truncation) + "\n";
  emit(doc, opts.json_output, text);
  return truncation == reg ? 0 : 1;
}

int cmd_chain(const CommonOptions& opts, bool skeletons) {
  skel::MonomialIdeal ideal = load(opts);
  skel::RunOptions run = run_options(opts);
  skel::ExponentVector g = run.g_override.value_or(skel::skeleton_admissible_g(ideal));
  skel::SkeletonChain chain = skel::skeleton_chain(ideal, g);
  json doc = skel::chain_report_json(chain, skeletons, !skeletons);
  std::string text = "dim S/I = " + std::to_string(chain.d) + "\n";
  if (skeletons) {
    for (int j = chain.d; j >= 0; --j) {
      text += "I_" + std::to_string(j) + " = " +
              skel::ideal_string(chain.ideals[static_cast<std::size_t>(j)]) + "\n";
    }
  } else {
    for (const auto& layer : doc["layers"]) {
      text += "layer j=" + layer["j"].dump() + ":";
      for (const auto& s : layer["summands"]) {
        text += " [b=" + s["b"].dump() + " Z=" + s["Z"].dump() + " M=" + s["M"].dump() + "]";
      }
      text += "\n";
    }
  }
  emit(doc, opts.json_output, text);
  return 0;
}

int cmd_decompose(const CommonOptions& opts) {
  skel::MonomialIdeal ideal = load(opts);
  skel::RunOptions run = run_options(opts);
  skel::ExponentVector g = run.g_override.value_or(skel::generator_join(ideal));
  skel::MonomialIdeal ring = skel::MonomialIdeal::unit(ideal.arity());
  skel::SdepthResult result = skel::sdepth(ideal, ring, g, run.budget);
  auto poset = skel::build_poset(ideal, ring, g);
  skel::SigmaReport sig = skel::sigma(poset, result.witness);
  skel::StanleyDecomposition dec = skel::partition_to_decomposition(poset, result.witness);
  int hreg_of_dec = 0;
  for (const auto& space : dec.spaces) {
    hreg_of_dec = std::max(hreg_of_dec, space.root.total_degree());
  }
  json doc{{"ideal", skel::to_json(ideal)},
           {"sdepth", result.value},
           {"certified", result.optimal},
           {"partition", skel::partition_json(g, result.witness)},
           {"decomposition", skel::to_json(dec)},
           {"sigma", sig.value},
           {"hreg_of_decomposition", hreg_of_dec}};
  std::string text = "sdepth-optimal Stanley decomposition of S/I (sdepth " +
                     std::to_string(result.value) + ", sigma " + std::to_string(sig.value) +
                     "):\n";
  for (const auto& space : dec.spaces) {
    text += "  " + skel::monomial_string(space.root) + " * K[";
    for (std::size_t i = 0; i < space.vars.size(); ++i) {
      if (i) text += ",";
      text += "x" + std::to_string(space.vars[i] + 1);
    }
    text += "]\n";
  }
  emit(doc, opts.json_output, text);
  return result.optimal ? 0 : 3;
}

int cmd_verify(const CommonOptions& opts) {
  skel::MonomialIdeal ideal = load(opts);
  skel::VerifyReport report = skel::run_verify(ideal, run_options(opts));
  emit(skel::to_json(report), opts.json_output, skel::to_text(report));
  return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"skel: skeleton ideals of monomial ideals, Stanley depth and h-regularity"};
  app.require_subcommand(1);

  CommonOptions dim_opts, depth_opts, sdepth_opts, hreg_opts, reg_opts, skel_opts, layer_opts,
      verify_opts, decomp_opts, scan_opts;
  std::uint64_t scan_seed = 1;
  std::size_t scan_count = 10;
  int scan_arity = 0;
  int scan_max_exp = 3;
  int scan_max_gens = 6;

  add_common(app.add_subcommand("dim", "Krull dimension via Eq. (1) and the oracle"), dim_opts);
  add_common(app.add_subcommand("depth", "depth via Auslander-Buchsbaum and CM skeletons"),
             depth_opts);
  add_common(app.add_subcommand("sdepth", "exact Stanley depth of S/I"), sdepth_opts);
  add_common(app.add_subcommand("hreg", "exact h-regularity of the ideal as a module"), hreg_opts);
  add_common(app.add_subcommand("reg", "Castelnuovo-Mumford regularity and truncation scan"),
             reg_opts);
  add_common(app.add_subcommand("skeletons", "the skeleton ideal chain"), skel_opts);
  add_common(app.add_subcommand("layers", "cyclic CM layer decompositions"), layer_opts);
  add_common(app.add_subcommand("verify", "run every theorem check against the ideal"),
             verify_opts);
  add_common(app.add_subcommand("decompose", "sdepth-optimal Stanley decomposition"), decomp_opts);

  CLI::App* scan = app.add_subcommand("scan", "seeded conjecture scan over random ideals");
  add_common(scan, scan_opts, false);
  scan->add_option("--seed", scan_seed, "stream seed");
  scan->add_option("--count", scan_count, "number of ideals");
  scan->add_option("--n", scan_arity, "fixed arity (default: random in [2,5])");
  scan->add_option("--max-exp", scan_max_exp, "maximum exponent");
  scan->add_option("--max-gens", scan_max_gens, "maximum generator count");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("dim")) return cmd_dim(dim_opts);
    if (app.got_subcommand("depth")) return cmd_depth(depth_opts);
    if (app.got_subcommand("sdepth")) return cmd_sdepth(sdepth_opts);
    if (app.got_subcommand("hreg")) return cmd_hreg(hreg_opts);
    if (app.got_subcommand("reg")) return cmd_reg(reg_opts);
    if (app.got_subcommand("skeletons")) return cmd_chain(skel_opts, true);
    if (app.got_subcommand("layers")) return cmd_chain(layer_opts, false);
    if (app.got_subcommand("verify")) return cmd_verify(verify_opts);
    if (app.got_subcommand("decompose")) return cmd_decompose(decomp_opts);
    if (app.got_subcommand("scan")) {
      skel::ScanOptions options;
      options.seed = scan_seed;
      options.count = scan_count;
      if (scan_arity > 0) options.arity = scan_arity;
      options.max_exp = scan_max_exp;
      options.max_gens = scan_max_gens;
      options.field = skel::FieldConfig::parse(scan_opts.field_text);
      options.budget = {scan_opts.budget_points, scan_opts.time_limit_ms,
                        scan_opts.budget_nodes};
      options.jobs = scan_opts.jobs == 0 ? 1 : scan_opts.jobs;
      skel::ScanSummary summary = skel::run_scan(options, std::cout);
      std::cerr << "scan: " << summary.lines << " instances, " << summary.violations
                << " violations, " << summary.inconclusive << " inconclusive\n";
      return summary.exit_code();
    }
  } catch (const skel::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const skel::ArityError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const skel::PreconditionError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const skel::EmptyPosetError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const skel::ZeroModuleError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const skel::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
