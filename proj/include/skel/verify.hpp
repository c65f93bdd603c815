#ifndef SKEL_VERIFY_HPP
#define SKEL_VERIFY_HPP

#include <optional>
#include <ostream>

#include "skel/ideal_io.hpp"
#include "skel/random_ideal.hpp"

namespace skel {

enum class CheckStatus { Pass, Fail, Inconclusive, Skipped };

std::string status_string(CheckStatus status);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Skipped;
  json details;
};

struct RunOptions {
  FieldConfig field;
  SearchBudget budget;
  unsigned jobs = 1;
  std::optional<ExponentVector> g_override;
};

/// One theorem-harness run: every invariant of the skeleton, homology and
/// stanley modules checked against a single ideal.
struct VerifyReport {
  json ideal;
  json g;
  json config;
  std::vector<CheckResult> checks;

  /// 0 all pass, 1 any failure (a genuine finding), 3 inconclusive only.
  int exit_code() const;
};

VerifyReport run_verify(const MonomialIdeal& ideal, const RunOptions& options);

json to_json(const VerifyReport& report);
std::string to_text(const VerifyReport& report);

struct ScanOptions {
  std::uint64_t seed = 1;
  std::size_t count = 0;
  std::optional<int> arity;  // default: uniform in [2,5] per instance
  int max_exp = 3;
  int max_gens = 6;
  FieldConfig field;
  SearchBudget budget;
  unsigned jobs = 1;
};

struct ScanSummary {
  std::size_t lines = 0;
  std::size_t violations = 0;
  std::size_t inconclusive = 0;

  int exit_code() const { return violations ? 1 : (inconclusive ? 3 : 0); }
};

/// Seeded counterexample hunt for both conjectures: one JSON line per ideal,
/// byte-identical for a fixed seed; halts with a loud report on the first
/// certified violation. Budget overruns are logged per instance, never fatal.
ScanSummary run_scan(const ScanOptions& options, std::ostream& out);

}  // namespace skel

#endif
