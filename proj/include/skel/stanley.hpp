#ifndef SKEL_STANLEY_HPP
#define SKEL_STANLEY_HPP

#include <cstdint>
#include <vector>

#include "skel/field.hpp"
#include "skel/poset.hpp"

namespace skel {

/// Caps for the exact searches. Exceeding a cap never yields a wrong number:
/// results come back flagged not-certified with a valid witness bound.
/// The node cap is deterministic, unlike the wall-clock limit, so default
/// configurations stay byte-identical across reruns.
struct SearchBudget {
  std::size_t max_poset_points = 200;
  long long time_limit_ms = 0;              // 0 = unlimited
  unsigned long long max_nodes = 2000000;   // 0 = unlimited
};

struct SearchStats {
  unsigned long long nodes = 0;
  unsigned long long prunes = 0;
};

/// sdepth via interval partitions: value is always achieved by the witness
/// (a certified lower bound); `optimal` marks an exhausted search, in which
/// case upper_bound == value. Without a certificate, upper_bound carries the
/// best proven bound (exhausted targets above, else dim).
struct SdepthResult {
  int value = 0;
  Partition witness;
  bool optimal = false;
  int upper_bound = 0;
  SearchStats stats;
};

/// Exact sdepth(J/I) = max over partitions of min rho(d_i), by
/// descending-target backtracking: each new interval is rooted at the
/// graded-lex-least uncovered point and its top must have rho >= target.
/// Errors on an empty poset.
SdepthResult sdepth(const MonomialIdeal& inner, const MonomialIdeal& outer,
                    const ExponentVector& g, const SearchBudget& budget);

struct SigmaReport {
  std::vector<int> per_interval;
  int value = 0;
};

/// sigma_i = |c_i| + sum over Y_{d_i} of (d_i - c_i); sigma = max sigma_i.
/// The h-regularity of the Stanley decomposition attached to the partition.
SigmaReport sigma(const CharacteristicPoset& poset, const Partition& partition);

struct HregResult {
  int value = 0;
  Partition witness;
  bool optimal = false;
  SearchStats stats;
};

/// Exact hreg(J/I) = min over partitions of sigma, by branch and bound
/// rooted at the graded-lex-least uncovered point (an interval rooted at c
/// has sigma_i >= |c|). The empty poset has hreg 0 by convention.
HregResult hreg(const MonomialIdeal& inner, const MonomialIdeal& outer, const ExponentVector& g,
                const SearchBudget& budget);

enum class WitnessStatus { Found, None, Unknown };

struct GeneratorRootedResult {
  WitnessStatus status = WitnessStatus::Unknown;
  Partition witness;  // set iff status == Found
  SearchStats stats;
};

/// Searches for a partition of P^g_I whose interval lows are exactly the
/// minimal generators of I, each used once (the paper's closing conjecture
/// for ideals with linear resolution). Exhaustion certifies non-existence
/// for this g.
GeneratorRootedResult generator_rooted_partition(const MonomialIdeal& ideal,
                                                 const ExponentVector& g,
                                                 const SearchBudget& budget);

struct StanleyConjectureReport {
  int depth = 0;
  SdepthResult sdepth;
  bool pass = false;
  bool conclusive = false;
};

/// sdepth S/I >= depth S/I. A witness with value >= depth certifies a pass
/// even when the search was cut short; a certified optimum below depth would
/// be a counterexample and is reported, never asserted away.
StanleyConjectureReport check_stanley_conjecture(const MonomialIdeal& ideal,
                                                 const ExponentVector& g,
                                                 const FieldConfig& field,
                                                 const SearchBudget& budget);

struct TruncationStep {
  int j = 0;
  HregResult hreg_truncation;
  bool holds = false;       // hreg(I) <= hreg(I_{>=j})
  bool conclusive = false;  // both sides certified
};

struct JahanConjectureReport {
  HregResult hreg_ideal;
  int reg = 0;
  bool pass = false;        // hreg(I) <= reg(I)
  bool conclusive = false;
  std::vector<TruncationStep> chain;    // j = 1 .. linear_truncation_degree
  bool truncation_scan_ran = false;     // false when the truncations outgrow the budget
  int linear_truncation_degree = 0;     // min j with I_{>=j} j-linear
  int reg_at_linear_truncation = 0;
  bool truncation_scan_matches = false; // == reg(I), and reg(I_{>=j}) == reg(I) there
};

/// hreg(I) <= reg(I), with the reduction chain hreg(I) <= hreg(I_{>=j}) and
/// the Eisenbud–Goto cross-check reg(I) = min{j : I_{>=j} has a linear
/// resolution}.
JahanConjectureReport check_jahan_conjecture(const MonomialIdeal& ideal,
                                             const FieldConfig& field,
                                             const SearchBudget& budget);

struct SkeletonSdepthStep {
  int j = 0;
  SdepthResult sdepth_skeleton;
  bool holds = false;  // sdepth S/I >= sdepth S/I_j
  bool conclusive = false;
  Partition completed;          // the witness extended by singletons
  bool completed_valid = false; // validates as a partition of P^g_{S/I}
  int completed_rho = 0;        // equals sdepth S/I_j
};

struct SdepthMonotonicityReport {
  SdepthResult sdepth_full;
  std::vector<SkeletonSdepthStep> steps;  // j = 0..d
  bool pass = false;
  bool conclusive = false;
};

/// sdepth S/I >= sdepth S/I_j for every skeleton, exhibiting the proof's
/// completed partition (skeleton witness plus singletons [a,a] for the
/// points with rho(a) > j) as an explicit witness on P^g_{S/I}.
SdepthMonotonicityReport check_sdepth_skeleton_monotonicity(const MonomialIdeal& ideal,
                                                            const ExponentVector& g,
                                                            const SearchBudget& budget);

}  // namespace skel

#endif
