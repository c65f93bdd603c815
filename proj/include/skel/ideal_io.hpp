#ifndef SKEL_IDEAL_IO_HPP
#define SKEL_IDEAL_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "skel/koszul.hpp"
#include "skel/poset.hpp"
#include "skel/skeleton.hpp"
#include "skel/stanley.hpp"

namespace skel {

using json = nlohmann::ordered_json;

struct ParsedIdeal {
  MonomialIdeal ideal;
  std::vector<std::string> warnings;  // e.g. input generators were not minimal
};

/// Ideal text format: a `ring n` line, then `gen e1 ... en` lines with
/// nonnegative integers. Blank lines and `#` comments are ignored.
/// Errors carry 1-based line numbers.
ParsedIdeal parse_ideal_verbose(const std::string& text);
MonomialIdeal parse_ideal(const std::string& text);

/// Canonical serialization: generators sorted graded-lex, one per line.
/// Equal ideals serialize byte-identically; parse ∘ serialize = identity.
std::string serialize_ideal(const MonomialIdeal& ideal);

ParsedIdeal load_ideal_file(const std::string& path);

/// "x1^2*x3" style; the zero vector prints as "1".
std::string monomial_string(const ExponentVector& a);
std::string ideal_string(const MonomialIdeal& ideal);

// JSON forms. Variable index sets are 1-based, matching x_1..x_n.
json to_json(const ExponentVector& a);
json to_json(const MonomialIdeal& ideal);
json to_json(const Interval& interval);
json partition_json(const ExponentVector& g, const Partition& partition);
json to_json(const StanleyDecomposition& dec);
json to_json(const BettiTable& table);
json chain_report_json(const SkeletonChain& chain, bool with_skeletons, bool with_layers);
json to_json(const SdepthResult& result, const ExponentVector& g);
json to_json(const HregResult& result, const ExponentVector& g);

ExponentVector exponent_from_json(const json& j);
Partition partition_from_json(const json& j);
StanleyDecomposition decomposition_from_json(const json& j);

}  // namespace skel

#endif
