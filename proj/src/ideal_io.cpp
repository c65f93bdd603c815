#include "skel/ideal_io.hpp"

#include <fstream>
#include <sstream>

namespace skel {

ParsedIdeal parse_ideal_verbose(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_number = 0;
  int arity = -1;
  std::vector<ExponentVector> gens;
  while (std::getline(in, line)) {
    ++line_number;
    std::string::size_type hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::string head;
    if (!(tokens >> head)) continue;  // blank or comment-only
    if (head == "ring") {
      if (arity != -1) throw ParseError(line_number, "duplicate ring line");
      long long n;
      if (!(tokens >> n) || n < 1) throw ParseError(line_number, "ring needs a positive arity");
      std::string rest;
      if (tokens >> rest) throw ParseError(line_number, "trailing tokens after ring arity");
      if (n > 64) throw ParseError(line_number, "arity larger than 64 is not supported");
      arity = static_cast<int>(n);
    } else if (head == "gen") {
      if (arity == -1) throw ParseError(line_number, "gen before ring line");
      std::vector<int> e;
      long long v;
      while (tokens >> v) {
        if (v < 0) throw ParseError(line_number, "negative exponent");
        if (v > 1'000'000) throw ParseError(line_number, "exponent too large");
        e.push_back(static_cast<int>(v));
      }
      if (!tokens.eof()) throw ParseError(line_number, "non-integer exponent token");
      if (static_cast<int>(e.size()) != arity) {
        throw ParseError(line_number, "generator has " + std::to_string(e.size()) +
                                          " exponents, ring arity is " + std::to_string(arity));
      }
      gens.emplace_back(std::move(e));
    } else {
      throw ParseError(line_number, "unknown directive '" + head + "'");
    }
  }
  if (arity == -1) throw ParseError(line_number, "missing ring line");
  ParsedIdeal out{minimalize(arity, gens), {}};
  if (out.ideal.generators().size() != gens.size()) {
    out.warnings.push_back("input generators were not minimal; " +
                           std::to_string(gens.size() - out.ideal.generators().size()) +
                           " removed");
  }
  return out;
}

MonomialIdeal parse_ideal(const std::string& text) { return parse_ideal_verbose(text).ideal; }

std::string serialize_ideal(const MonomialIdeal& ideal) {
  std::string out = "ring " + std::to_string(ideal.arity()) + "\n";
  for (const auto& g : ideal.generators()) {
    out += "gen";
    for (int i = 0; i < g.arity(); ++i) out += " " + std::to_string(g[i]);
    out += "\n";
  }
  return out;
}

ParsedIdeal load_ideal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open ideal file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_ideal_verbose(buffer.str());
}

std::string monomial_string(const ExponentVector& a) {
  std::string out;
  for (int i = 0; i < a.arity(); ++i) {
    if (a[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i + 1);
    if (a[i] > 1) out += "^" + std::to_string(a[i]);
  }
  return out.empty() ? "1" : out;
}

std::string ideal_string(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < ideal.generators().size(); ++i) {
    if (i) out += ", ";
    out += monomial_string(ideal.generators()[i]);
  }
  return out + ")";
}

json to_json(const ExponentVector& a) { return json(a.entries()); }

json to_json(const MonomialIdeal& ideal) {
  json gens = json::array();
  for (const auto& g : ideal.generators()) gens.push_back(to_json(g));
  return json{{"n", ideal.arity()}, {"gens", std::move(gens)}};
}

json to_json(const Interval& interval) {
  return json{{"low", to_json(interval.low)}, {"high", to_json(interval.high)}};
}

json partition_json(const ExponentVector& g, const Partition& partition) {
  json intervals = json::array();
  for (const auto& iv : partition.intervals) intervals.push_back(to_json(iv));
  return json{{"g", to_json(g)}, {"intervals", std::move(intervals)}};
}

json to_json(const StanleyDecomposition& dec) {
  json spaces = json::array();
  for (const auto& space : dec.spaces) {
    json z = json::array();
    for (int v : space.vars) z.push_back(v + 1);
    spaces.push_back(json{{"c", to_json(space.root)}, {"Z", std::move(z)}});
  }
  return json{{"spaces", std::move(spaces)}};
}

json to_json(const BettiTable& table) {
  json betti = json::array();
  for (const auto& e : table.entries) {
    betti.push_back(json{{"i", e.i}, {"a", to_json(e.degree)}, {"rank", e.rank}});
  }
  json out{{"n", table.arity}, {"field", table.field.name()}, {"betti", std::move(betti)}};
  if (!table.zero_module()) {
    out["pdim"] = table.projective_dimension();
    out["depth"] = table.depth();
    out["reg"] = table.regularity();
  } else {
    out["pdim"] = nullptr;
    out["depth"] = nullptr;
    out["reg"] = nullptr;
  }
  return out;
}

json chain_report_json(const SkeletonChain& chain, bool with_skeletons, bool with_layers) {
  json out{{"d", chain.d}, {"g", to_json(chain.g)}};
  if (with_skeletons) {
    json skeletons = json::array();
    for (int j = chain.d; j >= 0; --j) {
      const auto& ideal = chain.ideals[static_cast<std::size_t>(j)];
      json gens = json::array();
      for (const auto& u : ideal.generators()) gens.push_back(to_json(u));
      skeletons.push_back(json{{"j", j}, {"gens", std::move(gens)}, {"dim", j}});
    }
    out["skeletons"] = std::move(skeletons);
  }
  if (with_layers) {
    json layers = json::array();
    for (int j = chain.d; j >= 0; --j) {
      json summands = json::array();
      for (const auto& s : layer_decomposition(chain.ideals[static_cast<std::size_t>(chain.d)],
                                               chain.g, j)) {
        json z = json::array();
        for (int v : s.z_vars) z.push_back(v + 1);
        json m = json::array();
        for (const auto& u : s.ann.generators()) m.push_back(to_json(u));
        summands.push_back(
            json{{"b", to_json(s.b_min)}, {"Z", std::move(z)}, {"M", std::move(m)}});
      }
      layers.push_back(json{{"j", j}, {"summands", std::move(summands)}});
    }
    out["layers"] = std::move(layers);
  }
  return out;
}

json to_json(const SdepthResult& result, const ExponentVector& g) {
  return json{{"sdepth", result.value},
              {"certified", result.optimal},
              {"upper_bound", result.upper_bound},
              {"witness", partition_json(g, result.witness)},
              {"stats", json{{"nodes", result.stats.nodes}, {"prunes", result.stats.prunes}}}};
}

json to_json(const HregResult& result, const ExponentVector& g) {
  return json{{"hreg", result.value},
              {"certified", result.optimal},
              {"witness", partition_json(g, result.witness)},
              {"stats", json{{"nodes", result.stats.nodes}, {"prunes", result.stats.prunes}}}};
}

ExponentVector exponent_from_json(const json& j) {
  std::vector<int> e;
  for (const auto& v : j) e.push_back(v.get<int>());
  return ExponentVector(std::move(e));
}

Partition partition_from_json(const json& j) {
  Partition out;
  for (const auto& iv : j.at("intervals")) {
    out.intervals.push_back(
        {exponent_from_json(iv.at("low")), exponent_from_json(iv.at("high"))});
  }
  return out;
}

StanleyDecomposition decomposition_from_json(const json& j) {
  StanleyDecomposition out;
  for (const auto& space : j.at("spaces")) {
    StanleySpace s;
    s.root = exponent_from_json(space.at("c"));
    for (const auto& v : space.at("Z")) s.vars.push_back(v.get<int>() - 1);
    out.spaces.push_back(std::move(s));
  }
  return out;
}

}  // namespace skel
