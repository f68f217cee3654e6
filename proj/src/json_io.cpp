#include "ilat/json_io.hpp"

#include <algorithm>
#include <fstream>

#include "ilat/errors.hpp"

namespace ilat::io {

namespace {

const ordered_json& field(const ordered_json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key))
    throw InvalidInputError(std::string(what) + ": missing \"" + key + "\"");
  return j.at(key);
}

double number(const ordered_json& j, const char* what) {
  if (!j.is_number()) throw InvalidInputError(std::string(what) + ": expected a number");
  return j.get<double>();
}

std::size_t positive_int(const ordered_json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() <= 0)
    throw InvalidInputError(std::string(what) + ": expected a positive integer");
  return static_cast<std::size_t>(j.get<std::int64_t>());
}

std::vector<std::vector<std::size_t>> parse_blocks(const GroundSet& ground,
                                                   const ordered_json& j) {
  if (!j.is_array()) throw InvalidInputError("partition: \"blocks\" must be an array");
  std::vector<std::vector<std::size_t>> blocks;
  blocks.reserve(j.size());
  for (const auto& jb : j) {
    if (!jb.is_array())
      throw InvalidInputError("partition: each block must be an array of labels");
    std::vector<std::size_t> block;
    block.reserve(jb.size());
    for (const auto& label : jb) {
      if (!label.is_string())
        throw InvalidInputError("partition: block members must be label strings");
      block.push_back(ground.require_index(label.get<std::string>()));
    }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

Composition parse_composition(const ordered_json& j, const char* what) {
  if (!j.is_array() || j.empty())
    throw InvalidInputError(std::string(what) + ": expected a nonempty array of pool sizes");
  std::vector<std::size_t> pools;
  pools.reserve(j.size());
  for (const auto& v : j) pools.push_back(positive_int(v, what));
  return Composition(std::move(pools));
}

std::string scalar_label(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  throw InvalidInputError("dataset: feature values must be strings, integers, or booleans");
}

}  // namespace

ordered_json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInputError("cannot open '" + path + "'");
  try {
    return ordered_json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInputError("'" + path + "': " + e.what());
  }
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

GroundSetPtr parse_ground(const ordered_json& j) {
  if (!j.is_array())
    throw InvalidInputError("ground: expected an array of element labels");
  std::vector<std::string> labels;
  labels.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_string()) throw InvalidInputError("ground: labels must be strings");
    labels.push_back(v.get<std::string>());
  }
  return GroundSet::make(std::move(labels));
}

Partition parse_partition(const ordered_json& j) {
  GroundSetPtr ground = parse_ground(field(j, "ground", "partition"));
  const auto blocks = parse_blocks(*ground, field(j, "blocks", "partition"));
  return Partition(std::move(ground), blocks);
}

ProbabilityMeasure parse_measure(const ordered_json& j) {
  const ordered_json& jw = field(j, "weights", "measure");
  if (!jw.is_object() || jw.empty())
    throw InvalidInputError("measure: \"weights\" must map labels to probabilities");
  std::vector<std::string> labels;
  std::vector<double> weights;
  for (const auto& [key, value] : jw.items()) {
    labels.push_back(key);
    weights.push_back(number(value, "measure"));
  }
  return ProbabilityMeasure(GroundSet::make(std::move(labels)), std::move(weights));
}

ProbabilityMeasure parse_measure(const ordered_json& j, const GroundSetPtr& ground) {
  const ordered_json& jw = field(j, "weights", "measure");
  if (!jw.is_object())
    throw InvalidInputError("measure: \"weights\" must map labels to probabilities");
  if (jw.size() != ground->size())
    throw InvalidInputError("measure: one weight per ground element required");
  std::vector<double> weights(ground->size(), 0.0);
  for (const auto& [key, value] : jw.items())
    weights[ground->require_index(key)] = number(value, "measure");
  return ProbabilityMeasure(ground, std::move(weights));
}

Rule parse_rule(const ordered_json& j) {
  GroundSetPtr ground = parse_ground(field(j, "ground", "rule"));
  const auto blocks = parse_blocks(*ground, field(j, "blocks", "rule"));
  Partition p(ground, blocks);
  const ordered_json& jw = field(j, "weights", "rule");
  if (!jw.is_array() || jw.size() != blocks.size())
    throw InvalidInputError("rule: \"weights\" must parallel \"blocks\"");
  // Weights arrive in the file's block order; the partition re-orders
  // blocks canonically, so route each weight through its block's id.
  std::vector<double> bw(p.block_count(), 0.0);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    bw[p.block_of(blocks[b].front())] = number(jw[b], "rule");
  return Rule(std::move(p), std::move(bw));
}

std::vector<Rule> parse_rules(const ordered_json& j) {
  std::vector<Rule> rules;
  if (j.is_array()) {
    for (const auto& jr : j) rules.push_back(parse_rule(jr));
  } else {
    rules.push_back(parse_rule(j));
  }
  if (rules.empty()) throw InvalidInputError("rules: empty rule list");
  return rules;
}

RefinementChain parse_chain(const ordered_json& j) {
  Composition base = parse_composition(field(j, "base", "chain"), "chain base");
  std::vector<RefinementStep> steps;
  if (j.is_object() && j.contains("steps")) {
    const ordered_json& js = j.at("steps");
    if (!js.is_array()) throw InvalidInputError("chain: \"steps\" must be an array");
    for (const auto& jstep : js) {
      const std::size_t pool = positive_int(field(jstep, "pool", "chain step"), "chain pool");
      Composition sub = parse_composition(field(jstep, "sub", "chain step"), "chain sub");
      steps.push_back(RefinementStep{pool, std::move(sub)});
    }
  }
  return RefinementChain(std::move(base), std::move(steps));
}

bool FeatureDataset::has_feature(const std::string& name) const {
  return std::find(feature_names.begin(), feature_names.end(), name) !=
         feature_names.end();
}

FeatureMap FeatureDataset::feature(const std::string& name) const {
  const auto it = std::find(feature_names.begin(), feature_names.end(), name);
  if (it == feature_names.end())
    throw InvalidInputError("dataset: unknown feature '" + name + "'");
  return FeatureMap(name, ground,
                    labels[static_cast<std::size_t>(it - feature_names.begin())]);
}

FeatureDataset parse_dataset(const ordered_json& j) {
  if (!j.is_array() || j.empty())
    throw InvalidInputError("dataset: expected a nonempty array of items");
  std::vector<std::string> ids;
  std::vector<std::string> names;
  std::vector<std::vector<std::optional<std::string>>> labels;
  for (const auto& item : j) {
    if (!item.is_object() || !item.contains("id") || !item.at("id").is_string())
      throw InvalidInputError("dataset: every item needs a string \"id\"");
    ids.push_back(item.at("id").get<std::string>());
    const std::size_t row = ids.size() - 1;
    if (!item.contains("features")) continue;
    const ordered_json& jf = item.at("features");
    if (!jf.is_object())
      throw InvalidInputError("dataset: \"features\" must map names to values");
    for (const auto& [name, value] : jf.items()) {
      auto it = std::find(names.begin(), names.end(), name);
      if (it == names.end()) {
        names.push_back(name);
        labels.emplace_back();
        it = names.end() - 1;
      }
      auto& column = labels[static_cast<std::size_t>(it - names.begin())];
      column.resize(std::max(column.size(), row + 1));
      column[row] = scalar_label(value);
    }
  }
  for (auto& column : labels) column.resize(ids.size());
  return FeatureDataset{GroundSet::make(std::move(ids)), std::move(names),
                        std::move(labels)};
}

ordered_json partition_json(const Partition& p) {
  ordered_json j;
  j["ground"] = p.ground().labels();
  ordered_json blocks = ordered_json::array();
  for (const auto& block : p.blocks()) {
    ordered_json jb = ordered_json::array();
    for (std::size_t e : block) jb.push_back(p.ground().label(e));
    blocks.push_back(std::move(jb));
  }
  j["blocks"] = std::move(blocks);
  return j;
}

ordered_json measure_json(const ProbabilityMeasure& m) {
  ordered_json weights = ordered_json::object();
  for (std::size_t e = 0; e < m.ground().size(); ++e)
    weights[m.ground().label(e)] = m.weight(e);
  ordered_json j;
  j["weights"] = std::move(weights);
  return j;
}

ordered_json rule_json(const Rule& r) {
  ordered_json j = partition_json(r.partition());
  j["weights"] = r.block_weights();
  return j;
}

ordered_json chain_json(const RefinementChain& chain) {
  ordered_json j;
  j["base"] = chain.base().pool_sizes();
  ordered_json steps = ordered_json::array();
  for (const RefinementStep& step : chain.steps()) {
    ordered_json js;
    js["pool"] = step.pool;
    js["sub"] = step.sub.pool_sizes();
    steps.push_back(std::move(js));
  }
  j["steps"] = std::move(steps);
  return j;
}

ordered_json rate_loss_report_json(const RateLossReport& report) {
  ordered_json j;
  j["chained_codewords"] = report.chained_codewords;
  j["single_codewords"] = report.single_codewords;
  j["equivalent"] = report.equivalent.pool_sizes();
  j["pass"] = report.pass;
  return j;
}

ordered_json lattice_json(const PartitionLattice& lattice) {
  ordered_json j;
  j["ground"] = lattice.ground().labels();
  ordered_json nodes = ordered_json::array();
  for (const Partition& p : lattice.nodes()) nodes.push_back(to_string(p));
  j["nodes"] = std::move(nodes);
  ordered_json edges = ordered_json::array();
  for (const auto& [u, v] : lattice.cover_edges())
    edges.push_back(ordered_json::array({u, v}));
  j["edges"] = std::move(edges);
  return j;
}

ordered_json code_lattice_json(const CodeLattice& lattice) {
  const std::size_t n = lattice.block_length();
  ordered_json j;
  j["block_length"] = n;
  ordered_json nodes = ordered_json::array();
  for (const CodeNode& node : lattice.nodes()) {
    ordered_json jn;
    jn["subset"] = boundary_subset_str(node.retained_mask, n);
    jn["composition"] = node.composition.pool_sizes();
    jn["codewords"] = node.code_rate.codeword_count;
    jn["bits"] = node.code_rate.bits();
    jn["distortion"] = node.node_distortion.str();
    if (const auto letter = four_item_letter(node.retained_mask, n))
      jn["letter"] = std::string(1, *letter);
    nodes.push_back(std::move(jn));
  }
  j["nodes"] = std::move(nodes);
  ordered_json edges = ordered_json::array();
  for (const auto& [u, v] : lattice.edges()) edges.push_back(ordered_json::array({u, v}));
  j["edges"] = std::move(edges);
  return j;
}

}  // namespace ilat::io
