#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ilat/codes.hpp"
#include "ilat/lattice.hpp"
#include "ilat/measure.hpp"
#include "ilat/partition.hpp"
#include "ilat/refine.hpp"

namespace ilat::io {

/// All artifacts use insertion-ordered JSON so identical inputs produce
/// byte-identical files and measure keys keep their ground-set order.
using ordered_json = nlohmann::ordered_json;

/// Reads and parses a JSON file. Missing file or malformed JSON throws
/// InvalidInputError with the path in the message.
ordered_json load_json(const std::string& path);

/// Two-space indent plus trailing newline; the one dump style used for
/// every artifact the tooling writes.
std::string dump(const ordered_json& j);

// ---- parsing ----

/// Array of element labels -> ground set.
GroundSetPtr parse_ground(const ordered_json& j);

/// {"ground": [...], "blocks": [[...], ...]}
Partition parse_partition(const ordered_json& j);

/// {"weights": {"α": 0.25, ...}}; element order is key order.
ProbabilityMeasure parse_measure(const ordered_json& j);

/// Same format, but labels are bound to an existing ground set (order and
/// spelling must agree element-for-element).
ProbabilityMeasure parse_measure(const ordered_json& j, const GroundSetPtr& ground);

/// Partition fields plus a parallel "weights" array, one entry per block.
Rule parse_rule(const ordered_json& j);

/// Either a single rule object or an array of them.
std::vector<Rule> parse_rules(const ordered_json& j);

/// {"base": [2,2], "steps": [{"pool": 1, "sub": [1,1]}]}
RefinementChain parse_chain(const ordered_json& j);

/// Feature dataset: [{"id": "...", "features": {"color": "red", ...}}, ...].
/// Items become the ground set in file order; feature names keep first-seen
/// order; an item missing a feature leaves a gap in that feature's map.
struct FeatureDataset {
  GroundSetPtr ground;
  std::vector<std::string> feature_names;
  std::vector<std::vector<std::optional<std::string>>> labels;

  bool has_feature(const std::string& name) const;
  FeatureMap feature(const std::string& name) const;
};

FeatureDataset parse_dataset(const ordered_json& j);

// ---- serialization ----

ordered_json partition_json(const Partition& p);
ordered_json measure_json(const ProbabilityMeasure& m);
ordered_json rule_json(const Rule& r);
ordered_json chain_json(const RefinementChain& chain);
ordered_json rate_loss_report_json(const RateLossReport& report);

/// {"ground": ..., "nodes": [canonical block notation, finest first],
///  "edges": [[finer, coarser], ...]} (Hasse cover edges by node index).
ordered_json lattice_json(const PartitionLattice& lattice);

/// One object per node: subset, composition, codewords (exact multinomial),
/// bits, distortion (rational string), letter (n = 4 only); edges pair node
/// masks subset -> superset.
ordered_json code_lattice_json(const CodeLattice& lattice);

}  // namespace ilat::io
