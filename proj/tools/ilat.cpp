#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ilat/codes.hpp"
#include "ilat/errors.hpp"
#include "ilat/json_io.hpp"
#include "ilat/lattice.hpp"
#include "ilat/measure.hpp"
#include "ilat/order.hpp"
#include "ilat/partition.hpp"
#include "ilat/permutation_group.hpp"
#include "ilat/refine.hpp"

namespace {

using ilat::io::ordered_json;

struct Config {
  double tolerance = 1e-9;
  std::size_t max_iters = 10000;
  std::size_t max_nodes = 4096;
  std::string format = "json";
  std::string output;
};

void emit(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out) throw ilat::InvalidInputError("cannot write '" + output + "'");
  out << text;
}

[[noreturn]] void reject_format(const char* command) {
  throw ilat::InvalidInputError(std::string(command) + ": unsupported --format");
}

std::string fmt_bits(double bits) {
  std::ostringstream out;
  out << std::setprecision(6) << bits;
  return out.str();
}

// ---- lattice ----

int cmd_lattice(const std::string& dataset_path, std::vector<std::string> features,
                const Config& cfg) {
  const auto dataset = ilat::io::parse_dataset(ilat::io::load_json(dataset_path));
  if (features.empty()) features = dataset.feature_names;
  if (features.empty())
    throw ilat::InvalidInputError("dataset '" + dataset_path + "' declares no features");
  std::vector<ilat::Partition> generators;
  generators.reserve(features.size());
  for (const auto& name : features)
    generators.push_back(ilat::from_feature(dataset.feature(name)));
  const auto lattice = ilat::PartitionLattice::close(generators, cfg.max_nodes);

  if (cfg.format == "dot") {
    emit(ilat::to_dot(lattice), cfg.output);
  } else if (cfg.format == "table") {
    std::string text;
    for (std::size_t i = 0; i < lattice.nodes().size(); ++i)
      text += std::to_string(i) + "  " + to_string(lattice.nodes()[i]) + "\n";
    for (const auto& [u, v] : lattice.cover_edges())
      text += std::to_string(u) + " -> " + std::to_string(v) + "\n";
    emit(text, cfg.output);
  } else {
    emit(ilat::io::dump(ilat::io::lattice_json(lattice)), cfg.output);
  }
  std::cerr << lattice.nodes().size() << " nodes, " << lattice.cover_edges().size()
            << " edges\n";
  return 0;
}

// ---- project / lift ----

int cmd_project(const std::string& measure_path, const std::string& partition_path,
                const Config& cfg) {
  const auto p = ilat::io::parse_partition(ilat::io::load_json(partition_path));
  const auto m = ilat::io::parse_measure(ilat::io::load_json(measure_path), p.ground_ptr());
  const auto r = ilat::project(m, p);
  if (cfg.format == "table") {
    std::string text;
    for (std::size_t b = 0; b < r.partition().block_count(); ++b) {
      std::ostringstream line;
      line << "{";
      const auto& block = r.partition().blocks()[b];
      for (std::size_t i = 0; i < block.size(); ++i) {
        if (i > 0) line << ",";
        line << r.partition().ground().label(block[i]);
      }
      line << "}  " << r.block_weights()[b] << "\n";
      text += line.str();
    }
    emit(text, cfg.output);
  } else if (cfg.format == "json") {
    emit(ilat::io::dump(ilat::io::rule_json(r)), cfg.output);
  } else {
    reject_format("project");
  }
  std::cerr << "entropy " << fmt_bits(ilat::entropy(r)) << " bits\n";
  return 0;
}

int cmd_lift(const std::string& rules_path, const Config& cfg) {
  const auto rules = ilat::io::parse_rules(ilat::io::load_json(rules_path));
  const auto m = ilat::lift(rules, cfg.tolerance, cfg.max_iters);
  if (cfg.format == "table") {
    std::string text;
    for (std::size_t e = 0; e < m.ground().size(); ++e) {
      std::ostringstream line;
      line << m.ground().label(e) << "  " << m.weight(e) << "\n";
      text += line.str();
    }
    emit(text, cfg.output);
  } else if (cfg.format == "json") {
    emit(ilat::io::dump(ilat::io::measure_json(m)), cfg.output);
  } else {
    reject_format("lift");
  }
  std::cerr << "entropy " << fmt_bits(ilat::entropy(m.weights())) << " bits\n";
  return 0;
}

// ---- distance ----

int cmd_distance(const std::string& p_path, const std::string& q_path,
                 const std::string& measure_path, const Config& cfg) {
  const auto p = ilat::io::parse_partition(ilat::io::load_json(p_path));
  const auto q = ilat::io::parse_partition(ilat::io::load_json(q_path));
  const std::size_t d = ilat::delta_L(p, q);
  ordered_json j;
  j["delta_L"] = d;
  std::string table = "delta_L  " + std::to_string(d) + "\n";
  if (!measure_path.empty()) {
    const auto m = ilat::io::parse_measure(ilat::io::load_json(measure_path), p.ground_ptr());
    const double r = ilat::rho(p, q, m);
    j["rho_bits"] = r;
    table += "rho_bits  " + fmt_bits(r) + "\n";
  }
  if (cfg.format == "table") {
    emit(table, cfg.output);
  } else if (cfg.format == "json") {
    emit(ilat::io::dump(j), cfg.output);
  } else {
    reject_format("distance");
  }
  return 0;
}

// ---- rd-table ----

int cmd_rd_table(std::size_t n, const Config& cfg) {
  const auto lattice = ilat::lattice_of_codes(n);
  std::vector<std::uint32_t> starred(n);
  for (std::size_t level = 0; level < n; ++level)
    starred[level] = ilat::optimal_code_mask(n, level);
  const auto level_of = [&](const ilat::CodeNode& node) {
    return (n - 1) - static_cast<std::size_t>(std::popcount(node.retained_mask));
  };

  if (cfg.format == "dot") {
    emit(ilat::to_dot(lattice), cfg.output);
    return 0;
  }
  if (cfg.format == "json") {
    ordered_json j = ilat::io::code_lattice_json(lattice);
    for (std::size_t i = 0; i < lattice.nodes().size(); ++i) {
      const auto& node = lattice.nodes()[i];
      j["nodes"][i]["optimal"] = starred[level_of(node)] == node.retained_mask;
    }
    emit(ilat::io::dump(j), cfg.output);
    return 0;
  }

  std::ostringstream out;
  out << std::left << " " << std::setw(12) << "subset" << std::setw(14) << "composition"
      << std::setw(11) << "codewords" << std::setw(10) << "bits" << "distortion\n";
  for (const auto& node : lattice.nodes()) {
    const bool star = starred[level_of(node)] == node.retained_mask;
    std::string subset = ilat::boundary_subset_str(node.retained_mask, n);
    if (const auto letter = ilat::four_item_letter(node.retained_mask, n))
      subset += " (" + std::string(1, *letter) + ")";
    out << (star ? "*" : " ") << std::setw(12) << subset << std::setw(14)
        << node.composition.str() << std::setw(11) << node.code_rate.codeword_count
        << std::setw(10) << fmt_bits(node.code_rate.bits()) << node.node_distortion.str()
        << "\n";
  }
  emit(out.str(), cfg.output);
  return 0;
}

// ---- encode ----

ilat::Composition parse_composition_text(std::string text) {
  if (!text.empty() && text.front() == '[') text.erase(text.begin());
  if (!text.empty() && text.back() == ']') text.pop_back();
  std::vector<std::size_t> pools;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used])))
        ++used;
      if (used != item.size() || v <= 0) throw std::invalid_argument(item);
      pools.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw ilat::InvalidInputError("composition: bad pool size '" + item + "'");
    }
  }
  if (pools.empty()) throw ilat::InvalidInputError("composition: no pool sizes");
  return ilat::Composition(std::move(pools));
}

int cmd_encode(const std::string& composition_text, const std::vector<std::string>& values,
               const Config& cfg) {
  const auto c = parse_composition_text(composition_text);

  // Numeric inputs are pre-sorted into a ranking (ties by input index);
  // anything else is taken as element labels already in ascending order.
  std::vector<double> numbers;
  bool numeric = !values.empty();
  for (const auto& v : values) {
    try {
      std::size_t used = 0;
      numbers.push_back(std::stod(v, &used));
      if (used != v.size()) numeric = false;
    } catch (const std::exception&) {
      numeric = false;
    }
    if (!numeric) break;
  }

  ilat::GroundSetPtr ground;
  std::vector<std::size_t> sequence(values.size());
  if (numeric) {
    ground = ilat::GroundSet::indexed(values.size());
    std::iota(sequence.begin(), sequence.end(), std::size_t{0});
    std::stable_sort(sequence.begin(), sequence.end(),
                     [&](std::size_t a, std::size_t b) { return numbers[a] < numbers[b]; });
  } else {
    ground = ilat::GroundSet::make(values);
    std::iota(sequence.begin(), sequence.end(), std::size_t{0});
  }
  const ilat::TotalOrder ranking(ground, std::move(sequence));
  const auto assignment = ilat::encode(ranking, c);

  ordered_json j;
  j["composition"] = assignment.composition.pool_sizes();
  ordered_json pools = ordered_json::array();
  std::string table;
  for (std::size_t k = 0; k < assignment.pools.size(); ++k) {
    ordered_json pool = ordered_json::array();
    table += "pool " + std::to_string(k + 1) + ":";
    for (std::size_t e : assignment.pools[k]) {
      pool.push_back(ground->label(e));
      table += " " + ground->label(e);
    }
    table += "\n";
    pools.push_back(std::move(pool));
  }
  j["pools"] = std::move(pools);
  j["distortion"] = assignment.distortion.str();
  table += "distortion  " + assignment.distortion.str() + "\n";

  if (cfg.format == "table") {
    emit(table, cfg.output);
  } else if (cfg.format == "json") {
    emit(ilat::io::dump(j), cfg.output);
  } else {
    reject_format("encode");
  }
  std::cerr << "distortion " << assignment.distortion.str() << "\n";
  return 0;
}

// ---- refine ----

int cmd_refine(const std::string& chain_path, const Config& cfg) {
  const auto chain = ilat::io::parse_chain(ilat::io::load_json(chain_path));
  const auto report = ilat::verify_no_rate_loss(chain);
  if (cfg.format == "table") {
    std::string text;
    text += "chained_codewords  " + std::to_string(report.chained_codewords) + "\n";
    text += "single_codewords   " + std::to_string(report.single_codewords) + "\n";
    text += "equivalent         " + report.equivalent.str() + "\n";
    text += std::string(report.pass ? "PASS" : "FAIL") + "\n";
    emit(text, cfg.output);
  } else if (cfg.format == "json") {
    emit(ilat::io::dump(ilat::io::rate_loss_report_json(report)), cfg.output);
  } else {
    reject_format("refine");
  }
  std::cerr << (report.pass ? "no rate loss: " : "RATE MISMATCH: ")
            << report.chained_codewords << " vs " << report.single_codewords << "\n";
  return report.pass ? 0 : 4;
}

// ---- reproduce-paper ----

constexpr const char* kTableRows = R"([
  {"composition": [1,1,1,1], "retained": "{a,b,c}", "letter": "U"},
  {"composition": [2,1,1], "retained": "{b,c}", "letter": "F"},
  {"composition": [1,2,1], "retained": "{a,c}", "letter": "E"},
  {"composition": [1,1,2], "retained": "{a,b}", "letter": "D"},
  {"composition": [2,2], "retained": "{b}", "letter": "B"},
  {"composition": [3,1], "retained": "{c}", "letter": "C"},
  {"composition": [1,3], "retained": "{a}", "letter": "A"},
  {"composition": [4], "retained": "{}", "letter": "O"}
])";

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

std::uint32_t parse_boundary_subset(const std::string& text, std::size_t n) {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}')
    throw ilat::InvalidInputError("boundary subset: expected \"{a,c}\" spelling");
  std::uint32_t mask = 0;
  std::stringstream in(text.substr(1, text.size() - 2));
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.size() != 1 || item[0] < 'a' || item[0] >= static_cast<char>('a' + n - 1))
      throw ilat::InvalidInputError("boundary subset: bad boundary '" + item + "'");
    mask |= std::uint32_t{1} << (item[0] - 'a');
  }
  return mask;
}

Check check_delta_quartet() {
  Check c{"delta_quartet", false, ""};
  const auto ground = ilat::GroundSet::make({"α", "β", "γ", "ζ"});
  const auto k = ilat::TotalOrder::canonical(ground);
  const auto j0 = ilat::PartialOrder::empty(ground);
  const auto j1 = ilat::PartialOrder::from_labels(ground, {{"α", "β"}});
  const auto j2 =
      ilat::PartialOrder::from_labels(ground, {{"α", "β"}, {"β", "γ"}, {"β", "ζ"}});
  const auto j3 =
      ilat::PartialOrder::from_labels(ground, {{"α", "β"}, {"β", "ζ"}, {"ζ", "γ"}});
  using ilat::Distortion;
  using ilat::Rational;
  c.pass = distortion(j0, k) == Distortion::finite(Rational(1, 1)) &&
           distortion(j1, k) == Distortion::finite(Rational(2, 3)) &&
           distortion(j2, k) == Distortion::finite(Rational(1, 3)) &&
           distortion(j3, k) == Distortion::infinite() &&
           distortion(ilat::PartialOrder::of_total(k), k) ==
               Distortion::finite(Rational(0, 1));
  c.detail = c.pass ? "distortions 1, 2/3, 1/3, inf (and 0 for the total order)"
                    : "a quartet distortion came out wrong";
  return c;
}

Check check_code_table(const std::string& table1_path) {
  Check c{"code_table", false, ""};
  ordered_json rows;
  try {
    rows = table1_path.empty() ? ordered_json::parse(kTableRows)
                               : ilat::io::load_json(table1_path);
  } catch (const std::exception& e) {
    c.detail = e.what();
    return c;
  }
  if (!rows.is_array() || rows.size() != 8) {
    c.detail = "expected 8 rows, got " +
               std::to_string(rows.is_array() ? rows.size() : 0);
    return c;
  }
  std::uint32_t seen = 0;
  for (const auto& row : rows) {
    try {
      const std::uint32_t mask =
          parse_boundary_subset(row.at("retained").get<std::string>(), 4);
      const auto composition = row.at("composition").get<std::vector<std::size_t>>();
      const std::string letter = row.at("letter").get<std::string>();
      const auto derived = ilat::composition_of(mask, 4);
      const auto expected_letter = ilat::four_item_letter(mask, 4);
      if (derived.pool_sizes() != composition) {
        c.detail = "subset " + ilat::boundary_subset_str(mask, 4) + " derives " +
                   derived.str() + ", table says otherwise";
        return c;
      }
      if (ilat::retained_mask_of(derived) != mask) {
        c.detail = "mask round trip failed for " + derived.str();
        return c;
      }
      if (!expected_letter || std::string(1, *expected_letter) != letter) {
        c.detail = "letter mismatch for subset " + ilat::boundary_subset_str(mask, 4);
        return c;
      }
      seen |= std::uint32_t{1} << mask;
    } catch (const std::exception& e) {
      c.detail = std::string("bad row: ") + e.what();
      return c;
    }
  }
  if (seen != 0xFF) {
    c.detail = "rows do not cover all 8 subsets";
    return c;
  }
  c.pass = true;
  c.detail = "all 8 composition/subset/letter rows agree";
  return c;
}

Check check_code_lattice_structure() {
  Check c{"code_lattice_structure", false, ""};
  const auto lattice = ilat::lattice_of_codes(4);
  if (lattice.nodes().size() != 8 || lattice.edges().size() != 12) {
    c.detail = std::to_string(lattice.nodes().size()) + " nodes, " +
               std::to_string(lattice.edges().size()) + " edges";
    return c;
  }
  for (const auto& [u, v] : lattice.edges()) {
    const std::uint32_t added = static_cast<std::uint32_t>(v) ^ static_cast<std::uint32_t>(u);
    if ((u & v) != u || std::popcount(added) != 1) {
      c.detail = "edge " + std::to_string(u) + " -> " + std::to_string(v) +
                 " is not a single-comparability addition";
      return c;
    }
  }
  for (const auto& node : lattice.nodes()) {
    const std::size_t dropped =
        3 - static_cast<std::size_t>(std::popcount(node.retained_mask));
    if (node.node_distortion !=
        ilat::Rational(static_cast<std::int64_t>(dropped), 3)) {
      c.detail = "distortion off at subset " +
                 ilat::boundary_subset_str(node.retained_mask, 4);
      return c;
    }
  }
  c.pass = true;
  c.detail = "8 nodes, 12 single-addition edges, level distortions 0,1/3,2/3,1";
  return c;
}

Check check_rate_table() {
  Check c{"rate_table", false, ""};
  const auto lattice = ilat::lattice_of_codes(4);
  const std::uint64_t expected[8] = {1, 4, 6, 12, 4, 12, 12, 24};
  for (std::uint32_t mask = 0; mask < 8; ++mask) {
    if (lattice.nodes()[mask].code_rate.codeword_count != expected[mask]) {
      c.detail = "codeword count off at subset " + ilat::boundary_subset_str(mask, 4);
      return c;
    }
  }
  c.pass = true;
  c.detail = "multinomials {24,12,12,12,6,4,4,1} reproduced exactly";
  return c;
}

Check check_subgroup_correspondence() {
  Check c{"subgroup_correspondence", false, ""};
  const auto ground = ilat::GroundSet::make({"α", "β", "γ", "ζ"});
  const auto report = ilat::verify_correspondence(ground);
  std::string detail;
  const bool iso =
      ilat::orbit_map_is_poset_isomorphism(ilat::SubgroupLattice(ground), &detail);
  c.pass = report.pass && iso;
  if (c.pass) {
    c.detail = "orbit map is a poset isomorphism; join/meet agree on " +
               std::to_string(report.pairs_checked) + " subgroup pairs";
  } else {
    c.detail = report.failures.empty() ? detail : report.failures.front();
  }
  return c;
}

Check check_no_rate_loss() {
  Check c{"no_rate_loss", false, ""};
  const ilat::RefinementChain paper_chain(
      ilat::Composition({2, 2}), {ilat::RefinementStep{1, ilat::Composition({1, 1})}});
  const auto paper = ilat::verify_no_rate_loss(paper_chain);
  if (!paper.pass || paper.chained_codewords != 12 || paper.single_codewords != 12) {
    c.detail = "two-step [2,2]+[1,1] gave " + std::to_string(paper.chained_codewords) +
               " vs " + std::to_string(paper.single_codewords);
    return c;
  }
  std::size_t cases = 0;
  for (std::size_t n = 2; n <= 6; ++n) {
    const std::uint32_t count = std::uint32_t{1} << (n - 1);
    for (std::uint32_t mask = 0; mask < count; ++mask) {
      const auto base = ilat::composition_of(mask, n);
      for (std::size_t pool = 1; pool <= base.pool_count(); ++pool) {
        const std::size_t s = base.pool_sizes()[pool - 1];
        const std::uint32_t subs = s == 1 ? 1 : (std::uint32_t{1} << (s - 1));
        for (std::uint32_t submask = 0; submask < subs; ++submask) {
          const ilat::RefinementChain chain(
              base, {ilat::RefinementStep{pool, ilat::composition_of(submask, s)}});
          if (!ilat::verify_no_rate_loss(chain).pass) {
            c.detail = "rate mismatch refining " + base.str();
            return c;
          }
          ++cases;
        }
      }
    }
  }
  c.pass = true;
  c.detail = "6*2 = 12 exactly; " + std::to_string(cases) +
             " single-step chains verified for block lengths 2..6";
  return c;
}

int cmd_reproduce_paper(const std::string& table1_path, const Config& cfg) {
  std::vector<Check> checks;
  checks.push_back(check_delta_quartet());
  checks.push_back(check_code_table(table1_path));
  checks.push_back(check_code_lattice_structure());
  checks.push_back(check_rate_table());
  checks.push_back(check_subgroup_correspondence());
  checks.push_back(check_no_rate_loss());

  bool all = true;
  ordered_json jchecks = ordered_json::array();
  std::string table;
  for (const Check& c : checks) {
    all = all && c.pass;
    ordered_json j;
    j["name"] = c.name;
    j["pass"] = c.pass;
    j["detail"] = c.detail;
    jchecks.push_back(std::move(j));
    table += std::string(c.pass ? "PASS" : "FAIL") + "  " + c.name + "  " + c.detail + "\n";
  }
  ordered_json report;
  report["checks"] = std::move(jchecks);
  report["pass"] = all;

  if (cfg.format == "table") {
    emit(table, cfg.output);
  } else if (cfg.format == "json") {
    emit(ilat::io::dump(report), cfg.output);
  } else {
    reject_format("reproduce-paper");
  }
  std::cerr << (all ? "all checks pass" : "CHECK FAILURES") << "\n";
  return all ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Information lattices over finite sample spaces: partition algebra, "
               "semantic fidelity, measure projection and lifting, permutation codes, "
               "successive refinement"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read option defaults from a TOML-style file");

  Config cfg;
  app.add_option("--tolerance", cfg.tolerance, "Convergence tolerance for lifting")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--max-iters", cfg.max_iters, "Iteration cap for lifting")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--max-nodes", cfg.max_nodes, "Node cap for lattice closure")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--format", cfg.format, "Artifact format")
      ->check(CLI::IsMember({"json", "dot", "table"}))
      ->capture_default_str();
  app.add_option("--output", cfg.output, "Write the artifact to this path instead of stdout");
  std::string measure_path;
  app.add_option("--measure", measure_path, "Probability measure JSON (distance only)");

  int rc = 0;

  auto* lattice_cmd =
      app.add_subcommand("lattice", "Close feature partitions of a dataset into a lattice");
  std::string dataset_path;
  std::vector<std::string> feature_names;
  lattice_cmd->add_option("dataset", dataset_path, "Feature dataset JSON")->required();
  lattice_cmd->add_option("features", feature_names, "Feature names (default: all)");
  lattice_cmd->fallthrough();
  lattice_cmd->callback([&] { rc = cmd_lattice(dataset_path, feature_names, cfg); });

  auto* project_cmd =
      app.add_subcommand("project", "Project a measure down to a partition's blocks");
  std::string project_measure, project_partition;
  project_cmd->add_option("measure", project_measure, "Measure JSON")->required();
  project_cmd->add_option("partition", project_partition, "Partition JSON")->required();
  project_cmd->fallthrough();
  project_cmd->callback([&] { rc = cmd_project(project_measure, project_partition, cfg); });

  auto* lift_cmd =
      app.add_subcommand("lift", "Lift rules to the maximum-entropy measure satisfying them");
  std::string rules_path;
  lift_cmd->add_option("rules", rules_path, "Rule JSON (one object or an array)")->required();
  lift_cmd->fallthrough();
  lift_cmd->callback([&] { rc = cmd_lift(rules_path, cfg); });

  auto* distance_cmd =
      app.add_subcommand("distance", "Lattice and entropy distance between two partitions");
  std::string p_path, q_path;
  distance_cmd->add_option("p", p_path, "First partition JSON")->required();
  distance_cmd->add_option("q", q_path, "Second partition JSON")->required();
  distance_cmd->fallthrough();
  distance_cmd->callback([&] { rc = cmd_distance(p_path, q_path, measure_path, cfg); });

  auto* rd_cmd = app.add_subcommand(
      "rd-table", "Rate and distortion of every permutation code of a block length");
  std::size_t block_length = 0;
  rd_cmd->add_option("n", block_length, "Block length")->required();
  rd_cmd->fallthrough();
  rd_cmd->callback([&] { rc = cmd_rd_table(block_length, cfg); });

  auto* encode_cmd = app.add_subcommand("encode", "Quantize a ranking onto a code's pools");
  std::string composition_text;
  std::vector<std::string> encode_values;
  encode_cmd->add_option("-c,--composition", composition_text, "Pool sizes, e.g. 2,2")
      ->required();
  encode_cmd
      ->add_option("values", encode_values,
                   "Source values to rank, or element labels in ascending order")
      ->required();
  encode_cmd->fallthrough();
  encode_cmd->callback([&] { rc = cmd_encode(composition_text, encode_values, cfg); });

  auto* refine_cmd =
      app.add_subcommand("refine", "Verify a refinement chain loses no rate");
  std::string chain_path;
  refine_cmd->add_option("chain", chain_path, "Chain JSON")->required();
  refine_cmd->fallthrough();
  refine_cmd->callback([&] { rc = cmd_refine(chain_path, cfg); });

  auto* repro_cmd =
      app.add_subcommand("reproduce-paper", "Run every built-in reference check");
  std::string table1_path;
  repro_cmd->add_option("--table1", table1_path,
                        "Override the built-in code table fixture");
  repro_cmd->fallthrough();
  repro_cmd->callback([&] { rc = cmd_reproduce_paper(table1_path, cfg); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ilat::CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ilat::InfeasibleError& e) {
    std::cerr << "error: " << e.what() << " (residual " << e.residual << ")\n";
    return 4;
  } catch (const ilat::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
