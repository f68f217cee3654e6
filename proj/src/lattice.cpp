#include "ilat/lattice.hpp"

#include <algorithm>

#include "dot_util.hpp"
#include "ilat/errors.hpp"

namespace ilat {

PartitionLattice::PartitionLattice(GroundSetPtr ground, std::vector<Partition> nodes)
    : ground_(std::move(ground)), nodes_(std::move(nodes)) {
  const std::size_t count = nodes_.size();
  std::vector<std::vector<bool>> finer(count, std::vector<bool>(count, false));
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      if (i != j) finer[i][j] = refines(nodes_[i], nodes_[j]);
    }
  }
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      if (!finer[i][j]) continue;
      bool cover = true;
      for (std::size_t k = 0; k < count && cover; ++k) {
        if (finer[i][k] && finer[k][j]) cover = false;
      }
      if (cover) edges_.emplace_back(i, j);
    }
  }
}

PartitionLattice PartitionLattice::close(const std::vector<Partition>& generators,
                                         std::size_t max_nodes) {
  if (generators.empty()) throw InvalidInputError("lattice close: no generators");
  if (max_nodes < 2) throw InvalidInputError("lattice close: max_nodes must be at least 2");
  const GroundSetPtr ground = generators.front().ground_ptr();
  for (const Partition& g : generators)
    require_same_ground(*ground, g.ground(), "lattice close");

  std::vector<Partition> nodes;
  const auto add = [&](const Partition& p) {
    if (std::find(nodes.begin(), nodes.end(), p) != nodes.end()) return;
    if (nodes.size() >= max_nodes)
      throw CapacityError("lattice close: closure exceeds " + std::to_string(max_nodes) +
                              " nodes",
                          nodes.size());
    nodes.push_back(p);
  };

  add(Partition::finest(ground));
  add(Partition::coarsest(ground));
  for (const Partition& g : generators) add(g);

  // Pairing each node with every earlier one visits each unordered pair
  // exactly once; new nodes land at the back and get their turn later.
  for (std::size_t j = 1; j < nodes.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const Partition a = nodes[i];
      const Partition b = nodes[j];
      add(meet(a, b));
      add(join(a, b));
    }
  }

  std::sort(nodes.begin(), nodes.end(), canonical_less);
  return PartitionLattice(ground, std::move(nodes));
}

std::optional<std::size_t> PartitionLattice::index_of(const Partition& p) const {
  const auto it = std::find(nodes_.begin(), nodes_.end(), p);
  if (it == nodes_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - nodes_.begin());
}

bool PartitionLattice::has_path(std::size_t from, std::size_t to) const {
  if (from == to) return true;
  std::vector<bool> seen(nodes_.size(), false);
  std::vector<std::size_t> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    const std::size_t cur = stack.back();
    stack.pop_back();
    for (const auto& [u, v] : edges_) {
      if (u != cur || seen[v]) continue;
      if (v == to) return true;
      seen[v] = true;
      stack.push_back(v);
    }
  }
  return false;
}

std::string to_dot(const PartitionLattice& lattice) {
  std::string out = "digraph partition_lattice {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < lattice.nodes().size(); ++i) {
    out += "  n" + std::to_string(i) + " [label=" +
           detail::dot_quote(to_string(lattice.nodes()[i])) + "];\n";
  }
  for (const auto& [u, v] : lattice.cover_edges()) {
    out += "  n" + std::to_string(u) + " -> n" + std::to_string(v) + ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace ilat
