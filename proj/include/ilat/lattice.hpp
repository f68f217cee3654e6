#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ilat/partition.hpp"

namespace ilat {

/// A finite family of partitions closed under meet and join, with its
/// Hasse (cover) structure. Nodes are stored in a deterministic order:
/// finest first, coarsest last (canonical_less).
class PartitionLattice {
 public:
  /// Smallest node set containing the generators plus the finest and
  /// coarsest partitions, closed under pairwise meet and join.
  ///
  /// Throws InvalidInputError for an empty generator set or mixed ground
  /// sets, CapacityError if the closure would exceed max_nodes.
  static PartitionLattice close(const std::vector<Partition>& generators,
                                std::size_t max_nodes = 4096);

  const GroundSet& ground() const { return *ground_; }
  const GroundSetPtr& ground_ptr() const { return ground_; }

  const std::vector<Partition>& nodes() const { return nodes_; }

  /// Cover edges of the refinement order, directed finer -> coarser.
  const std::vector<std::pair<std::size_t, std::size_t>>& cover_edges() const {
    return edges_;
  }

  /// Index of the finest node.
  std::size_t top() const { return 0; }

  /// Index of the coarsest node.
  std::size_t bottom() const { return nodes_.size() - 1; }

  std::optional<std::size_t> index_of(const Partition& p) const;

  /// True iff there is a directed cover path from node `from` to node `to`.
  bool has_path(std::size_t from, std::size_t to) const;

 private:
  PartitionLattice(GroundSetPtr ground, std::vector<Partition> nodes);

  GroundSetPtr ground_;
  std::vector<Partition> nodes_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

/// Graphviz digraph with one node per partition (canonical brace label)
/// and the Hasse edges directed finer -> coarser.
std::string to_dot(const PartitionLattice& lattice);

}  // namespace ilat
