#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ilat/partition.hpp"

namespace ilat {

/// A bijection on indices 0..n-1.
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> images);

  static Permutation identity(std::size_t n);

  /// Swap of positions i and i+1, identity elsewhere.
  static Permutation adjacent_transposition(std::size_t n, std::size_t boundary);

  std::size_t degree() const { return images_.size(); }
  std::size_t apply(std::size_t i) const { return images_[i]; }
  const std::vector<std::size_t>& images() const { return images_; }

  /// (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);

  Permutation inverse() const;

  bool operator==(const Permutation& other) const { return images_ == other.images_; }
  bool operator<(const Permutation& other) const { return images_ < other.images_; }

 private:
  std::vector<std::size_t> images_;
};

/// A subset of the n-1 adjacent transpositions of an ordered ground set,
/// identified by boundary index (bit i = transposition of positions i, i+1).
struct AdjacentTranspositionSet {
  GroundSetPtr ground;
  std::uint32_t included = 0;
};

/// A generated subgroup together with the partition of indices into its
/// orbits.
struct SubgroupNode {
  std::uint32_t generator_mask;
  std::vector<Permutation> elements;  // sorted, closed, contains identity
  Partition orbit_partition;
};

/// Closes the given adjacent transpositions into a subgroup by
/// breadth-first multiplication and computes its orbit partition.
/// Throws CapacityError when the ground set exceeds 12 elements.
SubgroupNode generate(const AdjacentTranspositionSet& s);

/// All 2^(n-1) subgroups generated by subsets of adjacent transpositions,
/// ordered by generator mask, with Hasse edges given by single-generator
/// additions. Throws CapacityError when n exceeds 8.
class SubgroupLattice {
 public:
  explicit SubgroupLattice(GroundSetPtr ground);

  const GroundSet& ground() const { return *ground_; }
  const GroundSetPtr& ground_ptr() const { return ground_; }

  /// Node index equals its generator mask.
  const std::vector<SubgroupNode>& nodes() const { return nodes_; }

  /// Directed smaller generator set -> larger (mirrors finer -> coarser
  /// on the orbit partitions).
  const std::vector<std::pair<std::size_t, std::size_t>>& hasse_edges() const {
    return edges_;
  }

 private:
  GroundSetPtr ground_;
  std::vector<SubgroupNode> nodes_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

SubgroupLattice subgroup_lattice(GroundSetPtr ground);

/// Pass/fail sweep over all node pairs of the subgroup lattice:
///   orbits(<G union H>) must equal join(orbits(G), orbits(H)),
///   orbits(G intersect H) must equal meet(orbits(G), orbits(H)).
/// The generated union is closed from the two element sets, not from the
/// generator masks, so the check is independent of the Young structure.
struct CorrespondenceReport {
  bool pass = true;
  std::size_t pairs_checked = 0;
  std::vector<std::string> failures;
};

CorrespondenceReport verify_correspondence(GroundSetPtr ground);

/// True iff mask -> orbit partition is injective, order-preserving in
/// both directions, and lands exactly on the consecutive-run partitions.
bool orbit_map_is_poset_isomorphism(const SubgroupLattice& lattice,
                                    std::string* detail = nullptr);

/// Node name used in exports: O for the empty generator set, U for the
/// full one, otherwise the classic single letters for n = 4 and a
/// "{a,c}"-style subset spelling in general.
std::string generator_set_name(std::uint32_t mask, std::size_t n);

/// Graphviz digraph of the subgroup lattice, nodes labeled by generator
/// subset name and orbit partition.
std::string to_dot(const SubgroupLattice& lattice);

}  // namespace ilat
