#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ilat/ground_set.hpp"

namespace ilat {

/// A set partition of a ground set, kept in canonical form: blocks are
/// ordered by their minimum element index and elements are sorted within
/// blocks. Equality of partitions is equality of canonical forms.
///
/// Immutable after construction; safe to share across threads.
class Partition {
 public:
  /// Builds from explicit blocks of element indices. The blocks must be
  /// nonempty, pairwise disjoint, and cover the ground set.
  Partition(GroundSetPtr ground, const std::vector<std::vector<std::size_t>>& blocks);

  /// Builds from an arbitrary element -> block-id labeling (ids need not
  /// be contiguous or ordered; they are relabeled canonically).
  static Partition from_block_ids(GroundSetPtr ground, std::span<const std::size_t> ids);

  /// Every element in its own block.
  static Partition finest(GroundSetPtr ground);

  /// One block holding everything.
  static Partition coarsest(GroundSetPtr ground);

  const GroundSet& ground() const { return *ground_; }
  const GroundSetPtr& ground_ptr() const { return ground_; }

  std::size_t block_count() const { return blocks_.size(); }

  /// Canonical block id of an element (block 0 contains element 0).
  std::size_t block_of(std::size_t element) const { return block_ids_[element]; }

  /// Canonical id sequence over elements 0..n-1 (a restricted growth string).
  const std::vector<std::size_t>& block_ids() const { return block_ids_; }

  /// Blocks in canonical order, elements sorted within each block.
  const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }

  bool operator==(const Partition& other) const {
    return *ground_ == *other.ground_ && block_ids_ == other.block_ids_;
  }
  bool operator!=(const Partition& other) const { return !(*this == other); }

 private:
  Partition(GroundSetPtr ground, std::vector<std::size_t> canonical_ids);

  GroundSetPtr ground_;
  std::vector<std::size_t> block_ids_;
  std::vector<std::vector<std::size_t>> blocks_;
};

/// A named total labeling of the ground set. The induced partition has
/// one block per distinct label (the label preimages).
class FeatureMap {
 public:
  FeatureMap(std::string name, GroundSetPtr ground,
             std::vector<std::optional<std::string>> labels);

  const std::string& name() const { return name_; }
  const GroundSet& ground() const { return *ground_; }
  const GroundSetPtr& ground_ptr() const { return ground_; }
  const std::optional<std::string>& label_for(std::size_t element) const {
    return labels_[element];
  }

 private:
  std::string name_;
  GroundSetPtr ground_;
  std::vector<std::optional<std::string>> labels_;
};

/// Preimage partition of a labeling: two elements share a block iff they
/// share a label. Throws InvalidInputError if any element is unlabeled.
Partition from_feature(const FeatureMap& f);

/// True iff p is finer than or equal to q: every block of p is contained
/// in some block of q.
bool refines(const Partition& p, const Partition& q);

/// Coarsest common refinement: blocks are the nonempty pairwise
/// intersections of p-blocks and q-blocks.
Partition meet(const Partition& p, const Partition& q);

/// Finest common coarsening: blocks are the connected components of the
/// relation "co-blocked in p or in q".
Partition join(const Partition& p, const Partition& q);

/// Lattice distance |meet(p,q)| - |join(p,q)|. Zero iff p == q.
std::size_t delta_L(const Partition& p, const Partition& q);

/// Canonical brace notation, e.g. "{{a,b},{c}}".
std::string to_string(const Partition& p);

/// Parses the brace notation back into a partition over the given ground
/// set. Inverse of to_string for canonical output.
Partition parse_partition(GroundSetPtr ground, std::string_view text);

/// Deterministic ordering used for lattice nodes: more blocks first
/// (finest leads), ties broken lexicographically on the id sequence.
bool canonical_less(const Partition& a, const Partition& b);

}  // namespace ilat
