#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ilat/partition.hpp"

namespace ilat {

/// Weights sum to one within this slack (doubles throughout; weights are
/// IEEE doubles by declaration, not exact rationals).
inline constexpr double kMassTolerance = 1e-9;

/// A probability distribution over the elements of a ground set.
class ProbabilityMeasure {
 public:
  ProbabilityMeasure(GroundSetPtr ground, std::vector<double> weights);

  static ProbabilityMeasure uniform(GroundSetPtr ground);

  const GroundSet& ground() const { return *ground_; }
  const GroundSetPtr& ground_ptr() const { return ground_; }
  double weight(std::size_t element) const { return weights_[element]; }
  const std::vector<double>& weights() const { return weights_; }

 private:
  GroundSetPtr ground_;
  std::vector<double> weights_;
};

/// A coarser-grained summarizing signal: a distribution over the blocks
/// of a partition. Block weights are aligned with partition.blocks().
class Rule {
 public:
  Rule(Partition partition, std::vector<double> block_weights);

  const Partition& partition() const { return partition_; }
  const std::vector<double>& block_weights() const { return block_weights_; }

 private:
  Partition partition_;
  std::vector<double> block_weights_;
};

/// Pushes a measure down to a partition: each block weight is the sum of
/// its member-element weights.
Rule project(const ProbabilityMeasure& m, const Partition& p);

/// Re-expresses a rule on a coarser partition (r.partition must refine
/// coarser). Projection composes along the lattice through this.
Rule coarsen(const Rule& r, const Partition& coarser);

/// Shannon entropy of the block distribution, in bits. Zero-weight
/// blocks contribute nothing.
double entropy(const Rule& r);
double entropy(std::span<const double> weights);

/// Entropy distance H(p|q) + H(q|p) between two partitions under a
/// measure, in bits. Zero when p == q.
double rho(const Partition& p, const Partition& q, const ProbabilityMeasure& m);

/// Reconstructs the maximum-entropy measure whose projection onto each
/// rule's partition matches that rule's block weights within tolerance.
///
/// A single rule is solved in closed form (block mass split uniformly
/// within the block). Several rules are solved by iterative proportional
/// fitting from the uniform start. Throws InfeasibleError, carrying the
/// final residual, when no measure satisfies all marginals.
ProbabilityMeasure lift(std::span<const Rule> rules, double tolerance = 1e-9,
                        std::size_t max_iters = 10000);

}  // namespace ilat
