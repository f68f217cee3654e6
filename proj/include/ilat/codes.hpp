#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ilat/order.hpp"
#include "ilat/rational.hpp"

namespace ilat {

/// Enumerations over comparability subsets are exponential; this caps the
/// block length accepted by lattice_of_codes and friends.
inline constexpr std::size_t kMaxCodeBlockLength = 16;

/// Pool sizes (n1,...,nK) of a permutation code: within-pool items are
/// incomparable, pools are totally ordered.
class Composition {
 public:
  explicit Composition(std::vector<std::size_t> pool_sizes);

  std::size_t total() const { return total_; }
  std::size_t pool_count() const { return pools_.size(); }
  const std::vector<std::size_t>& pool_sizes() const { return pools_; }

  std::string str() const;  // "[2,1,1]"

  bool operator==(const Composition& other) const { return pools_ == other.pools_; }
  bool operator!=(const Composition& other) const { return !(*this == other); }

 private:
  std::vector<std::size_t> pools_;
  std::size_t total_ = 0;
};

/// Exact n! / (k1! * ... * kM!) for n <= 20 (fits in 64 bits).
std::uint64_t multinomial_coefficient(std::size_t n, std::span<const std::size_t> parts);

/// Codebook size of a code, kept exact alongside the bit view. Rate
/// equalities must be asserted on codeword_count, never on bits().
struct Rate {
  std::size_t block_length = 0;
  std::vector<std::size_t> denominator_pools;
  std::uint64_t codeword_count = 1;

  double bits() const;
};

/// log2(n! / prod pool!) with the exact integer kept.
Rate rate(const Composition& c);

/// Pools from a retained-comparability subset over boundaries 0..n-2:
/// consecutive positions stay pooled exactly where the boundary between
/// them is dropped.
Composition composition_of(std::uint32_t retained_mask, std::size_t n);

/// Inverse of composition_of.
std::uint32_t retained_mask_of(const Composition& c);

/// Result of quantizing a ranking to a composition: items in ranking
/// order, cut into pools.
struct PoolAssignment {
  Composition composition;
  std::vector<std::vector<std::size_t>> pools;  // element indices, ranking order
  Rational distortion;                          // (n - K)/(n - 1), 0 when n == 1
};

/// Assigns the first n1 ranked items to pool 1, the next n2 to pool 2,
/// and so on. Throws InvalidInputError on a block-length mismatch.
PoolAssignment encode(const TotalOrder& ranking, const Composition& c);

/// The partial order the assignment reproduces: pools comparable,
/// within-pool items incomparable.
PartialOrder reproduction_order(const PoolAssignment& assignment, GroundSetPtr ground);

struct CodeNode {
  std::uint32_t retained_mask;
  Composition composition;
  Rate code_rate;
  Rational node_distortion;  // dropped/(n-1)
};

/// All 2^(n-1) permutation codes for block length n, indexed by retained
/// mask (binary-counting order), with edges for single-comparability
/// additions. Nodes on a level share their distortion by construction.
class CodeLattice {
 public:
  explicit CodeLattice(std::size_t n);

  std::size_t block_length() const { return n_; }
  const std::vector<CodeNode>& nodes() const { return nodes_; }

  /// Directed retained-subset -> retained-superset; node index == mask.
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }

 private:
  std::size_t n_;
  std::vector<CodeNode> nodes_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

/// Throws CapacityError for n > 16.
CodeLattice lattice_of_codes(std::size_t n);

/// Lowest-rate code among those dropping exactly `dropped_level`
/// comparabilities (level 0 is lossless). Rate ties are broken toward the
/// lexicographically greatest pool-size list. Throws InvalidInputError
/// for levels outside 0..n-1.
Composition optimal_code(std::size_t n, std::size_t dropped_level);
std::uint32_t optimal_code_mask(std::size_t n, std::size_t dropped_level);

/// Classic one-letter node names for the four-item lattice
/// (O, A, B, C, D, E, F, U); nullopt for other block lengths.
std::optional<char> four_item_letter(std::uint32_t retained_mask, std::size_t n);

/// "{a,c}"-style spelling of a boundary subset ("{}" when empty).
std::string boundary_subset_str(std::uint32_t mask, std::size_t n);

/// Graphviz digraph of the code lattice.
std::string to_dot(const CodeLattice& lattice);

}  // namespace ilat
