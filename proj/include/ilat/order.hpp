#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ilat/ground_set.hpp"
#include "ilat/partition.hpp"
#include "ilat/rational.hpp"

namespace ilat {

/// A total order over the ground set: the n elements listed ascending.
class TotalOrder {
 public:
  TotalOrder(GroundSetPtr ground, std::vector<std::size_t> ascending);

  /// Ground-set order itself.
  static TotalOrder canonical(GroundSetPtr ground);

  const GroundSet& ground() const { return *ground_; }
  const GroundSetPtr& ground_ptr() const { return ground_; }

  /// Element indices, smallest first.
  const std::vector<std::size_t>& sequence() const { return sequence_; }

  /// Rank of an element within the order (0 = smallest).
  std::size_t position_of(std::size_t element) const { return position_[element]; }

 private:
  GroundSetPtr ground_;
  std::vector<std::size_t> sequence_;
  std::vector<std::size_t> position_;
};

/// Binary vector of length n-1 recording which adjacent pairs of a
/// reference total order are resolved.
class ComparabilityVector {
 public:
  explicit ComparabilityVector(std::vector<bool> bits) : bits_(std::move(bits)) {}

  std::size_t length() const { return bits_.size(); }
  bool bit(std::size_t i) const { return bits_[i]; }
  const std::vector<bool>& bits() const { return bits_; }

  std::size_t ones() const;
  std::size_t zeros() const { return length() - ones(); }

  bool operator==(const ComparabilityVector& other) const { return bits_ == other.bits_; }

 private:
  std::vector<bool> bits_;
};

/// A partial order on the ground set, stored transitively closed.
/// Construction rejects 2-cycles (antisymmetry violations).
class PartialOrder {
 public:
  /// relations: stated (smaller, larger) index pairs; reflexivity is
  /// implicit and the transitive closure is applied here.
  PartialOrder(GroundSetPtr ground,
               const std::vector<std::pair<std::size_t, std::size_t>>& relations);

  static PartialOrder from_labels(
      GroundSetPtr ground,
      const std::vector<std::pair<std::string, std::string>>& relations);

  /// The void order with no stated relations.
  static PartialOrder empty(GroundSetPtr ground);

  /// All stated-or-implied pairs of a total order.
  static PartialOrder of_total(const TotalOrder& k);

  const GroundSet& ground() const { return *ground_; }
  const GroundSetPtr& ground_ptr() const { return ground_; }

  /// True iff a <= b holds (reflexive pairs included).
  bool relates(std::size_t a, std::size_t b) const { return a == b || le_[a][b]; }

  /// Non-reflexive closed pairs, lexicographically ordered.
  std::vector<std::pair<std::size_t, std::size_t>> relation_pairs() const;

 private:
  GroundSetPtr ground_;
  std::vector<std::vector<bool>> le_;  // strict part, closed
};

/// Encodes a partial order against a reference total order k: bit i is
/// set iff the i-th adjacent pair of k is related in j. Returns nullopt
/// when j relates some pair backwards relative to k (inconsistent).
std::optional<ComparabilityVector> comparability_vector(const PartialOrder& j,
                                                        const TotalOrder& k);

/// An exact fraction or infinity; infinity is a distinguished state, not
/// a float sentinel.
class Distortion {
 public:
  static Distortion infinite() { return Distortion(true, Rational()); }
  static Distortion finite(Rational r) { return Distortion(false, r); }

  bool is_infinite() const { return infinite_; }

  /// Exact value; only meaningful when finite.
  const Rational& rational() const { return value_; }

  /// Float view; +inf when infinite.
  double value() const;

  std::string str() const { return infinite_ ? "inf" : value_.str(); }

  bool operator==(const Distortion& other) const {
    return infinite_ == other.infinite_ && (infinite_ || value_ == other.value_);
  }

 private:
  Distortion(bool inf, Rational r) : infinite_(inf), value_(r) {}
  bool infinite_;
  Rational value_;
};

/// Normalized erasure count: (missing adjacent comparabilities)/(n-1) for
/// orders consistent with k, infinity otherwise. Zero for k itself; a
/// one-element ground set has nothing to resolve and scores zero.
Distortion distortion(const PartialOrder& j, const TotalOrder& k);

/// Run partition of a comparability vector along k: adjacent elements are
/// merged wherever the bit is unset.
Partition comparability_to_partition(const ComparabilityVector& v, const TotalOrder& k);

/// Same, with k taken as the ground-set order.
Partition comparability_to_partition(const ComparabilityVector& v, GroundSetPtr ground);

}  // namespace ilat
