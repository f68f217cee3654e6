#include "ilat/order.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "union_find.hpp"

namespace ilat {

TotalOrder::TotalOrder(GroundSetPtr ground, std::vector<std::size_t> ascending)
    : ground_(std::move(ground)), sequence_(std::move(ascending)) {
  if (!ground_) throw InvalidInputError("total order: null ground set");
  const std::size_t n = ground_->size();
  if (sequence_.size() != n)
    throw InvalidInputError("total order: sequence must list every element once");
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  position_.assign(n, kUnset);
  for (std::size_t rank = 0; rank < n; ++rank) {
    const std::size_t e = sequence_[rank];
    if (e >= n || position_[e] != kUnset)
      throw InvalidInputError("total order: sequence is not a permutation of the ground set");
    position_[e] = rank;
  }
}

TotalOrder TotalOrder::canonical(GroundSetPtr ground) {
  if (!ground) throw InvalidInputError("total order: null ground set");
  std::vector<std::size_t> seq(ground->size());
  std::iota(seq.begin(), seq.end(), std::size_t{0});
  return TotalOrder(std::move(ground), std::move(seq));
}

std::size_t ComparabilityVector::ones() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

PartialOrder::PartialOrder(GroundSetPtr ground,
                           const std::vector<std::pair<std::size_t, std::size_t>>& relations)
    : ground_(std::move(ground)) {
  if (!ground_) throw InvalidInputError("partial order: null ground set");
  const std::size_t n = ground_->size();
  le_.assign(n, std::vector<bool>(n, false));
  for (const auto& [a, b] : relations) {
    if (a >= n || b >= n)
      throw InvalidInputError("partial order: element index out of range");
    if (a != b) le_[a][b] = true;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!le_[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (le_[k][j] && i != j) le_[i][j] = true;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (le_[i][j] && le_[j][i])
        throw InvalidInputError("partial order: cycle between '" + ground_->label(i) +
                                "' and '" + ground_->label(j) + "'");
    }
  }
}

PartialOrder PartialOrder::from_labels(
    GroundSetPtr ground, const std::vector<std::pair<std::string, std::string>>& relations) {
  if (!ground) throw InvalidInputError("partial order: null ground set");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(relations.size());
  for (const auto& [a, b] : relations)
    pairs.emplace_back(ground->require_index(a), ground->require_index(b));
  return PartialOrder(std::move(ground), pairs);
}

PartialOrder PartialOrder::empty(GroundSetPtr ground) {
  return PartialOrder(std::move(ground), {});
}

PartialOrder PartialOrder::of_total(const TotalOrder& k) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  const auto& seq = k.sequence();
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) pairs.emplace_back(seq[i], seq[i + 1]);
  return PartialOrder(k.ground_ptr(), pairs);
}

std::vector<std::pair<std::size_t, std::size_t>> PartialOrder::relation_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < le_.size(); ++a) {
    for (std::size_t b = 0; b < le_.size(); ++b) {
      if (le_[a][b]) out.emplace_back(a, b);
    }
  }
  return out;
}

std::optional<ComparabilityVector> comparability_vector(const PartialOrder& j,
                                                        const TotalOrder& k) {
  require_same_ground(j.ground(), k.ground(), "comparability vector");
  const std::size_t n = k.ground().size();
  for (const auto& [a, b] : j.relation_pairs()) {
    if (k.position_of(a) > k.position_of(b)) return std::nullopt;
  }
  const auto& seq = k.sequence();
  std::vector<bool> bits(n - 1, false);
  for (std::size_t i = 0; i + 1 < n; ++i) bits[i] = j.relates(seq[i], seq[i + 1]);
  return ComparabilityVector(std::move(bits));
}

double Distortion::value() const {
  return infinite_ ? std::numeric_limits<double>::infinity() : value_.value();
}

Distortion distortion(const PartialOrder& j, const TotalOrder& k) {
  const auto v = comparability_vector(j, k);
  if (!v) return Distortion::infinite();
  const std::size_t n = k.ground().size();
  if (n <= 1) return Distortion::finite(Rational(0, 1));
  return Distortion::finite(Rational(static_cast<std::int64_t>(v->zeros()),
                                     static_cast<std::int64_t>(n - 1)));
}

Partition comparability_to_partition(const ComparabilityVector& v, const TotalOrder& k) {
  const std::size_t n = k.ground().size();
  if (v.length() + 1 != n)
    throw InvalidInputError("comparability vector: length must be ground size minus one");
  detail::UnionFind uf(n);
  const auto& seq = k.sequence();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!v.bit(i)) uf.unite(seq[i], seq[i + 1]);
  }
  std::vector<std::size_t> ids(n);
  for (std::size_t e = 0; e < n; ++e) ids[e] = uf.find(e);
  return Partition::from_block_ids(k.ground_ptr(), ids);
}

Partition comparability_to_partition(const ComparabilityVector& v, GroundSetPtr ground) {
  return comparability_to_partition(v, TotalOrder::canonical(std::move(ground)));
}

}  // namespace ilat
