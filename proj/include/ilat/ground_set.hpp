#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ilat/errors.hpp"

namespace ilat {

/// An ordered finite sample space of opaque element labels.
///
/// Element order is fixed at construction and defines the canonical
/// indexing 0..n-1 used everywhere else. Labels must be distinct,
/// nonempty, and free of '{', '}', ',' and surrounding whitespace so the
/// brace notation for partitions stays parsable.
class GroundSet {
 public:
  explicit GroundSet(std::vector<std::string> elements);

  static std::shared_ptr<const GroundSet> make(std::vector<std::string> elements) {
    return std::make_shared<const GroundSet>(std::move(elements));
  }

  /// n elements named prefix0, prefix1, ...
  static std::shared_ptr<const GroundSet> indexed(std::size_t n, const std::string& prefix = "x");

  std::size_t size() const { return elements_.size(); }
  const std::string& label(std::size_t i) const { return elements_[i]; }
  const std::vector<std::string>& labels() const { return elements_; }

  std::optional<std::size_t> index_of(std::string_view label) const;

  /// index_of, but throws InvalidInputError for unknown labels.
  std::size_t require_index(std::string_view label) const;

  bool operator==(const GroundSet& other) const { return elements_ == other.elements_; }
  bool operator!=(const GroundSet& other) const { return !(*this == other); }

 private:
  std::vector<std::string> elements_;
  std::unordered_map<std::string, std::size_t> index_;
};

using GroundSetPtr = std::shared_ptr<const GroundSet>;

/// Throws InvalidInputError unless both objects live on equal ground sets.
void require_same_ground(const GroundSet& a, const GroundSet& b, const char* operation);

}  // namespace ilat
