#include "ilat/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <unordered_map>

#include "union_find.hpp"

namespace ilat {

namespace {

bool valid_label(const std::string& label) {
  if (label.empty()) return false;
  for (char c : label) {
    if (c == '{' || c == '}' || c == ',') return false;
  }
  const auto space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  return !space(label.front()) && !space(label.back());
}

const GroundSetPtr& require_ground(const GroundSetPtr& g) {
  if (!g) throw InvalidInputError("partition: null ground set");
  return g;
}

/// Relabels arbitrary block ids into first-occurrence order, yielding the
/// canonical restricted growth string.
std::vector<std::size_t> canonical_ids(std::span<const std::size_t> raw) {
  std::unordered_map<std::size_t, std::size_t> relabel;
  std::vector<std::size_t> out;
  out.reserve(raw.size());
  for (std::size_t id : raw) {
    const auto [it, inserted] = relabel.emplace(id, relabel.size());
    out.push_back(it->second);
  }
  return out;
}

std::vector<std::vector<std::size_t>> blocks_from_ids(const std::vector<std::size_t>& ids) {
  std::size_t count = 0;
  for (std::size_t id : ids) count = std::max(count, id + 1);
  std::vector<std::vector<std::size_t>> blocks(count);
  for (std::size_t e = 0; e < ids.size(); ++e) blocks[ids[e]].push_back(e);
  return blocks;
}

std::vector<std::size_t> checked_raw_ids(const GroundSetPtr& ground,
                                         const std::vector<std::vector<std::size_t>>& blocks) {
  const std::size_t n = require_ground(ground)->size();
  if (blocks.empty()) throw InvalidInputError("partition: no blocks");
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> ids(n, kUnassigned);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw InvalidInputError("partition: empty block");
    for (std::size_t e : blocks[b]) {
      if (e >= n) throw InvalidInputError("partition: element index out of range");
      if (ids[e] != kUnassigned)
        throw InvalidInputError("partition: element in two blocks: " + ground->label(e));
      ids[e] = b;
    }
  }
  for (std::size_t e = 0; e < n; ++e) {
    if (ids[e] == kUnassigned)
      throw InvalidInputError("partition: element not covered: " + ground->label(e));
  }
  return ids;
}

}  // namespace

GroundSet::GroundSet(std::vector<std::string> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw InvalidInputError("ground set: no elements");
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (!valid_label(elements_[i]))
      throw InvalidInputError("ground set: bad label '" + elements_[i] + "'");
    if (!index_.emplace(elements_[i], i).second)
      throw InvalidInputError("ground set: duplicate label '" + elements_[i] + "'");
  }
}

GroundSetPtr GroundSet::indexed(std::size_t n, const std::string& prefix) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
  return make(std::move(labels));
}

std::optional<std::size_t> GroundSet::index_of(std::string_view label) const {
  const auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t GroundSet::require_index(std::string_view label) const {
  const auto idx = index_of(label);
  if (!idx) throw InvalidInputError("unknown element '" + std::string(label) + "'");
  return *idx;
}

void require_same_ground(const GroundSet& a, const GroundSet& b, const char* operation) {
  if (!(a == b)) throw InvalidInputError(std::string(operation) + ": ground sets differ");
}

Partition::Partition(GroundSetPtr ground, std::vector<std::size_t> ids)
    : ground_(std::move(ground)),
      block_ids_(std::move(ids)),
      blocks_(blocks_from_ids(block_ids_)) {}

Partition::Partition(GroundSetPtr ground, const std::vector<std::vector<std::size_t>>& blocks)
    : Partition(ground, canonical_ids(checked_raw_ids(ground, blocks))) {}

Partition Partition::from_block_ids(GroundSetPtr ground, std::span<const std::size_t> ids) {
  if (ids.size() != require_ground(ground)->size())
    throw InvalidInputError("partition: one block id per element required");
  return Partition(std::move(ground), canonical_ids(ids));
}

Partition Partition::finest(GroundSetPtr ground) {
  std::vector<std::size_t> ids(require_ground(ground)->size());
  std::iota(ids.begin(), ids.end(), std::size_t{0});
  return Partition(std::move(ground), std::move(ids));
}

Partition Partition::coarsest(GroundSetPtr ground) {
  std::vector<std::size_t> ids(require_ground(ground)->size(), 0);
  return Partition(std::move(ground), std::move(ids));
}

FeatureMap::FeatureMap(std::string name, GroundSetPtr ground,
                       std::vector<std::optional<std::string>> labels)
    : name_(std::move(name)), ground_(std::move(ground)), labels_(std::move(labels)) {
  if (!ground_) throw InvalidInputError("feature map: null ground set");
  if (labels_.size() != ground_->size())
    throw InvalidInputError("feature map '" + name_ + "': one label slot per element required");
}

Partition from_feature(const FeatureMap& f) {
  const std::size_t n = f.ground().size();
  std::unordered_map<std::string, std::size_t> seen;
  std::vector<std::size_t> ids(n);
  for (std::size_t e = 0; e < n; ++e) {
    const auto& label = f.label_for(e);
    if (!label)
      throw InvalidInputError("feature map '" + f.name() + "': element '" +
                              f.ground().label(e) + "' is unlabeled");
    const auto [it, inserted] = seen.emplace(*label, seen.size());
    ids[e] = it->second;
  }
  return Partition::from_block_ids(f.ground_ptr(), ids);
}

bool refines(const Partition& p, const Partition& q) {
  require_same_ground(p.ground(), q.ground(), "refines");
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> image(p.block_count(), kUnset);
  for (std::size_t e = 0; e < p.ground().size(); ++e) {
    const std::size_t pb = p.block_of(e);
    const std::size_t qb = q.block_of(e);
    if (image[pb] == kUnset) {
      image[pb] = qb;
    } else if (image[pb] != qb) {
      return false;
    }
  }
  return true;
}

Partition meet(const Partition& p, const Partition& q) {
  require_same_ground(p.ground(), q.ground(), "meet");
  const std::size_t n = p.ground().size();
  std::vector<std::size_t> ids(n);
  for (std::size_t e = 0; e < n; ++e)
    ids[e] = p.block_of(e) * q.block_count() + q.block_of(e);
  return Partition::from_block_ids(p.ground_ptr(), ids);
}

Partition join(const Partition& p, const Partition& q) {
  require_same_ground(p.ground(), q.ground(), "join");
  const std::size_t n = p.ground().size();
  detail::UnionFind uf(n);
  for (const auto& part : {std::cref(p), std::cref(q)}) {
    for (const auto& block : part.get().blocks()) {
      for (std::size_t i = 1; i < block.size(); ++i) uf.unite(block[0], block[i]);
    }
  }
  std::vector<std::size_t> ids(n);
  for (std::size_t e = 0; e < n; ++e) ids[e] = uf.find(e);
  return Partition::from_block_ids(p.ground_ptr(), ids);
}

std::size_t delta_L(const Partition& p, const Partition& q) {
  return meet(p, q).block_count() - join(p, q).block_count();
}

std::string to_string(const Partition& p) {
  std::string out = "{";
  for (std::size_t b = 0; b < p.block_count(); ++b) {
    if (b > 0) out += ",";
    out += "{";
    const auto& block = p.blocks()[b];
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i > 0) out += ",";
      out += p.ground().label(block[i]);
    }
    out += "}";
  }
  out += "}";
  return out;
}

Partition parse_partition(GroundSetPtr ground, std::string_view text) {
  require_ground(ground);
  std::size_t pos = 0;
  const auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  const auto peek = [&]() -> int {
    skip();
    return pos < text.size() ? static_cast<unsigned char>(text[pos]) : -1;
  };
  const auto expect = [&](char c) {
    if (peek() != c)
      throw InvalidInputError("partition parse: expected '" + std::string(1, c) +
                              "' at offset " + std::to_string(pos));
    ++pos;
  };
  const auto take_label = [&]() -> std::string {
    skip();
    const std::size_t start = pos;
    while (pos < text.size() && text[pos] != ',' && text[pos] != '{' && text[pos] != '}') ++pos;
    std::string s(text.substr(start, pos - start));
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    if (s.empty()) throw InvalidInputError("partition parse: empty label at offset " +
                                           std::to_string(start));
    return s;
  };

  std::vector<std::vector<std::size_t>> blocks;
  expect('{');
  if (peek() == '}') {
    ++pos;
  } else {
    while (true) {
      expect('{');
      std::vector<std::size_t> block;
      while (true) {
        block.push_back(ground->require_index(take_label()));
        if (peek() != ',') break;
        ++pos;
      }
      expect('}');
      blocks.push_back(std::move(block));
      if (peek() != ',') break;
      ++pos;
    }
    expect('}');
  }
  skip();
  if (pos != text.size())
    throw InvalidInputError("partition parse: trailing characters at offset " +
                            std::to_string(pos));
  return Partition(std::move(ground), blocks);
}

bool canonical_less(const Partition& a, const Partition& b) {
  if (a.block_count() != b.block_count()) return a.block_count() > b.block_count();
  return a.block_ids() < b.block_ids();
}

}  // namespace ilat
