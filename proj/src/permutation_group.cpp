#include "ilat/permutation_group.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <unordered_set>

#include "dot_util.hpp"
#include "subset_names.hpp"
#include "union_find.hpp"

namespace ilat {

namespace {

constexpr std::size_t kMaxGenerateDegree = 12;
constexpr std::size_t kMaxLatticeDegree = 8;

/// 4 bits per image; valid for degree <= 12 (hence kMaxGenerateDegree).
std::uint64_t pack(const std::vector<std::size_t>& images) {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < images.size(); ++i)
    key |= static_cast<std::uint64_t>(images[i]) << (4 * i);
  return key;
}

/// Closure of the given permutations under composition, sorted. The
/// inputs must contain their own inverses (true for transpositions and
/// for whole subgroups), so breadth-first left multiplication from the
/// identity reaches exactly the generated subgroup.
std::vector<Permutation> close_elements(std::size_t n, const std::vector<Permutation>& gens) {
  std::vector<std::vector<std::size_t>> g;
  g.reserve(gens.size());
  for (const Permutation& p : gens) {
    if (p.degree() != n) throw InvalidInputError("subgroup closure: degree mismatch");
    g.push_back(p.images());
  }
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());

  std::vector<std::size_t> identity(n);
  std::iota(identity.begin(), identity.end(), std::size_t{0});
  std::vector<std::vector<std::size_t>> all{identity};
  std::vector<std::vector<std::size_t>> frontier{identity};
  std::unordered_set<std::uint64_t> seen{pack(identity)};

  std::vector<std::size_t> product(n);
  while (!frontier.empty()) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& p : frontier) {
      for (const auto& gen : g) {
        for (std::size_t i = 0; i < n; ++i) product[i] = gen[p[i]];
        if (seen.insert(pack(product)).second) {
          all.push_back(product);
          next.push_back(product);
        }
      }
    }
    frontier = std::move(next);
  }

  std::sort(all.begin(), all.end());
  std::vector<Permutation> out;
  out.reserve(all.size());
  for (auto& images : all) out.emplace_back(std::move(images));
  return out;
}

Partition orbit_partition_of(const GroundSetPtr& ground,
                             const std::vector<Permutation>& perms) {
  const std::size_t n = ground->size();
  detail::UnionFind uf(n);
  for (const Permutation& p : perms) {
    for (std::size_t i = 0; i < n; ++i) uf.unite(i, p.apply(i));
  }
  std::vector<std::size_t> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = uf.find(i);
  return Partition::from_block_ids(ground, ids);
}

}  // namespace

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t v : images_) {
    if (v >= images_.size() || seen[v])
      throw InvalidInputError("permutation: images are not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{0});
  return Permutation(std::move(images));
}

Permutation Permutation::adjacent_transposition(std::size_t n, std::size_t boundary) {
  if (boundary + 1 >= n)
    throw InvalidInputError("adjacent transposition: boundary " + std::to_string(boundary) +
                            " out of range for degree " + std::to_string(n));
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{0});
  std::swap(images[boundary], images[boundary + 1]);
  return Permutation(std::move(images));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw InvalidInputError("permutation product: degree mismatch");
  std::vector<std::size_t> images(a.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = a.apply(b.apply(i));
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> images(degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[images_[i]] = i;
  return Permutation(std::move(images));
}

SubgroupNode generate(const AdjacentTranspositionSet& s) {
  if (!s.ground) throw InvalidInputError("generate: null ground set");
  const std::size_t n = s.ground->size();
  if (n > kMaxGenerateDegree)
    throw CapacityError("generate: ground set larger than " +
                            std::to_string(kMaxGenerateDegree) + " elements",
                        n);
  if (n >= 1 && (s.included >> (n - 1)) != 0)
    throw InvalidInputError("generate: generator mask names a missing boundary");

  std::vector<Permutation> gens;
  for (std::size_t b = 0; b + 1 < n; ++b) {
    if (s.included & (std::uint32_t{1} << b))
      gens.push_back(Permutation::adjacent_transposition(n, b));
  }
  std::vector<Permutation> elements = close_elements(n, gens);
  Partition orbits = orbit_partition_of(s.ground, elements);
  return SubgroupNode{s.included, std::move(elements), std::move(orbits)};
}

SubgroupLattice::SubgroupLattice(GroundSetPtr ground) : ground_(std::move(ground)) {
  if (!ground_) throw InvalidInputError("subgroup lattice: null ground set");
  const std::size_t n = ground_->size();
  if (n > kMaxLatticeDegree)
    throw CapacityError("subgroup lattice: ground set larger than " +
                            std::to_string(kMaxLatticeDegree) + " elements",
                        n);
  const std::uint32_t count = n <= 1 ? 1 : (std::uint32_t{1} << (n - 1));
  nodes_.reserve(count);
  for (std::uint32_t mask = 0; mask < count; ++mask)
    nodes_.push_back(generate(AdjacentTranspositionSet{ground_, mask}));
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    for (std::size_t b = 0; b + 1 < n; ++b) {
      if (!(mask & (std::uint32_t{1} << b)))
        edges_.emplace_back(mask, mask | (std::uint32_t{1} << b));
    }
  }
}

SubgroupLattice subgroup_lattice(GroundSetPtr ground) {
  return SubgroupLattice(std::move(ground));
}

CorrespondenceReport verify_correspondence(GroundSetPtr ground) {
  const SubgroupLattice lattice(ground);
  const std::size_t n = ground->size();
  const auto& nodes = lattice.nodes();
  CorrespondenceReport report;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i; j < nodes.size(); ++j) {
      ++report.pairs_checked;
      const SubgroupNode& g = nodes[i];
      const SubgroupNode& h = nodes[j];
      const std::string pair_name =
          generator_set_name(g.generator_mask, n) + " vs " +
          generator_set_name(h.generator_mask, n);

      std::vector<Permutation> union_gens = g.elements;
      union_gens.insert(union_gens.end(), h.elements.begin(), h.elements.end());
      const Partition union_orbits =
          orbit_partition_of(ground, close_elements(n, union_gens));
      if (union_orbits != join(g.orbit_partition, h.orbit_partition)) {
        report.pass = false;
        report.failures.push_back(pair_name + ": union-generated orbits differ from join");
      }

      std::vector<Permutation> common;
      std::set_intersection(g.elements.begin(), g.elements.end(), h.elements.begin(),
                            h.elements.end(), std::back_inserter(common));
      const Partition common_orbits = orbit_partition_of(ground, common);
      if (common_orbits != meet(g.orbit_partition, h.orbit_partition)) {
        report.pass = false;
        report.failures.push_back(pair_name + ": intersection orbits differ from meet");
      }
    }
  }
  return report;
}

bool orbit_map_is_poset_isomorphism(const SubgroupLattice& lattice, std::string* detail) {
  const std::size_t n = lattice.ground().size();
  const auto& nodes = lattice.nodes();
  const auto fail = [&](const std::string& msg) {
    if (detail) *detail = msg;
    return false;
  };

  for (const SubgroupNode& node : nodes) {
    detail::UnionFind uf(n);
    for (std::size_t b = 0; b + 1 < n; ++b) {
      if (node.generator_mask & (std::uint32_t{1} << b)) uf.unite(b, b + 1);
    }
    std::vector<std::size_t> ids(n);
    for (std::size_t i = 0; i < n; ++i) ids[i] = uf.find(i);
    if (node.orbit_partition != Partition::from_block_ids(lattice.ground_ptr(), ids))
      return fail("orbits of " + generator_set_name(node.generator_mask, n) +
                  " are not the consecutive-run partition of the mask");
  }

  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      const bool subset =
          (nodes[i].generator_mask & ~nodes[j].generator_mask) == 0;
      const bool finer = refines(nodes[i].orbit_partition, nodes[j].orbit_partition);
      if (subset != finer)
        return fail("order mismatch between " +
                    generator_set_name(nodes[i].generator_mask, n) + " and " +
                    generator_set_name(nodes[j].generator_mask, n));
    }
  }

  if (detail) detail->clear();
  return true;
}

std::string generator_set_name(std::uint32_t mask, std::size_t n) {
  if (n == 4 && mask < 8) return std::string(1, detail::kFourItemLetters[mask]);
  if (mask == 0) return "O";
  if (n >= 1 && mask == (std::uint32_t{1} << (n - 1)) - 1) return "U";
  return detail::subset_spelling(mask, n);
}

std::string to_dot(const SubgroupLattice& lattice) {
  const std::size_t n = lattice.ground().size();
  std::string out = "digraph subgroup_lattice {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < lattice.nodes().size(); ++i) {
    const SubgroupNode& node = lattice.nodes()[i];
    out += "  n" + std::to_string(i) + " [label=\"" +
           detail::dot_escape(generator_set_name(node.generator_mask, n)) + "\\n" +
           detail::dot_escape(to_string(node.orbit_partition)) + "\"];\n";
  }
  for (const auto& [u, v] : lattice.hasse_edges()) {
    out += "  n" + std::to_string(u) + " -> n" + std::to_string(v) + ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace ilat
