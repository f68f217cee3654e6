#include <doctest.h>

#include <algorithm>
#include <vector>

#include "ilat/errors.hpp"
#include "ilat/partition.hpp"
#include "test_support.hpp"

using namespace ilat;
using ilat::testing::all_partitions;
using ilat::testing::oracle_join;
using ilat::testing::oracle_meet;
using ilat::testing::oracle_refines;

namespace {

GroundSetPtr quartet() { return GroundSet::make({"α", "β", "γ", "ζ"}); }

}  // namespace

TEST_CASE("ground set rejects malformed labels") {
  CHECK_THROWS_AS(GroundSet({"a", "a"}), InvalidInputError);
  CHECK_THROWS_AS(GroundSet({""}), InvalidInputError);
  CHECK_THROWS_AS(GroundSet({"a{b"}), InvalidInputError);
  CHECK_THROWS_AS(GroundSet({"a,b"}), InvalidInputError);
  CHECK_THROWS_AS(GroundSet({" a"}), InvalidInputError);
  CHECK_THROWS_AS(GroundSet({"a "}), InvalidInputError);
}

TEST_CASE("ground set indexing") {
  const auto g = quartet();
  CHECK(g->size() == 4);
  CHECK(g->label(2) == "γ");
  CHECK(g->index_of("ζ") == 3);
  CHECK_FALSE(g->index_of("η").has_value());
  CHECK_THROWS_AS(g->require_index("η"), InvalidInputError);
  const auto x = GroundSet::indexed(3);
  CHECK(x->labels() == std::vector<std::string>{"x0", "x1", "x2"});
}

TEST_CASE("partition construction canonicalizes block order") {
  const auto g = GroundSet::make({"a", "b", "c"});
  const Partition p(g, {{2}, {0, 1}});
  CHECK(p.blocks() == std::vector<std::vector<std::size_t>>{{0, 1}, {2}});
  CHECK(p.block_ids() == std::vector<std::size_t>{0, 0, 1});
  CHECK(p.block_of(2) == 1);
  const std::vector<std::size_t> scattered{7, 7, 3};
  CHECK(Partition::from_block_ids(g, scattered) == p);
}

TEST_CASE("partition construction validates the block family") {
  using Blocks = std::vector<std::vector<std::size_t>>;
  const auto g = GroundSet::make({"a", "b", "c"});
  CHECK_THROWS_AS(Partition(g, Blocks{{0, 1}}), InvalidInputError);          // misses c
  CHECK_THROWS_AS(Partition(g, Blocks{{0, 1}, {1, 2}}), InvalidInputError);  // overlap
  CHECK_THROWS_AS(Partition(g, Blocks{{0, 1, 2}, {}}), InvalidInputError);   // empty block
  CHECK_THROWS_AS(Partition(g, Blocks{{0, 1, 2, 3}}), InvalidInputError);    // range
}

TEST_CASE("finest and coarsest partitions") {
  const auto g = quartet();
  CHECK(Partition::finest(g).block_count() == 4);
  CHECK(Partition::coarsest(g).block_count() == 1);
  CHECK(refines(Partition::finest(g), Partition::coarsest(g)));
  CHECK_FALSE(refines(Partition::coarsest(g), Partition::finest(g)));
}

TEST_CASE("refinement agrees with the pair definition on every quartet pair") {
  const auto all = all_partitions(quartet());
  REQUIRE(all.size() == 15);
  for (const auto& p : all)
    for (const auto& q : all) CHECK(refines(p, q) == oracle_refines(p, q));
}

TEST_CASE("meet and join agree with enumeration oracles") {
  for (std::size_t n : {4u, 5u}) {
    const auto g = GroundSet::indexed(n);
    const auto all = all_partitions(g);
    REQUIRE(all.size() == (n == 4 ? 15u : 52u));
    for (const auto& p : all)
      for (const auto& q : all) {
        const Partition* m = oracle_meet(p, q, all);
        const Partition* j = oracle_join(p, q, all);
        REQUIRE(m != nullptr);
        REQUIRE(j != nullptr);
        CHECK(meet(p, q) == *m);
        CHECK(join(p, q) == *j);
      }
  }
}

TEST_CASE("lattice difference on quartet landmarks") {
  const auto g = quartet();
  const Partition p(g, {{0, 1}, {2, 3}});
  const Partition r(g, {{0, 2}, {1, 3}});
  CHECK(delta_L(p, r) == 3);
  CHECK(delta_L(p, Partition::finest(g)) == 2);
  CHECK(delta_L(p, Partition::coarsest(g)) == 1);
  CHECK(delta_L(p, p) == 0);
}

TEST_CASE("lattice difference vanishes exactly on equal pairs and is symmetric") {
  const auto all = all_partitions(quartet());
  for (const auto& p : all)
    for (const auto& q : all) {
      CHECK(delta_L(p, q) == delta_L(q, p));
      CHECK((delta_L(p, q) == 0) == (p == q));
    }
}

TEST_CASE("lattice difference is not a metric: crossing pairs break the triangle") {
  // Two transversal pairings meet at the finest and join at the coarsest
  // partition, so their difference is n - 1 while each is one step from
  // the coarsest partition. This is a fact about the quantity itself.
  const auto g = quartet();
  const Partition p(g, {{0, 1}, {2, 3}});
  const Partition r(g, {{0, 2}, {1, 3}});
  const Partition q = Partition::coarsest(g);
  CHECK(delta_L(p, r) == 3);
  CHECK(delta_L(p, q) + delta_L(q, r) == 2);
  CHECK(delta_L(p, r) > delta_L(p, q) + delta_L(q, r));
}

TEST_CASE("brace notation round trips every quartet partition") {
  const auto g = quartet();
  for (const auto& p : all_partitions(g)) {
    const std::string text = to_string(p);
    CHECK(parse_partition(g, text) == p);
  }
  CHECK(to_string(Partition(g, {{0, 1}, {2, 3}})) == "{{α,β},{γ,ζ}}");
}

TEST_CASE("brace parser rejects malformed text") {
  const auto g = quartet();
  CHECK_THROWS_AS(parse_partition(g, ""), InvalidInputError);
  CHECK_THROWS_AS(parse_partition(g, "{{α,β}"), InvalidInputError);
  CHECK_THROWS_AS(parse_partition(g, "{{α,β},{γ}}"), InvalidInputError);   // misses ζ
  CHECK_THROWS_AS(parse_partition(g, "{{α,η},{β,γ,ζ}}"), InvalidInputError);
  CHECK_THROWS_AS(parse_partition(g, "{{α,β},{γ,ζ}}x"), InvalidInputError);
}

TEST_CASE("canonical node order puts the finest first and the coarsest last") {
  const auto g = quartet();
  auto all = all_partitions(g);
  std::sort(all.begin(), all.end(), canonical_less);
  CHECK(all.front() == Partition::finest(g));
  CHECK(all.back() == Partition::coarsest(g));
  for (std::size_t i = 0; i + 1 < all.size(); ++i) {
    CHECK(canonical_less(all[i], all[i + 1]));
    CHECK_FALSE(canonical_less(all[i + 1], all[i]));
  }
}

TEST_CASE("feature maps induce label-preimage partitions") {
  const auto g = GroundSet::make({"p1", "p2", "p3", "p4"});
  const FeatureMap color("color", g, {"red", "blue", "red", "blue"});
  const Partition by_color = from_feature(color);
  CHECK(by_color == Partition(g, {{0, 2}, {1, 3}}));

  const FeatureMap gappy("color", g,
                         {std::optional<std::string>{"red"}, std::nullopt,
                          std::optional<std::string>{"red"}, std::optional<std::string>{"blue"}});
  CHECK_THROWS_AS(from_feature(gappy), InvalidInputError);
}

TEST_CASE("cross-ground operations are rejected") {
  const auto g = quartet();
  const auto h = GroundSet::make({"a", "b", "c", "d"});
  CHECK_THROWS_AS(meet(Partition::finest(g), Partition::finest(h)), InvalidInputError);
  CHECK_THROWS_AS(join(Partition::finest(g), Partition::finest(h)), InvalidInputError);
  CHECK_THROWS_AS(refines(Partition::finest(g), Partition::finest(h)), InvalidInputError);
}
