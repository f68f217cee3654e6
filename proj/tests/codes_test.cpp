#include <doctest.h>

#include <bit>
#include <cstdint>
#include <vector>

#include "ilat/codes.hpp"
#include "ilat/errors.hpp"
#include "test_support.hpp"

using namespace ilat;
using ilat::testing::looks_like_dot;

TEST_CASE("compositions validate their pool sizes") {
  CHECK_THROWS_AS(Composition({}), InvalidInputError);
  CHECK_THROWS_AS(Composition({2, 0, 1}), InvalidInputError);
  const Composition c({2, 1, 1});
  CHECK(c.total() == 4);
  CHECK(c.pool_count() == 3);
  CHECK(c.str() == "[2,1,1]");
}

TEST_CASE("multinomial coefficients are exact") {
  const std::vector<std::size_t> all_ones{1, 1, 1, 1};
  CHECK(multinomial_coefficient(4, all_ones) == 24);
  CHECK(multinomial_coefficient(4, std::vector<std::size_t>{2, 2}) == 6);
  CHECK(multinomial_coefficient(4, std::vector<std::size_t>{2, 1, 1}) == 12);
  CHECK(multinomial_coefficient(4, std::vector<std::size_t>{3, 1}) == 4);
  CHECK(multinomial_coefficient(4, std::vector<std::size_t>{4}) == 1);
  CHECK(multinomial_coefficient(20, std::vector<std::size_t>{10, 10}) == 184756);
  CHECK(multinomial_coefficient(20, std::vector<std::size_t>{20}) == 1);
  CHECK_THROWS_AS(multinomial_coefficient(21, std::vector<std::size_t>{21}),
                  CapacityError);
  CHECK_THROWS_AS(multinomial_coefficient(4, std::vector<std::size_t>{2, 1}),
                  InvalidInputError);
}

TEST_CASE("rates keep the exact codeword count beside the bit view") {
  const Rate full = rate(Composition({1, 1, 1, 1}));
  CHECK(full.codeword_count == 24);
  CHECK(full.bits() == doctest::Approx(4.584962500721156).epsilon(1e-12));
  const Rate trivial = rate(Composition({4}));
  CHECK(trivial.codeword_count == 1);
  CHECK(trivial.bits() == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(rate(Composition({17})).codeword_count == 1);
  CHECK_THROWS_AS(rate(Composition({21})), CapacityError);
}

TEST_CASE("retained boundary subsets spell the eight four-item codes") {
  using Pools = std::vector<std::size_t>;
  const std::vector<Pools> by_mask{{4},       {1, 3},    {2, 2},    {1, 1, 2},
                                   {3, 1},    {1, 2, 1}, {2, 1, 1}, {1, 1, 1, 1}};
  const char letters[] = "OABDCEFU";
  for (std::uint32_t mask = 0; mask < 8; ++mask) {
    const Composition c = composition_of(mask, 4);
    CHECK(c.pool_sizes() == by_mask[mask]);
    CHECK(retained_mask_of(c) == mask);
    REQUIRE(four_item_letter(mask, 4).has_value());
    CHECK(*four_item_letter(mask, 4) == letters[mask]);
  }
  CHECK_FALSE(four_item_letter(0, 5).has_value());
  CHECK_THROWS_AS(composition_of(8, 4), InvalidInputError);
}

TEST_CASE("mask and composition views are inverse for every block length") {
  for (std::size_t n = 1; n <= 8; ++n)
    for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
      const Composition c = composition_of(mask, n);
      CHECK(c.total() == n);
      CHECK(retained_mask_of(c) == mask);
      CHECK(c.pool_count() == static_cast<std::size_t>(std::popcount(mask)) + 1);
    }
}

TEST_CASE("four-item code lattice rates") {
  const CodeLattice lat = lattice_of_codes(4);
  REQUIRE(lat.nodes().size() == 8);
  CHECK(lat.edges().size() == 12);
  const std::vector<std::uint64_t> expected{1, 4, 6, 12, 4, 12, 12, 24};
  for (std::uint32_t mask = 0; mask < 8; ++mask) {
    CHECK(lat.nodes()[mask].retained_mask == mask);
    CHECK(lat.nodes()[mask].code_rate.codeword_count == expected[mask]);
  }
}

TEST_CASE("codeword totals across a lattice hit the ordered Bell numbers") {
  const std::vector<std::uint64_t> fubini{1, 1, 3, 13, 75, 541, 4683};
  for (std::size_t n = 1; n <= 6; ++n) {
    std::uint64_t total = 0;
    for (const auto& node : lattice_of_codes(n).nodes())
      total += node.code_rate.codeword_count;
    CHECK(total == fubini[n]);
  }
}

TEST_CASE("adding a comparability multiplies the codebook") {
  for (std::size_t n = 2; n <= 8; ++n) {
    const CodeLattice lat = lattice_of_codes(n);
    for (const auto& [u, v] : lat.edges()) {
      CHECK((u & v) == u);
      CHECK(std::popcount(static_cast<std::uint32_t>(v ^ u)) == 1);
      const std::uint64_t cu = lat.nodes()[u].code_rate.codeword_count;
      const std::uint64_t cv = lat.nodes()[v].code_rate.codeword_count;
      CHECK(cv > cu);
      CHECK(cv % cu == 0);
    }
  }
}

TEST_CASE("levels of the code lattice share their distortion") {
  for (std::size_t n : {4u, 6u}) {
    const CodeLattice lat = lattice_of_codes(n);
    for (const auto& node : lat.nodes()) {
      const std::size_t dropped = (n - 1) - std::popcount(node.retained_mask);
      CHECK(node.node_distortion == Rational(static_cast<std::int64_t>(dropped),
                                             static_cast<std::int64_t>(n - 1)));
    }
  }
  const CodeLattice tiny = lattice_of_codes(1);
  REQUIRE(tiny.nodes().size() == 1);
  CHECK(tiny.edges().empty());
  CHECK(tiny.nodes()[0].node_distortion == Rational(0, 1));
}

TEST_CASE("block lengths beyond the enumeration cap are rejected") {
  CHECK_THROWS_AS(lattice_of_codes(17), CapacityError);
  CHECK_THROWS_AS(lattice_of_codes(0), InvalidInputError);
}

TEST_CASE("encoding slices the ranking into pools") {
  const auto g = GroundSet::make({"α", "β", "γ", "ζ"});
  const TotalOrder k = TotalOrder::canonical(g);

  const PoolAssignment halves = encode(k, Composition({2, 2}));
  CHECK(halves.pools == std::vector<std::vector<std::size_t>>{{0, 1}, {2, 3}});
  CHECK(halves.distortion == Rational(2, 3));

  CHECK(encode(k, Composition({1, 1, 1, 1})).distortion == Rational(0, 1));
  CHECK(encode(k, Composition({4})).distortion == Rational(1, 1));
  CHECK_THROWS_AS(encode(k, Composition({2, 2, 2})), InvalidInputError);

  const PoolAssignment shifted = encode(TotalOrder(g, {3, 1, 0, 2}), Composition({1, 3}));
  CHECK(shifted.pools == std::vector<std::vector<std::size_t>>{{3}, {1, 0, 2}});
}

TEST_CASE("the reproduced order relates pools and nothing else") {
  const auto g = GroundSet::make({"α", "β", "γ", "ζ"});
  const TotalOrder k = TotalOrder::canonical(g);
  const PartialOrder j = reproduction_order(encode(k, Composition({2, 2})), g);
  CHECK(j.relates(0, 2));
  CHECK(j.relates(0, 3));
  CHECK(j.relates(1, 2));
  CHECK(j.relates(1, 3));
  CHECK_FALSE(j.relates(0, 1));
  CHECK_FALSE(j.relates(2, 3));
}

TEST_CASE("encode distortion equals the distortion of the reproduced order") {
  for (std::size_t n : {4u, 5u, 6u}) {
    const auto g = GroundSet::indexed(n);
    const TotalOrder k = TotalOrder::canonical(g);
    for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
      const PoolAssignment a = encode(k, composition_of(mask, n));
      const Distortion d = distortion(reproduction_order(a, g), k);
      REQUIRE_FALSE(d.is_infinite());
      CHECK(d.rational() == a.distortion);
    }
  }
}

TEST_CASE("optimal codes per level minimize codewords with a fixed tie-break") {
  CHECK(optimal_code(4, 0) == Composition({1, 1, 1, 1}));
  CHECK(optimal_code(4, 1) == Composition({2, 1, 1}));
  CHECK(optimal_code(4, 2) == Composition({3, 1}));
  CHECK(optimal_code(4, 3) == Composition({4}));
  CHECK(optimal_code_mask(4, 1) == 6);
  CHECK(optimal_code_mask(4, 2) == 4);

  CHECK(optimal_code(5, 1) == Composition({2, 1, 1, 1}));
  CHECK(optimal_code(5, 2) == Composition({3, 1, 1}));
  CHECK(optimal_code(5, 3) == Composition({4, 1}));
  CHECK(optimal_code(5, 4) == Composition({5}));
  CHECK_THROWS_AS(optimal_code(4, 4), InvalidInputError);
}

TEST_CASE("boundary subsets spell like sets") {
  CHECK(boundary_subset_str(0, 4) == "{}");
  CHECK(boundary_subset_str(5, 4) == "{a,c}");
  CHECK(boundary_subset_str(7, 4) == "{a,b,c}");
}

TEST_CASE("code lattices render as DOT") {
  const std::string dot = to_dot(lattice_of_codes(4));
  CHECK(looks_like_dot(dot));
  CHECK(dot.find("d=") != std::string::npos);
}
