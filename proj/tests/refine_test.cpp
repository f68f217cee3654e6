#include <doctest.h>

#include <cstdint>
#include <vector>

#include "ilat/errors.hpp"
#include "ilat/refine.hpp"
#include "test_support.hpp"

using namespace ilat;

namespace {

// All compositions of n, by retained mask.
std::vector<Composition> compositions_of(std::size_t n) {
  std::vector<Composition> out;
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask)
    out.push_back(composition_of(mask, n));
  return out;
}

}  // namespace

TEST_CASE("steps splice sub-codes into the addressed pool") {
  const RefinementChain halves(Composition({2, 2}), {{1, Composition({1, 1})}});
  CHECK(apply(halves) == Composition({1, 1, 2}));

  const RefinementChain noop(Composition({4}), {{1, Composition({4})}});
  CHECK(apply(noop) == Composition({4}));

  const RefinementChain second(Composition({3, 1}), {{1, Composition({2, 1})}});
  CHECK(apply(second) == Composition({2, 1, 1}));

  const RefinementChain staged(
      Composition({4}), {{1, Composition({2, 2})}, {2, Composition({1, 1})}});
  CHECK(staged.equivalent() == Composition({2, 1, 1}));

  const RefinementChain bare(Composition({2, 2}), {});
  CHECK(apply(bare) == Composition({2, 2}));
}

TEST_CASE("steps validate their pool address and size") {
  CHECK_THROWS_AS(RefinementChain(Composition({2, 2}), {{0, Composition({1, 1})}}),
                  InvalidInputError);
  CHECK_THROWS_AS(RefinementChain(Composition({2, 2}), {{3, Composition({1, 1})}}),
                  InvalidInputError);
  CHECK_THROWS_AS(RefinementChain(Composition({2, 2}), {{1, Composition({1, 1, 1})}}),
                  InvalidInputError);
}

TEST_CASE("chained rates multiply the step codebooks") {
  const RefinementChain chain(Composition({2, 2}), {{1, Composition({1, 1})}});
  const Rate total = total_rate(chain);
  CHECK(total.codeword_count == 12);

  const RefinementChain telescoping(
      Composition({4}), {{1, Composition({2, 2})}, {1, Composition({1, 1})}});
  CHECK(total_rate(telescoping).codeword_count == 12);
  CHECK(telescoping.equivalent() == Composition({1, 1, 2}));
}

TEST_CASE("the two-step rate equals the equivalent single-code rate") {
  const RefinementChain chain(Composition({2, 2}), {{1, Composition({1, 1})}});
  const RateLossReport report = verify_no_rate_loss(chain);
  CHECK(report.pass);
  CHECK(report.chained_codewords == 12);
  CHECK(report.single_codewords == 12);
  CHECK(report.equivalent == Composition({1, 1, 2}));
}

TEST_CASE("no single-step refinement loses rate for any block length up to 8") {
  std::size_t cases = 0;
  for (std::size_t n = 2; n <= 8; ++n) {
    for (const Composition& base : compositions_of(n)) {
      for (std::size_t pool = 1; pool <= base.pool_count(); ++pool) {
        const std::size_t s = base.pool_sizes()[pool - 1];
        for (const Composition& sub : compositions_of(s)) {
          const RefinementChain chain(base, {{pool, sub}});
          const RateLossReport report = verify_no_rate_loss(chain);
          CHECK(report.pass);
          CHECK(report.chained_codewords == report.single_codewords);
          ++cases;
        }
      }
    }
  }
  CHECK(cases > 1000);
}

TEST_CASE("refinement chains reach the same code along any path") {
  const RefinementChain left(
      Composition({4}),
      {{1, Composition({2, 2})}, {1, Composition({1, 1})}, {3, Composition({1, 1})}});
  const RefinementChain right(
      Composition({4}),
      {{1, Composition({1, 3})}, {2, Composition({1, 2})}, {3, Composition({1, 1})}});
  CHECK(left.equivalent() == Composition({1, 1, 1, 1}));
  CHECK(right.equivalent() == Composition({1, 1, 1, 1}));
  CHECK(total_rate(left).codeword_count == 24);
  CHECK(total_rate(right).codeword_count == 24);
}

TEST_CASE("each splitting step strictly grows the retained boundary set") {
  const Composition base({3, 2});
  std::uint32_t mask = retained_mask_of(base);
  std::vector<RefinementStep> steps{{1, Composition({1, 2})}, {3, Composition({1, 1})}};
  std::vector<RefinementStep> sofar;
  for (const auto& step : steps) {
    sofar.push_back(step);
    const std::uint32_t next = retained_mask_of(RefinementChain(base, sofar).equivalent());
    CHECK((mask & next) == mask);
    CHECK(next != mask);
    mask = next;
  }
}

TEST_CASE("distortion never increases along a refinement chain") {
  const Composition base({4, 2});
  const std::vector<RefinementStep> steps{{1, Composition({2, 2})},
                                          {2, Composition({1, 1})},
                                          {1, Composition({1, 1})}};
  const std::size_t n = base.total();
  Rational prev(static_cast<std::int64_t>(n - base.pool_count()),
                static_cast<std::int64_t>(n - 1));
  std::vector<RefinementStep> sofar;
  for (const auto& step : steps) {
    sofar.push_back(step);
    const Composition eq = RefinementChain(base, sofar).equivalent();
    const Rational d(static_cast<std::int64_t>(n - eq.pool_count()),
                     static_cast<std::int64_t>(n - 1));
    CHECK(d <= prev);
    prev = d;
  }
}
