#include "ilat/refine.hpp"

#include "ilat/errors.hpp"

namespace ilat {

RefinementChain::RefinementChain(Composition base, std::vector<RefinementStep> steps)
    : base_(std::move(base)), steps_(std::move(steps)), equivalent_(base_) {
  for (const RefinementStep& step : steps_) {
    const auto& pools = equivalent_.pool_sizes();
    if (step.pool == 0 || step.pool > pools.size())
      throw InvalidInputError("refinement: pool " + std::to_string(step.pool) +
                              " outside 1.." + std::to_string(pools.size()));
    const std::size_t target = pools[step.pool - 1];
    if (step.sub.total() != target)
      throw InvalidInputError("refinement: sub-composition covers " +
                              std::to_string(step.sub.total()) + " items, pool " +
                              std::to_string(step.pool) + " holds " +
                              std::to_string(target));
    std::vector<std::size_t> spliced;
    spliced.reserve(pools.size() + step.sub.pool_count() - 1);
    spliced.insert(spliced.end(), pools.begin(),
                   pools.begin() + static_cast<std::ptrdiff_t>(step.pool - 1));
    spliced.insert(spliced.end(), step.sub.pool_sizes().begin(),
                   step.sub.pool_sizes().end());
    spliced.insert(spliced.end(),
                   pools.begin() + static_cast<std::ptrdiff_t>(step.pool), pools.end());
    equivalent_ = Composition(std::move(spliced));
  }
}

Composition apply(const RefinementChain& chain) { return chain.equivalent(); }

Rate total_rate(const RefinementChain& chain) {
  // Every partial product is itself the multinomial of an intermediate
  // equivalent composition, so it stays within n! and cannot overflow.
  std::uint64_t codewords = rate(chain.base()).codeword_count;
  for (const RefinementStep& step : chain.steps())
    codewords *= rate(step.sub).codeword_count;
  return Rate{chain.base().total(), {}, codewords};
}

RateLossReport verify_no_rate_loss(const RefinementChain& chain) {
  const std::uint64_t chained = total_rate(chain).codeword_count;
  const Composition equivalent = apply(chain);
  const std::uint64_t single = rate(equivalent).codeword_count;
  return RateLossReport{chained, single, equivalent, chained == single};
}

}  // namespace ilat
