#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ilat/codes.hpp"

namespace ilat {

/// One refinement move: re-order the members of a single pool with a
/// sub-code over that pool's size. Pools are addressed 1-based, so the
/// classic first-pool refinement is pool = 1.
struct RefinementStep {
  std::size_t pool = 1;
  Composition sub;
};

/// A base code plus an ordered list of refinement steps. The flattened
/// equivalent composition is validated and computed at construction:
/// each sub-composition is spliced in place of its target pool, in order.
class RefinementChain {
 public:
  RefinementChain(Composition base, std::vector<RefinementStep> steps);

  const Composition& base() const { return base_; }
  const std::vector<RefinementStep>& steps() const { return steps_; }
  const Composition& equivalent() const { return equivalent_; }

 private:
  Composition base_;
  std::vector<RefinementStep> steps_;
  Composition equivalent_;
};

/// The spliced single-code equivalent of the chain.
Composition apply(const RefinementChain& chain);

/// Sum of the step rates, computed as the exact product of the step
/// codeword counts (base first).
Rate total_rate(const RefinementChain& chain);

/// Exact-integer comparison of the chained rate against the rate of the
/// equivalent single code.
struct RateLossReport {
  std::uint64_t chained_codewords = 1;
  std::uint64_t single_codewords = 1;
  Composition equivalent;
  bool pass = false;
};

RateLossReport verify_no_rate_loss(const RefinementChain& chain);

}  // namespace ilat
