#include "ilat/codes.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <numeric>

#include "dot_util.hpp"
#include "ilat/errors.hpp"
#include "subset_names.hpp"

namespace ilat {

namespace {

constexpr std::size_t kMaxFactorial = 20;

const std::array<std::uint64_t, kMaxFactorial + 1> kFactorial = [] {
  std::array<std::uint64_t, kMaxFactorial + 1> f{};
  f[0] = 1;
  for (std::size_t i = 1; i <= kMaxFactorial; ++i) f[i] = f[i - 1] * i;
  return f;
}();

void check_block_length(std::size_t n) {
  if (n == 0) throw InvalidInputError("code: block length must be positive");
  if (n > kMaxCodeBlockLength)
    throw CapacityError("code: block length larger than " +
                            std::to_string(kMaxCodeBlockLength),
                        n);
}

std::uint32_t mask_count(std::size_t n) {
  return n <= 1 ? 1 : (std::uint32_t{1} << (n - 1));
}

}  // namespace

Composition::Composition(std::vector<std::size_t> pool_sizes)
    : pools_(std::move(pool_sizes)) {
  if (pools_.empty()) throw InvalidInputError("composition: no pools");
  for (std::size_t s : pools_) {
    if (s == 0) throw InvalidInputError("composition: empty pool");
    total_ += s;
  }
}

std::string Composition::str() const {
  std::string out = "[";
  for (std::size_t k = 0; k < pools_.size(); ++k) {
    if (k > 0) out += ",";
    out += std::to_string(pools_[k]);
  }
  out += "]";
  return out;
}

std::uint64_t multinomial_coefficient(std::size_t n, std::span<const std::size_t> parts) {
  if (n > kMaxFactorial)
    throw CapacityError("multinomial: total larger than " + std::to_string(kMaxFactorial),
                        n);
  std::size_t sum = 0;
  for (std::size_t p : parts) sum += p;
  if (sum != n) throw InvalidInputError("multinomial: parts must sum to the total");
  // Dividing part by part keeps every intermediate an exact integer
  // (each step is a smaller multinomial), so nothing overflows past n!.
  std::uint64_t result = kFactorial[n];
  for (std::size_t p : parts) result /= kFactorial[p];
  return result;
}

double Rate::bits() const { return std::log2(static_cast<double>(codeword_count)); }

Rate rate(const Composition& c) {
  return Rate{c.total(), c.pool_sizes(),
              multinomial_coefficient(c.total(), c.pool_sizes())};
}

Composition composition_of(std::uint32_t retained_mask, std::size_t n) {
  check_block_length(n);
  if (n >= 1 && (retained_mask >> (n - 1)) != 0)
    throw InvalidInputError("composition: retained mask names a missing boundary");
  std::vector<std::size_t> pools;
  std::size_t run = 1;
  for (std::size_t b = 0; b + 1 < n; ++b) {
    if (retained_mask & (std::uint32_t{1} << b)) {
      pools.push_back(run);
      run = 1;
    } else {
      ++run;
    }
  }
  pools.push_back(run);
  return Composition(std::move(pools));
}

std::uint32_t retained_mask_of(const Composition& c) {
  std::uint32_t mask = 0;
  std::size_t pos = 0;
  const auto& pools = c.pool_sizes();
  for (std::size_t k = 0; k + 1 < pools.size(); ++k) {
    pos += pools[k];
    mask |= std::uint32_t{1} << (pos - 1);
  }
  return mask;
}

PoolAssignment encode(const TotalOrder& ranking, const Composition& c) {
  const std::size_t n = ranking.ground().size();
  if (c.total() != n)
    throw InvalidInputError("encode: composition covers " + std::to_string(c.total()) +
                            " items, ranking has " + std::to_string(n));
  std::vector<std::vector<std::size_t>> pools;
  pools.reserve(c.pool_count());
  const auto& seq = ranking.sequence();
  std::size_t pos = 0;
  for (std::size_t s : c.pool_sizes()) {
    pools.emplace_back(seq.begin() + static_cast<std::ptrdiff_t>(pos),
                       seq.begin() + static_cast<std::ptrdiff_t>(pos + s));
    pos += s;
  }
  const Rational d =
      n <= 1 ? Rational(0, 1)
             : Rational(static_cast<std::int64_t>(n - c.pool_count()),
                        static_cast<std::int64_t>(n - 1));
  return PoolAssignment{c, std::move(pools), d};
}

PartialOrder reproduction_order(const PoolAssignment& assignment, GroundSetPtr ground) {
  std::vector<std::pair<std::size_t, std::size_t>> relations;
  for (std::size_t k = 0; k + 1 < assignment.pools.size(); ++k) {
    for (std::size_t x : assignment.pools[k]) {
      for (std::size_t y : assignment.pools[k + 1]) relations.emplace_back(x, y);
    }
  }
  return PartialOrder(std::move(ground), relations);
}

CodeLattice::CodeLattice(std::size_t n) : n_(n) {
  check_block_length(n);
  const std::uint32_t count = mask_count(n);
  nodes_.reserve(count);
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    Composition c = composition_of(mask, n);
    Rate r = rate(c);
    const std::size_t dropped = (n - 1) - static_cast<std::size_t>(std::popcount(mask));
    const Rational d = n <= 1 ? Rational(0, 1)
                              : Rational(static_cast<std::int64_t>(dropped),
                                         static_cast<std::int64_t>(n - 1));
    nodes_.push_back(CodeNode{mask, std::move(c), std::move(r), d});
  }
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    for (std::size_t b = 0; b + 1 < n; ++b) {
      if (!(mask & (std::uint32_t{1} << b)))
        edges_.emplace_back(mask, mask | (std::uint32_t{1} << b));
    }
  }
}

CodeLattice lattice_of_codes(std::size_t n) { return CodeLattice(n); }

std::uint32_t optimal_code_mask(std::size_t n, std::size_t dropped_level) {
  check_block_length(n);
  if (dropped_level >= n)
    throw InvalidInputError("optimal code: level " + std::to_string(dropped_level) +
                            " outside 0.." + std::to_string(n - 1));
  const std::size_t retained = (n - 1) - dropped_level;
  const std::uint32_t count = mask_count(n);
  bool found = false;
  std::uint32_t best_mask = 0;
  std::uint64_t best_count = 0;
  std::vector<std::size_t> best_pools;
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != retained) continue;
    Composition c = composition_of(mask, n);
    const std::uint64_t codewords = multinomial_coefficient(n, c.pool_sizes());
    if (!found || codewords < best_count ||
        (codewords == best_count && c.pool_sizes() > best_pools)) {
      found = true;
      best_mask = mask;
      best_count = codewords;
      best_pools = c.pool_sizes();
    }
  }
  return best_mask;
}

Composition optimal_code(std::size_t n, std::size_t dropped_level) {
  return composition_of(optimal_code_mask(n, dropped_level), n);
}

std::optional<char> four_item_letter(std::uint32_t retained_mask, std::size_t n) {
  if (n != 4 || retained_mask >= 8) return std::nullopt;
  return detail::kFourItemLetters[retained_mask];
}

std::string boundary_subset_str(std::uint32_t mask, std::size_t n) {
  return detail::subset_spelling(mask, n);
}

std::string to_dot(const CodeLattice& lattice) {
  const std::size_t n = lattice.block_length();
  std::string out = "digraph code_lattice {\n  rankdir=BT;\n  node [shape=box];\n";
  for (const CodeNode& node : lattice.nodes()) {
    std::string label;
    if (const auto letter = four_item_letter(node.retained_mask, n))
      label += std::string(1, *letter) + " ";
    label += boundary_subset_str(node.retained_mask, n) + " " + node.composition.str();
    out += "  n" + std::to_string(node.retained_mask) + " [label=\"" +
           detail::dot_escape(label) + "\\nd=" + node.node_distortion.str() +
           "\"];\n";
  }
  for (const auto& [u, v] : lattice.edges()) {
    out += "  n" + std::to_string(u) + " -> n" + std::to_string(v) + ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace ilat
