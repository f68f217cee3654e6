#include "ilat/measure.hpp"

#include <cmath>
#include <sstream>

#include "ilat/errors.hpp"

namespace ilat {

namespace {

std::string fmt(double x) {
  std::ostringstream out;
  out << x;
  return out.str();
}

void check_distribution(const std::vector<double>& weights, const char* what) {
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0))
      throw InvalidInputError(std::string(what) + ": negative or NaN weight " + fmt(w));
    total += w;
  }
  if (std::abs(total - 1.0) > kMassTolerance)
    throw InvalidInputError(std::string(what) + ": weights sum to " + fmt(total) +
                            ", expected 1");
}

}  // namespace

ProbabilityMeasure::ProbabilityMeasure(GroundSetPtr ground, std::vector<double> weights)
    : ground_(std::move(ground)), weights_(std::move(weights)) {
  if (!ground_) throw InvalidInputError("measure: null ground set");
  if (weights_.size() != ground_->size())
    throw InvalidInputError("measure: one weight per element required");
  check_distribution(weights_, "measure");
}

ProbabilityMeasure ProbabilityMeasure::uniform(GroundSetPtr ground) {
  if (!ground) throw InvalidInputError("measure: null ground set");
  const std::size_t n = ground->size();
  return ProbabilityMeasure(std::move(ground),
                            std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

Rule::Rule(Partition partition, std::vector<double> block_weights)
    : partition_(std::move(partition)), block_weights_(std::move(block_weights)) {
  if (block_weights_.size() != partition_.block_count())
    throw InvalidInputError("rule: one weight per block required");
  check_distribution(block_weights_, "rule");
}

Rule project(const ProbabilityMeasure& m, const Partition& p) {
  require_same_ground(m.ground(), p.ground(), "project");
  std::vector<double> bw(p.block_count(), 0.0);
  for (std::size_t e = 0; e < m.ground().size(); ++e) bw[p.block_of(e)] += m.weight(e);
  return Rule(p, std::move(bw));
}

Rule coarsen(const Rule& r, const Partition& coarser) {
  if (!refines(r.partition(), coarser))
    throw InvalidInputError("coarsen: target partition is not coarser");
  std::vector<double> bw(coarser.block_count(), 0.0);
  for (std::size_t b = 0; b < r.partition().block_count(); ++b) {
    const std::size_t representative = r.partition().blocks()[b].front();
    bw[coarser.block_of(representative)] += r.block_weights()[b];
  }
  return Rule(coarser, std::move(bw));
}

double entropy(std::span<const double> weights) {
  double h = 0.0;
  for (double w : weights) {
    if (w > 0.0) h -= w * std::log2(w);
  }
  return h;
}

double entropy(const Rule& r) { return entropy(r.block_weights()); }

double rho(const Partition& p, const Partition& q, const ProbabilityMeasure& m) {
  require_same_ground(p.ground(), m.ground(), "rho");
  require_same_ground(q.ground(), m.ground(), "rho");
  // H(p|q) + H(q|p) = 2 H(p meet q) - H(p) - H(q): the joint distribution
  // of (p-block, q-block) is exactly the meet-block distribution.
  const double joint = entropy(project(m, meet(p, q)));
  const double d = 2.0 * joint - entropy(project(m, p)) - entropy(project(m, q));
  return d < 0.0 ? 0.0 : d;
}

ProbabilityMeasure lift(std::span<const Rule> rules, double tolerance,
                        std::size_t max_iters) {
  if (rules.empty()) throw InvalidInputError("lift: no rules");
  if (!(tolerance > 0.0)) throw InvalidInputError("lift: tolerance must be positive");
  if (max_iters == 0) throw InvalidInputError("lift: max_iters must be positive");
  const GroundSetPtr ground = rules.front().partition().ground_ptr();
  for (const Rule& r : rules)
    require_same_ground(*ground, r.partition().ground(), "lift");
  const std::size_t n = ground->size();

  if (rules.size() == 1) {
    const Rule& r = rules.front();
    std::vector<double> w(n, 0.0);
    for (std::size_t b = 0; b < r.partition().block_count(); ++b) {
      const auto& members = r.partition().blocks()[b];
      const double share = r.block_weights()[b] / static_cast<double>(members.size());
      for (std::size_t e : members) w[e] = share;
    }
    return ProbabilityMeasure(ground, std::move(w));
  }

  std::vector<double> w(n, 1.0 / static_cast<double>(n));
  const auto residual = [&] {
    double worst = 0.0;
    for (const Rule& r : rules) {
      for (std::size_t b = 0; b < r.partition().block_count(); ++b) {
        double mass = 0.0;
        for (std::size_t e : r.partition().blocks()[b]) mass += w[e];
        worst = std::max(worst, std::abs(mass - r.block_weights()[b]));
      }
    }
    return worst;
  };

  double res = residual();
  for (std::size_t iter = 0; iter < max_iters && res > tolerance; ++iter) {
    for (const Rule& r : rules) {
      for (std::size_t b = 0; b < r.partition().block_count(); ++b) {
        const auto& members = r.partition().blocks()[b];
        double mass = 0.0;
        for (std::size_t e : members) mass += w[e];
        const double target = r.block_weights()[b];
        if (mass > 0.0) {
          const double scale = target / mass;
          for (std::size_t e : members) w[e] *= scale;
        } else if (target > tolerance) {
          throw InfeasibleError(
              "lift: a rule places mass " + fmt(target) + " on a block another rule zeroed",
              target);
        }
      }
    }
    res = residual();
  }
  if (res > tolerance)
    throw InfeasibleError("lift: marginals disagree by " + fmt(res) + " after " +
                              std::to_string(max_iters) + " iterations",
                          res);
  return ProbabilityMeasure(ground, std::move(w));
}

}  // namespace ilat
