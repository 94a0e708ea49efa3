#include "shieldbic/cheng_church.hpp"

#include <cmath>

#include "greedy.hpp"

namespace shieldbic {

namespace {

detail::DeletionRule baselineRule(const GreedyParams& params) {
  params.validate();
  return {params.delta, params.alpha, false};
}

}  // namespace

void GreedyParams::validate() const {
  if (!std::isfinite(delta) || delta < 0.0) throw std::invalid_argument("delta must be a finite value >= 0");
  if (!std::isfinite(alpha) || alpha <= 1.0) throw std::invalid_argument("alpha must be > 1");
}

Bicluster multipleNodeDeletion(const ExpressionMatrix& m, Bicluster b, const GreedyParams& params) {
  validateBicluster(m, b);
  return detail::collectiveDeletion(m, std::move(b), baselineRule(params));
}

Bicluster singleNodeDeletion(const ExpressionMatrix& m, Bicluster b, const GreedyParams& params) {
  validateBicluster(m, b);
  return detail::singleLineDeletion(m, std::move(b), baselineRule(params));
}

Bicluster nodeAddition(const ExpressionMatrix& m, Bicluster b) {
  validateBicluster(m, b);
  return detail::realPartAddition(m, std::move(b));
}

ExpressionMatrix maskRandom(const ExpressionMatrix& m, const Bicluster& b, ValueRange range, std::mt19937_64& rng) {
  validateBicluster(m, b);
  if (!(range.low <= range.high)) throw std::invalid_argument("mask range must satisfy low <= high");
  std::uniform_real_distribution<double> draw(range.low, range.high);
  ExpressionMatrix out = m;
  for (std::size_t i : b.rows) {
    for (std::size_t j : b.cols) out(i, j) = Scalar(range.low == range.high ? range.low : draw(rng), 0.0);
  }
  return out;
}

ExpressionMatrix maskRandom(const ExpressionMatrix& m, const Bicluster& b, const GreedyParams& params) {
  std::mt19937_64 rng(params.rng_seed);
  return maskRandom(m, b, ValueRange{m.minReal(), m.maxReal()}, rng);
}

Bicluster findBicluster(const ExpressionMatrix& m, const GreedyParams& params) {
  const detail::DeletionRule rule = baselineRule(params);
  Bicluster b = detail::collectiveDeletion(m, wholeMatrix(m), rule);
  if (b.msr > params.delta) b = detail::singleLineDeletion(m, std::move(b), rule);
  return detail::realPartAddition(m, std::move(b), params.delta);
}

}  // namespace shieldbic
