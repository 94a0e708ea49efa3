#include "shieldbic/shield.hpp"

#include <cmath>
#include <stdexcept>

#include "greedy.hpp"

namespace shieldbic {

namespace {

detail::DeletionRule shieldRule(const ShieldParams& params) {
  params.validate();
  return {params.delta, params.alpha, true};
}

}  // namespace

void ShieldParams::validate() const {
  if (!std::isfinite(phi) || phi < 1.0) throw std::invalid_argument("phi must be >= 1");
  if (!std::isfinite(alpha) || alpha <= 1.0) throw std::invalid_argument("alpha must be > 1");
  if (!std::isfinite(delta) || delta < 0.0) throw std::invalid_argument("delta must be a finite value >= 0");
}

int unitImpulse(const Scalar& x) noexcept { return x == Scalar{} ? 1 : 0; }

int unitImpulse(double x) noexcept { return x == 0.0 ? 1 : 0; }

ShieldState::ShieldState(ExpressionMatrix matrix) : matrix_(std::move(matrix)), shielded_(matrix_.shieldedCount()) {}

void ShieldState::shield(const Bicluster& b, double phi) {
  validateBicluster(matrix_, b);
  const Scalar j1{0.0, 1.0};
  for (std::size_t i : b.rows) {
    for (std::size_t j : b.cols) {
      Scalar& a = matrix_(i, j);
      const int fresh = unitImpulse(a.imag() != 0.0 ? 1.0 : 0.0);
      const Scalar shielded = (1.0 + phi * fresh * j1) * a + phi * unitImpulse(a) * j1;
      if (a.imag() == 0.0 && shielded.imag() != 0.0) ++shielded_;
      a = shielded;
    }
  }
}

ShieldState applyShield(ShieldState state, const Bicluster& b, const ShieldParams& params) {
  params.validate();
  state.shield(b, params.phi);
  return state;
}

double shieldedRowMsr(const ShieldState& state, const Bicluster& b, std::size_t i) {
  return rowMsr(state.matrix(), b, i);
}

double shieldedColMsr(const ShieldState& state, const Bicluster& b, std::size_t j) {
  return colMsr(state.matrix(), b, j);
}

Bicluster shieldedDelete(const ShieldState& state, Bicluster b, const ShieldParams& params) {
  const detail::DeletionRule rule = shieldRule(params);
  validateBicluster(state.matrix(), b);
  b = detail::collectiveDeletion(state.matrix(), std::move(b), rule);
  if (!detail::withinBudget(state.matrix(), b, b.msr, rule)) {
    b = detail::singleLineDeletion(state.matrix(), std::move(b), rule);
  }
  return b;
}

Bicluster shieldedAdd(const ShieldState& state, Bicluster b, const ShieldParams& params) {
  params.validate();
  validateBicluster(state.matrix(), b);
  return detail::realPartAddition(state.matrix(), std::move(b), params.delta);
}

ShieldedResult findShieldedBicluster(ShieldState state, const ShieldParams& params) {
  Bicluster b = shieldedDelete(state, wholeMatrix(state.matrix()), params);
  b = shieldedAdd(state, std::move(b), params);
  b.msr = realMsr(state.matrix(), b);
  state.shield(b, params.phi);
  return {std::move(b), std::move(state)};
}

}  // namespace shieldbic
