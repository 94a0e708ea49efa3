#pragma once

#include <cstddef>

#include "shieldbic/matrix.hpp"

namespace shieldbic {

struct ShieldParams {
  double phi = 10.0;  // shielding factor, >= 1
  double alpha = 1.2;
  double delta = 300.0;

  /// Throws std::invalid_argument when phi < 1, alpha <= 1 or delta < 0.
  void validate() const;
};

/// Unit impulse: 1 at exactly zero (both parts), 0 elsewhere.
int unitImpulse(const Scalar& x) noexcept;
int unitImpulse(double x) noexcept;

/// The working matrix of a shielded run. Entries with a nonzero imaginary
/// part belong to at least one previously discovered bi-cluster; real parts
/// are always the original data.
class ShieldState {
 public:
  explicit ShieldState(ExpressionMatrix matrix);

  const ExpressionMatrix& matrix() const noexcept { return matrix_; }
  std::size_t shieldedCount() const noexcept { return shielded_; }

  /// Shields every cell of `b` in place:
  ///   a <- (1 + phi * rho[imag(a) != 0] * 1j) * a + phi * rho(a) * 1j
  /// An unshielded a becomes a + phi*a*1j, an exact zero becomes phi*1j, and
  /// an already shielded entry is left alone.
  void shield(const Bicluster& b, double phi);

  friend bool operator==(const ShieldState&, const ShieldState&) = default;

 private:
  ExpressionMatrix matrix_;
  std::size_t shielded_;
};

ShieldState applyShield(ShieldState state, const Bicluster& b, const ShieldParams& params);

/// |sum_j r_ij^2| / |cols| over the (possibly complex) residues.
double shieldedRowMsr(const ShieldState& state, const Bicluster& b, std::size_t i);
double shieldedColMsr(const ShieldState& state, const Bicluster& b, std::size_t j);

/// Collective deletion on modulus scores against alpha * H, where H is the
/// modulus-form score of the whole candidate. When a round deletes nothing,
/// single lines are removed by highest shielded score. Stops once both the
/// modulus score and the real-part score are within delta.
Bicluster shieldedDelete(const ShieldState& state, Bicluster b, const ShieldParams& params);

/// Adds outside columns, then rows, whose real-part residue score is <= the
/// real-part MSR of the current candidate, until nothing changes. This is how
/// already shielded cells re-enter a new bi-cluster.
Bicluster shieldedAdd(const ShieldState& state, Bicluster b, const ShieldParams& params);

struct ShieldedResult {
  Bicluster bicluster;  // msr holds the real-part score
  ShieldState state;    // input state with the new bi-cluster shielded
};

/// One shielded search from the whole matrix, followed by shielding the result.
ShieldedResult findShieldedBicluster(ShieldState state, const ShieldParams& params);

}  // namespace shieldbic
