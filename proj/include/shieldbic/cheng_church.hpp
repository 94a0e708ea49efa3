#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

#include "shieldbic/matrix.hpp"

namespace shieldbic {

/// Thrown when a greedy phase would leave a bi-cluster without rows or columns.
class DegenerateBicluster : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GreedyParams {
  double delta = 300.0;  // MSR budget
  double alpha = 1.2;    // collective deletion threshold multiplier, > 1
  std::uint64_t rng_seed = 0;

  /// Throws std::invalid_argument on delta < 0 or alpha <= 1.
  void validate() const;
};

/// Cheng-Church multiple node deletion. Each round deletes every row whose
/// score exceeds alpha * H, recomputes, then does the same for columns. Stops
/// once H <= delta or a round deletes nothing.
Bicluster multipleNodeDeletion(const ExpressionMatrix& m, Bicluster b, const GreedyParams& params);

/// Removes the single highest-scoring row or column until H <= delta. Ties go
/// to rows, then to the smallest index.
Bicluster singleNodeDeletion(const ExpressionMatrix& m, Bicluster b, const GreedyParams& params);

/// Adds every outside column, then every outside row, whose score against
/// the current residue model is <= H, until a round adds nothing. H does not
/// increase beyond rounding: scores within 1e-18 of the mean squared entry
/// above H are treated as ties so that exactly coherent lines are admitted.
Bicluster nodeAddition(const ExpressionMatrix& m, Bicluster b);

struct ValueRange {
  double low = 0.0;
  double high = 0.0;
};

/// Replaces every cell of `b` with a uniform draw from `range`, row-major over
/// the bi-cluster. All other entries are copied unchanged.
ExpressionMatrix maskRandom(const ExpressionMatrix& m, const Bicluster& b, ValueRange range, std::mt19937_64& rng);

/// Same, drawing from [min(m), max(m)] with a generator seeded from params.rng_seed.
ExpressionMatrix maskRandom(const ExpressionMatrix& m, const Bicluster& b, const GreedyParams& params);

/// Full Cheng-Church search for one delta-bi-cluster starting from the whole
/// matrix: multiple deletion, single deletion if that stalls, then addition.
/// An addition round that would lift H above delta is rolled back.
Bicluster findBicluster(const ExpressionMatrix& m, const GreedyParams& params);

}  // namespace shieldbic
