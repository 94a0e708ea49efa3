#pragma once

// Shared checks for pipeline runs.

#include <random>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "shieldbic/cheng_church.hpp"
#include "shieldbic/pipeline.hpp"

namespace shieldbic::support {

/// Recomputes every emitted bi-cluster's MSR with the oracle on the matrix
/// the search actually saw: the real data for the shield strategy, the
/// replayed masked matrix for random masking. Returns a description of each
/// record above delta.
inline std::vector<std::string> budgetViolations(const ExpressionMatrix& m, const RunReport& report) {
  std::vector<std::string> bad;
  const double delta = report.config.delta;
  const double tol = 1e-9 * (1.0 + delta);
  std::size_t repeat = static_cast<std::size_t>(-1);
  ExpressionMatrix current = m;
  std::mt19937_64 rng;
  const ValueRange range{m.minReal(), m.maxReal()};
  for (const auto& rec : report.records) {
    if (rec.repeat != repeat) {
      repeat = rec.repeat;
      current = m;
      rng.seed(maskSeed(report.config.seed, repeat));
    }
    if (!rec.ok()) continue;
    const auto& b = *rec.bicluster;
    double h = 0.0;
    if (report.config.strategy == Strategy::Shield) {
      h = oracle::realMsr(m, b.rows, b.cols);
    } else {
      h = oracle::msr(current, b.rows, b.cols);
      current = maskRandom(current, b, range, rng);
    }
    if (h > delta + tol || b.msr > delta) {
      bad.push_back("repeat " + std::to_string(rec.repeat) + " k " + std::to_string(rec.k) + " msr " +
                    std::to_string(h));
    }
  }
  return bad;
}

}  // namespace shieldbic::support
