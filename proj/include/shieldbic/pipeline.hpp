#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shieldbic/matrix.hpp"

namespace shieldbic {

enum class Strategy { RandomMask, Shield };

std::string_view toString(Strategy s) noexcept;
/// Accepts "random-mask" and "shield"; throws std::invalid_argument otherwise.
Strategy parseStrategy(std::string_view name);

struct RunConfig {
  Strategy strategy = Strategy::Shield;
  std::size_t k_target = 50;
  double delta = 300.0;
  double alpha = 1.2;
  double phi = 10.0;
  std::uint64_t seed = 0;
  std::size_t repeats = 10;

  void validate() const;
};

/// One (repeat, k) slot of a run. A failed search keeps `bicluster` empty and
/// says why in `failure`.
struct BiclusterRecord {
  std::size_t repeat = 0;
  std::size_t k = 0;  // 1-based
  std::optional<Bicluster> bicluster;
  std::string failure;
  // MSR of the same cells on the unmasked input matrix. Equals bicluster->msr
  // for the shield strategy; differs under random masking when masked cells
  // were picked up.
  double data_msr = 0.0;

  bool ok() const noexcept { return bicluster.has_value(); }
  std::size_t size() const noexcept { return bicluster ? bicluster->size() : 0; }
};

struct RunReport {
  RunConfig config;
  std::vector<BiclusterRecord> records;
};

struct KSummary {
  std::size_t k = 0;
  std::size_t count = 0;  // successful repeats
  double msr_mean = 0.0;
  double msr_std = 0.0;
  double size_mean = 0.0;
  double size_std = 0.0;
};

/// Per-k mean and sample standard deviation over the successful records,
/// one row per k in 1..k_target.
std::vector<KSummary> summarize(const RunReport& report);

/// splitmix64 finalizer over (seed, stream).
std::uint64_t deriveSeed(std::uint64_t seed, std::uint64_t stream) noexcept;

/// Seed of repeat r; also the imputation seed for that repeat.
inline std::uint64_t repeatSeed(std::uint64_t seed, std::size_t repeat) noexcept { return deriveSeed(seed, repeat); }

/// Seed of the masking generator used by the random-mask strategy in repeat r.
std::uint64_t maskSeed(std::uint64_t seed, std::size_t repeat) noexcept;

/// Discovers config.k_target bi-clusters on `m` with the configured strategy,
/// masking or shielding each one before the next search. Records carry
/// `repeat`; the masking generator is seeded from maskSeed(config.seed, repeat)
/// and draws from [min, max] of `m`.
RunReport discoverAll(const ExpressionMatrix& m, const RunConfig& config, std::size_t repeat = 0);

/// Builds the input matrix for one repeat from that repeat's seed.
using MatrixSource = std::function<ExpressionMatrix(std::uint64_t seed)>;

/// config.repeats independent runs of discoverAll, in repeat order.
RunReport runRepeats(const MatrixSource& source, const RunConfig& config);

struct KDelta {
  std::size_t k = 0;
  double msr_mean_delta = 0.0;   // shield - random-mask
  double size_mean_delta = 0.0;  // shield - random-mask
};

struct StrategyComparison {
  RunReport random_mask;
  RunReport shield;
  std::vector<KDelta> per_k;
  double msr_mean_delta = 0.0;  // over all successful records
  double size_mean_delta = 0.0;
};

/// Runs both strategies with identical seeds and inputs.
StrategyComparison compareStrategies(const MatrixSource& source, RunConfig config);

}  // namespace shieldbic
