#include "shieldbic/pipeline.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "shieldbic/cheng_church.hpp"
#include "shieldbic/shield.hpp"

namespace shieldbic {

namespace {

constexpr std::uint64_t kMaskStream = 0x6d61736bULL;

struct Moments {
  double mean = 0.0;
  double std = 0.0;
};

Moments moments(const std::vector<double>& xs) {
  Moments out;
  if (xs.empty()) return out;
  for (double x : xs) out.mean += x;
  out.mean /= static_cast<double>(xs.size());
  if (xs.size() < 2) return out;
  double ss = 0.0;
  for (double x : xs) ss += (x - out.mean) * (x - out.mean);
  out.std = std::sqrt(ss / static_cast<double>(xs.size() - 1));
  return out;
}

RunReport discoverRandomMask(const ExpressionMatrix& m, const RunConfig& config, std::size_t repeat) {
  RunReport report{config, {}};
  const GreedyParams params{config.delta, config.alpha, maskSeed(config.seed, repeat)};
  std::mt19937_64 rng(params.rng_seed);
  const ValueRange range{m.minReal(), m.maxReal()};

  ExpressionMatrix current = m;
  for (std::size_t k = 1; k <= config.k_target; ++k) {
    BiclusterRecord rec{repeat, k, std::nullopt, {}, 0.0};
    try {
      Bicluster b = findBicluster(current, params);
      rec.data_msr = msr(m, b);
      current = maskRandom(current, b, range, rng);
      rec.bicluster = std::move(b);
    } catch (const DegenerateBicluster& e) {
      rec.failure = e.what();
    }
    report.records.push_back(std::move(rec));
  }
  return report;
}

RunReport discoverShielded(const ExpressionMatrix& m, const RunConfig& config, std::size_t repeat) {
  RunReport report{config, {}};
  const ShieldParams params{config.phi, config.alpha, config.delta};
  ShieldState state(m);
  for (std::size_t k = 1; k <= config.k_target; ++k) {
    BiclusterRecord rec{repeat, k, std::nullopt, {}, 0.0};
    try {
      ShieldedResult found = findShieldedBicluster(state, params);
      rec.data_msr = found.bicluster.msr;
      rec.bicluster = std::move(found.bicluster);
      state = std::move(found.state);
    } catch (const DegenerateBicluster& e) {
      rec.failure = e.what();
    }
    report.records.push_back(std::move(rec));
  }
  return report;
}

}  // namespace

std::string_view toString(Strategy s) noexcept { return s == Strategy::Shield ? "shield" : "random-mask"; }

Strategy parseStrategy(std::string_view name) {
  if (name == "shield") return Strategy::Shield;
  if (name == "random-mask") return Strategy::RandomMask;
  throw std::invalid_argument("unknown strategy '" + std::string(name) + "' (expected random-mask or shield)");
}

void RunConfig::validate() const {
  if (k_target < 1) throw std::invalid_argument("k must be >= 1");
  if (repeats < 1) throw std::invalid_argument("repeats must be >= 1");
  if (!std::isfinite(delta) || delta < 0.0) throw std::invalid_argument("delta must be a finite value >= 0");
  if (!std::isfinite(alpha) || alpha <= 1.0) throw std::invalid_argument("alpha must be > 1");
  if (!std::isfinite(phi) || phi < 1.0) throw std::invalid_argument("phi must be >= 1 (shielding factor)");
}

std::uint64_t deriveSeed(std::uint64_t seed, std::uint64_t stream) noexcept {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t maskSeed(std::uint64_t seed, std::size_t repeat) noexcept {
  return deriveSeed(repeatSeed(seed, repeat), kMaskStream);
}

std::vector<KSummary> summarize(const RunReport& report) {
  std::vector<std::vector<double>> msrs(report.config.k_target);
  std::vector<std::vector<double>> sizes(report.config.k_target);
  for (const auto& rec : report.records) {
    if (!rec.ok() || rec.k < 1 || rec.k > report.config.k_target) continue;
    msrs[rec.k - 1].push_back(rec.bicluster->msr);
    sizes[rec.k - 1].push_back(static_cast<double>(rec.size()));
  }
  std::vector<KSummary> out;
  out.reserve(report.config.k_target);
  for (std::size_t k = 0; k < report.config.k_target; ++k) {
    const Moments m = moments(msrs[k]);
    const Moments s = moments(sizes[k]);
    out.push_back({k + 1, msrs[k].size(), m.mean, m.std, s.mean, s.std});
  }
  return out;
}

RunReport discoverAll(const ExpressionMatrix& m, const RunConfig& config, std::size_t repeat) {
  config.validate();
  return config.strategy == Strategy::Shield ? discoverShielded(m, config, repeat)
                                             : discoverRandomMask(m, config, repeat);
}

RunReport runRepeats(const MatrixSource& source, const RunConfig& config) {
  config.validate();
  RunReport report{config, {}};
  for (std::size_t r = 0; r < config.repeats; ++r) {
    const ExpressionMatrix m = source(repeatSeed(config.seed, r));
    RunReport one = discoverAll(m, config, r);
    for (auto& rec : one.records) report.records.push_back(std::move(rec));
  }
  return report;
}

StrategyComparison compareStrategies(const MatrixSource& source, RunConfig config) {
  StrategyComparison out;
  config.strategy = Strategy::RandomMask;
  out.random_mask = runRepeats(source, config);
  config.strategy = Strategy::Shield;
  out.shield = runRepeats(source, config);

  const auto base = summarize(out.random_mask);
  const auto shielded = summarize(out.shield);
  for (std::size_t k = 0; k < base.size(); ++k) {
    if (base[k].count == 0 || shielded[k].count == 0) continue;
    out.per_k.push_back(
        {k + 1, shielded[k].msr_mean - base[k].msr_mean, shielded[k].size_mean - base[k].size_mean});
  }

  auto overall = [](const RunReport& r) {
    std::vector<double> msrs, sizes;
    for (const auto& rec : r.records) {
      if (!rec.ok()) continue;
      msrs.push_back(rec.bicluster->msr);
      sizes.push_back(static_cast<double>(rec.size()));
    }
    return std::pair{moments(msrs).mean, moments(sizes).mean};
  };
  const auto [base_msr, base_size] = overall(out.random_mask);
  const auto [shield_msr, shield_size] = overall(out.shield);
  out.msr_mean_delta = shield_msr - base_msr;
  out.size_mean_delta = shield_size - base_size;
  return out;
}

}  // namespace shieldbic
