#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "shieldbic/matrix.hpp"
#include "shieldbic/pipeline.hpp"

namespace shieldbic {

enum class Format { YeastRaw, Csv, Tsv };

std::string_view toString(Format f) noexcept;
Format parseFormat(std::string_view name);

/// Malformed input. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct DatasetSpec {
  std::filesystem::path path;
  Format format = Format::YeastRaw;
  double missing_sentinel = -1.0;
  double impute_low = 0.0;
  double impute_high = 800.0;

  void validate() const;
};

/// Rectangular grid of raw values, missing entries still holding the sentinel.
struct RawTable {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;  // row-major
};

RawTable parseTable(std::istream& in, Format format, const std::string& source = "<stream>");
RawTable readTable(const DatasetSpec& spec);

/// Replaces every value equal to the sentinel with a uniform draw from
/// [impute_low, impute_high], row-major, from a generator seeded with `seed`.
ExpressionMatrix impute(const RawTable& table, const DatasetSpec& spec, std::uint64_t seed);

ExpressionMatrix loadMatrix(const DatasetSpec& spec, std::uint64_t seed);

/// Matrix source for runRepeats: parses once, imputes per repeat seed.
MatrixSource datasetSource(const DatasetSpec& spec);

/// Writes the real parts with shortest round-trip formatting.
void writeMatrix(const ExpressionMatrix& m, const std::filesystem::path& path, Format format);

struct ReportFiles {
  std::filesystem::path records;  // biclusters.jsonl
  std::filesystem::path summary;  // summary.tsv
  std::filesystem::path config;   // config.json
};

ReportFiles writeReport(const RunReport& report, const std::filesystem::path& out_dir,
                        const std::optional<DatasetSpec>& dataset = std::nullopt);

/// Reads a biclusters.jsonl file back. The stored msr is kept as written.
std::vector<BiclusterRecord> readRecords(const std::filesystem::path& path);

/// Writes random-mask/ and shield/ report directories plus comparison.tsv.
void writeComparison(const StrategyComparison& comparison, const std::filesystem::path& out_dir,
                     const std::optional<DatasetSpec>& dataset = std::nullopt);

}  // namespace shieldbic
