#include "shieldbic/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <system_error>

#include <json.hpp>

namespace shieldbic {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n\f\v";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

std::vector<std::string_view> splitFields(std::string_view line, Format format) {
  std::vector<std::string_view> out;
  if (format == Format::YeastRaw) {
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      std::size_t end = pos;
      while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
      if (end > pos) out.push_back(line.substr(pos, end - pos));
      pos = end;
    }
    return out;
  }
  const char sep = format == Format::Csv ? ',' : '\t';
  std::size_t pos = 0;
  for (;;) {
    const auto end = line.find(sep, pos);
    out.push_back(trim(line.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos)));
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

std::string formatDouble(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::ofstream openForWrite(const fs::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  return out;
}

void finish(std::ofstream& out, const fs::path& path) {
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

json configJson(const RunConfig& c, const std::optional<DatasetSpec>& dataset) {
  json j = {
      {"strategy", std::string(toString(c.strategy))},
      {"k", c.k_target},
      {"delta", c.delta},
      {"alpha", c.alpha},
      {"phi", c.phi},
      {"seed", c.seed},
      {"repeats", c.repeats},
  };
  if (dataset) {
    j["input"] = {
        {"path", dataset->path.generic_string()},
        {"format", std::string(toString(dataset->format))},
        {"missing_sentinel", dataset->missing_sentinel},
        {"impute_low", dataset->impute_low},
        {"impute_high", dataset->impute_high},
    };
  }
  return j;
}

}  // namespace

std::string_view toString(Format f) noexcept {
  switch (f) {
    case Format::YeastRaw: return "yeast-raw";
    case Format::Csv: return "csv";
    case Format::Tsv: return "tsv";
  }
  return "?";
}

Format parseFormat(std::string_view name) {
  if (name == "yeast-raw") return Format::YeastRaw;
  if (name == "csv") return Format::Csv;
  if (name == "tsv") return Format::Tsv;
  throw std::invalid_argument("unknown format '" + std::string(name) + "' (expected yeast-raw, csv or tsv)");
}

ParseError::ParseError(const std::string& source, std::size_t line, const std::string& what)
    : std::runtime_error(source + (line ? ":" + std::to_string(line) : std::string()) + ": " + what), line_(line) {}

void DatasetSpec::validate() const {
  if (!std::isfinite(impute_low) || !std::isfinite(impute_high) || impute_low > impute_high) {
    throw std::invalid_argument("imputation range must satisfy low <= high");
  }
  if (missing_sentinel >= impute_low && missing_sentinel <= impute_high) {
    throw std::invalid_argument("missing-value sentinel must lie outside the imputation range");
  }
}

RawTable parseTable(std::istream& in, Format format, const std::string& source) {
  RawTable t;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    const auto fields = splitFields(line, format);
    if (t.rows == 0) {
      t.cols = fields.size();
    } else if (fields.size() != t.cols) {
      throw ParseError(source, lineno,
                       "expected " + std::to_string(t.cols) + " fields, found " + std::to_string(fields.size()));
    }
    for (std::string_view f : fields) {
      if (!f.empty() && f.front() == '+') f.remove_prefix(1);
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
      if (f.empty() || ec != std::errc() || ptr != f.data() + f.size() || !std::isfinite(v)) {
        throw ParseError(source, lineno, "not a finite number: '" + std::string(f) + "'");
      }
      t.values.push_back(v);
    }
    ++t.rows;
  }
  if (t.rows == 0) throw ParseError(source, 0, "no data");
  return t;
}

RawTable readTable(const DatasetSpec& spec) {
  std::ifstream in(spec.path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + spec.path.string());
  return parseTable(in, spec.format, spec.path.string());
}

ExpressionMatrix impute(const RawTable& table, const DatasetSpec& spec, std::uint64_t seed) {
  spec.validate();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> draw(spec.impute_low, spec.impute_high);
  std::vector<double> values = table.values;
  for (double& v : values) {
    if (v != spec.missing_sentinel) continue;
    v = spec.impute_low == spec.impute_high ? spec.impute_low : draw(rng);
  }
  return ExpressionMatrix::fromReal(table.rows, table.cols, values);
}

ExpressionMatrix loadMatrix(const DatasetSpec& spec, std::uint64_t seed) { return impute(readTable(spec), spec, seed); }

MatrixSource datasetSource(const DatasetSpec& spec) {
  spec.validate();
  return [table = readTable(spec), spec](std::uint64_t seed) { return impute(table, spec, seed); };
}

void writeMatrix(const ExpressionMatrix& m, const fs::path& path, Format format) {
  const char sep = format == Format::Csv ? ',' : format == Format::Tsv ? '\t' : ' ';
  auto out = openForWrite(path);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << sep;
      out << formatDouble(m(i, j).real());
    }
    out << '\n';
  }
  finish(out, path);
}

ReportFiles writeReport(const RunReport& report, const fs::path& out_dir, const std::optional<DatasetSpec>& dataset) {
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw std::runtime_error("cannot create " + out_dir.string() + ": " + ec.message());
  ReportFiles files{out_dir / "biclusters.jsonl", out_dir / "summary.tsv", out_dir / "config.json"};

  {
    auto out = openForWrite(files.records);
    out << json{{"format", "shieldbic-biclusters"},
                {"version", 1},
                {"index_base", 0},
                {"strategy", std::string(toString(report.config.strategy))}}
               .dump()
        << '\n';
    for (const auto& rec : report.records) {
      json j = {{"repeat", rec.repeat}, {"k", rec.k}};
      if (rec.ok()) {
        j["status"] = "ok";
        j["rows"] = rec.bicluster->rows;
        j["cols"] = rec.bicluster->cols;
        j["msr"] = rec.bicluster->msr;
        j["data_msr"] = rec.data_msr;
        j["size"] = rec.size();
      } else {
        j["status"] = "failed";
        j["reason"] = rec.failure;
      }
      out << j.dump() << '\n';
    }
    finish(out, files.records);
  }

  {
    auto out = openForWrite(files.summary);
    out << "k\tcount\tmsr_mean\tmsr_std\tsize_mean\tsize_std\n";
    for (const auto& s : summarize(report)) {
      out << s.k << '\t' << s.count << '\t' << formatDouble(s.msr_mean) << '\t' << formatDouble(s.msr_std) << '\t'
          << formatDouble(s.size_mean) << '\t' << formatDouble(s.size_std) << '\n';
    }
    finish(out, files.summary);
  }

  {
    auto out = openForWrite(files.config);
    out << configJson(report.config, dataset).dump(2) << '\n';
    finish(out, files.config);
  }
  return files;
}

std::vector<BiclusterRecord> readRecords(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<BiclusterRecord> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    try {
      const json j = json::parse(line);
      if (j.contains("format")) continue;
      BiclusterRecord rec;
      rec.repeat = j.at("repeat").get<std::size_t>();
      rec.k = j.at("k").get<std::size_t>();
      if (j.at("status") == "ok") {
        Bicluster b;
        b.rows = j.at("rows").get<std::vector<std::size_t>>();
        b.cols = j.at("cols").get<std::vector<std::size_t>>();
        b.msr = j.at("msr").get<double>();
        rec.data_msr = j.at("data_msr").get<double>();
        rec.bicluster = std::move(b);
      } else {
        rec.failure = j.value("reason", std::string());
      }
      out.push_back(std::move(rec));
    } catch (const json::exception& e) {
      throw ParseError(path.string(), lineno, e.what());
    }
  }
  return out;
}

void writeComparison(const StrategyComparison& comparison, const fs::path& out_dir,
                     const std::optional<DatasetSpec>& dataset) {
  writeReport(comparison.random_mask, out_dir / "random-mask", dataset);
  writeReport(comparison.shield, out_dir / "shield", dataset);
  const fs::path path = out_dir / "comparison.tsv";
  auto out = openForWrite(path);
  out << "k\tmsr_mean_delta\tsize_mean_delta\n";
  for (const auto& d : comparison.per_k) {
    out << d.k << '\t' << formatDouble(d.msr_mean_delta) << '\t' << formatDouble(d.size_mean_delta) << '\n';
  }
  out << "all\t" << formatDouble(comparison.msr_mean_delta) << '\t' << formatDouble(comparison.size_mean_delta)
      << '\n';
  finish(out, path);
}

}  // namespace shieldbic
