#include "shieldbic/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace shieldbic {

namespace {

bool isFinite(const Scalar& x) { return std::isfinite(x.real()) && std::isfinite(x.imag()); }

// Square of a complex residue, spelled out so that a zero imaginary part
// reproduces the real computation bit for bit.
Scalar square(const Scalar& r) {
  return {r.real() * r.real() - r.imag() * r.imag(), 2.0 * r.real() * r.imag()};
}

void requireRow(const Bicluster& b, std::size_t i) {
  if (!b.containsRow(i)) throw ContractViolation("row " + std::to_string(i) + " is not in the bi-cluster");
}

void requireCol(const Bicluster& b, std::size_t j) {
  if (!b.containsCol(j)) throw ContractViolation("column " + std::to_string(j) + " is not in the bi-cluster");
}

void checkIndexSet(const std::vector<std::size_t>& idx, std::size_t bound, const char* what) {
  if (idx.empty()) throw ContractViolation(std::string("bi-cluster has no ") + what);
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] >= bound) {
      throw ContractViolation(std::string(what) + " index " + std::to_string(idx[k]) + " out of range");
    }
    if (k > 0 && idx[k - 1] >= idx[k]) {
      throw ContractViolation(std::string(what) + " indices must be strictly increasing");
    }
  }
}

}  // namespace

ExpressionMatrix::ExpressionMatrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) throw ContractViolation("matrix must have at least one row and one column");
  if (entries_.size() != rows_ * cols_) throw ContractViolation("entry count does not match matrix shape");
  if (!std::all_of(entries_.begin(), entries_.end(), isFinite)) {
    throw ContractViolation("matrix entries must be finite");
  }
}

ExpressionMatrix ExpressionMatrix::fromReal(std::size_t rows, std::size_t cols, std::span<const double> values) {
  return ExpressionMatrix(rows, cols, std::vector<Scalar>(values.begin(), values.end()));
}

ExpressionMatrix ExpressionMatrix::fromRows(std::initializer_list<std::initializer_list<double>> rows) {
  const std::size_t n = rows.size();
  const std::size_t m = n == 0 ? 0 : rows.begin()->size();
  std::vector<Scalar> entries;
  entries.reserve(n * m);
  for (const auto& row : rows) {
    if (row.size() != m) throw ContractViolation("ragged row in matrix literal");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return ExpressionMatrix(n, m, std::move(entries));
}

bool ExpressionMatrix::isReal() const noexcept { return shieldedCount() == 0; }

std::size_t ExpressionMatrix::shieldedCount() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(), [](const Scalar& x) { return x.imag() != 0.0; }));
}

ExpressionMatrix ExpressionMatrix::realPart() const {
  std::vector<Scalar> re;
  re.reserve(entries_.size());
  for (const auto& x : entries_) re.emplace_back(x.real(), 0.0);
  return ExpressionMatrix(rows_, cols_, std::move(re));
}

double ExpressionMatrix::minReal() const noexcept {
  double lo = std::numeric_limits<double>::infinity();
  for (const auto& x : entries_) lo = std::min(lo, x.real());
  return lo;
}

double ExpressionMatrix::maxReal() const noexcept {
  double hi = -std::numeric_limits<double>::infinity();
  for (const auto& x : entries_) hi = std::max(hi, x.real());
  return hi;
}

bool Bicluster::containsRow(std::size_t i) const noexcept { return std::binary_search(rows.begin(), rows.end(), i); }

bool Bicluster::containsCol(std::size_t j) const noexcept { return std::binary_search(cols.begin(), cols.end(), j); }

void validateBicluster(const ExpressionMatrix& m, const Bicluster& b) {
  checkIndexSet(b.rows, m.rows(), "row");
  checkIndexSet(b.cols, m.cols(), "column");
}

Bicluster makeBicluster(const ExpressionMatrix& m, std::vector<std::size_t> rows, std::vector<std::size_t> cols) {
  std::sort(rows.begin(), rows.end());
  std::sort(cols.begin(), cols.end());
  Bicluster b{std::move(rows), std::move(cols), 0.0};
  validateBicluster(m, b);
  b.msr = msr(m, b);
  return b;
}

Bicluster wholeMatrix(const ExpressionMatrix& m) {
  Bicluster b;
  b.rows.resize(m.rows());
  b.cols.resize(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) b.rows[i] = i;
  for (std::size_t j = 0; j < m.cols(); ++j) b.cols[j] = j;
  b.msr = msr(m, b);
  return b;
}

ResidueModel::ResidueModel(const ExpressionMatrix& m, const Bicluster& b, Coverage coverage)
    : m_(&m), row_mean_(m.rows()), col_mean_(m.cols()) {
  validateBicluster(m, b);
  const double n_cols = static_cast<double>(b.cols.size());
  const double n_rows = static_cast<double>(b.rows.size());

  auto meanOverCols = [&](std::size_t i) {
    Scalar s{};
    for (std::size_t j : b.cols) s += m(i, j);
    return s / n_cols;
  };
  auto meanOverRows = [&](std::size_t j) {
    Scalar s{};
    for (std::size_t i : b.rows) s += m(i, j);
    return s / n_rows;
  };

  if (coverage == Coverage::AllLines) {
    for (std::size_t i = 0; i < m.rows(); ++i) row_mean_[i] = meanOverCols(i);
    for (std::size_t j = 0; j < m.cols(); ++j) col_mean_[j] = meanOverRows(j);
  } else {
    for (std::size_t i : b.rows) row_mean_[i] = meanOverCols(i);
    for (std::size_t j : b.cols) col_mean_[j] = meanOverRows(j);
  }

  Scalar total{};
  for (std::size_t i : b.rows) {
    for (std::size_t j : b.cols) total += m(i, j);
  }
  mean_ = total / (n_rows * n_cols);
}

Scalar rowMean(const ExpressionMatrix& m, const Bicluster& b, std::size_t i) {
  validateBicluster(m, b);
  requireRow(b, i);
  Scalar s{};
  for (std::size_t j : b.cols) s += m(i, j);
  return s / static_cast<double>(b.cols.size());
}

Scalar colMean(const ExpressionMatrix& m, const Bicluster& b, std::size_t j) {
  validateBicluster(m, b);
  requireCol(b, j);
  Scalar s{};
  for (std::size_t i : b.rows) s += m(i, j);
  return s / static_cast<double>(b.rows.size());
}

Scalar overallMean(const ExpressionMatrix& m, const Bicluster& b) { return ResidueModel(m, b).mean(); }

Scalar residue(const ExpressionMatrix& m, const Bicluster& b, std::size_t i, std::size_t j) {
  validateBicluster(m, b);
  requireRow(b, i);
  requireCol(b, j);
  return ResidueModel(m, b).residue(i, j);
}

double variance(const ExpressionMatrix& m, const Bicluster& b) {
  const ResidueModel model(m, b);
  const double mu = model.mean().real();
  double sum = 0.0;
  for (std::size_t i : b.rows) {
    for (std::size_t j : b.cols) {
      if (m(i, j).imag() != 0.0) throw ContractViolation("variance is undefined on shielded entries");
      const double d = m(i, j).real() - mu;
      sum += d * d;
    }
  }
  return sum;
}

double msr(const ExpressionMatrix& m, const Bicluster& b) { return scoreLines(m, b, ScoreForm::Modulus).total; }

double realMsr(const ExpressionMatrix& m, const Bicluster& b) { return scoreLines(m, b, ScoreForm::RealPart).total; }

double rowMsr(const ExpressionMatrix& m, const Bicluster& b, std::size_t i) {
  const ResidueModel model(m, b);
  requireRow(b, i);
  Scalar s{};
  for (std::size_t j : b.cols) s += square(model.residue(i, j));
  return std::abs(s) / static_cast<double>(b.cols.size());
}

double colMsr(const ExpressionMatrix& m, const Bicluster& b, std::size_t j) {
  const ResidueModel model(m, b);
  requireCol(b, j);
  Scalar s{};
  for (std::size_t i : b.rows) s += square(model.residue(i, j));
  return std::abs(s) / static_cast<double>(b.rows.size());
}

LineScores scoreLines(const ExpressionMatrix& m, const Bicluster& b, ScoreForm form) {
  const ResidueModel model(m, b);
  const std::size_t nr = b.rows.size();
  const std::size_t nc = b.cols.size();
  LineScores out;
  out.rows.resize(nr);
  out.cols.resize(nc);

  if (form == ScoreForm::Modulus) {
    std::vector<Scalar> col_sum(nc);
    Scalar total{};
    for (std::size_t p = 0; p < nr; ++p) {
      Scalar row_sum{};
      for (std::size_t q = 0; q < nc; ++q) {
        const Scalar sq = square(model.residue(b.rows[p], b.cols[q]));
        row_sum += sq;
        col_sum[q] += sq;
        total += sq;
      }
      out.rows[p] = std::abs(row_sum) / static_cast<double>(nc);
    }
    for (std::size_t q = 0; q < nc; ++q) out.cols[q] = std::abs(col_sum[q]) / static_cast<double>(nr);
    out.total = std::abs(total) / static_cast<double>(nr * nc);
  } else {
    std::vector<double> col_sum(nc);
    double total = 0.0;
    for (std::size_t p = 0; p < nr; ++p) {
      double row_sum = 0.0;
      for (std::size_t q = 0; q < nc; ++q) {
        const double re = model.residue(b.rows[p], b.cols[q]).real();
        const double sq = re * re;
        row_sum += sq;
        col_sum[q] += sq;
        total += sq;
      }
      out.rows[p] = row_sum / static_cast<double>(nc);
    }
    for (std::size_t q = 0; q < nc; ++q) out.cols[q] = col_sum[q] / static_cast<double>(nr);
    out.total = total / static_cast<double>(nr * nc);
  }
  return out;
}

namespace {

template <class Residue>
double lineScore(std::span<const std::size_t> across, Residue&& residue_at, ScoreForm form) {
  if (form == ScoreForm::Modulus) {
    Scalar s{};
    for (std::size_t k : across) s += square(residue_at(k));
    return std::abs(s) / static_cast<double>(across.size());
  }
  double s = 0.0;
  for (std::size_t k : across) {
    const double re = residue_at(k).real();
    s += re * re;
  }
  return s / static_cast<double>(across.size());
}

}  // namespace

std::vector<std::pair<std::size_t, double>> scoreCandidateRows(const ExpressionMatrix& m, const Bicluster& b,
                                                               ScoreForm form) {
  const ResidueModel model(m, b, ResidueModel::Coverage::AllLines);
  std::vector<std::pair<std::size_t, double>> out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (b.containsRow(i)) continue;
    out.emplace_back(i, lineScore(b.cols, [&](std::size_t j) { return model.residue(i, j); }, form));
  }
  return out;
}

std::vector<std::pair<std::size_t, double>> scoreCandidateCols(const ExpressionMatrix& m, const Bicluster& b,
                                                               ScoreForm form) {
  const ResidueModel model(m, b, ResidueModel::Coverage::AllLines);
  std::vector<std::pair<std::size_t, double>> out;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (b.containsCol(j)) continue;
    out.emplace_back(j, lineScore(b.rows, [&](std::size_t i) { return model.residue(i, j); }, form));
  }
  return out;
}

}  // namespace shieldbic
