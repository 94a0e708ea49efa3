#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace shieldbic {

/// Expression level in the real part; the imaginary part is only ever
/// written by shielding.
using Scalar = std::complex<double>;

/// Raised when a caller breaks an operation's precondition (bad index,
/// empty bi-cluster, non-finite entry, ...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Dense row-major n x m matrix of complex-capable entries.
class ExpressionMatrix {
 public:
  ExpressionMatrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static ExpressionMatrix fromReal(std::size_t rows, std::size_t cols, std::span<const double> values);
  static ExpressionMatrix fromRows(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const Scalar& operator()(std::size_t i, std::size_t j) const noexcept { return entries_[i * cols_ + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) noexcept { return entries_[i * cols_ + j]; }

  std::span<const Scalar> entries() const noexcept { return entries_; }

  /// True when no entry carries an imaginary component.
  bool isReal() const noexcept;
  /// Number of entries whose imaginary part is nonzero.
  std::size_t shieldedCount() const noexcept;
  ExpressionMatrix realPart() const;

  double minReal() const noexcept;
  double maxReal() const noexcept;

  friend bool operator==(const ExpressionMatrix&, const ExpressionMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

/// A sub-matrix selected by sorted, duplicate-free row and column index sets.
struct Bicluster {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  double msr = 0.0;

  std::size_t size() const noexcept { return rows.size() * cols.size(); }
  bool containsRow(std::size_t i) const noexcept;
  bool containsCol(std::size_t j) const noexcept;

  /// Same index sets; the cached score is ignored.
  bool sameCells(const Bicluster& other) const noexcept { return rows == other.rows && cols == other.cols; }

  friend bool operator==(const Bicluster&, const Bicluster&) = default;
};

/// Builds a bi-cluster from arbitrary index lists (sorted and validated) and
/// fills in its MSR.
Bicluster makeBicluster(const ExpressionMatrix& m, std::vector<std::size_t> rows, std::vector<std::size_t> cols);
Bicluster wholeMatrix(const ExpressionMatrix& m);

/// Throws ContractViolation unless `b` is a non-empty, sorted, in-range
/// index set pair over `m`.
void validateBicluster(const ExpressionMatrix& m, const Bicluster& b);

// Pointwise residue algebra. Every function validates its indices.
Scalar rowMean(const ExpressionMatrix& m, const Bicluster& b, std::size_t i);
Scalar colMean(const ExpressionMatrix& m, const Bicluster& b, std::size_t j);
Scalar overallMean(const ExpressionMatrix& m, const Bicluster& b);
Scalar residue(const ExpressionMatrix& m, const Bicluster& b, std::size_t i, std::size_t j);

/// Unnormalized sum of squared deviations from the bi-cluster mean. Only
/// defined for unshielded sub-matrices.
double variance(const ExpressionMatrix& m, const Bicluster& b);

/// Mean squared residue |sum r_ij^2| / (|rows| |cols|). For real data the
/// modulus is a no-op and this is the classic score.
double msr(const ExpressionMatrix& m, const Bicluster& b);
double rowMsr(const ExpressionMatrix& m, const Bicluster& b, std::size_t i);
double colMsr(const ExpressionMatrix& m, const Bicluster& b, std::size_t j);

/// MSR computed from the squared real parts of the residues, i.e. the score
/// of the underlying real data.
double realMsr(const ExpressionMatrix& m, const Bicluster& b);

enum class ScoreForm {
  Modulus,   // |sum r^2| / count
  RealPart,  // sum real(r)^2 / count
};

/// Row, column and overall means of one bi-cluster, with the residue model
/// extended to lines outside it.
///
/// Row means are taken over the bi-cluster's columns and column means over
/// its rows. With `Coverage::AllLines` they are also computed for rows and
/// columns not in the bi-cluster, which is what node addition scores.
class ResidueModel {
 public:
  enum class Coverage { Bicluster, AllLines };

  ResidueModel(const ExpressionMatrix& m, const Bicluster& b, Coverage coverage = Coverage::Bicluster);

  const Scalar& rowMean(std::size_t i) const noexcept { return row_mean_[i]; }
  const Scalar& colMean(std::size_t j) const noexcept { return col_mean_[j]; }
  const Scalar& mean() const noexcept { return mean_; }

  // Grouped so that a single row or column bi-cluster has residues of exactly 0.
  Scalar residue(std::size_t i, std::size_t j) const noexcept {
    return ((*m_)(i, j) - col_mean_[j]) - (row_mean_[i] - mean_);
  }

 private:
  const ExpressionMatrix* m_;
  std::vector<Scalar> row_mean_;
  std::vector<Scalar> col_mean_;
  Scalar mean_;
};

/// Per-line scores of every row and column inside a bi-cluster.
struct LineScores {
  std::vector<double> rows;  // parallel to Bicluster::rows
  std::vector<double> cols;  // parallel to Bicluster::cols
  double total = 0.0;        // whole bi-cluster score
};

LineScores scoreLines(const ExpressionMatrix& m, const Bicluster& b, ScoreForm form);

/// Scores of the rows (resp. columns) outside `b`, measured against the
/// residue model of `b`: row means over b.cols, column means over b.rows and
/// the overall mean of `b`. Pairs are (matrix index, score), ascending index.
std::vector<std::pair<std::size_t, double>> scoreCandidateRows(const ExpressionMatrix& m, const Bicluster& b,
                                                               ScoreForm form);
std::vector<std::pair<std::size_t, double>> scoreCandidateCols(const ExpressionMatrix& m, const Bicluster& b,
                                                               ScoreForm form);

}  // namespace shieldbic
