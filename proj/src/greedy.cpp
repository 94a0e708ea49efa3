#include "greedy.hpp"

#include <algorithm>
#include <iterator>

#include "shieldbic/cheng_church.hpp"

namespace shieldbic::detail {

namespace {

// Keeps the lines whose score is <= threshold. Returns the number removed, or
// 0 without touching `lines` if every line would go.
std::size_t dropAbove(std::vector<std::size_t>& lines, const std::vector<double>& scores, double threshold) {
  std::vector<std::size_t> kept;
  kept.reserve(lines.size());
  for (std::size_t p = 0; p < lines.size(); ++p) {
    if (!(scores[p] > threshold)) kept.push_back(lines[p]);
  }
  if (kept.empty()) return 0;
  const std::size_t removed = lines.size() - kept.size();
  lines = std::move(kept);
  return removed;
}

void mergeInto(std::vector<std::size_t>& lines, const std::vector<std::size_t>& extra) {
  std::vector<std::size_t> merged;
  merged.reserve(lines.size() + extra.size());
  std::merge(lines.begin(), lines.end(), extra.begin(), extra.end(), std::back_inserter(merged));
  lines = std::move(merged);
}

}  // namespace

bool withinBudget(const ExpressionMatrix& m, const Bicluster& b, double modulus_score, const DeletionRule& rule) {
  if (modulus_score > rule.delta) return false;
  return !rule.real_budget || realMsr(m, b) <= rule.delta;
}

Bicluster collectiveDeletion(const ExpressionMatrix& m, Bicluster b, const DeletionRule& rule) {
  for (;;) {
    LineScores s = scoreLines(m, b, ScoreForm::Modulus);
    if (withinBudget(m, b, s.total, rule)) {
      b.msr = s.total;
      return b;
    }
    const std::size_t rows_removed = dropAbove(b.rows, s.rows, rule.alpha * s.total);
    if (rows_removed > 0) s = scoreLines(m, b, ScoreForm::Modulus);
    const std::size_t cols_removed = dropAbove(b.cols, s.cols, rule.alpha * s.total);
    if (rows_removed == 0 && cols_removed == 0) {
      b.msr = s.total;
      return b;
    }
  }
}

Bicluster singleLineDeletion(const ExpressionMatrix& m, Bicluster b, const DeletionRule& rule) {
  for (;;) {
    const LineScores s = scoreLines(m, b, ScoreForm::Modulus);
    if (withinBudget(m, b, s.total, rule)) {
      b.msr = s.total;
      return b;
    }
    const auto row_it = std::max_element(s.rows.begin(), s.rows.end());
    const auto col_it = std::max_element(s.cols.begin(), s.cols.end());
    const bool take_row = *row_it >= *col_it;
    auto& lines = take_row ? b.rows : b.cols;
    if (lines.size() == 1) throw DegenerateBicluster("single node deletion would empty the bi-cluster");
    const auto pos = take_row ? std::distance(s.rows.begin(), row_it) : std::distance(s.cols.begin(), col_it);
    lines.erase(lines.begin() + pos);
  }
}

double additionSlack(const ExpressionMatrix& m, const Bicluster& b) {
  double sq = 0.0;
  for (std::size_t i : b.rows) {
    for (std::size_t j : b.cols) sq += m(i, j).real() * m(i, j).real();
  }
  return kAdditionRoundoff * sq / static_cast<double>(b.size());
}

Bicluster realPartAddition(const ExpressionMatrix& m, Bicluster b, double ceiling) {
  for (;;) {
    const Bicluster before = b;
    const double slack = additionSlack(m, b);
    std::vector<std::size_t> new_cols;
    double h = realMsr(m, b);
    for (const auto& [j, score] : scoreCandidateCols(m, b, ScoreForm::RealPart)) {
      if (score <= h + slack) new_cols.push_back(j);
    }
    if (!new_cols.empty()) {
      mergeInto(b.cols, new_cols);
      h = realMsr(m, b);
    }
    std::vector<std::size_t> new_rows;
    for (const auto& [i, score] : scoreCandidateRows(m, b, ScoreForm::RealPart)) {
      if (score <= h + slack) new_rows.push_back(i);
    }
    if (!new_rows.empty()) mergeInto(b.rows, new_rows);
    if (new_cols.empty() && new_rows.empty()) {
      b.msr = msr(m, b);
      return b;
    }
    if (realMsr(m, b) > ceiling) {
      b = before;
      b.msr = msr(m, b);
      return b;
    }
  }
}

}  // namespace shieldbic::detail
