#pragma once

// Deletion/addition machinery shared by the Cheng-Church baseline and the
// shielded search. The two differ only in the stopping rule.

#include <limits>

#include "shieldbic/matrix.hpp"

namespace shieldbic::detail {

struct DeletionRule {
  double delta = 0.0;
  double alpha = 1.2;
  // Also require the real-part MSR to be within delta before stopping.
  bool real_budget = false;
};

bool withinBudget(const ExpressionMatrix& m, const Bicluster& b, double modulus_score, const DeletionRule& rule);

Bicluster collectiveDeletion(const ExpressionMatrix& m, Bicluster b, const DeletionRule& rule);
Bicluster singleLineDeletion(const ExpressionMatrix& m, Bicluster b, const DeletionRule& rule);
// Candidate scores within this fraction of the bi-cluster's mean squared entry
// above H still count as "not above H". Exactly coherent lines otherwise get
// admitted or refused by rounding noise.
inline constexpr double kAdditionRoundoff = 1e-18;

double additionSlack(const ExpressionMatrix& m, const Bicluster& b);

// Adds columns then rows whose real-part score is <= the real-part MSR, until
// nothing changes. A round that would push the real-part MSR above `ceiling`
// is undone and ends the search.
Bicluster realPartAddition(const ExpressionMatrix& m, Bicluster b,
                           double ceiling = std::numeric_limits<double>::infinity());

}  // namespace shieldbic::detail
