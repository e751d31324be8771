#include "hfl/exact_lp.h"

#include <algorithm>
#include <limits>

#include "hfl/error.h"

namespace hfl {

GameSolution SolveZeroSumGame(const std::vector<std::vector<int>>& payoff) {
  const int rows = static_cast<int>(payoff.size());
  if (rows == 0 || payoff[0].empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty payoff matrix");
  }
  const int cols = static_cast<int>(payoff[0].size());
  int lowest = std::numeric_limits<int>::max();
  for (const auto& row : payoff) {
    if (static_cast<int>(row.size()) != cols) {
      throw Error(ErrorCode::kInvalidArgument, "ragged payoff matrix");
    }
    for (int a : row) lowest = std::min(lowest, a);
  }
  const int shift = 1 - lowest;

  // Columns: cols structural, rows slack, then the right-hand side.
  const int width = cols + rows + 1;
  const int rhs = width - 1;
  std::vector<std::vector<Rational>> tableau(rows,
                                             std::vector<Rational>(width));
  std::vector<int> basis(rows);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) tableau[r][c] = payoff[r][c] + shift;
    tableau[r][cols + r] = 1;
    tableau[r][rhs] = 1;
    basis[r] = cols + r;
  }
  // Reduced costs; reduced[rhs] holds minus the objective value.
  std::vector<Rational> reduced(width);
  for (int c = 0; c < cols; ++c) reduced[c] = 1;

  GameSolution solution;
  Rational ratio, best_ratio, factor;
  while (true) {
    int enter = -1;
    for (int c = 0; c < rhs; ++c) {
      if (sgn(reduced[c]) > 0) {
        enter = c;
        break;
      }
    }
    if (enter < 0) break;

    int leave = -1;
    for (int r = 0; r < rows; ++r) {
      if (sgn(tableau[r][enter]) <= 0) continue;
      ratio = tableau[r][rhs] / tableau[r][enter];
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[r] < basis[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    if (leave < 0) {
      // Cannot happen: every structural column is strictly positive.
      throw Error(ErrorCode::kInternal, "unbounded game LP");
    }

    std::vector<Rational>& pivot_row = tableau[leave];
    const Rational pivot = pivot_row[enter];
    for (Rational& x : pivot_row) {
      if (sgn(x) != 0) x /= pivot;
    }
    for (int r = 0; r < rows; ++r) {
      if (r == leave || sgn(tableau[r][enter]) == 0) continue;
      factor = tableau[r][enter];
      for (int c = 0; c < width; ++c) {
        if (sgn(pivot_row[c]) != 0) tableau[r][c] -= factor * pivot_row[c];
      }
    }
    if (sgn(reduced[enter]) != 0) {
      factor = reduced[enter];
      for (int c = 0; c < width; ++c) {
        if (sgn(pivot_row[c]) != 0) reduced[c] -= factor * pivot_row[c];
      }
    }
    basis[leave] = enter;
    ++solution.pivots;
  }

  const Rational objective = -reduced[rhs];
  solution.value = 1 / objective - shift;
  solution.col_strategy.assign(cols, 0);
  for (int r = 0; r < rows; ++r) {
    if (basis[r] < cols) {
      solution.col_strategy[basis[r]] = tableau[r][rhs] / objective;
    }
  }
  solution.row_strategy.assign(rows, 0);
  for (int r = 0; r < rows; ++r) {
    solution.row_strategy[r] = -reduced[cols + r] / objective;
  }
  return solution;
}

}  // namespace hfl
