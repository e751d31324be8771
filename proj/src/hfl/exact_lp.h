#ifndef HFL_EXACT_LP_H_
#define HFL_EXACT_LP_H_

#include <cstdint>
#include <vector>

#include "hfl/rational.h"

namespace hfl {

// Finite two-player zero-sum game given by an integer payoff matrix
// payoff[row][col]. The row player maximizes, the column player minimizes.
struct GameSolution {
  Rational value;
  // Optimal mixed strategies.
  std::vector<Rational> row_strategy;
  std::vector<Rational> col_strategy;
  int pivots = 0;
};

// Solves the game exactly. With B = payoff + shift (all entries >= 1) the
// column strategy comes from
//
//   max sum(q)  s.t.  B q <= 1,  q >= 0
//
// solved by a dense rational tableau simplex. The slack basis is feasible,
// Bland's rule (lowest entering index, lowest leaving basic index on ratio
// ties) rules out cycling, and the row strategy is read off the slack
// reduced costs of the final tableau. Requires at least one row and column.
GameSolution SolveZeroSumGame(const std::vector<std::vector<int>>& payoff);

}  // namespace hfl

#endif  // HFL_EXACT_LP_H_
