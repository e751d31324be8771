#ifndef HFL_SEPARATOR_GAME_H_
#define HFL_SEPARATOR_GAME_H_

#include <cstdint>
#include <vector>

#include "hfl/graph.h"
#include "hfl/options.h"
#include "hfl/rational.h"
#include "hfl/separators.h"

namespace hfl {

// Probability distribution over K-separators with its per-vertex inclusion
// probabilities.
struct SeparatorDistribution {
  std::vector<VertexSet> support;
  std::vector<Rational> probs;
  std::vector<Rational> marginals;

  Rational MaxMarginal() const;
};

// Builds a distribution and recomputes marginals. Throws kValidation if the
// probabilities are negative, do not sum to 1, or a support member is not a
// K-separator of g.
SeparatorDistribution MakeSeparatorDistribution(const Graph& g, int k,
                                                std::vector<VertexSet> support,
                                                std::vector<Rational> probs);

enum class SupportFamily { kMinimal, kAll };

// The separator game on (g, k): the separator player mixes over K-separators
// to minimize the largest vertex marginal (eps_star); the weight player
// picks a probability vector on vertices to maximize the cheapest separator
// (w_star). Both witnesses are re-verified exactly and gap must be 0.
struct GameReport {
  int n = 0;
  int k = 1;
  SupportFamily family = SupportFamily::kMinimal;
  size_t separator_count = 0;
  int pivots = 0;
  // Least |Y|/n over K-separators.
  Rational h;
  Rational eps_star;
  Rational w_star;
  Rational gap;
  SeparatorDistribution primal;
  WeightVector dual;
  WeightedSeparator dual_best_response;
};

// Throws kSizeLimit above the enumeration cap, kNoVertices on n = 0, and
// kInternal if the certificates fail to close.
GameReport ExactGame(const Graph& g, int k, const ComputeOptions& options = {},
                     SupportFamily family = SupportFamily::kMinimal);

// ceil(n/(k+1))/n, the separator-game value of the n-cycle. Requires n >= 3
// and 1 <= k < n.
Rational CycleValueFormula(int n, int k);

// Multiplicative-weights approximation of the same game.
struct MwuReport {
  int n = 0;
  int k = 1;
  int rounds = 0;
  uint64_t seed = 0;
  // True when best responses came from exhaustive minimal-separator search;
  // false means the reverse-delete heuristic was used (n above the cap).
  bool exact_best_response = true;
  // lo <= w_star = eps_star <= hi when the matching flag is set.
  Rational lo;
  Rational hi;
  bool lo_certified = true;
  bool hi_certified = true;
  // Empirical distribution of the separator player's responses.
  SeparatorDistribution primal;
  // Weights of the round with the best response value, rounded to 1e-6
  // and renormalized exactly.
  WeightVector dual;
  WeightedSeparator dual_best_response;
};

MwuReport MwuGame(const Graph& g, int k, int rounds, uint64_t seed,
                  const ComputeOptions& options = {});

// Minimal K-separator built by re-inserting vertices in decreasing weight
// order whenever the merged component stays within k. Ties are broken by a
// seeded shuffle.
VertexSet ReverseDeleteSeparator(const Graph& g, const std::vector<double>& w,
                                 int k, uint64_t seed);

}  // namespace hfl

#endif  // HFL_SEPARATOR_GAME_H_
