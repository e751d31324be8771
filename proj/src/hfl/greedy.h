#ifndef HFL_GREEDY_H_
#define HFL_GREEDY_H_

#include <variant>
#include <vector>

#include "hfl/graph.h"
#include "hfl/rational.h"

namespace hfl {

struct GreedyStage {
  // 1-based stage number i; the stage graph G_i is g minus E_1..E_{i-1}.
  int index = 0;
  int stage_vertex_count = 0;
  // E_i in original vertex ids.
  VertexSet folner_set;
  // Boundary of E_i taken inside G_i.
  VertexSet stage_boundary;
};

struct GreedyTrace {
  Rational eps;
  int k = 1;
  std::vector<GreedyStage> stages;
  // Union of the stage boundaries.
  VertexSet separator;
  // Set once |separator| <= eps*n and the K-separator check passed.
  bool verified = false;
};

// No witness at (eps, k) exists in the stage graph induced on `subgraph`.
struct GreedyStuck {
  Rational eps;
  int k = 1;
  int stage = 0;
  VertexSet subgraph;
  std::vector<GreedyStage> completed;
};

using GreedyResult = std::variant<GreedyTrace, GreedyStuck>;

// Repeatedly takes the preferred Følner set of the remaining graph, removes
// it, and collects its boundary. Every successful trace is re-verified
// before return; a failed verification throws kInternal.
GreedyResult GreedySeparator(const Graph& g, const Rational& eps, int k);

}  // namespace hfl

#endif  // HFL_GREEDY_H_
