#include "hfl/greedy.h"

#include <algorithm>

#include "hfl/error.h"
#include "hfl/folner.h"
#include "hfl/separators.h"

namespace hfl {

GreedyResult GreedySeparator(const Graph& g, const Rational& eps, int k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
  if (sgn(eps) < 0) throw Error(ErrorCode::kInvalidArgument, "eps must be >= 0");

  const int n = g.num_vertices();
  std::vector<char> alive(n, 1);
  int remaining = n;
  std::vector<GreedyStage> stages;
  std::vector<Vertex> separator;

  while (remaining > 0) {
    std::optional<FolnerWitness> w = FindFolnerSetWithin(g, alive, eps, k);
    if (!w) {
      std::vector<Vertex> left;
      for (Vertex v = 0; v < n; ++v) {
        if (alive[v]) left.push_back(v);
      }
      return GreedyStuck{eps, k, static_cast<int>(stages.size()) + 1,
                         VertexSet::FromSorted(std::move(left)),
                         std::move(stages)};
    }
    GreedyStage stage;
    stage.index = static_cast<int>(stages.size()) + 1;
    stage.stage_vertex_count = remaining;
    stage.folner_set = std::move(w->e);
    stage.stage_boundary = std::move(w->boundary);
    for (Vertex v : stage.folner_set) alive[v] = 0;
    remaining -= static_cast<int>(stage.folner_set.size());
    separator.insert(separator.end(), stage.stage_boundary.begin(),
                     stage.stage_boundary.end());
    stages.push_back(std::move(stage));
  }

  GreedyTrace trace{eps, k, std::move(stages),
                    VertexSet::FromUnsorted(std::move(separator)), false};
  if (Rational(static_cast<long>(trace.separator.size())) > eps * n ||
      !IsKSeparator(g, trace.separator, k)) {
    throw Error(ErrorCode::kInternal,
                "greedy separator failed verification");
  }
  trace.verified = true;
  return trace;
}

}  // namespace hfl
