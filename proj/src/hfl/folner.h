#ifndef HFL_FOLNER_H_
#define HFL_FOLNER_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "hfl/graph.h"
#include "hfl/options.h"
#include "hfl/rational.h"

namespace hfl {

// A set E with |E| <= k and |boundary(E)| = eps_achieved * |E|.
struct FolnerWitness {
  VertexSet e;
  VertexSet boundary;
  int k = 1;
  Rational eps_achieved;
};

// Best witness at (eps, k): least eps_achieved, then smallest |E|, then
// lexicographically smallest. Only connected sets are searched; any witness
// has a connected component that is itself a witness with no larger ratio.
// Throws kNoVertices on the empty graph, kInvalidArgument on eps < 0 or
// k < 1.
std::optional<FolnerWitness> FindFolnerSet(const Graph& g, const Rational& eps,
                                           int k);

// As above, inside the subgraph induced on {v : alive[v]}. Boundaries are
// taken in that subgraph; vertex ids stay those of `g`.
std::optional<FolnerWitness> FindFolnerSetWithin(const Graph& g,
                                                 const std::vector<char>& alive,
                                                 const Rational& eps, int k);

// Every connected vertex set of size 1..max_size, each exactly once, in
// canonical (size, lexicographic) order. Exposed for tests.
std::vector<VertexSet> EnumerateConnectedSets(const Graph& g, int max_size);

// Size of the smallest witness at `eps` inside the subgraph induced on
// `alive`, searching sizes up to `limit`. nullopt if none that small.
std::optional<int> SmallestWitnessSize(const Graph& g,
                                       const std::vector<char>& alive,
                                       const Rational& eps, int limit);

struct UlaProfile {
  Rational eps;
  bool exact = true;
  // Certified bounds on the least k such that every nonempty induced
  // subgraph has a witness at (eps, k). Equal in exact mode.
  int k_lower = 0;
  int k_upper = 0;
  // Induced subgraph whose smallest witness attains k_lower.
  VertexSet critical_subgraph;
  uint64_t subgraphs_examined = 0;
  // Approximate mode only: least k <= search limit at which the greedy
  // construction succeeds on the whole graph. Not a certified bound.
  std::optional<int> greedy_k;
};

struct UlaApproxParams {
  int samples = 64;
  int search_limit = 8;
  uint64_t seed = 1;
};

// Exact scan over all 2^n - 1 nonempty induced subgraphs when
// n <= options.ula_cap. Above the cap, throws kSizeLimit unless
// `allow_approx`, in which case sampled subgraphs give the lower bound.
UlaProfile ComputeUlaProfile(const Graph& g, const Rational& eps,
                             bool allow_approx,
                             const ComputeOptions& options = {},
                             const UlaApproxParams& approx = {});

}  // namespace hfl

#endif  // HFL_FOLNER_H_
