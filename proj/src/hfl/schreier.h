#ifndef HFL_SCHREIER_H_
#define HFL_SCHREIER_H_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hfl/graph.h"

namespace hfl {

inline constexpr std::array<char, 4> kGeneratorNames = {'a', 'b', 'c', 'd'};

// Action of the free product of four copies of C2 on {0..n-1}: each
// generator acts as an involution.
class InvolutionAction {
 public:
  // Throws kValidation naming the generator and a witness point when an
  // image list is not a permutation or not an involution.
  InvolutionAction(int n, std::array<std::vector<int>, 4> generators);

  int size() const { return n_; }
  const std::vector<int>& generator(int i) const { return generators_[i]; }

 private:
  int n_;
  std::array<std::vector<int>, 4> generators_;
};

// Line 1: n. Lines 2-5: the n images of a, b, c, d.
InvolutionAction ParseAction(std::string_view text);
std::string EmitAction(const InvolutionAction& action);

// a and b are the two perfect matchings whose union is the n-cycle; c, d
// act trivially. Requires even n >= 2.
InvolutionAction CycleAction(int n);

// Four independent uniformly shuffled involutions (maximal matchings plus
// one fixed point when n is odd). Deterministic in (n, seed).
InvolutionAction RandomAction(int n, uint64_t seed);

struct SchreierGraph {
  // Degree bound 4. For each generator g and orbit {x, g x} there is one
  // edge; fixed points give loops.
  Graph graph;
  // labels[i] is the generator of graph.edges()[i].
  std::vector<char> edge_labels;
  bool transitive = false;
};

SchreierGraph BuildSchreier(const InvolutionAction& action);

// Edge-slot count per vertex per generator; every entry must be exactly 1.
std::vector<std::array<int, 4>> GeneratorSlots(const SchreierGraph& s);

// Planarity of the underlying simple graph (loops and parallel edges
// dropped).
bool IsPlanar(const Graph& g);

}  // namespace hfl

#endif  // HFL_SCHREIER_H_
