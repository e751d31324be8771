#ifndef HFL_SEPARATORS_H_
#define HFL_SEPARATORS_H_

#include <span>
#include <variant>
#include <vector>

#include "hfl/graph.h"
#include "hfl/options.h"
#include "hfl/rational.h"

namespace hfl {

// Y whose removal leaves components of at most k vertices.
struct SeparatorCertificate {
  VertexSet y;
  int k = 1;
  // Largest component of g - y; 0 when y covers every vertex.
  int max_component = 0;
};

struct SeparatorRefusal {
  // First component (by smallest member) with more than k vertices.
  VertexSet oversized_component;
};

using SeparatorCheck = std::variant<SeparatorCertificate, SeparatorRefusal>;

SeparatorCheck CheckKSeparator(const Graph& g, const VertexSet& y, int k);
bool IsKSeparator(const Graph& g, const VertexSet& y, int k);

// Nonnegative exact vertex weights.
class WeightVector {
 public:
  WeightVector() = default;
  // Throws kInvalidArgument on a negative entry.
  explicit WeightVector(std::vector<Rational> weights);
  static WeightVector Uniform(int n);

  const std::vector<Rational>& weights() const { return weights_; }
  const Rational& operator[](Vertex v) const { return weights_[v]; }
  size_t size() const { return weights_.size(); }
  const Rational& total() const { return total_; }
  Rational WeightOf(const VertexSet& s) const;
  // Scales to total 1. Throws kInvalidArgument when the total is zero.
  WeightVector Normalized() const;

 private:
  std::vector<Rational> weights_;
  Rational total_;
};

// All K-separators, or only the inclusion-minimal ones, ordered by size and
// then lexicographically. Exhaustive subset scan; throws kSizeLimit when
// n exceeds options.enumeration_cap.
std::vector<VertexSet> EnumerateKSeparators(const Graph& g, int k,
                                            bool minimal_only,
                                            const ComputeOptions& options = {});

struct WeightedSeparator {
  VertexSet y;
  Rational weight;
};

// Minimum-weight K-separator; ties go to the smaller set, then the
// lexicographically smaller one.
WeightedSeparator MinWeightSeparator(const Graph& g, const WeightVector& w,
                                     int k,
                                     const ComputeOptions& options = {});

// Same selection rule restricted to `candidates` (must be non-empty).
WeightedSeparator MinWeightAmong(std::span<const VertexSet> candidates,
                                 const WeightVector& w);

}  // namespace hfl

#endif  // HFL_SEPARATORS_H_
