#include "hfl/separators.h"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "hfl/error.h"
#include "hfl/parallel.h"

namespace hfl {

namespace {

void CheckK(int k) {
  if (k < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "component bound k must be >= 1, got " + std::to_string(k));
  }
}

// True iff every component of the subgraph induced on `alive` has at most
// k vertices.
bool ComponentsWithin(const std::vector<uint64_t>& adj, uint64_t alive,
                      int k) {
  if (std::popcount(alive) <= k) return true;
  while (alive != 0) {
    uint64_t comp = alive & (~alive + 1);
    uint64_t frontier = comp;
    while (frontier != 0) {
      uint64_t next = 0;
      for (uint64_t f = frontier; f != 0; f &= f - 1) {
        next |= adj[std::countr_zero(f)];
      }
      next &= alive & ~comp;
      comp |= next;
      if (std::popcount(comp) > k) return false;
      frontier = next;
    }
    alive &= ~comp;
  }
  return true;
}

}  // namespace

SeparatorCheck CheckKSeparator(const Graph& g, const VertexSet& y, int k) {
  CheckK(k);
  int largest = 0;
  for (VertexSet& part : ComponentsAfterRemoval(g, y)) {
    if (static_cast<int>(part.size()) > k) {
      return SeparatorRefusal{std::move(part)};
    }
    largest = std::max(largest, static_cast<int>(part.size()));
  }
  return SeparatorCertificate{y, k, largest};
}

bool IsKSeparator(const Graph& g, const VertexSet& y, int k) {
  return std::holds_alternative<SeparatorCertificate>(CheckKSeparator(g, y, k));
}

WeightVector::WeightVector(std::vector<Rational> weights)
    : weights_(std::move(weights)), total_(0) {
  for (Rational& w : weights_) {
    w.canonicalize();
    if (sgn(w) < 0) {
      throw Error(ErrorCode::kInvalidArgument, "negative vertex weight");
    }
    total_ += w;
  }
}

WeightVector WeightVector::Uniform(int n) {
  if (n <= 0) throw Error(ErrorCode::kNoVertices, "uniform weights need n >= 1");
  return WeightVector(std::vector<Rational>(n, Rational(1, n)));
}

Rational WeightVector::WeightOf(const VertexSet& s) const {
  Rational sum = 0;
  for (Vertex v : s) sum += weights_[v];
  return sum;
}

WeightVector WeightVector::Normalized() const {
  if (sgn(total_) == 0) {
    throw Error(ErrorCode::kInvalidArgument, "weights sum to zero");
  }
  std::vector<Rational> scaled = weights_;
  for (Rational& w : scaled) w /= total_;
  return WeightVector(std::move(scaled));
}

std::vector<VertexSet> EnumerateKSeparators(const Graph& g, int k,
                                            bool minimal_only,
                                            const ComputeOptions& options) {
  CheckK(k);
  const int n = g.num_vertices();
  const int cap = std::min(options.enumeration_cap, kMaxEnumerationCap);
  if (n > cap) {
    throw Error(ErrorCode::kSizeLimit,
                "graph has " + std::to_string(n) +
                    " vertices, above the enumeration cap of " +
                    std::to_string(cap) + "; use the MWU path");
  }
  const std::vector<uint64_t> adj = g.AdjacencyMasks();
  const uint64_t full = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
  const uint64_t total = uint64_t{1} << n;

  // Pass 1: separator flag for every subset, one bit each. Chunks are
  // 64-aligned so workers write disjoint words.
  std::vector<uint64_t> is_sep((total + 63) / 64, 0);
  ParallelChunks(total, options.workers, 64,
                 [&](uint64_t, uint64_t begin, uint64_t end) {
                   for (uint64_t y = begin; y < end; ++y) {
                     if (ComponentsWithin(adj, full & ~y, k)) {
                       is_sep[y >> 6] |= uint64_t{1} << (y & 63);
                     }
                   }
                 });
  auto sep = [&](uint64_t y) { return (is_sep[y >> 6] >> (y & 63)) & 1; };

  // Pass 2: minimality filter. By upward closure it is enough to check
  // single-vertex deletions.
  const uint64_t chunks = ChunkCount(total, options.workers, 64);
  std::vector<std::vector<uint64_t>> found(chunks);
  ParallelChunks(total, options.workers, 64,
                 [&](uint64_t chunk, uint64_t begin, uint64_t end) {
                   for (uint64_t y = begin; y < end; ++y) {
                     if (!sep(y)) continue;
                     bool keep = true;
                     if (minimal_only) {
                       for (uint64_t b = y; b != 0; b &= b - 1) {
                         if (sep(y & ~(b & (~b + 1)))) {
                           keep = false;
                           break;
                         }
                       }
                     }
                     if (keep) found[chunk].push_back(y);
                   }
                 });

  std::vector<VertexSet> result;
  for (const auto& part : found) {
    for (uint64_t y : part) result.push_back(VertexSet::FromMask(y));
  }
  std::sort(result.begin(), result.end(), SizeThenLex);
  return result;
}

WeightedSeparator MinWeightAmong(std::span<const VertexSet> candidates,
                                 const WeightVector& w) {
  if (candidates.empty()) {
    throw Error(ErrorCode::kInternal, "no candidate separators");
  }
  const VertexSet* best = nullptr;
  Rational best_weight;
  for (const VertexSet& y : candidates) {
    Rational weight = w.WeightOf(y);
    if (best == nullptr || weight < best_weight ||
        (weight == best_weight && SizeThenLex(y, *best))) {
      best = &y;
      best_weight = weight;
    }
  }
  return {*best, best_weight};
}

WeightedSeparator MinWeightSeparator(const Graph& g, const WeightVector& w,
                                     int k, const ComputeOptions& options) {
  if (static_cast<int>(w.size()) != g.num_vertices()) {
    throw Error(ErrorCode::kInvalidArgument,
                "weight vector length does not match vertex count");
  }
  // A minimum-weight separator of least size is inclusion-minimal, so the
  // minimal family suffices under this tie-break.
  std::vector<VertexSet> minimal = EnumerateKSeparators(g, k, true, options);
  return MinWeightAmong(minimal, w);
}

}  // namespace hfl
