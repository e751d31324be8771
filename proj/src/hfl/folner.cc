#include "hfl/folner.h"

#include <algorithm>
#include <bit>
#include <limits>
#include <random>

#include "hfl/error.h"
#include "hfl/greedy.h"
#include "hfl/parallel.h"

namespace hfl {

namespace {

struct Threshold {
  int64_t num = 0;
  int64_t den = 1;

  // |boundary| <= eps * |E|, in integers.
  bool Admits(int boundary, int size) const {
    return static_cast<__int128>(boundary) * den <=
           static_cast<__int128>(num) * size;
  }
};

Threshold MakeThreshold(const Rational& eps) {
  if (sgn(eps) < 0) {
    throw Error(ErrorCode::kInvalidArgument, "eps must be >= 0");
  }
  if (!FitsInt64(eps)) {
    throw Error(ErrorCode::kInvalidArgument,
                "eps numerator/denominator exceed 64 bits");
  }
  return {eps.get_num().get_si(), eps.get_den().get_si()};
}

// Connected sets of the subgraph induced on `alive`, via ESU-style growth:
// every set is generated exactly once, rooted at its smallest vertex and
// extended only through exclusive neighbours larger than the root.
class ConnectedSetWalker {
 public:
  ConnectedSetWalker(const Graph& g, const std::vector<char>& alive)
      : g_(g), alive_(alive), in_set_(g.num_vertices(), 0),
        cover_(g.num_vertices(), 0) {}

  // visit(members, boundary_size) is called for each set; members are in
  // insertion order. `max_size` is re-read at every step, so the visitor
  // may shrink it to prune.
  template <typename Visit>
  void Run(int* max_size, Visit&& visit) {
    max_size_ = max_size;
    for (Vertex root = 0; root < g_.num_vertices(); ++root) {
      if (!alive_[root] || *max_size_ < 1) continue;
      Push(root);
      std::vector<Vertex> ext;
      for (Vertex u : g_.neighbors(root)) {
        if (alive_[u] && u > root) ext.push_back(u);
      }
      Extend(root, std::move(ext), visit);
      Pop();
    }
  }

 private:
  template <typename Visit>
  void Extend(Vertex root, std::vector<Vertex> ext, Visit& visit) {
    visit(members_, BoundarySize());
    while (!ext.empty() && static_cast<int>(members_.size()) < *max_size_) {
      Vertex w = ext.back();
      ext.pop_back();
      std::vector<Vertex> next = ext;
      for (Vertex u : g_.neighbors(w)) {
        if (alive_[u] && u > root && cover_[u] == 0) next.push_back(u);
      }
      Push(w);
      Extend(root, std::move(next), visit);
      Pop();
    }
  }

  void Push(Vertex v) {
    members_.push_back(v);
    in_set_[v] = 1;
    ++cover_[v];
    for (Vertex u : g_.neighbors(v)) ++cover_[u];
  }

  void Pop() {
    Vertex v = members_.back();
    members_.pop_back();
    in_set_[v] = 0;
    --cover_[v];
    for (Vertex u : g_.neighbors(v)) --cover_[u];
  }

  int BoundarySize() const {
    int count = 0;
    for (Vertex v : members_) {
      for (Vertex u : g_.neighbors(v)) {
        if (alive_[u] && !in_set_[u]) {
          ++count;
          break;
        }
      }
    }
    return count;
  }

  const Graph& g_;
  const std::vector<char>& alive_;
  std::vector<char> in_set_;
  std::vector<int> cover_;
  std::vector<Vertex> members_;
  int* max_size_ = nullptr;
};

std::vector<Vertex> Sorted(const std::vector<Vertex>& members) {
  std::vector<Vertex> s = members;
  std::sort(s.begin(), s.end());
  return s;
}

std::vector<Vertex> BoundaryWithin(const Graph& g,
                                   const std::vector<char>& alive,
                                   const std::vector<Vertex>& sorted_set) {
  std::vector<char> inside(g.num_vertices(), 0);
  for (Vertex v : sorted_set) inside[v] = 1;
  std::vector<Vertex> result;
  for (Vertex v : sorted_set) {
    for (Vertex u : g.neighbors(v)) {
      if (alive[u] && !inside[u]) {
        result.push_back(v);
        break;
      }
    }
  }
  return result;
}

// Smallest component of the subgraph induced on `alive`; 0 if empty.
int SmallestComponent(const Graph& g, const std::vector<char>& alive) {
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<Vertex> queue;
  int smallest = 0;
  for (Vertex root = 0; root < g.num_vertices(); ++root) {
    if (!alive[root] || seen[root]) continue;
    queue.assign(1, root);
    seen[root] = 1;
    for (size_t head = 0; head < queue.size(); ++head) {
      for (Vertex u : g.neighbors(queue[head])) {
        if (alive[u] && !seen[u]) {
          seen[u] = 1;
          queue.push_back(u);
        }
      }
    }
    int size = static_cast<int>(queue.size());
    if (smallest == 0 || size < smallest) smallest = size;
  }
  return smallest;
}

int LargestComponent(const Graph& g) {
  int largest = 0;
  for (const VertexSet& part : ComponentsAfterRemoval(g, {})) {
    largest = std::max(largest, static_cast<int>(part.size()));
  }
  return largest;
}

}  // namespace

std::optional<FolnerWitness> FindFolnerSetWithin(const Graph& g,
                                                 const std::vector<char>& alive,
                                                 const Rational& eps, int k) {
  const Threshold threshold = MakeThreshold(eps);
  if (k < 1) {
    throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
  }
  if (std::none_of(alive.begin(), alive.end(), [](char a) { return a != 0; })) {
    throw Error(ErrorCode::kNoVertices, "graph has no vertices");
  }

  bool found = false;
  int best_boundary = 0;
  int best_size = 0;
  std::vector<Vertex> best_set;
  int max_size = k;
  ConnectedSetWalker walker(g, alive);
  walker.Run(&max_size, [&](const std::vector<Vertex>& members, int boundary) {
    const int size = static_cast<int>(members.size());
    if (!threshold.Admits(boundary, size)) return;
    if (found) {
      // Compare boundary/size ratios by cross-multiplication.
      const int64_t lhs = int64_t{boundary} * best_size;
      const int64_t rhs = int64_t{best_boundary} * size;
      if (lhs > rhs) return;
      if (lhs == rhs) {
        if (size > best_size) return;
        if (size == best_size) {
          std::vector<Vertex> sorted = Sorted(members);
          if (sorted >= best_set) return;
          best_set = std::move(sorted);
          return;
        }
      }
    }
    found = true;
    best_boundary = boundary;
    best_size = size;
    best_set = Sorted(members);
  });
  if (!found) return std::nullopt;

  FolnerWitness witness;
  witness.boundary = VertexSet::FromSorted(BoundaryWithin(g, alive, best_set));
  witness.e = VertexSet::FromSorted(std::move(best_set));
  witness.k = k;
  witness.eps_achieved = Rational(best_boundary, best_size);
  witness.eps_achieved.canonicalize();
  return witness;
}

std::optional<FolnerWitness> FindFolnerSet(const Graph& g, const Rational& eps,
                                           int k) {
  if (g.num_vertices() == 0) {
    throw Error(ErrorCode::kNoVertices, "graph has no vertices");
  }
  return FindFolnerSetWithin(g, std::vector<char>(g.num_vertices(), 1), eps,
                             k);
}

std::vector<VertexSet> EnumerateConnectedSets(const Graph& g, int max_size) {
  std::vector<VertexSet> sets;
  std::vector<char> alive(g.num_vertices(), 1);
  ConnectedSetWalker walker(g, alive);
  walker.Run(&max_size, [&](const std::vector<Vertex>& members, int) {
    sets.push_back(VertexSet::FromUnsorted(members));
  });
  std::sort(sets.begin(), sets.end(), SizeThenLex);
  return sets;
}

std::optional<int> SmallestWitnessSize(const Graph& g,
                                       const std::vector<char>& alive,
                                       const Rational& eps, int limit) {
  const Threshold threshold = MakeThreshold(eps);
  // Any whole component has an empty boundary.
  int best = SmallestComponent(g, alive);
  if (best == 0) return std::nullopt;
  int max_size = std::min(limit, best - 1);
  if (max_size >= 1) {
    ConnectedSetWalker walker(g, alive);
    walker.Run(&max_size, [&](const std::vector<Vertex>& members, int boundary) {
      const int size = static_cast<int>(members.size());
      if (size < best && threshold.Admits(boundary, size)) {
        best = size;
        max_size = size - 1;
      }
    });
  }
  if (best > limit) return std::nullopt;
  return best;
}

UlaProfile ComputeUlaProfile(const Graph& g, const Rational& eps,
                             bool allow_approx, const ComputeOptions& options,
                             const UlaApproxParams& approx) {
  MakeThreshold(eps);
  const int n = g.num_vertices();
  if (n == 0) throw Error(ErrorCode::kNoVertices, "graph has no vertices");

  UlaProfile profile;
  profile.eps = eps;

  if (n <= std::min(options.ula_cap, 62)) {
    const uint64_t total = uint64_t{1} << n;
    const uint64_t chunks = ChunkCount(total, options.workers, 1);
    struct Best {
      int k = 0;
      uint64_t mask = 0;
    };
    std::vector<Best> per_chunk(chunks);
    ParallelChunks(total, options.workers, 1,
                   [&](uint64_t chunk, uint64_t begin, uint64_t end) {
                     std::vector<char> alive(n, 0);
                     Best& best = per_chunk[chunk];
                     for (uint64_t s = std::max<uint64_t>(begin, 1); s < end;
                          ++s) {
                       for (int v = 0; v < n; ++v) alive[v] = (s >> v) & 1;
                       int k_s = *SmallestWitnessSize(g, alive, eps, n);
                       if (k_s > best.k) best = {k_s, s};
                     }
                   });
    Best overall;
    for (const Best& b : per_chunk) {
      if (b.k > overall.k) overall = b;
    }
    profile.exact = true;
    profile.k_lower = profile.k_upper = overall.k;
    profile.critical_subgraph = VertexSet::FromMask(overall.mask);
    profile.subgraphs_examined = total - 1;
    return profile;
  }

  if (!allow_approx) {
    throw Error(ErrorCode::kSizeLimit,
                "graph has " + std::to_string(n) +
                    " vertices, above the exact ULA cap of " +
                    std::to_string(options.ula_cap) +
                    "; request the approximate profile");
  }

  profile.exact = false;
  profile.k_upper = eps >= 1 ? 1 : LargestComponent(g);
  std::mt19937_64 rng(approx.seed);
  const int limit = std::max(1, approx.search_limit);
  std::vector<char> alive(n, 1);
  for (int sample = 0; sample <= approx.samples; ++sample) {
    if (sample > 0) {
      // Densities 1/8 .. 7/8 cycle so both sparse and dense subgraphs occur.
      const uint64_t density = 1 + (sample - 1) % 7;
      for (int v = 0; v < n; ++v) alive[v] = (rng() % 8) < density;
      if (std::none_of(alive.begin(), alive.end(),
                       [](char a) { return a != 0; })) {
        continue;
      }
    }
    ++profile.subgraphs_examined;
    std::optional<int> k_s = SmallestWitnessSize(g, alive, eps, limit);
    int lower = k_s ? *k_s : limit + 1;
    if (lower > profile.k_lower) {
      profile.k_lower = lower;
      std::vector<Vertex> members;
      for (int v = 0; v < n; ++v) {
        if (alive[v]) members.push_back(v);
      }
      profile.critical_subgraph = VertexSet::FromSorted(std::move(members));
    }
  }
  profile.k_lower = std::min(profile.k_lower, profile.k_upper);
  for (int k = 1; k <= limit; ++k) {
    if (std::holds_alternative<GreedyTrace>(GreedySeparator(g, eps, k))) {
      profile.greedy_k = k;
      break;
    }
  }
  return profile;
}

}  // namespace hfl
