#ifndef HFL_GRAPH_H_
#define HFL_GRAPH_H_

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hfl {

using Vertex = int32_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  auto operator<=>(const Edge&) const = default;
};

// Sorted, duplicate-free list of vertex identifiers. Ordering is
// lexicographic on the member lists.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members);
  static VertexSet FromUnsorted(std::vector<Vertex> members);
  // Caller guarantees `members` is strictly increasing.
  static VertexSet FromSorted(std::vector<Vertex> members);
  static VertexSet Range(Vertex count);
  static VertexSet FromMask(uint64_t mask);

  bool Contains(Vertex v) const;
  bool empty() const { return members_.empty(); }
  size_t size() const { return members_.size(); }
  Vertex operator[](size_t i) const { return members_[i]; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  const std::vector<Vertex>& members() const { return members_; }
  bool IsSubsetOf(const VertexSet& other) const;

  auto operator<=>(const VertexSet&) const = default;

 private:
  std::vector<Vertex> members_;
};

// Size first, then lexicographic. The canonical order for separator lists.
bool SizeThenLex(const VertexSet& a, const VertexSet& b);

// Finite multigraph with loops and a declared degree bound. A loop counts
// once toward the degree of its vertex, each parallel edge counts once.
// Edges are kept normalized (u <= v) and sorted; the simple adjacency used
// by all boundary and separator computations ignores loops and
// multiplicities.
class Graph {
 public:
  Graph() = default;
  // Throws kInvalidVertex / kDegreeBoundViolated / kInvalidArgument.
  Graph(int num_vertices, std::vector<Edge> edges, int degree_bound);

  int num_vertices() const { return num_vertices_; }
  int degree_bound() const { return degree_bound_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int degree(Vertex v) const { return degree_[v]; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v],
            targets_.data() + offsets_[v + 1]};
  }
  bool Adjacent(Vertex u, Vertex v) const;
  int SimpleEdgeCount() const { return static_cast<int>(targets_.size() / 2); }

  // Throws kInvalidVertex if any member is out of range.
  void CheckVertices(const VertexSet& s) const;

  // Adjacency rows as bitmasks; requires n <= 64.
  std::vector<uint64_t> AdjacencyMasks() const;

 private:
  int num_vertices_ = 0;
  int degree_bound_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> degree_;
  std::vector<int> offsets_{0};
  std::vector<Vertex> targets_;
};

// Vertices of `e` with a (non-loop) neighbor outside `e`.
VertexSet Boundary(const Graph& g, const VertexSet& e);

// Components of g - y ordered by smallest member.
std::vector<VertexSet> ComponentsAfterRemoval(const Graph& g,
                                              const VertexSet& y);

struct InducedSubgraph {
  Graph graph;
  // to_original[i] is the vertex of the ambient graph that became i.
  std::vector<Vertex> to_original;
};

InducedSubgraph MakeInducedSubgraph(const Graph& g, const VertexSet& s);

// Text format: "n m d" header, then m lines "u v". '#' lines are comments.
Graph ParseGraph(std::string_view text);
std::string EmitGraph(const Graph& g);

}  // namespace hfl

#endif  // HFL_GRAPH_H_
