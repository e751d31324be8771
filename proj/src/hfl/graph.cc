#include "hfl/graph.h"

#include <algorithm>
#include <bit>
#include <charconv>
#include <limits>

#include "hfl/error.h"

namespace hfl {

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(FromUnsorted(std::vector<Vertex>(members))) {}

VertexSet VertexSet::FromUnsorted(std::vector<Vertex> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return FromSorted(std::move(members));
}

VertexSet VertexSet::FromSorted(std::vector<Vertex> members) {
  VertexSet s;
  s.members_ = std::move(members);
  return s;
}

VertexSet VertexSet::Range(Vertex count) {
  std::vector<Vertex> members(count);
  for (Vertex v = 0; v < count; ++v) members[v] = v;
  return FromSorted(std::move(members));
}

VertexSet VertexSet::FromMask(uint64_t mask) {
  std::vector<Vertex> members;
  members.reserve(std::popcount(mask));
  while (mask != 0) {
    members.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return FromSorted(std::move(members));
}

bool VertexSet::Contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

bool VertexSet::IsSubsetOf(const VertexSet& other) const {
  return std::includes(other.begin(), other.end(), begin(), end());
}

bool SizeThenLex(const VertexSet& a, const VertexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

Graph::Graph(int num_vertices, std::vector<Edge> edges, int degree_bound)
    : num_vertices_(num_vertices),
      degree_bound_(degree_bound),
      edges_(std::move(edges)) {
  if (num_vertices < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative vertex count");
  }
  if (degree_bound < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative degree bound");
  }
  degree_.assign(num_vertices, 0);
  for (Edge& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= num_vertices || e.v >= num_vertices) {
      throw Error(ErrorCode::kInvalidVertex,
                  "edge endpoint out of range: " + std::to_string(e.u) + " " +
                      std::to_string(e.v));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    ++degree_[e.u];
    if (e.u != e.v) ++degree_[e.v];
  }
  for (Vertex v = 0; v < num_vertices; ++v) {
    if (degree_[v] > degree_bound) {
      throw Error(ErrorCode::kDegreeBoundViolated,
                  "vertex " + std::to_string(v) + " has degree " +
                      std::to_string(degree_[v]) + " > " +
                      std::to_string(degree_bound));
    }
  }
  std::sort(edges_.begin(), edges_.end());

  std::vector<std::vector<Vertex>> adj(num_vertices);
  for (const Edge& e : edges_) {
    if (e.u == e.v) continue;
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  offsets_.assign(num_vertices + 1, 0);
  for (Vertex v = 0; v < num_vertices; ++v) {
    std::sort(adj[v].begin(), adj[v].end());
    adj[v].erase(std::unique(adj[v].begin(), adj[v].end()), adj[v].end());
    offsets_[v + 1] = offsets_[v] + static_cast<int>(adj[v].size());
  }
  targets_.reserve(offsets_.back());
  for (const auto& row : adj) targets_.insert(targets_.end(), row.begin(), row.end());
}

bool Graph::Adjacent(Vertex u, Vertex v) const {
  auto row = neighbors(u);
  return std::binary_search(row.begin(), row.end(), v);
}

void Graph::CheckVertices(const VertexSet& s) const {
  if (!s.empty() && (s[0] < 0 || s[s.size() - 1] >= num_vertices_)) {
    Vertex bad = s[0] < 0 ? s[0] : s[s.size() - 1];
    throw Error(ErrorCode::kInvalidVertex,
                "vertex " + std::to_string(bad) + " not in graph on " +
                    std::to_string(num_vertices_) + " vertices");
  }
}

std::vector<uint64_t> Graph::AdjacencyMasks() const {
  if (num_vertices_ > 64) {
    throw Error(ErrorCode::kSizeLimit, "bitmask adjacency needs n <= 64");
  }
  std::vector<uint64_t> rows(num_vertices_, 0);
  for (Vertex v = 0; v < num_vertices_; ++v) {
    for (Vertex u : neighbors(v)) rows[v] |= uint64_t{1} << u;
  }
  return rows;
}

VertexSet Boundary(const Graph& g, const VertexSet& e) {
  g.CheckVertices(e);
  std::vector<char> inside(g.num_vertices(), 0);
  for (Vertex v : e) inside[v] = 1;
  std::vector<Vertex> result;
  for (Vertex v : e) {
    for (Vertex u : g.neighbors(v)) {
      if (!inside[u]) {
        result.push_back(v);
        break;
      }
    }
  }
  return VertexSet::FromSorted(std::move(result));
}

std::vector<VertexSet> ComponentsAfterRemoval(const Graph& g,
                                              const VertexSet& y) {
  g.CheckVertices(y);
  const int n = g.num_vertices();
  std::vector<char> seen(n, 0);
  for (Vertex v : y) seen[v] = 1;
  std::vector<VertexSet> parts;
  std::vector<Vertex> queue;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    queue.assign(1, root);
    seen[root] = 1;
    for (size_t head = 0; head < queue.size(); ++head) {
      for (Vertex u : g.neighbors(queue[head])) {
        if (!seen[u]) {
          seen[u] = 1;
          queue.push_back(u);
        }
      }
    }
    parts.push_back(VertexSet::FromUnsorted(queue));
  }
  return parts;
}

InducedSubgraph MakeInducedSubgraph(const Graph& g, const VertexSet& s) {
  g.CheckVertices(s);
  std::vector<Vertex> relabel(g.num_vertices(), -1);
  for (size_t i = 0; i < s.size(); ++i) relabel[s[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (relabel[e.u] >= 0 && relabel[e.v] >= 0) {
      edges.push_back({relabel[e.u], relabel[e.v]});
    }
  }
  return {Graph(static_cast<int>(s.size()), std::move(edges), g.degree_bound()),
          s.members()};
}

namespace {

// Splits a line into non-negative decimal integers. Returns false on any
// other token.
bool ParseInts(std::string_view line, std::vector<int64_t>* out) {
  out->clear();
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i == line.size()) break;
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    int64_t value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
    if (ec != std::errc() || ptr != line.data() + j || value < 0 ||
        value > std::numeric_limits<int32_t>::max()) {
      return false;
    }
    out->push_back(value);
    i = j;
  }
  return true;
}

bool IsBlank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

}  // namespace

Graph ParseGraph(std::string_view text) {
  int line_no = 0;
  size_t pos = 0;
  bool have_header = false;
  int64_t n = 0, m = 0, d = 0;
  std::vector<Edge> edges;
  std::vector<int> degree;
  std::vector<int64_t> ints;
  while (pos < text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (IsBlank(line) || line.front() == '#') continue;
    if (!ParseInts(line, &ints)) {
      throw Error(ErrorCode::kMalformedInput,
                  "line " + std::to_string(line_no) + ": malformed line",
                  line_no);
    }
    if (!have_header) {
      if (ints.size() != 3) {
        throw Error(ErrorCode::kMalformedInput,
                    "line " + std::to_string(line_no) +
                        ": header must be 'n m d'",
                    line_no);
      }
      n = ints[0];
      m = ints[1];
      d = ints[2];
      degree.assign(n, 0);
      have_header = true;
      continue;
    }
    if (ints.size() != 2) {
      throw Error(ErrorCode::kMalformedInput,
                  "line " + std::to_string(line_no) + ": edge must be 'u v'",
                  line_no);
    }
    int64_t u = ints[0], v = ints[1];
    if (u >= n || v >= n) {
      throw Error(ErrorCode::kEndpointOutOfRange,
                  "line " + std::to_string(line_no) + ": endpoint >= " +
                      std::to_string(n),
                  line_no);
    }
    ++degree[u];
    if (u != v) ++degree[v];
    if (degree[u] > d || degree[v] > d) {
      throw Error(ErrorCode::kDegreeBoundViolated,
                  "line " + std::to_string(line_no) +
                      ": degree bound " + std::to_string(d) + " violated",
                  line_no);
    }
    if (static_cast<int64_t>(edges.size()) == m) {
      throw Error(ErrorCode::kMalformedInput,
                  "line " + std::to_string(line_no) + ": more than " +
                      std::to_string(m) + " edges",
                  line_no);
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (!have_header) {
    throw Error(ErrorCode::kMalformedInput, "missing header line", line_no + 1);
  }
  if (static_cast<int64_t>(edges.size()) != m) {
    throw Error(ErrorCode::kMalformedInput,
                "line " + std::to_string(line_no + 1) + ": expected " +
                    std::to_string(m) + " edges, found " +
                    std::to_string(edges.size()),
                line_no + 1);
  }
  return Graph(static_cast<int>(n), std::move(edges), static_cast<int>(d));
}

std::string EmitGraph(const Graph& g) {
  std::string out = std::to_string(g.num_vertices()) + " " +
                    std::to_string(g.edges().size()) + " " +
                    std::to_string(g.degree_bound()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

}  // namespace hfl
