#include "hfl/schreier.h"

#include <algorithm>
#include <charconv>
#include <random>
#include <tuple>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "hfl/error.h"

namespace hfl {

InvolutionAction::InvolutionAction(int n,
                                   std::array<std::vector<int>, 4> generators)
    : n_(n), generators_(std::move(generators)) {
  if (n < 1) throw Error(ErrorCode::kValidation, "action needs n >= 1");
  for (int g = 0; g < 4; ++g) {
    const std::vector<int>& pi = generators_[g];
    const std::string name(1, kGeneratorNames[g]);
    if (static_cast<int>(pi.size()) != n) {
      throw Error(ErrorCode::kValidation,
                  "generator " + name + " has " + std::to_string(pi.size()) +
                      " images, expected " + std::to_string(n));
    }
    for (int x = 0; x < n; ++x) {
      if (pi[x] < 0 || pi[x] >= n) {
        throw Error(ErrorCode::kValidation,
                    "generator " + name + " maps point " + std::to_string(x) +
                        " outside 0.." + std::to_string(n - 1));
      }
    }
    for (int x = 0; x < n; ++x) {
      if (pi[pi[x]] != x) {
        throw Error(ErrorCode::kValidation,
                    "generator " + name + " is not an involution: " + name +
                        "(" + name + "(" + std::to_string(x) + ")) = " +
                        std::to_string(pi[pi[x]]));
      }
    }
  }
}

namespace {

std::vector<std::vector<int>> ActionLines(std::string_view text) {
  std::vector<std::vector<int>> lines;
  int line_no = 0;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos ||
        line.front() == '#') {
      continue;
    }
    std::vector<int> values;
    size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      if (i == line.size()) break;
      size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
      int value = 0;
      auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
      if (ec != std::errc() || ptr != line.data() + j || value < 0) {
        throw Error(ErrorCode::kMalformedInput,
                    "line " + std::to_string(line_no) + ": malformed line",
                    line_no);
      }
      values.push_back(value);
      i = j;
    }
    lines.push_back(std::move(values));
  }
  return lines;
}

}  // namespace

InvolutionAction ParseAction(std::string_view text) {
  std::vector<std::vector<int>> lines = ActionLines(text);
  if (lines.size() != 5 || lines[0].size() != 1) {
    throw Error(ErrorCode::kMalformedInput,
                "action file needs a line 'n' followed by four image lines");
  }
  std::array<std::vector<int>, 4> gens;
  for (int g = 0; g < 4; ++g) gens[g] = std::move(lines[g + 1]);
  return InvolutionAction(lines[0][0], std::move(gens));
}

std::string EmitAction(const InvolutionAction& action) {
  std::string out = std::to_string(action.size()) + "\n";
  for (int g = 0; g < 4; ++g) {
    const auto& pi = action.generator(g);
    for (size_t x = 0; x < pi.size(); ++x) {
      if (x > 0) out += ' ';
      out += std::to_string(pi[x]);
    }
    out += '\n';
  }
  return out;
}

InvolutionAction CycleAction(int n) {
  if (n < 2 || n % 2 != 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "cycle action needs an even n >= 2, got " + std::to_string(n));
  }
  std::vector<int> a(n), b(n), id(n);
  for (int x = 0; x < n; ++x) {
    a[x] = x ^ 1;
    b[x] = x % 2 == 1 ? (x + 1) % n : (x + n - 1) % n;
    id[x] = x;
  }
  return InvolutionAction(n, {a, b, id, id});
}

InvolutionAction RandomAction(int n, uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "random action needs n >= 1");
  std::mt19937_64 rng(seed);
  std::array<std::vector<int>, 4> gens;
  for (auto& pi : gens) {
    std::vector<int> points(n);
    for (int x = 0; x < n; ++x) points[x] = x;
    for (int i = n; i > 1; --i) std::swap(points[i - 1], points[rng() % i]);
    pi.assign(n, 0);
    for (int x = 0; x < n; ++x) pi[x] = x;
    for (int i = 0; i + 1 < n; i += 2) {
      pi[points[i]] = points[i + 1];
      pi[points[i + 1]] = points[i];
    }
  }
  return InvolutionAction(n, std::move(gens));
}

SchreierGraph BuildSchreier(const InvolutionAction& action) {
  const int n = action.size();
  std::vector<std::tuple<Vertex, Vertex, char>> labeled;
  for (int g = 0; g < 4; ++g) {
    const auto& pi = action.generator(g);
    for (int x = 0; x < n; ++x) {
      if (x <= pi[x]) labeled.emplace_back(x, pi[x], kGeneratorNames[g]);
    }
  }
  std::sort(labeled.begin(), labeled.end());
  std::vector<Edge> edges;
  SchreierGraph s;
  for (const auto& [u, v, label] : labeled) {
    edges.push_back({u, v});
    s.edge_labels.push_back(label);
  }
  s.graph = Graph(n, std::move(edges), 4);
  s.transitive = ComponentsAfterRemoval(s.graph, {}).size() == 1;
  return s;
}

std::vector<std::array<int, 4>> GeneratorSlots(const SchreierGraph& s) {
  std::vector<std::array<int, 4>> slots(s.graph.num_vertices(), {0, 0, 0, 0});
  const auto& edges = s.graph.edges();
  for (size_t i = 0; i < edges.size(); ++i) {
    int g = static_cast<int>(std::find(kGeneratorNames.begin(),
                                       kGeneratorNames.end(),
                                       s.edge_labels[i]) -
                             kGeneratorNames.begin());
    ++slots[edges[i].u][g];
    if (edges[i].u != edges[i].v) ++slots[edges[i].v][g];
  }
  return slots;
}

bool IsPlanar(const Graph& g) {
  const int n = g.num_vertices();
  const int simple_edges = g.SimpleEdgeCount();
  if (n >= 3 && simple_edges > 3 * n - 6) return false;
  using BoostGraph =
      boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                            boost::property<boost::vertex_index_t, int>,
                            boost::property<boost::edge_index_t, int>>;
  BoostGraph bg(n);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : g.neighbors(v)) {
      if (v < u) boost::add_edge(v, u, bg);
    }
  }
  return boost::boyer_myrvold_planarity_test(bg);
}

}  // namespace hfl
