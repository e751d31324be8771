#include "hfl/separator_game.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>

#include "hfl/error.h"
#include "hfl/exact_lp.h"

namespace hfl {

namespace {

void CheckGameInputs(const Graph& g, int k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
  if (g.num_vertices() == 0) {
    throw Error(ErrorCode::kNoVertices, "graph has no vertices");
  }
}

// Portable Fisher-Yates; std::shuffle's sequence varies across standard
// libraries.
template <typename T>
void SeededShuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[rng() % i]);
  }
}

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int Find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  int Size(int root) const { return size_[root]; }
  void Union(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

}  // namespace

Rational SeparatorDistribution::MaxMarginal() const {
  Rational best = 0;
  for (const Rational& m : marginals) best = std::max(best, m);
  return best;
}

SeparatorDistribution MakeSeparatorDistribution(const Graph& g, int k,
                                                std::vector<VertexSet> support,
                                                std::vector<Rational> probs) {
  if (support.size() != probs.size()) {
    throw Error(ErrorCode::kValidation, "support/probability length mismatch");
  }
  SeparatorDistribution dist;
  dist.marginals.assign(g.num_vertices(), 0);
  Rational total = 0;
  for (size_t i = 0; i < support.size(); ++i) {
    if (sgn(probs[i]) < 0) {
      throw Error(ErrorCode::kValidation, "negative probability");
    }
    if (!IsKSeparator(g, support[i], k)) {
      throw Error(ErrorCode::kValidation, "support member is not a K-separator");
    }
    total += probs[i];
    for (Vertex v : support[i]) dist.marginals[v] += probs[i];
  }
  if (total != 1) {
    throw Error(ErrorCode::kValidation, "probabilities do not sum to 1");
  }
  dist.support = std::move(support);
  dist.probs = std::move(probs);
  return dist;
}

GameReport ExactGame(const Graph& g, int k, const ComputeOptions& options,
                     SupportFamily family) {
  CheckGameInputs(g, k);
  const int n = g.num_vertices();
  std::vector<VertexSet> separators =
      EnumerateKSeparators(g, k, family == SupportFamily::kMinimal, options);

  // payoff[v][j] = 1 iff vertex v lies in separator j.
  std::vector<std::vector<int>> payoff(n,
                                       std::vector<int>(separators.size(), 0));
  for (size_t j = 0; j < separators.size(); ++j) {
    for (Vertex v : separators[j]) payoff[v][j] = 1;
  }
  GameSolution solution = SolveZeroSumGame(payoff);

  std::vector<VertexSet> support;
  std::vector<Rational> probs;
  for (size_t j = 0; j < separators.size(); ++j) {
    if (sgn(solution.col_strategy[j]) > 0) {
      support.push_back(separators[j]);
      probs.push_back(solution.col_strategy[j]);
    }
  }

  GameReport report;
  report.n = n;
  report.k = k;
  report.family = family;
  report.separator_count = separators.size();
  report.pivots = solution.pivots;
  report.h = Rational(static_cast<long>(separators.front().size()), n);
  report.h.canonicalize();
  report.primal =
      MakeSeparatorDistribution(g, k, std::move(support), std::move(probs));
  report.eps_star = report.primal.MaxMarginal();
  report.dual = WeightVector(std::move(solution.row_strategy));
  if (report.dual.total() != 1) {
    throw Error(ErrorCode::kInternal, "dual weights do not sum to 1");
  }
  report.dual_best_response = MinWeightAmong(separators, report.dual);
  report.w_star = report.dual_best_response.weight;
  report.gap = report.eps_star - report.w_star;
  if (sgn(report.gap) != 0 || report.eps_star != solution.value) {
    throw Error(ErrorCode::kInternal,
                "separator game certificates do not close: eps_star=" +
                    FormatRational(report.eps_star) +
                    " w_star=" + FormatRational(report.w_star));
  }
  return report;
}

Rational CycleValueFormula(int n, int k) {
  if (n < 3 || k < 1 || k >= n) {
    throw Error(ErrorCode::kInvalidArgument,
                "cycle formula needs n >= 3 and 1 <= k < n");
  }
  Rational value((n + k) / (k + 1), n);
  value.canonicalize();
  return value;
}

VertexSet ReverseDeleteSeparator(const Graph& g, const std::vector<double>& w,
                                 int k, uint64_t seed) {
  const int n = g.num_vertices();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  SeededShuffle(order, rng);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return w[a] > w[b]; });

  DisjointSets sets(n);
  std::vector<char> present(n, 0);
  std::vector<int> roots;
  for (Vertex v : order) {
    roots.clear();
    for (Vertex u : g.neighbors(v)) {
      if (present[u]) roots.push_back(sets.Find(u));
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    int merged = 1;
    for (int r : roots) merged += sets.Size(r);
    if (merged > k) continue;
    present[v] = 1;
    for (int r : roots) sets.Union(v, r);
  }
  std::vector<Vertex> removed;
  for (Vertex v = 0; v < n; ++v) {
    if (!present[v]) removed.push_back(v);
  }
  return VertexSet::FromSorted(std::move(removed));
}

MwuReport MwuGame(const Graph& g, int k, int rounds, uint64_t seed,
                  const ComputeOptions& options) {
  CheckGameInputs(g, k);
  if (rounds < 1) throw Error(ErrorCode::kInvalidArgument, "rounds must be >= 1");
  const int n = g.num_vertices();

  MwuReport report;
  report.n = n;
  report.k = k;
  report.rounds = rounds;
  report.seed = seed;
  report.exact_best_response =
      n <= std::min(options.enumeration_cap, kMaxEnumerationCap);

  std::vector<VertexSet> separators;
  std::vector<size_t> scan_order;
  if (report.exact_best_response) {
    separators = EnumerateKSeparators(g, k, true, options);
    scan_order.resize(separators.size());
    std::iota(scan_order.begin(), scan_order.end(), 0);
    std::mt19937_64 rng(seed);
    SeededShuffle(scan_order, rng);
  }

  const double eta = std::sqrt(std::log(static_cast<double>(n)) / rounds);
  std::vector<long> hits(n, 0);
  std::vector<double> weights(n, 1.0);
  std::vector<double> best_weights = weights;
  double best_value = -1.0;
  std::map<VertexSet, long> responses;

  for (int t = 0; t < rounds; ++t) {
    const long most = *std::max_element(hits.begin(), hits.end());
    double total = 0.0;
    for (int v = 0; v < n; ++v) {
      weights[v] = std::exp(eta * static_cast<double>(hits[v] - most));
      total += weights[v];
    }
    for (double& x : weights) x /= total;

    const VertexSet* response = nullptr;
    VertexSet heuristic;
    double value = 0.0;
    if (report.exact_best_response) {
      for (size_t j : scan_order) {
        double s = 0.0;
        for (Vertex v : separators[j]) s += weights[v];
        if (response == nullptr || s < value) {
          response = &separators[j];
          value = s;
        }
      }
    } else {
      heuristic = ReverseDeleteSeparator(g, weights, k, seed + t);
      for (Vertex v : heuristic) value += weights[v];
      response = &heuristic;
    }
    if (value > best_value) {
      best_value = value;
      best_weights = weights;
    }
    for (Vertex v : *response) ++hits[v];
    ++responses[*response];
  }

  std::vector<VertexSet> support;
  std::vector<Rational> probs;
  for (const auto& [y, count] : responses) {
    support.push_back(y);
    probs.emplace_back(count, rounds);
    probs.back().canonicalize();
  }
  std::vector<size_t> idx(support.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    return SizeThenLex(support[a], support[b]);
  });
  std::vector<VertexSet> sorted_support;
  std::vector<Rational> sorted_probs;
  for (size_t i : idx) {
    sorted_support.push_back(std::move(support[i]));
    sorted_probs.push_back(std::move(probs[i]));
  }
  // Validates each response as a K-separator, which is what certifies hi.
  report.primal = MakeSeparatorDistribution(g, k, std::move(sorted_support),
                                            std::move(sorted_probs));
  report.hi = report.primal.MaxMarginal();
  report.hi_certified = true;

  std::vector<Rational> rounded(n);
  bool any = false;
  for (int v = 0; v < n; ++v) {
    rounded[v] = Rational(static_cast<long>(std::llround(best_weights[v] * 1e6)), 1000000L);
    rounded[v].canonicalize();
    any = any || sgn(rounded[v]) > 0;
  }
  report.dual = any ? WeightVector(std::move(rounded)).Normalized()
                    : WeightVector::Uniform(n);

  if (report.exact_best_response) {
    report.dual_best_response = MinWeightAmong(separators, report.dual);
    report.lo_certified = true;
  } else {
    std::vector<double> w(n);
    for (int v = 0; v < n; ++v) w[v] = report.dual[v].get_d();
    VertexSet y = ReverseDeleteSeparator(g, w, k, seed);
    Rational weight = report.dual.WeightOf(y);
    report.dual_best_response = {std::move(y), std::move(weight)};
    report.lo_certified = false;
  }
  report.lo = report.dual_best_response.weight;
  return report;
}

}  // namespace hfl
