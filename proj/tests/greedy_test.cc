#include "hfl/greedy.h"

#include <random>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "hfl/folner.h"
#include "hfl/separators.h"
#include "support/test_graphs.h"

namespace hfl {
namespace {

using testing::Cycle;
using testing::Path;

TEST(GreedyTest, PathOfSixTrace) {
  GreedyResult result = GreedySeparator(Path(6), Rational(1, 2), 2);
  ASSERT_TRUE(std::holds_alternative<GreedyTrace>(result));
  const GreedyTrace& trace = std::get<GreedyTrace>(result);
  ASSERT_EQ(trace.stages.size(), 3u);
  EXPECT_EQ(trace.stages[0].folner_set, (VertexSet{0, 1}));
  EXPECT_EQ(trace.stages[0].stage_boundary, (VertexSet{1}));
  EXPECT_EQ(trace.stages[1].folner_set, (VertexSet{2, 3}));
  EXPECT_EQ(trace.stages[1].stage_boundary, (VertexSet{3}));
  EXPECT_EQ(trace.stages[2].folner_set, (VertexSet{4, 5}));
  EXPECT_TRUE(trace.stages[2].stage_boundary.empty());
  EXPECT_EQ(trace.stages[1].stage_vertex_count, 4);
  EXPECT_EQ(trace.separator, (VertexSet{1, 3}));
  EXPECT_TRUE(trace.verified);
  EXPECT_THAT(ComponentsAfterRemoval(Path(6), trace.separator),
              ::testing::ElementsAre(VertexSet{0}, VertexSet{2},
                                     VertexSet{4, 5}));
}

TEST(GreedyTest, SmallGraphIsOneStage) {
  GreedyTrace trace =
      std::get<GreedyTrace>(GreedySeparator(Cycle(5), Rational(0), 5));
  ASSERT_EQ(trace.stages.size(), 1u);
  EXPECT_EQ(trace.stages[0].folner_set, VertexSet::Range(5));
  EXPECT_TRUE(trace.separator.empty());
}

TEST(GreedyTest, CycleStuckAtEpsZero) {
  GreedyResult result = GreedySeparator(Cycle(4), Rational(0), 2);
  ASSERT_TRUE(std::holds_alternative<GreedyStuck>(result));
  const GreedyStuck& stuck = std::get<GreedyStuck>(result);
  EXPECT_EQ(stuck.stage, 1);
  EXPECT_EQ(stuck.subgraph, VertexSet::Range(4));
  EXPECT_TRUE(stuck.completed.empty());
}

void ExpectTraceInvariants(const Graph& g, const GreedyTrace& trace) {
  const int n = g.num_vertices();
  std::vector<int> seen(n, 0);
  std::vector<char> alive(n, 1);
  std::vector<Vertex> collected;
  for (const GreedyStage& stage : trace.stages) {
    // Each stage boundary is taken in g minus the earlier Følner sets.
    std::vector<Vertex> stage_vertices;
    for (Vertex v = 0; v < n; ++v) {
      if (alive[v]) stage_vertices.push_back(v);
    }
    EXPECT_EQ(stage.stage_vertex_count, static_cast<int>(stage_vertices.size()));
    InducedSubgraph sub =
        MakeInducedSubgraph(g, VertexSet::FromSorted(stage_vertices));
    std::vector<Vertex> local;
    for (Vertex v : stage.folner_set) {
      local.push_back(static_cast<Vertex>(
          std::lower_bound(stage_vertices.begin(), stage_vertices.end(), v) -
          stage_vertices.begin()));
    }
    std::vector<Vertex> boundary;
    for (Vertex v : Boundary(sub.graph, VertexSet::FromSorted(local))) {
      boundary.push_back(sub.to_original[v]);
    }
    EXPECT_EQ(VertexSet::FromSorted(boundary), stage.stage_boundary);
    EXPECT_LE(stage.folner_set.size(), static_cast<size_t>(trace.k));
    EXPECT_LE(Rational(static_cast<long>(stage.stage_boundary.size())),
              trace.eps * static_cast<long>(stage.folner_set.size()));
    for (Vertex v : stage.folner_set) {
      ++seen[v];
      alive[v] = 0;
    }
    collected.insert(collected.end(), stage.stage_boundary.begin(),
                     stage.stage_boundary.end());
  }
  for (int count : seen) EXPECT_EQ(count, 1);
  EXPECT_EQ(VertexSet::FromUnsorted(collected), trace.separator);
  EXPECT_LE(Rational(static_cast<long>(trace.separator.size())),
            trace.eps * n);
  EXPECT_TRUE(IsKSeparator(g, trace.separator, trace.k));
}

TEST(GreedyPropertyTest, SoundOnRandomGraphs) {
  std::mt19937_64 rng(41);
  const Rational grid[] = {Rational(1, 4), Rational(1, 2), Rational(3, 4)};
  const int ks[] = {2, 3, 5};
  int successes = 0;
  for (int trial = 0; trial < 120; ++trial) {
    Graph g = testing::RandomGraphInRange(1, 60, 4, rng);
    const Rational& eps = grid[rng() % 3];
    const int k = ks[rng() % 3];
    GreedyResult result = GreedySeparator(g, eps, k);
    if (auto* trace = std::get_if<GreedyTrace>(&result)) {
      ++successes;
      EXPECT_TRUE(trace->verified);
      ExpectTraceInvariants(g, *trace);
    } else {
      const GreedyStuck& stuck = std::get<GreedyStuck>(result);
      std::vector<char> alive(g.num_vertices(), 0);
      for (Vertex v : stuck.subgraph) alive[v] = 1;
      EXPECT_FALSE(FindFolnerSetWithin(g, alive, eps, k).has_value());
    }
  }
  EXPECT_GT(successes, 0);
}

TEST(GreedyPropertyTest, StuckSubgraphHasNoWitnessByExhaustiveScan) {
  std::mt19937_64 rng(42);
  int stuck_count = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = testing::RandomGraphInRange(3, 12, 4, rng);
    const Rational eps(static_cast<long>(rng() % 3), 4L);
    const int k = 2 + static_cast<int>(rng() % 2);
    GreedyResult result = GreedySeparator(g, eps, k);
    const auto* stuck = std::get_if<GreedyStuck>(&result);
    if (stuck == nullptr) continue;
    ++stuck_count;
    auto adj = testing::OracleAdjacency(g);
    const uint64_t within = testing::ToMask(stuck->subgraph);
    const int smallest = testing::OracleSmallestWitness(adj, within, eps);
    EXPECT_TRUE(smallest == 0 || smallest > k) << EmitGraph(g);
  }
  EXPECT_GT(stuck_count, 0);
}

// Greedy succeeds whenever every induced subgraph has a witness.
TEST(GreedyPropertyTest, CompleteWhenUlaHolds) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = testing::RandomGraphInRange(1, 10, 4, rng);
    const Rational eps(static_cast<long>(rng() % 4), 4L);
    const int profile = testing::OracleUlaProfile(g, eps);
    for (int k = profile; k <= profile + 1; ++k) {
      EXPECT_TRUE(std::holds_alternative<GreedyTrace>(GreedySeparator(g, eps, k)))
          << EmitGraph(g) << " k=" << k;
    }
  }
}

}  // namespace
}  // namespace hfl
