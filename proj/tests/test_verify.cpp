#include <gtest/gtest.h>

#include "dimkit/verify.hpp"
#include "oracles.hpp"

using namespace dimkit;

namespace {

const SplitPartition kP4Part{bit(1) | bit(2), bit(0) | bit(3)};

Graph with_edges(Graph g, const std::vector<std::pair<int, int>>& extra) {
  for (auto [u, v] : extra) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST(CheckIntersection, PathAsTwoThresholdGraphs) {
  IntersectionRep rep{FactorKind::Threshold,
                      {with_edges(Graph::path(4), {{0, 2}}), with_edges(Graph::path(4), {{1, 3}})}};
  EXPECT_TRUE(check_intersection(Graph::path(4), rep));
  rep.kind = FactorKind::UnitInterval;
  EXPECT_TRUE(check_intersection(Graph::path(4), rep));
  rep.factors.pop_back();
  EXPECT_FALSE(check_intersection(Graph::path(4), rep));
}

TEST(CheckIntersection, WrongKindTag) {
  EXPECT_FALSE(check_intersection(Graph::cycle(4), {FactorKind::Interval, {Graph::cycle(4)}}));
  EXPECT_TRUE(check_intersection(Graph::path(4), {FactorKind::Interval, {Graph::path(4)}}));
  EXPECT_FALSE(check_intersection(Graph::path(4), {FactorKind::Threshold, {Graph::path(4)}}));
}

TEST(CheckIntersection, NeedsAtLeastOneFactor) {
  EXPECT_FALSE(check_intersection(Graph::complete(3), {FactorKind::Interval, {}}));
  EXPECT_TRUE(check_intersection(Graph::complete(3), {FactorKind::Interval, {Graph::complete(3)}}));
  EXPECT_FALSE(check_intersection(Graph::path(3), {FactorKind::Interval, {}}));
  EXPECT_FALSE(check_intersection(Graph::path(4), {FactorKind::Interval, {Graph::path(3)}}));
}

TEST(CheckCover, Path) {
  Graph star(4, {{0, 1}, {1, 2}});
  Graph edge(4, {{2, 3}});
  EXPECT_TRUE(check_cover(Graph::path(4), {{star, edge}}));
  EXPECT_FALSE(check_cover(Graph::path(4), {{Graph::path(4)}}));
  EXPECT_FALSE(check_cover(Graph::path(4), {{star}}));
  EXPECT_FALSE(check_cover(Graph::path(4), {{star, Graph(4, {{0, 3}})}}));
  EXPECT_TRUE(check_cover(Graph(3), {{}}));
}

TEST(NoContainment, Detects) {
  EXPECT_TRUE(no_containment({with_edges(Graph::path(4), {{0, 2}}), with_edges(Graph::path(4), {{1, 3}})}));
  EXPECT_FALSE(no_containment({Graph::path(4), Graph::complete(4)}));
  EXPECT_TRUE(no_containment({}));
}

TEST(ClassifyFactor, PipelineFactorsAreMixedCases) {
  for_each_split_graph(4, [](const Graph& h, const SplitPartition&) {
    auto gp = split_to_gprime(h);
    std::vector<Graph> factors;
    for (const Graph& m : threshold_dimension(h).witness.members) factors.push_back(complement(m));
    for (const auto& f : interval_reps_from_threshold_cover(h, factors)) {
      int kind = classify_factor(gp, f.rep).kind;
      if (gp.trivial_case) {
        EXPECT_EQ(kind, 0);
      } else {
        EXPECT_TRUE(kind == 1 || kind == 2) << kind;
      }
    }
  });
}

TEST(ClassifyFactor, BothExtremesInFirstCopy) {
  auto gp = split_to_gprime(Graph::path(4));
  ASSERT_FALSE(gp.trivial_case);
  IntervalRep rep{std::vector<Interval>(8, {0, 5})};
  auto i1 = mask_to_list(gp.base_partition.independent);
  ASSERT_EQ(i1.size(), 2u);
  rep.intervals[gp.copy1[i1[0]]] = {1, 1};
  rep.intervals[gp.copy1[i1[1]]] = {4, 4};
  rep.intervals[gp.copy2[i1[0]]] = {2, 2};
  rep.intervals[gp.copy2[i1[1]]] = {3, 3};
  auto c = classify_factor(gp, rep);
  EXPECT_EQ(c.kind, 3);
  EXPECT_EQ(c.leftmost, gp.copy1[i1[0]]);
  EXPECT_EQ(c.rightmost, gp.copy1[i1[1]]);
  std::swap(rep.intervals[gp.copy1[i1[0]]], rep.intervals[gp.copy2[i1[0]]]);
  std::swap(rep.intervals[gp.copy1[i1[1]]], rep.intervals[gp.copy2[i1[1]]]);
  EXPECT_EQ(classify_factor(gp, rep).kind, 4);
}

TEST(ClassifyFactor, TrivialAndBadInput) {
  Graph h(3, {{0, 1}, {0, 2}, {1, 2}});
  EXPECT_EQ(classify_factor(split_to_gprime(h), *recognize_interval(h)).kind, 0);
  auto gp = split_to_gprime(Graph::path(4));
  EXPECT_THROW(classify_factor(gp, IntervalRep{std::vector<Interval>(4, {0, 1})}), InputError);
  EXPECT_THROW(classify_factor(gp, IntervalRep{std::vector<Interval>(8, {0, 1})}), InputError);
}

TEST(Generators, DensityExtremes) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto full = gen_random_split(6, 1.0, seed);
    EXPECT_TRUE(is_complete_split(full.graph));
    auto none = gen_random_split(6, 0.0, seed);
    for (int v : mask_to_list(none.partition.independent)) EXPECT_EQ(none.graph.neighbors(v), 0u);
    EXPECT_TRUE(none.graph.is_clique(none.partition.clique));
    EXPECT_TRUE(gen_random_poset(6, 1.0, seed).is_chain());
    EXPECT_EQ(gen_random_poset(6, 0.0, seed), Poset::antichain(6));
  }
}

TEST(Generators, SplitIntervalOutput) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto s = gen_random_split_interval(1 + static_cast<int>(seed % 9), seed);
    EXPECT_TRUE(is_valid_partition(s.graph, s.partition));
    EXPECT_TRUE(oracle::is_interval(s.graph));
  }
}

TEST(Generators, SameSeedSameResult) {
  EXPECT_EQ(gen_random_split(8, 0.4, 9).graph, gen_random_split(8, 0.4, 9).graph);
  EXPECT_EQ(gen_random_poset(8, 0.4, 9), gen_random_poset(8, 0.4, 9));
  EXPECT_EQ(gen_random_split_interval(8, 9).graph, gen_random_split_interval(8, 9).graph);
  EXPECT_THROW(gen_random_split(0, 0.5, 1), InputError);
}

TEST(Enumerators, LabeledPosetCounts) {
  const int expected[] = {1, 1, 3, 19, 219, 4231};
  for (int n = 0; n <= 5; ++n) {
    int count = 0;
    for_each_poset(n, [&](const Poset&) { ++count; });
    EXPECT_EQ(count, expected[n]) << n;
  }
}

TEST(Enumerators, GraphsAndSplitGraphs) {
  int graphs = 0, split = 0;
  for_each_graph(4, [&](const Graph&) { ++graphs; });
  for_each_split_graph(4, [&](const Graph& g, const SplitPartition& p) {
    ++split;
    EXPECT_TRUE(oracle::is_split(g));
    EXPECT_TRUE(is_valid_partition(g, p));
  });
  EXPECT_EQ(graphs, 64);
  int brute = 0;
  for_each_graph(4, [&](const Graph& g) { brute += oracle::is_split(g); });
  EXPECT_EQ(split, brute);
}

TEST(VerifyTheorem, DimensionSuite) {
  auto r = verify_theorem("cor_dim", 5, 200, 7);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.instances, 1 + 3 + 19 + 219 + 200);
}

TEST(VerifyTheorem, SplitIntervalSuite) {
  auto r = verify_theorem("splitIntThresh", 8, 500, 1);
  EXPECT_TRUE(r.passed()) << (r.failures.empty() ? "" : r.failures[0].reason);
}

TEST(VerifyTheorem, GPrimeSuite) {
  auto r = verify_theorem("gprime_eq", 5, 100, 42);
  EXPECT_TRUE(r.passed()) << (r.failures.empty() ? "" : r.failures[0].reason);
}

TEST(VerifyTheorem, EverySuiteRunsSmall) {
  for (const auto& id : theorem_ids()) {
    auto r = verify_theorem(id, 4, 10, 3);
    EXPECT_TRUE(r.passed()) << id;
    EXPECT_GT(r.instances, 0) << id;
  }
}

TEST(VerifyTheorem, DeterministicReport) {
  auto a = verify_theorem("charThresh", 7, 50, 11).to_json(false).dump();
  auto b = verify_theorem("charThresh", 7, 50, 11).to_json(false).dump();
  EXPECT_EQ(a, b);
  EXPECT_NE(a.find("\"elapsed_ms\":0"), std::string::npos);
}

TEST(VerifyTheorem, BadArguments) {
  try {
    verify_theorem("nope", 3, 1, 1);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("cor_dim"), std::string::npos);
  }
  EXPECT_THROW(verify_theorem("cor_box", 9, 1, 1), CapacityError);
  EXPECT_THROW(verify_theorem("cor_box", 0, 1, 1), InputError);
  EXPECT_THROW(verify_theorem("cor_box", 3, -1, 1), InputError);
}
