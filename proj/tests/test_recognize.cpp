#include <gtest/gtest.h>

#include <random>

#include "dimkit/recognize.hpp"
#include "oracles.hpp"

using namespace dimkit;

namespace {

template <class F>
void for_each_graph(int n, F&& f) {
  auto pairs = Graph::complete(n).edges();
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs.size()); ++m) f(oracle::from_edge_mask(n, pairs, m));
}

Graph claw() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}}); }

// Clique {0..k-1} joined to every vertex of independent {k..n-1}.
Graph complete_split(int k, int n) {
  Graph g(n);
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

bool is_induced(const Graph& g, const ForbiddenSubgraph& f) {
  Graph h = induced_subgraph(g, f.vertices);
  switch (f.kind) {
    case ForbiddenSubgraph::Kind::TwoK2: return h == Graph(4, {{0, 1}, {2, 3}});
    case ForbiddenSubgraph::Kind::C4: return h == Graph::cycle(4);
    case ForbiddenSubgraph::Kind::C5: return h == Graph::cycle(5);
    case ForbiddenSubgraph::Kind::P4: return h == Graph::path(4);
    case ForbiddenSubgraph::Kind::Claw: return h == claw();
  }
  return false;
}

}  // namespace

TEST(Split, PathOnFour) {
  auto r = recognize_split(Graph::path(4));
  ASSERT_TRUE(r.is_split());
  EXPECT_EQ(r.partition->clique, bit(1) | bit(2));
  EXPECT_EQ(r.partition->independent, bit(0) | bit(3));
}

TEST(Split, CycleOnFourHasCertificate) {
  Graph c4 = Graph::cycle(4);
  EXPECT_FALSE(oracle::is_split(c4));
  auto r = recognize_split(c4);
  ASSERT_FALSE(r.is_split());
  EXPECT_EQ(r.obstruction->kind, ForbiddenSubgraph::Kind::C4);
  EXPECT_TRUE(is_induced(c4, *r.obstruction));
}

TEST(Split, CompleteSplitGraph) {
  auto r = recognize_split(complete_split(2, 5));
  ASSERT_TRUE(r.is_split());
  // The clique is grown to maximum: one independent vertex joins it.
  EXPECT_EQ(r.partition->clique, bit(0) | bit(1) | bit(2));
  EXPECT_TRUE(is_complete_split(complete_split(2, 5)));
  EXPECT_FALSE(is_complete_split(Graph::path(4)));
}

TEST(Split, RejectsEmptyGraph) { EXPECT_THROW(recognize_split(Graph(0)), InputError); }

TEST(Split, SingleVertex) {
  EXPECT_TRUE(recognize_split(Graph(1)).is_split());
  EXPECT_TRUE(is_threshold(Graph(1)));
  EXPECT_TRUE(is_interval(Graph(1)));
  EXPECT_TRUE(is_unit_interval(Graph(1)));
}

TEST(Split, CertificatesAreInducedAndPartitionsValid) {
  for (int n = 1; n <= 6; ++n)
    for_each_graph(n, [&](const Graph& g) {
      auto r = recognize_split(g);
      ASSERT_EQ(r.is_split(), oracle::is_split(g));
      if (r.is_split()) {
        EXPECT_TRUE(is_valid_partition(g, *r.partition));
        // Largest clique, then least sorted clique among single swaps.
        for (int x : mask_to_list(r.partition->clique))
          for (int y : mask_to_list(r.partition->independent)) {
            SplitPartition swapped{(r.partition->clique & ~bit(x)) | bit(y),
                                   (r.partition->independent & ~bit(y)) | bit(x)};
            if (is_valid_partition(g, swapped)) {
              EXPECT_FALSE(lex_less(swapped.clique, r.partition->clique));
            }
          }
        for (int y : mask_to_list(r.partition->independent))
          EXPECT_FALSE(g.is_clique(r.partition->clique | bit(y)));
      } else {
        EXPECT_TRUE(is_induced(g, *r.obstruction));
      }
    });
}

TEST(Split, ClosedUnderComplement) {
  for (int n = 1; n <= 6; ++n)
    for_each_graph(n, [&](const Graph& g) {
      EXPECT_EQ(recognize_split(g).is_split(), recognize_split(complement(g)).is_split());
    });
}

TEST(Threshold, Examples) {
  EXPECT_TRUE(is_threshold(claw()));
  auto p4 = recognize_threshold(Graph::path(4));
  EXPECT_FALSE(p4.is_threshold);
  ASSERT_TRUE(p4.obstruction);
  EXPECT_EQ(p4.obstruction->kind, ForbiddenSubgraph::Kind::P4);
  EXPECT_EQ(p4.obstruction->vertices, (std::vector<int>{0, 1, 2, 3}));
  EXPECT_FALSE(is_threshold(Graph::cycle(4)));
  EXPECT_FALSE(is_threshold(Graph(4, {{0, 1}, {2, 3}})));
}

TEST(Threshold, EliminationOrderIsValid) {
  Graph g(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {4, 0}});
  auto r = recognize_threshold(g);
  ASSERT_TRUE(r.is_threshold);
  ASSERT_EQ(r.elimination_order.size(), 5u);
  VertexMask left = g.vertices();
  for (int v : r.elimination_order) {
    VertexMask others = left & ~bit(v);
    VertexMask nb = g.neighbors(v) & others;
    EXPECT_TRUE(nb == 0 || nb == others) << "vertex " << v;
    left = others;
  }
}

TEST(Threshold, MatchesSplitWithoutInducedP4) {
  for (int n = 1; n <= 7; ++n)
    for_each_graph(n, [&](const Graph& g) {
      bool expected = recognize_split(g).is_split() && !oracle::has_induced_p4(g);
      ASSERT_EQ(is_threshold(g), expected) << n;
    });
}

TEST(Threshold, ComplementGivesSameAnswer) {
  for (int n = 1; n <= 6; ++n)
    for_each_graph(n, [&](const Graph& g) { EXPECT_EQ(is_threshold(g), is_threshold(complement(g))); });
}

TEST(Interval, Examples) {
  auto p4 = recognize_interval(Graph::path(4));
  ASSERT_TRUE(p4);
  EXPECT_EQ(interval_graph(*p4), Graph::path(4));
  EXPECT_FALSE(recognize_interval(Graph::cycle(4)));
  auto k4 = recognize_interval(Graph::complete(4));
  ASSERT_TRUE(k4);
  for (const auto& iv : k4->intervals) EXPECT_EQ(iv, (Interval{1, 2}));
}

TEST(Interval, EndpointsInRange) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 1 + static_cast<int>(rng() % 10);
    Graph g(n);
    for (auto [u, v] : Graph::complete(n).edges())
      if (rng() % 3 == 0) g.add_edge(u, v);
    auto rep = recognize_interval(g);
    if (!rep) continue;
    EXPECT_EQ(interval_graph(*rep), g);
    for (const auto& iv : rep->intervals) {
      EXPECT_GE(iv.l, 1);
      EXPECT_LE(iv.r, 2 * n);
    }
  }
}

TEST(Interval, MatchesChordalAndAsteroidalTripleFree) {
  for (int n = 1; n <= 6; ++n)
    for_each_graph(n, [&](const Graph& g) {
      auto rep = recognize_interval(g);
      ASSERT_EQ(rep.has_value(), oracle::is_interval(g)) << n;
      if (rep) {
        ASSERT_EQ(interval_graph(*rep), g);
      }
    });
}

TEST(UnitInterval, Examples) {
  auto p5 = recognize_unit_interval(Graph::path(5));
  ASSERT_TRUE(p5);
  EXPECT_EQ(unit_interval_graph(*p5), Graph::path(5));
  EXPECT_FALSE(recognize_unit_interval(claw()));
  auto k3 = recognize_unit_interval(Graph::complete(3));
  ASSERT_TRUE(k3);
  EXPECT_EQ(k3->left, (std::vector<std::int64_t>{0, 0, 0}));
  ASSERT_TRUE(find_induced_claw(claw()));
  EXPECT_TRUE(is_induced(claw(), *find_induced_claw(claw())));
}

TEST(UnitInterval, MatchesIntervalAndClawFree) {
  for (int n = 1; n <= 6; ++n)
    for_each_graph(n, [&](const Graph& g) {
      auto rep = recognize_unit_interval(g);
      ASSERT_EQ(rep.has_value(), oracle::is_unit_interval(g));
      ASSERT_EQ(rep.has_value(), is_interval(g) && !find_induced_claw(g));
      if (rep) {
        ASSERT_EQ(unit_interval_graph(*rep), g);
      }
    });
}

TEST(Normalize, PointIntervalsBecomeProper) {
  IntervalRep rep{{{1, 1}, {1, 3}}};
  auto out = normalize_interval_rep(rep);
  EXPECT_EQ(interval_graph(out), interval_graph(rep));
  for (const auto& iv : out.intervals) EXPECT_LT(iv.l, iv.r);
}

TEST(Normalize, DistinctEndpointsSameGraph) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + static_cast<int>(rng() % 8);
    IntervalRep rep;
    for (int v = 0; v < n; ++v) {
      std::int64_t a = static_cast<std::int64_t>(rng() % 6), b = static_cast<std::int64_t>(rng() % 6);
      rep.intervals.push_back({std::min(a, b), std::max(a, b)});
    }
    auto out = normalize_interval_rep(rep);
    EXPECT_EQ(interval_graph(out), interval_graph(rep));
    std::vector<std::int64_t> ends;
    for (const auto& iv : out.intervals) {
      EXPECT_LT(iv.l, iv.r);
      ends.push_back(iv.l);
      ends.push_back(iv.r);
    }
    std::sort(ends.begin(), ends.end());
    EXPECT_EQ(std::adjacent_find(ends.begin(), ends.end()), ends.end());
    EXPECT_EQ(interval_graph(normalize_interval_rep(out)), interval_graph(rep));
  }
}

TEST(Normalize, CompleteGraphStaysComplete) {
  IntervalRep rep{std::vector<Interval>(4, {1, 2})};
  auto out = normalize_interval_rep(rep);
  EXPECT_EQ(interval_graph(out), Graph::complete(4));
}
