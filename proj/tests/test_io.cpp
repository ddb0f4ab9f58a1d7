#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "dimkit/io.hpp"
#include "dimkit/verify.hpp"

using namespace dimkit;

namespace {

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(GraphFormat, ParsesCommentsAndBlankLines) {
  Graph g = io::parse_graph("# path\n4\n\n0 1  # first\n1 2\n2 3\n");
  EXPECT_EQ(g, Graph::path(4));
}

TEST(GraphFormat, RoundTripsRandomGraphs) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(rng() % 12);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() & 1) g.add_edge(u, v);
    EXPECT_EQ(io::parse_graph(io::write_graph(g)), g);
  }
}

TEST(GraphFormat, EmptyGraph) {
  EXPECT_EQ(io::parse_graph("0\n"), Graph(0));
  EXPECT_EQ(io::write_graph(Graph(0)), "0\n");
}

TEST(GraphFormat, ErrorsCarryLineNumbers) {
  EXPECT_NE(error_of([] { io::parse_graph("3\n0 1\n1 5\n"); }).find("line 3"), std::string::npos);
  EXPECT_NE(error_of([] { io::parse_graph("3\n\n1 1\n"); }).find("line 3"), std::string::npos);
  EXPECT_NE(error_of([] { io::parse_graph("3\n0 x\n"); }).find("line 2"), std::string::npos);
  EXPECT_NE(error_of([] { io::parse_graph("3\n0 1 2\n"); }).find("line 2"), std::string::npos);
  EXPECT_NE(error_of([] { io::parse_graph("# c\n-1\n"); }).find("line 2"), std::string::npos);
  EXPECT_NE(error_of([] { io::parse_graph("65\n"); }).find("line 1"), std::string::npos);
  EXPECT_FALSE(error_of([] { io::parse_graph("# nothing\n"); }).empty());
}

TEST(GraphFormat, SeveralGraphs) {
  std::vector<Graph> gs{Graph::path(3), Graph::complete(2), Graph(1)};
  EXPECT_EQ(io::parse_graphs(io::write_graphs(gs)), gs);
  EXPECT_NE(error_of([] { io::parse_graphs("2\n0 1\n---\n2\n0 2\n"); }).find("line 5"), std::string::npos);
}

TEST(PosetFormat, TakesClosure) {
  Poset p = io::parse_poset("3\n0 1\n1 2\n");
  EXPECT_TRUE(p.less(0, 2));
  EXPECT_EQ(io::parse_poset(io::write_poset(p)), p);
}

TEST(PosetFormat, RoundTripsRandomPosets) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Poset p = gen_random_poset(1 + static_cast<int>(seed % 9), 0.4, seed);
    EXPECT_EQ(io::parse_poset(io::write_poset(p)), p);
  }
}

TEST(PosetFormat, RejectsCycle) {
  EXPECT_THROW(io::parse_poset("2\n0 1\n1 0\n"), InputError);
}

TEST(IntervalFormat, RoundTrip) {
  IntervalRep rep{{{0, 1}, {-3, 2}, {5, 5}}};
  EXPECT_EQ(io::parse_interval_rep(io::write_interval_rep(rep)), rep);
  std::vector<IntervalRep> reps{rep, IntervalRep{{{1, 2}}}};
  EXPECT_EQ(io::parse_interval_reps(io::write_interval_reps(reps)), reps);
}

TEST(IntervalFormat, Errors) {
  EXPECT_NE(error_of([] { io::parse_interval_rep("2\n0 1 2\n0 1 2\n"); }).find("line 3"), std::string::npos);
  EXPECT_NE(error_of([] { io::parse_interval_rep("1\n0 3 2\n"); }).find("line 2"), std::string::npos);
  EXPECT_NE(error_of([] { io::parse_interval_rep("2\n0 1 2\n"); }).find("vertex 1"), std::string::npos);
}

TEST(RealizerFormat, RoundTrip) {
  Realizer r{LinearExtension({0, 1, 2}), LinearExtension({2, 1, 0})};
  auto back = io::parse_realizer(io::write_realizer(3, r));
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[0].order(), r[0].order());
  EXPECT_EQ(back[1].order(), r[1].order());
}

TEST(RealizerFormat, Errors) {
  EXPECT_NE(error_of([] { io::parse_realizer("3\n0 1 2\n0 0 2\n"); }).find("line 3"), std::string::npos);
  EXPECT_NE(error_of([] { io::parse_realizer("3\n0 1\n"); }).find("line 2"), std::string::npos);
  EXPECT_NE(error_of([] { io::parse_realizer("2\n0 2\n"); }).find("line 2"), std::string::npos);
}

TEST(VertexMap, Lines) { EXPECT_EQ(io::write_vertex_map({2, 0, 1}), "0 2\n1 0\n2 1\n"); }
