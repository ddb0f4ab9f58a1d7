#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dimkit/errors.hpp"

namespace dimkit {

// Vertex sets are bitmasks over 0..63.
using VertexMask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline VertexMask bit(int v) { return VertexMask{1} << v; }

inline VertexMask full_mask(int n) {
  return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

inline std::vector<int> mask_to_list(VertexMask m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

inline VertexMask list_to_mask(const std::vector<int>& vs) {
  VertexMask m = 0;
  for (int v : vs) m |= bit(v);
  return m;
}

inline int popcount(VertexMask m) { return std::popcount(m); }

// Compares two vertex sets by their sorted vertex lists, lexicographically.
inline bool lex_less(VertexMask a, VertexMask b) {
  return mask_to_list(a) < mask_to_list(b);
}

/// Finite simple undirected graph on vertices 0..n-1, adjacency as bitmasks.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
      throw InputError("graph size " + std::to_string(n) + " outside [0, 64]");
    adj_.assign(static_cast<std::size_t>(n), 0);
  }

  Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  static Graph complete(int n) {
    Graph g(n);
    for (int v = 0; v < n; ++v) g.adj_[v] = full_mask(n) & ~bit(v);
    return g;
  }

  static Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
  }

  static Graph cycle(int n) {
    Graph g = path(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
  }

  // Adjacency masks must be symmetric and loop-free.
  static Graph from_adjacency(std::vector<VertexMask> adj) {
    Graph g(static_cast<int>(adj.size()));
    for (int v = 0; v < g.n_; ++v) {
      if (adj[v] & (bit(v) | ~full_mask(g.n_))) throw InputError("adjacency has a loop or is out of range");
      for (int u : mask_to_list(adj[v]))
        if (!(adj[u] & bit(v))) throw InputError("adjacency is not symmetric");
    }
    g.adj_ = std::move(adj);
    return g;
  }

  const std::vector<VertexMask>& adjacency() const { return adj_; }

  int size() const { return n_; }
  VertexMask vertices() const { return full_mask(n_); }

  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1; }
  VertexMask neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return std::popcount(adj_[v]); }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
  }

  void remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u] &= ~bit(v);
    adj_[v] &= ~bit(u);
  }

  int edge_count() const {
    int c = 0;
    for (VertexMask m : adj_) c += std::popcount(m);
    return c / 2;
  }

  // Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
      for (int v : mask_to_list(adj_[u] & ~full_mask(u + 1))) out.emplace_back(u, v);
    return out;
  }

  std::vector<std::pair<int, int>> non_edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
      for (int v : mask_to_list(~adj_[u] & full_mask(n_) & ~full_mask(u + 1)))
        out.emplace_back(u, v);
    return out;
  }

  bool is_clique(VertexMask s) const {
    for (VertexMask m = s; m; m &= m - 1) {
      int v = std::countr_zero(m);
      if (((adj_[v] | bit(v)) & s) != s) return false;
    }
    return true;
  }

  bool is_independent(VertexMask s) const {
    for (VertexMask m = s; m; m &= m - 1)
      if (adj_[std::countr_zero(m)] & s) return false;
    return true;
  }

  // Edge-set inclusion on a common vertex set.
  bool is_subgraph_of(const Graph& other) const {
    if (n_ != other.n_) return false;
    for (int v = 0; v < n_; ++v)
      if (adj_[v] & ~other.adj_[v]) return false;
    return true;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw InputError("vertex " + std::to_string(v) + " out of range for n=" +
                       std::to_string(n_));
  }

  int n_ = 0;
  std::vector<VertexMask> adj_;
};

/// Clique / independent-set bipartition of a split graph.
struct SplitPartition {
  VertexMask clique = 0;
  VertexMask independent = 0;

  friend bool operator==(const SplitPartition&, const SplitPartition&) = default;
};

inline bool is_valid_partition(const Graph& g, const SplitPartition& p) {
  return (p.clique & p.independent) == 0 && (p.clique | p.independent) == g.vertices() &&
         g.is_clique(p.clique) && g.is_independent(p.independent);
}

inline void require_partition(const Graph& g, const SplitPartition& p) {
  if (!is_valid_partition(g, p)) throw InputError("not a valid split partition of the graph");
}

struct Interval {
  std::int64_t l = 0;
  std::int64_t r = 0;

  bool intersects(const Interval& o) const { return l <= o.r && o.l <= r; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Closed integer intervals, one per vertex.
struct IntervalRep {
  std::vector<Interval> intervals;

  int size() const { return static_cast<int>(intervals.size()); }
  friend bool operator==(const IntervalRep&, const IntervalRep&) = default;
};

inline void require_valid(const IntervalRep& rep) {
  for (std::size_t v = 0; v < rep.intervals.size(); ++v)
    if (rep.intervals[v].l > rep.intervals[v].r)
      throw InputError("interval of vertex " + std::to_string(v) + " has l > r");
}

inline Graph interval_graph(const IntervalRep& rep) {
  require_valid(rep);
  Graph g(rep.size());
  for (int u = 0; u < rep.size(); ++u)
    for (int v = u + 1; v < rep.size(); ++v)
      if (rep.intervals[u].intersects(rep.intervals[v])) g.add_edge(u, v);
  return g;
}

/// Unit intervals [a, a+1] with a(v) = left[v] / scale, kept exact.
struct UnitIntervalRep {
  std::vector<std::int64_t> left;
  std::int64_t scale = 1;

  int size() const { return static_cast<int>(left.size()); }
  double position(int v) const { return static_cast<double>(left[v]) / static_cast<double>(scale); }
};

inline Graph unit_interval_graph(const UnitIntervalRep& rep) {
  if (rep.scale <= 0) throw InputError("unit interval scale must be positive");
  Graph g(rep.size());
  for (int u = 0; u < rep.size(); ++u)
    for (int v = u + 1; v < rep.size(); ++v) {
      std::int64_t d = rep.left[u] - rep.left[v];
      if (d < 0) d = -d;
      if (d <= rep.scale) g.add_edge(u, v);
    }
  return g;
}

inline Graph complement(const Graph& g) {
  Graph c(g.size());
  for (auto [u, v] : g.non_edges()) c.add_edge(u, v);
  return c;
}

/// Induced subgraph on `vertices`; vertex i of the result is vertices[i].
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  for (int v : vertices)
    if (v < 0 || v >= g.size())
      throw InputError("vertex " + std::to_string(v) + " out of range for n=" +
                       std::to_string(g.size()));
  Graph h(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (vertices[i] == vertices[j]) throw InputError("duplicate vertex in subset");
      if (g.has_edge(vertices[i], vertices[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  return h;
}

inline Graph induced_subgraph(const Graph& g, VertexMask s) {
  if (s & ~g.vertices()) throw InputError("vertex subset out of range");
  return induced_subgraph(g, mask_to_list(s));
}

namespace detail {
inline void require_same_size(const std::vector<Graph>& gs) {
  if (gs.empty()) throw InputError("empty graph list");
  for (const Graph& g : gs)
    if (g.size() != gs.front().size()) throw InputError("graphs have different vertex counts");
}
}  // namespace detail

inline Graph intersect_graphs(const std::vector<Graph>& gs) {
  detail::require_same_size(gs);
  Graph out = gs.front();
  for (const Graph& g : gs)
    for (auto [u, v] : out.edges())
      if (!g.has_edge(u, v)) out.remove_edge(u, v);
  return out;
}

inline Graph union_edges(const std::vector<Graph>& gs) {
  detail::require_same_size(gs);
  Graph out(gs.front().size());
  for (const Graph& g : gs)
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
  return out;
}

}  // namespace dimkit
