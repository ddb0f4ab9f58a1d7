#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "dimkit/graph.hpp"
#include "dimkit/poset.hpp"
#include "dimkit/recognize.hpp"
#include "dimkit/solvers.hpp"

namespace dimkit {

namespace detail {

inline void require_same_vertices(const Graph& a, const Graph& b, const char* what) {
  if (a.size() != b.size()) throw InputError(std::string(what) + ": vertex counts differ");
}

inline void require_contains(const Graph& sub, const Graph& sup, const char* what) {
  require_same_vertices(sub, sup, what);
  if (!sub.is_subgraph_of(sup)) throw InputError(std::string(what) + ": graph is not a subgraph of the supergraph");
}

// All factors contain g and intersect to exactly g.
inline void require_intersection(const Graph& g, const std::vector<Graph>& factors, const char* what) {
  if (factors.empty()) throw InputError(std::string(what) + ": no factors");
  for (const Graph& f : factors) require_contains(g, f, what);
  if (!(intersect_graphs(factors) == g)) throw InputError(std::string(what) + ": factors do not intersect to the graph");
}

}  // namespace detail

/// Threshold H with g ⊆ H ⊆ g_sup whose independent side is that of g: each
/// independent vertex keeps only its g_sup-neighbors inside the clique.
inline Graph threshold_sandwich(const Graph& g, const SplitPartition& part, const Graph& g_sup) {
  require_partition(g, part);
  detail::require_contains(g, g_sup, "threshold_sandwich");
  if (!is_threshold(g_sup)) throw InputError("threshold_sandwich: supergraph is not threshold");
  Graph h(g.size());
  for (int v : mask_to_list(part.clique)) {
    for (int u : mask_to_list(part.clique & ~full_mask(v + 1))) h.add_edge(v, u);
  }
  for (int u : mask_to_list(part.independent))
    for (int v : mask_to_list(g_sup.neighbors(u) & part.clique)) h.add_edge(u, v);
  if (!g.is_subgraph_of(h) || !h.is_subgraph_of(g_sup) || !is_threshold(h))
    throw ConsistencyError("threshold_sandwich produced an invalid graph");
  return h;
}

/// Realizer of the characteristic poset of g, one extension per threshold
/// factor. Elements go by the smallest factor neighborhood containing them,
/// then by the poset, then by sorted neighborhood.
inline Realizer realizer_from_threshold_cover(const Graph& g, const SplitPartition& part, const IntersectionRep& rep) {
  require_partition(g, part);
  if (rep.kind != FactorKind::Threshold) throw InputError("realizer_from_threshold_cover: factors must be threshold");
  detail::require_intersection(g, rep.factors, "realizer_from_threshold_cover");
  for (const Graph& t : rep.factors)
    if (!is_threshold(t)) throw InputError("realizer_from_threshold_cover: factor is not threshold");

  auto cp = characteristic_poset(g, part);
  const int m = cp.poset.size();
  Realizer out;
  for (const Graph& factor : rep.factors) {
    Graph t = threshold_sandwich(g, part, factor);
    std::vector<VertexMask> f(m);
    for (int x = 0; x < m; ++x) {
      int best = -1;
      for (int u : mask_to_list(part.independent)) {
        VertexMask nb = t.neighbors(u);
        if ((cp.neighborhoods[x] & ~nb) == 0 && (best < 0 || popcount(nb) < popcount(f[x]))) {
          best = u;
          f[x] = nb;
        }
      }
      if (best < 0) throw ConsistencyError("no factor neighborhood contains an element");
    }
    auto below = [&](int x, int y) {
      if (f[x] != f[y]) return (f[x] & ~f[y]) == 0;
      return cp.poset.less(x, y);
    };
    auto prefer = [&](int x, int y) {
      if (popcount(f[x]) != popcount(f[y])) return popcount(f[x]) < popcount(f[y]);
      return lex_less(cp.neighborhoods[x], cp.neighborhoods[y]);
    };
    std::vector<int> order;
    VertexMask left = full_mask(m);
    while (left) {
      int pick = -1;
      for (int x : mask_to_list(left)) {
        bool minimal = true;
        for (int y : mask_to_list(left))
          if (y != x && below(y, x)) minimal = false;
        if (minimal && (pick < 0 || prefer(x, pick))) pick = x;
      }
      if (pick < 0) throw ConsistencyError("factor order has a cycle");
      order.push_back(pick);
      left &= ~bit(pick);
    }
    out.emplace_back(std::move(order));
  }
  if (m > 0 && !is_realizer(cp.poset, out)) throw ConsistencyError("constructed extensions are not a realizer");
  return out;
}

struct SandwichInterval {
  Graph graph;
  IntervalRep rep;
};

/// Split interval H with g ⊆ H ⊆ g_sup and I(H) = I(g). Each independent
/// vertex shrinks to a private point shared by its own interval and those of
/// its g-neighbors.
inline SandwichInterval split_interval_sandwich(const Graph& g, const SplitPartition& part, const IntervalRep& g_sup_rep) {
  require_partition(g, part);
  if (g_sup_rep.size() != g.size()) throw InputError("split_interval_sandwich: representation size differs");
  Graph sup = interval_graph(g_sup_rep);
  detail::require_contains(g, sup, "split_interval_sandwich");
  const IntervalRep norm = normalize_interval_rep(g_sup_rep);
  const std::int64_t scale = g.size() + 1;
  SandwichInterval res;
  res.rep.intervals.resize(g.size());
  for (int v : mask_to_list(part.clique))
    res.rep.intervals[v] = {norm.intervals[v].l * scale, norm.intervals[v].r * scale};
  int idx = 0;
  for (int v : mask_to_list(part.independent)) {
    std::int64_t lo = norm.intervals[v].l, hi = norm.intervals[v].r;
    for (int u : mask_to_list(g.neighbors(v))) {
      lo = std::max(lo, norm.intervals[u].l);
      hi = std::min(hi, norm.intervals[u].r);
    }
    if (lo >= hi) throw ConsistencyError("split_interval_sandwich: neighborhood intervals share no point");
    std::int64_t p = lo * scale + ++idx;
    res.rep.intervals[v] = {p, p};
  }
  res.graph = interval_graph(res.rep);
  if (!g.is_subgraph_of(res.graph) || !res.graph.is_subgraph_of(sup) ||
      !res.graph.is_independent(part.independent))
    throw ConsistencyError("split_interval_sandwich produced an invalid graph");
  return res;
}

/// Two threshold graphs intersecting to a split interval graph: stretch every
/// clique interval to the far left, or to the far right.
inline std::pair<Graph, Graph> two_threshold_cover(const Graph& g, const SplitPartition& part, const IntervalRep& rep) {
  require_partition(g, part);
  if (rep.size() != g.size() || !(interval_graph(rep) == g))
    throw InputError("two_threshold_cover: representation does not realize the graph");
  std::int64_t lo = 0, hi = 0;
  for (std::size_t v = 0; v < rep.intervals.size(); ++v) {
    lo = v ? std::min(lo, rep.intervals[v].l) : rep.intervals[v].l;
    hi = v ? std::max(hi, rep.intervals[v].r) : rep.intervals[v].r;
  }
  IntervalRep left = rep, right = rep;
  for (int v : mask_to_list(part.clique)) {
    left.intervals[v].l = lo;
    right.intervals[v].r = hi;
  }
  std::pair<Graph, Graph> out{interval_graph(left), interval_graph(right)};
  if (!is_threshold(out.first) || !is_threshold(out.second) || !(intersect_graphs({out.first, out.second}) == g))
    throw ConsistencyError("two_threshold_cover produced an invalid pair");
  return out;
}

/// Threshold factors, two per interval factor, intersecting to split g.
inline IntersectionRep box_to_threshold_cover(const Graph& g, const SplitPartition& part, const IntersectionRep& rep) {
  require_partition(g, part);
  if (rep.kind != FactorKind::Interval) throw InputError("box_to_threshold_cover: factors must be interval");
  detail::require_intersection(g, rep.factors, "box_to_threshold_cover");
  IntersectionRep out;
  out.kind = FactorKind::Threshold;
  for (const Graph& factor : rep.factors) {
    auto frep = recognize_interval(factor);
    if (!frep) throw InputError("box_to_threshold_cover: factor is not interval");
    auto h = split_interval_sandwich(g, part, *frep);
    auto [t1, t2] = two_threshold_cover(h.graph, part, h.rep);
    out.factors.push_back(std::move(t1));
    out.factors.push_back(std::move(t2));
  }
  if (!(intersect_graphs(out.factors) == g)) throw ConsistencyError("box_to_threshold_cover: wrong intersection");
  return out;
}

struct PosetSplitGraph {
  Graph graph;
  SplitPartition partition;
  // element_of[v] is the poset element of clique vertex v.
  std::vector<int> element_of;
};

/// Clique vertices 0..N-1, one per element; independent vertex N+u is
/// adjacent to clique vertex v iff v <= u.
inline PosetSplitGraph poset_to_split_graph(const Poset& p) {
  const int n = p.size();
  if (n < 1) throw InputError("poset_to_split_graph: empty poset");
  if (2 * n > kMaxVertices) throw CapacityError("poset_to_split_graph: more than 32 elements");
  PosetSplitGraph res{Graph(2 * n), {full_mask(n), full_mask(2 * n) & ~full_mask(n)}, {}};
  for (int v = 0; v < n; ++v) {
    res.element_of.push_back(v);
    for (int w = v + 1; w < n; ++w) res.graph.add_edge(v, w);
    for (int u = 0; u < n; ++u)
      if (p.leq(v, u)) res.graph.add_edge(n + u, v);
  }
  if (!(characteristic_poset(res.graph, res.partition).poset == p))
    throw ConsistencyError("poset_to_split_graph: characteristic poset differs");
  return res;
}

/// One threshold graph per extension: independent vertex N+u sees clique
/// vertex v iff v is at or below u in that extension.
inline IntersectionRep threshold_graphs_from_realizer(const Poset& p, const Realizer& r) {
  for (const auto& ext : r)
    if (ext.size() != p.size()) throw InputError("threshold_graphs_from_realizer: extension size differs");
  if (!is_realizer(p, r)) throw InputError("threshold_graphs_from_realizer: not a realizer");
  const int n = p.size();
  auto gp = poset_to_split_graph(p);
  IntersectionRep out;
  out.kind = FactorKind::Threshold;
  for (const auto& ext : r) {
    Graph t(2 * n);
    for (int v = 0; v < n; ++v) {
      for (int w = v + 1; w < n; ++w) t.add_edge(v, w);
      for (int u = 0; u < n; ++u)
        if (ext.position(v) <= ext.position(u)) t.add_edge(n + u, v);
    }
    out.factors.push_back(std::move(t));
  }
  if (!(intersect_graphs(out.factors) == gp.graph)) throw ConsistencyError("threshold factors miss the poset graph");
  return out;
}

/// Double-copy split graph whose boxicity is t(h). Copy 1 of vertex v of
/// complement(h) is v, copy 2 is n+v. A complete split h is returned as is.
struct GPrime {
  Graph graph;
  SplitPartition partition;
  bool trivial_case = false;
  // The complement of h with its canonical partition, shared by both copies.
  Graph base;
  SplitPartition base_partition;
  std::vector<int> copy1;
  std::vector<int> copy2;
};

inline GPrime split_to_gprime(const Graph& h) {
  detail::require_nonempty(h);
  auto hs = recognize_split(h);
  if (!hs.is_split()) throw InputError("split_to_gprime: input is not split");
  GPrime res;
  const int n = h.size();
  if (is_complete_split(h)) {
    res.graph = h;
    res.partition = *hs.partition;
    res.trivial_case = true;
    for (int v = 0; v < n; ++v) res.copy1.push_back(v);
    return res;
  }
  if (2 * n > kMaxVertices) throw CapacityError("split_to_gprime: more than 32 vertices");
  res.base = complement(h);
  res.base_partition = *recognize_split(res.base).partition;
  const VertexMask k = res.base_partition.clique, i = res.base_partition.independent;
  res.graph = Graph(2 * n);
  for (int v = 0; v < n; ++v) {
    res.copy1.push_back(v);
    res.copy2.push_back(n + v);
  }
  for (auto [u, v] : res.base.edges()) {
    res.graph.add_edge(u, v);
    res.graph.add_edge(n + u, n + v);
  }
  for (int u : mask_to_list(k)) {
    for (int v : mask_to_list(k)) res.graph.add_edge(u, n + v);
    for (int v : mask_to_list(i)) {
      res.graph.add_edge(u, n + v);
      res.graph.add_edge(n + u, v);
    }
  }
  res.partition = {k | (k << n), i | (i << n)};
  if (!is_valid_partition(res.graph, res.partition)) throw ConsistencyError("split_to_gprime: partition invalid");
  return res;
}

struct RepresentedGraph {
  Graph graph;
  IntervalRep rep;
};

/// Interval factors of G′, one per threshold factor of complement(h).
/// Copy-1 independent vertices sit at points g_i(u), copy-1 clique vertices
/// span [-n, h_i(u)]; copy 2 is the mirror image.
inline std::vector<RepresentedGraph> interval_reps_from_threshold_cover(const Graph& h,
                                                                        const std::vector<Graph>& factors) {
  GPrime gp = split_to_gprime(h);
  if (gp.trivial_case) {
    auto rep = recognize_interval(h);
    if (!rep) throw ConsistencyError("complete split graph is not interval");
    return {{h, *rep}};
  }
  const Graph& g = gp.base;
  const SplitPartition& part = gp.base_partition;
  const int n = h.size();
  for (const Graph& t : factors)
    if (t.size() != n || !is_threshold(t))
      throw InputError("interval_reps_from_threshold_cover: factor is not a threshold graph on the same vertices");
  detail::require_intersection(g, factors, "interval_reps_from_threshold_cover");

  std::vector<RepresentedGraph> out;
  for (const Graph& factor : factors) {
    Graph t = threshold_sandwich(g, part, factor);
    std::vector<int> ind = mask_to_list(part.independent);
    std::stable_sort(ind.begin(), ind.end(), [&](int a, int b) { return t.degree(a) > t.degree(b); });
    std::vector<std::int64_t> gi(n, 0), hi(n, 0);
    for (std::size_t r = 0; r < ind.size(); ++r) gi[ind[r]] = static_cast<std::int64_t>(r) + 1;
    for (int u : mask_to_list(part.clique))
      for (int v : mask_to_list(t.neighbors(u) & part.independent)) hi[u] = std::max(hi[u], gi[v]);
    RepresentedGraph f;
    f.rep.intervals.resize(2 * n);
    for (int u : mask_to_list(part.independent)) {
      f.rep.intervals[gp.copy1[u]] = {gi[u], gi[u]};
      f.rep.intervals[gp.copy2[u]] = {-gi[u], -gi[u]};
    }
    for (int u : mask_to_list(part.clique)) {
      f.rep.intervals[gp.copy1[u]] = {-n, hi[u]};
      f.rep.intervals[gp.copy2[u]] = {-hi[u], n};
    }
    f.graph = interval_graph(f.rep);
    if (!(induced_subgraph(f.graph, gp.copy1) == t) || !(induced_subgraph(f.graph, gp.copy2) == t))
      throw ConsistencyError("interval factor does not restrict to its threshold factor");
    out.push_back(std::move(f));
  }
  std::vector<Graph> graphs;
  for (const auto& f : out) graphs.push_back(f.graph);
  if (!(intersect_graphs(graphs) == gp.graph)) throw ConsistencyError("interval factors do not intersect to G′");
  return out;
}

}  // namespace dimkit
