#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "dimkit/graph.hpp"
#include "dimkit/recognize.hpp"
#include "dimkit/search.hpp"

namespace dimkit {

/// Threshold spanning subgraphs whose edge union is the target.
struct ThresholdCover {
  std::vector<Graph> members;
};

enum class FactorKind { Interval, UnitInterval, Threshold };

inline std::string kind_name(FactorKind k) {
  switch (k) {
    case FactorKind::Interval: return "interval";
    case FactorKind::UnitInterval: return "unit-interval";
    case FactorKind::Threshold: return "threshold";
  }
  return "?";
}

/// Supergraphs of the target, all of one kind, intersecting to it.
struct IntersectionRep {
  FactorKind kind = FactorKind::Interval;
  std::vector<Graph> factors;
};

struct CoverResult {
  int k = 0;
  ThresholdCover witness;
};

struct IntersectionResult {
  int k = 0;
  IntersectionRep witness;
};

namespace detail {

using PairList = std::vector<std::pair<int, int>>;
using Masks = std::vector<VertexMask>;

inline void add_pair(Masks& m, std::pair<int, int> p) {
  m[p.first] |= bit(p.second);
  m[p.second] |= bit(p.first);
}

inline int max_clique_size(const std::vector<VertexMask>& adj, VertexMask cand, int size, int best) {
  if (!cand) return std::max(size, best);
  if (size + popcount(cand) <= best) return best;
  while (cand) {
    if (size + popcount(cand) <= best) break;
    int v = std::countr_zero(cand);
    best = max_clique_size(adj, cand & adj[v], size + 1, best);
    cand &= ~bit(v);
  }
  return best;
}

/// Partitions `items` (vertex pairs) into the fewest classes such that every
/// class, together with `base`, passes `feasible`. Feasibility must be
/// hereditary. Classes are tried in order and a new class is opened only
/// after all open ones, so the first leaf at size k is canonical.
template <class Feasible>
class PairPartition {
 public:
  PairPartition(PairList items, Masks base, Feasible feasible, Deadline& deadline)
      : items_(std::move(items)), base_(std::move(base)), feasible_(std::move(feasible)),
        deadline_(deadline) {
    if (!feasible_(base_)) throw ConsistencyError("base pair set is infeasible");
    const std::size_t m = items_.size();
    conflict_.assign(m, std::vector<char>(m, 0));
    for (std::size_t i = 0; i < m; ++i) {
      Masks single = base_;
      add_pair(single, items_[i]);
      if (!feasible_(single)) throw ConsistencyError("single pair is infeasible");
      for (std::size_t j = i + 1; j < m; ++j) {
        Masks both = single;
        add_pair(both, items_[j]);
        conflict_[i][j] = conflict_[j][i] = !feasible_(both);
      }
    }
  }

  // Largest set of pairwise conflicting items.
  int lower_bound() const {
    const std::size_t m = items_.size();
    if (m == 0) return 0;
    if (m > 64) {
      int best = 1;
      for (std::size_t i = 0; i < m; ++i) {
        std::vector<std::size_t> clique{i};
        for (std::size_t j = 0; j < m; ++j)
          if (std::all_of(clique.begin(), clique.end(), [&](std::size_t c) { return conflict_[c][j] != 0; }))
            clique.push_back(j);
        best = std::max(best, static_cast<int>(clique.size()));
      }
      return best;
    }
    std::vector<VertexMask> adj(m, 0);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (conflict_[i][j]) adj[i] |= bit(static_cast<int>(j));
    return max_clique_size(adj, full_mask(static_cast<int>(m)), 0, 0);
  }

  std::vector<Masks> first_fit() {
    std::vector<Masks> classes;
    std::vector<std::vector<std::size_t>> members;
    for (std::size_t i = 0; i < items_.size(); ++i) {
      bool placed = false;
      for (std::size_t c = 0; c < classes.size() && !placed; ++c) placed = try_place(i, c, classes, members);
      if (!placed) open_class(i, classes, members);
    }
    return classes;
  }

  std::optional<std::vector<Masks>> solve(int k, int upper_bound) {
    upper_ = upper_bound;
    std::vector<Masks> classes;
    std::vector<std::vector<std::size_t>> members;
    if (assign(0, k, classes, members)) return classes;
    return std::nullopt;
  }

  const Masks& base() const { return base_; }

 private:
  bool try_place(std::size_t i, std::size_t c, std::vector<Masks>& classes,
                 std::vector<std::vector<std::size_t>>& members) {
    for (std::size_t j : members[c])
      if (conflict_[i][j]) return false;
    Masks next = classes[c];
    add_pair(next, items_[i]);
    if (!feasible_(next)) return false;
    classes[c] = std::move(next);
    members[c].push_back(i);
    return true;
  }

  void open_class(std::size_t i, std::vector<Masks>& classes, std::vector<std::vector<std::size_t>>& members) {
    classes.push_back(base_);
    add_pair(classes.back(), items_[i]);
    members.push_back({i});
  }

  bool assign(std::size_t i, int k, std::vector<Masks>& classes, std::vector<std::vector<std::size_t>>& members) {
    deadline_.check(upper_);
    if (i == items_.size()) return true;
    for (std::size_t c = 0; c < classes.size(); ++c) {
      Masks saved = classes[c];
      if (!try_place(i, c, classes, members)) continue;
      if (assign(i + 1, k, classes, members)) return true;
      classes[c] = std::move(saved);
      members[c].pop_back();
    }
    if (static_cast<int>(classes.size()) < k) {
      open_class(i, classes, members);
      if (assign(i + 1, k, classes, members)) return true;
      classes.pop_back();
      members.pop_back();
    }
    return false;
  }

  PairList items_;
  Masks base_;
  Feasible feasible_;
  Deadline& deadline_;
  std::vector<std::vector<char>> conflict_;
  int upper_ = 0;
};

// Runs the iterative deepening and returns the classes of a minimum partition.
template <class Feasible>
std::vector<Masks> minimum_partition(PairList items, Masks base, Feasible feasible, int min_classes,
                                     const SearchLimits& limits, const std::string& what) {
  Deadline deadline(limits.timeout, what);
  PairPartition<Feasible> search(std::move(items), std::move(base), std::move(feasible), deadline);
  auto greedy = search.first_fit();
  while (static_cast<int>(greedy.size()) < min_classes) greedy.push_back(search.base());
  const int upper = static_cast<int>(greedy.size());
  const int lower = std::max(min_classes, search.lower_bound());
  for (int k = lower; k < upper; ++k)
    if (auto found = search.solve(k, upper)) {
      while (static_cast<int>(found->size()) < k) found->push_back(search.base());
      return *found;
    }
  return greedy;
}

// --- interval supergraphs avoiding a pair set ------------------------------

// Vertex order such that every forbidden pair (u before v) has all of u's
// neighbors before v. Exists iff some interval supergraph of g misses every
// forbidden pair: sort any such representation by left endpoint.
inline std::optional<std::vector<int>> interval_avoiding_order(const Graph& g, const Masks& forbidden) {
  const int n = g.size();
  const bool dense = n <= 24;
  std::vector<char> failed_dense(dense ? std::size_t{1} << n : 0, 0);
  std::unordered_set<VertexMask> failed_sparse;
  std::vector<int> order;
  auto dfs = [&](auto&& self, VertexMask placed) -> bool {
    if (placed == g.vertices()) return true;
    if (dense ? failed_dense[placed] != 0 : failed_sparse.count(placed) != 0) return false;
    for (VertexMask rest = g.vertices() & ~placed; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      bool ok = true;
      for (VertexMask before = forbidden[v] & placed; before && ok; before &= before - 1)
        ok = (g.neighbors(std::countr_zero(before)) & ~placed) == 0;
      if (!ok) continue;
      order.push_back(v);
      if (self(self, placed | bit(v))) return true;
      order.pop_back();
    }
    if (dense)
      failed_dense[placed] = 1;
    else
      failed_sparse.insert(placed);
    return false;
  };
  if (!dfs(dfs, 0)) return std::nullopt;
  return order;
}

// Smallest interval supergraph compatible with `order`: each vertex reaches
// to its last neighbor.
inline IntervalRep interval_rep_from_order(const Graph& g, const std::vector<int>& order) {
  const int n = g.size();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  IntervalRep rep;
  rep.intervals.resize(n);
  for (int v = 0; v < n; ++v) {
    int reach = pos[v];
    for (int u : mask_to_list(g.neighbors(v))) reach = std::max(reach, pos[u]);
    rep.intervals[v] = {pos[v] + 1, reach + 1};
  }
  return rep;
}

// --- unit interval supergraphs avoiding a pair set -------------------------

// Sweep events of a proper representation: intervals close in the order they
// open. A vertex closes as soon as all its neighbors have opened.
inline std::optional<std::vector<std::pair<int, bool>>> unit_avoiding_sweep(const Graph& g, const Masks& forbidden) {
  std::unordered_set<std::string> failed;
  std::vector<std::pair<int, bool>> events;  // (vertex, is_open)
  auto key = [](VertexMask opened, const std::vector<int>& queue) {
    std::string k(reinterpret_cast<const char*>(&opened), sizeof opened);
    for (int v : queue) k.push_back(static_cast<char>(v));
    return k;
  };
  auto dfs = [&](auto&& self, VertexMask opened, std::vector<int>& queue) -> bool {
    if (opened == g.vertices()) {
      for (int v : queue) events.emplace_back(v, false);
      return true;
    }
    std::string k = key(opened, queue);
    if (failed.count(k)) return false;
    VertexMask open_now = list_to_mask(queue);
    for (VertexMask rest = g.vertices() & ~opened; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      if (forbidden[v] & open_now) continue;
      const std::size_t mark = events.size();
      std::vector<int> next = queue;
      next.push_back(v);
      events.emplace_back(v, true);
      VertexMask now = opened | bit(v);
      while (!next.empty() && (g.neighbors(next.front()) & ~now) == 0) {
        events.emplace_back(next.front(), false);
        next.erase(next.begin());
      }
      if (self(self, now, next)) return true;
      events.resize(mark);
    }
    failed.insert(std::move(k));
    return false;
  };
  std::vector<int> queue;
  if (!dfs(dfs, 0, queue)) return std::nullopt;
  return events;
}

inline IntervalRep interval_rep_from_sweep(int n, const std::vector<std::pair<int, bool>>& events) {
  IntervalRep rep;
  rep.intervals.resize(n);
  for (std::size_t t = 0; t < events.size(); ++t) {
    auto& iv = rep.intervals[events[t].first];
    (events[t].second ? iv.l : iv.r) = static_cast<std::int64_t>(t) + 1;
  }
  return rep;
}

inline Graph graph_from_masks(const Masks& m) { return Graph::from_adjacency(m); }

}  // namespace detail

/// Exact threshold dimension: the fewest threshold spanning subgraphs whose
/// edges cover E(g). On split graphs the clique's internal edges join every
/// member and only clique-independent edges are distributed.
inline CoverResult threshold_dimension(const Graph& g, const SearchLimits& limits = {}) {
  detail::require_capacity(g.size(), limits, "threshold_dimension");
  if (g.edge_count() == 0) return {0, {}};
  const int n = g.size();
  detail::Masks base(n, 0);
  detail::PairList items;
  std::optional<SplitPartition> part;
  if (n > 0) part = recognize_split(g).partition;
  for (auto e : g.edges()) {
    if (part && (part->clique & bit(e.first)) && (part->clique & bit(e.second)))
      detail::add_pair(base, e);
    else
      items.push_back(e);
  }
  auto feasible = [&g](const detail::Masks& required) {
    return detail::threshold_between(detail::graph_from_masks(required), g).has_value();
  };
  auto classes = detail::minimum_partition(std::move(items), std::move(base), feasible, 1, limits,
                                           "threshold_dimension");
  CoverResult res;
  res.k = static_cast<int>(classes.size());
  for (const auto& c : classes) res.witness.members.push_back(*detail::threshold_between(detail::graph_from_masks(c), g));
  return res;
}

/// Fewest threshold graphs intersecting to g: the threshold dimension of the
/// complement, with the cover complemented member-wise. A complete graph
/// reports 1 with itself as the only factor.
inline IntersectionResult threshold_intersection_number(const Graph& g, const SearchLimits& limits = {}) {
  auto cover = threshold_dimension(complement(g), limits);
  IntersectionResult res;
  res.witness.kind = FactorKind::Threshold;
  if (cover.k == 0) {
    res.k = 1;
    res.witness.factors.push_back(g);
    return res;
  }
  res.k = cover.k;
  for (const auto& member : cover.witness.members) res.witness.factors.push_back(complement(member));
  return res;
}

/// Exact boxicity: the fewest interval supergraphs intersecting to g. Each
/// non-edge is assigned to a factor that must miss it. On split graphs the
/// independent pairs are missed by every factor.
inline IntersectionResult boxicity(const Graph& g, const SearchLimits& limits = {}) {
  detail::require_capacity(g.size(), limits, "boxicity");
  detail::require_nonempty(g);
  const int n = g.size();
  detail::Masks base(n, 0);
  detail::PairList items;
  auto part = recognize_split(g).partition;
  for (auto e : g.non_edges()) {
    if (part && (part->independent & bit(e.first)) && (part->independent & bit(e.second)))
      detail::add_pair(base, e);
    else
      items.push_back(e);
  }
  auto feasible = [&g](const detail::Masks& forbidden) {
    return detail::interval_avoiding_order(g, forbidden).has_value();
  };
  auto classes = detail::minimum_partition(std::move(items), std::move(base), feasible, 1, limits, "boxicity");
  IntersectionResult res;
  res.k = static_cast<int>(classes.size());
  res.witness.kind = FactorKind::Interval;
  for (const auto& c : classes)
    res.witness.factors.push_back(
        interval_graph(detail::interval_rep_from_order(g, *detail::interval_avoiding_order(g, c))));
  return res;
}

/// Exact cubicity: the fewest unit interval supergraphs intersecting to g.
inline IntersectionResult cubicity(const Graph& g, const SearchLimits& limits = {}) {
  detail::require_capacity(g.size(), limits, "cubicity");
  detail::require_nonempty(g);
  const int n = g.size();
  auto feasible = [&g](const detail::Masks& forbidden) {
    return detail::unit_avoiding_sweep(g, forbidden).has_value();
  };
  auto classes = detail::minimum_partition(g.non_edges(), detail::Masks(n, 0), feasible, 1, limits, "cubicity");
  IntersectionResult res;
  res.k = static_cast<int>(classes.size());
  res.witness.kind = FactorKind::UnitInterval;
  for (const auto& c : classes)
    res.witness.factors.push_back(
        interval_graph(detail::interval_rep_from_sweep(n, *detail::unit_avoiding_sweep(g, c))));
  return res;
}

}  // namespace dimkit
