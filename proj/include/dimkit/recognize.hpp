#pragma once

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "dimkit/graph.hpp"

namespace dimkit {

/// An induced forbidden subgraph. Vertices are listed in path/cycle order;
/// for 2K2 the edges are (v0,v1) and (v2,v3).
struct ForbiddenSubgraph {
  enum class Kind { TwoK2, C4, C5, P4, Claw };

  Kind kind = Kind::P4;
  std::vector<int> vertices;
};

inline std::string kind_name(ForbiddenSubgraph::Kind k) {
  switch (k) {
    case ForbiddenSubgraph::Kind::TwoK2: return "2K2";
    case ForbiddenSubgraph::Kind::C4: return "C4";
    case ForbiddenSubgraph::Kind::C5: return "C5";
    case ForbiddenSubgraph::Kind::P4: return "P4";
    case ForbiddenSubgraph::Kind::Claw: return "K1,3";
  }
  return "?";
}

struct SplitResult {
  std::optional<SplitPartition> partition;
  std::optional<ForbiddenSubgraph> obstruction;

  bool is_split() const { return partition.has_value(); }
};

struct ThresholdResult {
  bool is_threshold = false;
  // Each vertex is isolated or dominating among the vertices after it.
  std::vector<int> elimination_order;
  std::optional<ForbiddenSubgraph> obstruction;
};

namespace detail {

inline void require_nonempty(const Graph& g) {
  if (g.size() == 0) throw InputError("graph with no vertices");
}

// Orders the four vertices of an induced P4/C4/2K2 into canonical form, or
// returns nothing if the induced subgraph is none of these.
inline std::optional<ForbiddenSubgraph> classify_four(const Graph& g, std::array<int, 4> vs) {
  std::array<int, 4> deg{};
  int edges = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (g.has_edge(vs[i], vs[j])) {
        ++deg[i];
        ++deg[j];
        ++edges;
      }
  if (edges == 2 && std::all_of(deg.begin(), deg.end(), [](int d) { return d == 1; })) {
    int partner = 1;
    while (!g.has_edge(vs[0], vs[partner])) ++partner;
    std::vector<int> rest;
    for (int i = 1; i < 4; ++i)
      if (i != partner) rest.push_back(vs[i]);
    return ForbiddenSubgraph{ForbiddenSubgraph::Kind::TwoK2, {vs[0], vs[partner], rest[0], rest[1]}};
  }
  if (edges == 4 && std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; })) {
    std::vector<int> order{vs[0]};
    VertexMask used = bit(vs[0]);
    while (order.size() < 4) {
      for (int v : vs)
        if (!(used & bit(v)) && g.has_edge(order.back(), v)) {
          order.push_back(v);
          used |= bit(v);
          break;
        }
    }
    return ForbiddenSubgraph{ForbiddenSubgraph::Kind::C4, order};
  }
  if (edges == 3 && std::count(deg.begin(), deg.end(), 1) == 2 &&
      std::count(deg.begin(), deg.end(), 2) == 2) {
    int start = 0;
    while (deg[start] != 1) ++start;
    std::vector<int> order{vs[start]};
    VertexMask used = bit(vs[start]);
    while (order.size() < 4) {
      for (int v : vs)
        if (!(used & bit(v)) && g.has_edge(order.back(), v)) {
          order.push_back(v);
          used |= bit(v);
          break;
        }
    }
    return ForbiddenSubgraph{ForbiddenSubgraph::Kind::P4, order};
  }
  return std::nullopt;
}

// First induced subgraph (over 4-subsets in lex order) whose kind is in `wanted`.
template <class Pred>
std::optional<ForbiddenSubgraph> find_four(const Graph& g, Pred wanted) {
  const int n = g.size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d)
          if (auto f = classify_four(g, {a, b, c, d}); f && wanted(f->kind)) return f;
  return std::nullopt;
}

inline std::optional<ForbiddenSubgraph> find_c5(const Graph& g) {
  const int n = g.size();
  std::array<int, 5> s{};
  for (s[0] = 0; s[0] < n; ++s[0])
    for (s[1] = s[0] + 1; s[1] < n; ++s[1])
      for (s[2] = s[1] + 1; s[2] < n; ++s[2])
        for (s[3] = s[2] + 1; s[3] < n; ++s[3])
          for (s[4] = s[3] + 1; s[4] < n; ++s[4]) {
            VertexMask m = 0;
            for (int v : s) m |= bit(v);
            bool two_regular = true;
            for (int v : s) two_regular = two_regular && popcount(g.neighbors(v) & m) == 2;
            if (!two_regular) continue;
            // 2-regular on 5 vertices is C5 (a triangle plus an edge is impossible).
            std::vector<int> order{s[0]};
            VertexMask used = bit(s[0]);
            while (order.size() < 5) {
              VertexMask next = g.neighbors(order.back()) & m & ~used;
              int v = std::countr_zero(next);
              order.push_back(v);
              used |= bit(v);
            }
            return ForbiddenSubgraph{ForbiddenSubgraph::Kind::C5, order};
          }
  return std::nullopt;
}

// Degree-sequence partition: the top-m vertices by degree form the clique.
inline std::optional<SplitPartition> degree_partition(const Graph& g) {
  const int n = g.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  int m = 0;
  for (int i = 0; i < n; ++i)
    if (g.degree(order[i]) >= i) m = i + 1;
  SplitPartition p;
  for (int i = 0; i < n; ++i) (i < m ? p.clique : p.independent) |= bit(order[i]);
  if (!is_valid_partition(g, p)) return std::nullopt;
  return p;
}

}  // namespace detail

/// Split recognition. The returned partition has a maximum clique; among
/// those, the clique whose sorted vertex list is lexicographically least.
inline SplitResult recognize_split(const Graph& g) {
  detail::require_nonempty(g);
  auto base = detail::degree_partition(g);
  if (!base) {
    SplitResult res;
    res.obstruction = detail::find_four(g, [](auto k) {
      return k == ForbiddenSubgraph::Kind::TwoK2 || k == ForbiddenSubgraph::Kind::C4;
    });
    if (!res.obstruction) res.obstruction = detail::find_c5(g);
    if (!res.obstruction) throw ConsistencyError("non-split graph without a forbidden subgraph");
    return res;
  }
  // Grow to a maximum clique: any independent vertex seeing the whole clique joins it.
  SplitPartition p = *base;
  for (int v : mask_to_list(p.independent))
    if ((g.neighbors(v) & p.clique) == p.clique) {
      p.clique |= bit(v);
      p.independent &= ~bit(v);
      break;
    }
  // Every other maximum clique with an independent complement is a single swap.
  SplitPartition best = p;
  for (int x : mask_to_list(p.clique))
    for (int y : mask_to_list(p.independent)) {
      if ((g.neighbors(y) & p.clique) != (p.clique & ~bit(x))) continue;
      SplitPartition q{(p.clique & ~bit(x)) | bit(y), (p.independent & ~bit(y)) | bit(x)};
      if (is_valid_partition(g, q) && lex_less(q.clique, best.clique)) best = q;
    }
  return SplitResult{best, std::nullopt};
}

/// True when every independent vertex is adjacent to the whole clique for
/// some split partition; equivalently the complement is one clique plus
/// isolated vertices.
inline bool is_complete_split(const Graph& g) {
  Graph c = complement(g);
  VertexMask nontrivial = 0;
  for (int v = 0; v < c.size(); ++v)
    if (c.degree(v) > 0) nontrivial |= bit(v);
  return c.is_clique(nontrivial);
}

namespace detail {

// Greedy threshold sandwich: finds a threshold T with required ⊆ T ⊆ allowed,
// or nothing. Isolates the lowest removable vertex first, otherwise makes the
// lowest fully-adjacent vertex dominating. Exact: some vertex of any
// threshold graph is isolated or dominating.
inline std::optional<Graph> threshold_between(const Graph& required, const Graph& allowed,
                                              std::vector<int>* order = nullptr) {
  const int n = allowed.size();
  Graph t(n);
  VertexMask remaining = allowed.vertices();
  while (remaining) {
    int pick = -1;
    for (VertexMask m = remaining; m; m &= m - 1) {
      int v = std::countr_zero(m);
      if ((required.neighbors(v) & remaining) == 0) {
        pick = v;
        break;
      }
    }
    if (pick < 0) {
      for (VertexMask m = remaining; m; m &= m - 1) {
        int v = std::countr_zero(m);
        VertexMask others = remaining & ~bit(v);
        if ((allowed.neighbors(v) & others) == others) {
          pick = v;
          for (int u : mask_to_list(others)) t.add_edge(v, u);
          break;
        }
      }
    }
    if (pick < 0) return std::nullopt;
    if (order) order->push_back(pick);
    remaining &= ~bit(pick);
  }
  return t;
}

}  // namespace detail

inline ThresholdResult recognize_threshold(const Graph& g) {
  detail::require_nonempty(g);
  ThresholdResult res;
  if (detail::threshold_between(g, g, &res.elimination_order)) {
    res.is_threshold = true;
    return res;
  }
  res.elimination_order.clear();
  res.obstruction = detail::find_four(g, [](auto) { return true; });
  if (!res.obstruction) throw ConsistencyError("non-threshold graph without P4, C4 or 2K2");
  return res;
}

inline bool is_threshold(const Graph& g) {
  return g.size() == 0 || detail::threshold_between(g, g).has_value();
}

inline std::optional<ForbiddenSubgraph> find_induced_claw(const Graph& g) {
  const int n = g.size();
  for (int c = 0; c < n; ++c) {
    auto nb = mask_to_list(g.neighbors(c));
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        for (std::size_t k = j + 1; k < nb.size(); ++k)
          if (!g.has_edge(nb[i], nb[j]) && !g.has_edge(nb[i], nb[k]) && !g.has_edge(nb[j], nb[k]))
            return ForbiddenSubgraph{ForbiddenSubgraph::Kind::Claw, {c, nb[i], nb[j], nb[k]}};
  }
  return std::nullopt;
}

namespace detail {

// Perfect elimination ordering via maximum cardinality search, or nothing
// when the graph is not chordal.
inline std::optional<std::vector<int>> perfect_elimination_order(const Graph& g) {
  const int n = g.size();
  std::vector<int> weight(n, 0);
  std::vector<int> visit;
  VertexMask seen = 0;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!(seen & bit(v)) && (best < 0 || weight[v] > weight[best])) best = v;
    visit.push_back(best);
    seen |= bit(best);
    for (int u : mask_to_list(g.neighbors(best) & ~seen)) ++weight[u];
  }
  std::vector<int> peo(visit.rbegin(), visit.rend());
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[peo[i]] = i;
  for (int i = 0; i < n; ++i) {
    VertexMask later = 0;
    for (int u : mask_to_list(g.neighbors(peo[i])))
      if (pos[u] > i) later |= bit(u);
    if (!g.is_clique(later)) return std::nullopt;
  }
  return peo;
}

// Maximal cliques of a chordal graph, sorted by their vertex lists.
inline std::vector<VertexMask> chordal_maximal_cliques(const Graph& g, const std::vector<int>& peo) {
  const int n = g.size();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[peo[i]] = i;
  std::vector<VertexMask> candidates;
  for (int i = 0; i < n; ++i) {
    VertexMask c = bit(peo[i]);
    for (int u : mask_to_list(g.neighbors(peo[i])))
      if (pos[u] > i) c |= bit(u);
    candidates.push_back(c);
  }
  std::vector<VertexMask> maximal;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < candidates.size() && !dominated; ++j) {
      if (i == j) continue;
      bool subset = (candidates[i] & ~candidates[j]) == 0;
      dominated = subset && (candidates[i] != candidates[j] || j < i);
    }
    if (!dominated) maximal.push_back(candidates[i]);
  }
  std::sort(maximal.begin(), maximal.end(), lex_less);
  return maximal;
}

// Ordered partition of columns built by one overlap component of rows.
// Blocks are column masks; every row of the component is a run of blocks.
class OverlapComponent {
 public:
  explicit OverlapComponent(VertexMask first) : blocks_{first}, universe_(first) {}

  // Inserts a row overlapping some inserted row. False when no consecutive
  // arrangement exists.
  bool insert(VertexMask row) {
    const int t = static_cast<int>(blocks_.size());
    int lo = -1, hi = -1;
    for (int k = 0; k < t; ++k)
      if (blocks_[k] & row) {
        if (lo < 0) lo = k;
        hi = k;
      }
    if (lo < 0) return false;
    for (int k = lo + 1; k < hi; ++k)
      if ((blocks_[k] & ~row) != 0) return false;
    const VertexMask fresh = row & ~universe_;
    auto full = [&](int k) { return (blocks_[k] & ~row) == 0; };
    std::vector<VertexMask> out;
    if (fresh == 0) {
      if (lo == hi) return false;
      for (int k = 0; k < t; ++k) {
        if (k == lo) {
          push(out, blocks_[k] & ~row);
          push(out, blocks_[k] & row);
        } else if (k == hi) {
          push(out, blocks_[k] & row);
          push(out, blocks_[k] & ~row);
        } else {
          out.push_back(blocks_[k]);
        }
      }
    } else if (hi == t - 1 && (lo == hi || full(hi))) {
      for (int k = 0; k < t; ++k) {
        if (k == lo) {
          push(out, blocks_[k] & ~row);
          push(out, blocks_[k] & row);
        } else {
          out.push_back(blocks_[k]);
        }
      }
      out.push_back(fresh);
    } else if (lo == 0 && (lo == hi || full(lo))) {
      out.push_back(fresh);
      for (int k = 0; k < t; ++k) {
        if (k == hi) {
          push(out, blocks_[k] & row);
          push(out, blocks_[k] & ~row);
        } else {
          out.push_back(blocks_[k]);
        }
      }
    } else {
      return false;
    }
    blocks_ = std::move(out);
    universe_ |= row;
    return true;
  }

  const std::vector<VertexMask>& blocks() const { return blocks_; }
  VertexMask universe() const { return universe_; }

 private:
  static void push(std::vector<VertexMask>& out, VertexMask b) {
    if (b) out.push_back(b);
  }

  std::vector<VertexMask> blocks_;
  VertexMask universe_;
};

inline bool overlaps(VertexMask a, VertexMask b) {
  return (a & b) && (a & ~b) && (b & ~a);
}

// Column order in which every row is consecutive, or nothing. Columns are
// 0..cols-1, rows are column masks.
inline std::optional<std::vector<int>> consecutive_ones_order(int cols, std::vector<VertexMask> rows) {
  rows.push_back(full_mask(cols));
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  rows.erase(std::remove(rows.begin(), rows.end(), VertexMask{0}), rows.end());

  std::vector<OverlapComponent> comps;
  std::vector<bool> done(rows.size(), false);
  for (std::size_t s = 0; s < rows.size(); ++s) {
    if (done[s]) continue;
    OverlapComponent comp(rows[s]);
    std::vector<std::size_t> members{s};
    done[s] = true;
    for (std::size_t q = 0; q < members.size(); ++q)
      for (std::size_t r = 0; r < rows.size(); ++r)
        if (!done[r] && overlaps(rows[members[q]], rows[r])) {
          if (!comp.insert(rows[r])) return std::nullopt;
          done[r] = true;
          members.push_back(r);
        }
    comps.push_back(std::move(comp));
  }

  // Each component sits inside one block of its smallest container.
  const std::size_t c = comps.size();
  auto inside = [&](std::size_t a, std::size_t b) {
    for (VertexMask blk : comps[b].blocks())
      if ((comps[a].universe() & ~blk) == 0) return true;
    return false;
  };
  std::vector<int> parent(c, -1);
  for (std::size_t a = 0; a < c; ++a)
    for (std::size_t b = 0; b < c; ++b) {
      if (a == b || !inside(a, b)) continue;
      if (parent[a] < 0) {
        parent[a] = static_cast<int>(b);
        continue;
      }
      const auto& cur = comps[parent[a]];
      int sb = popcount(comps[b].universe()), sc = popcount(cur.universe());
      if (sb < sc || (sb == sc && comps[b].blocks().size() > cur.blocks().size()))
        parent[a] = static_cast<int>(b);
    }

  std::vector<int> order;
  auto emit = [&](auto&& self, std::size_t idx) -> void {
    for (VertexMask blk : comps[idx].blocks()) {
      VertexMask covered = 0;
      for (std::size_t ch = 0; ch < c; ++ch)
        if (parent[ch] == static_cast<int>(idx) && (comps[ch].universe() & ~blk) == 0) {
          self(self, ch);
          covered |= comps[ch].universe();
        }
      for (int col : mask_to_list(blk & ~covered)) order.push_back(col);
    }
  };
  std::size_t root = 0;
  while (parent[root] >= 0) root = static_cast<std::size_t>(parent[root]);
  emit(emit, root);
  if (static_cast<int>(order.size()) != cols) throw ConsistencyError("consecutive-ones assembly lost columns");
  return order;
}

}  // namespace detail

/// Interval recognition through a consecutive arrangement of maximal
/// cliques. Endpoints are integers in [1, 2n]; clique position p maps to the
/// span [2p-1, 2p].
inline std::optional<IntervalRep> recognize_interval(const Graph& g) {
  detail::require_nonempty(g);
  const int n = g.size();
  auto peo = detail::perfect_elimination_order(g);
  if (!peo) return std::nullopt;
  auto cliques = detail::chordal_maximal_cliques(g, *peo);
  const int m = static_cast<int>(cliques.size());
  std::vector<VertexMask> rows(n, 0);
  for (int c = 0; c < m; ++c)
    for (int v : mask_to_list(cliques[c])) rows[v] |= bit(c);
  auto order = detail::consecutive_ones_order(m, rows);
  if (!order) return std::nullopt;
  std::vector<int> pos(m);
  for (int i = 0; i < m; ++i) pos[(*order)[i]] = i + 1;
  IntervalRep rep;
  rep.intervals.resize(n);
  for (int v = 0; v < n; ++v) {
    int first = m + 1, last = 0;
    for (int c : mask_to_list(rows[v])) {
      first = std::min(first, pos[c]);
      last = std::max(last, pos[c]);
    }
    rep.intervals[v] = {2 * first - 1, 2 * last};
  }
  if (interval_graph(rep) != g) throw ConsistencyError("interval representation does not realize the graph");
  return rep;
}

inline bool is_interval(const Graph& g) { return g.size() == 0 || recognize_interval(g).has_value(); }

/// Relabels endpoints so that all 2n are distinct integers 1..2n and no
/// interval is a point, preserving the represented graph. At a shared
/// coordinate left endpoints precede right endpoints.
inline IntervalRep normalize_interval_rep(const IntervalRep& rep) {
  require_valid(rep);
  const int n = rep.size();
  struct Event {
    std::int64_t x;
    int side;  // 0 = left, 1 = right
    int key;
    int v;
  };
  std::vector<Event> events;
  for (int v = 0; v < n; ++v) {
    events.push_back({rep.intervals[v].l, 0, v, v});
    events.push_back({rep.intervals[v].r, 1, -v, v});
  }
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.side != b.side) return a.side < b.side;
    return a.key < b.key;
  });
  IntervalRep out;
  out.intervals.resize(n);
  for (std::size_t i = 0; i < events.size(); ++i) {
    auto& iv = out.intervals[events[i].v];
    (events[i].side == 0 ? iv.l : iv.r) = static_cast<std::int64_t>(i) + 1;
  }
  return out;
}

/// Unit interval recognition: interval and claw-free, then integer left
/// endpoints found by solving difference constraints along a proper order.
inline std::optional<UnitIntervalRep> recognize_unit_interval(const Graph& g) {
  detail::require_nonempty(g);
  const int n = g.size();
  auto rep = recognize_interval(g);
  if (!rep || find_induced_claw(g)) return std::nullopt;

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const auto& x = rep->intervals[a];
    const auto& y = rep->intervals[b];
    if (x.l != y.l) return x.l < y.l;
    if (x.r != y.r) return x.r < y.r;
    return a < b;
  });

  // Constraints x_j - x_i <= w as edges i -> j with weight w.
  for (std::int64_t scale = n; scale <= std::int64_t{1} << 20; scale *= 2) {
    struct Edge {
      int from, to;
      std::int64_t w;
    };
    std::vector<Edge> cons;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        int u = order[i], v = order[j];
        if (g.has_edge(u, v))
          cons.push_back({i, j, scale});
        else
          cons.push_back({j, i, -(scale + 1)});
      }
    for (int i = 0; i + 1 < n; ++i) cons.push_back({i + 1, i, 0});
    std::vector<std::int64_t> x(n, 0);
    bool changed = true;
    for (int round = 0; round <= n && changed; ++round) {
      changed = false;
      for (const auto& e : cons)
        if (x[e.from] + e.w < x[e.to]) {
          x[e.to] = x[e.from] + e.w;
          changed = true;
        }
    }
    if (changed) continue;  // negative cycle at this resolution
    std::int64_t lo = *std::min_element(x.begin(), x.end());
    UnitIntervalRep out;
    out.scale = scale;
    out.left.resize(n);
    for (int i = 0; i < n; ++i) out.left[order[i]] = x[i] - lo;
    if (unit_interval_graph(out) == g) return out;
  }
  throw ConsistencyError("claw-free interval graph without a unit representation");
}

inline bool is_unit_interval(const Graph& g) {
  return g.size() == 0 || recognize_unit_interval(g).has_value();
}

}  // namespace dimkit
