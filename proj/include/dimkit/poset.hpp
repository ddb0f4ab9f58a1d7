#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dimkit/graph.hpp"
#include "dimkit/search.hpp"

namespace dimkit {

/// Finite partial order on 0..N-1. up(x) holds every y with x <= y.
class Poset {
 public:
  Poset() = default;

  // `up` must already be reflexive, antisymmetric and transitive.
  explicit Poset(std::vector<VertexMask> up) : up_(std::move(up)) {
    const int n = size();
    if (n > kMaxVertices) throw InputError("poset larger than 64 elements");
    for (int x = 0; x < n; ++x) {
      if (up_[x] & ~full_mask(n)) throw InputError("poset relation out of range");
      if (!(up_[x] & bit(x))) throw InputError("poset relation is not reflexive");
      for (int y : mask_to_list(up_[x])) {
        if (y != x && (up_[y] & bit(x))) throw InputError("poset relation is not antisymmetric");
        if ((up_[y] & ~up_[x]) != 0) throw InputError("poset relation is not transitive");
      }
    }
  }

  static Poset antichain(int n) {
    std::vector<VertexMask> up(n);
    for (int x = 0; x < n; ++x) up[x] = bit(x);
    return Poset(std::move(up));
  }

  static Poset chain(int n) {
    std::vector<VertexMask> up(n);
    for (int x = 0; x < n; ++x) up[x] = full_mask(n) & ~full_mask(x);
    return Poset(std::move(up));
  }

  int size() const { return static_cast<int>(up_.size()); }

  bool leq(int x, int y) const { return (up_[x] >> y) & 1; }
  bool less(int x, int y) const { return x != y && leq(x, y); }
  bool comparable(int x, int y) const { return leq(x, y) || leq(y, x); }
  bool incomparable(int x, int y) const { return !comparable(x, y); }

  VertexMask up(int x) const { return up_[x]; }
  VertexMask down(int x) const {
    VertexMask d = 0;
    for (int y = 0; y < size(); ++y)
      if (leq(y, x)) d |= bit(y);
    return d;
  }

  bool is_chain() const {
    for (int x = 0; x < size(); ++x)
      for (int y = x + 1; y < size(); ++y)
        if (incomparable(x, y)) return false;
    return true;
  }

  // All strict relations (u, v) with u < v.
  std::vector<std::pair<int, int>> strict_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < size(); ++x)
      for (int y : mask_to_list(up_[x] & ~bit(x))) out.emplace_back(x, y);
    return out;
  }

  // Restriction to all elements except `x`, renumbered in order.
  Poset without(int x) const {
    std::vector<int> keep;
    for (int y = 0; y < size(); ++y)
      if (y != x) keep.push_back(y);
    std::vector<VertexMask> up(keep.size(), 0);
    for (std::size_t i = 0; i < keep.size(); ++i)
      for (std::size_t j = 0; j < keep.size(); ++j)
        if (leq(keep[i], keep[j])) up[i] |= bit(static_cast<int>(j));
    return Poset(std::move(up));
  }

  friend bool operator==(const Poset&, const Poset&) = default;

 private:
  std::vector<VertexMask> up_;
};

/// Reflexive-transitive closure of `u < v` pairs. A directed cycle is an
/// input error naming the cycle.
inline Poset poset_from_relation(int n, const std::vector<std::pair<int, int>>& pairs) {
  if (n < 0 || n > kMaxVertices) throw InputError("poset size out of range");
  std::vector<VertexMask> succ(n, 0);
  for (auto [u, v] : pairs) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw InputError("relation pair (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range");
    if (u == v) throw InputError("relation pair (" + std::to_string(u) + ", " + std::to_string(u) + ") is a loop");
    succ[u] |= bit(v);
  }
  std::vector<VertexMask> up(n);
  for (int x = 0; x < n; ++x) {
    VertexMask reach = bit(x), frontier = succ[x];
    while (frontier & ~reach) {
      VertexMask fresh = frontier & ~reach;
      reach |= fresh;
      frontier = 0;
      for (int y : mask_to_list(fresh)) frontier |= succ[y];
    }
    up[x] = reach;
  }
  for (int x = 0; x < n; ++x)
    for (int y : mask_to_list(up[x] & ~bit(x)))
      if (up[y] & bit(x)) {
        // Reconstruct x -> ... -> y -> ... -> x along successor edges.
        auto walk = [&](int from, int to) {
          std::vector<int> parent(n, -1);
          std::vector<int> queue{from};
          VertexMask seen = bit(from);
          for (std::size_t q = 0; q < queue.size(); ++q)
            for (int w : mask_to_list(succ[queue[q]] & ~seen)) {
              seen |= bit(w);
              parent[w] = queue[q];
              queue.push_back(w);
            }
          std::vector<int> path{to};
          while (path.back() != from) path.push_back(parent[path.back()]);
          std::reverse(path.begin(), path.end());
          return path;
        };
        auto a = walk(x, y), b = walk(y, x);
        std::string msg = "relation has a cycle: ";
        for (int v : a) msg += std::to_string(v) + " -> ";
        for (std::size_t i = 1; i < b.size(); ++i)
          msg += std::to_string(b[i]) + (i + 1 < b.size() ? " -> " : "");
        throw InputError(msg);
      }
  return Poset(std::move(up));
}

/// Total order on 0..N-1; order()[i] is the element at position i.
class LinearExtension {
 public:
  LinearExtension() = default;

  explicit LinearExtension(std::vector<int> order) : order_(std::move(order)), pos_(order_.size(), -1) {
    for (std::size_t i = 0; i < order_.size(); ++i) {
      int x = order_[i];
      if (x < 0 || x >= static_cast<int>(order_.size()) || pos_[x] >= 0)
        throw InputError("linear extension is not a permutation");
      pos_[x] = static_cast<int>(i);
    }
  }

  int size() const { return static_cast<int>(order_.size()); }
  const std::vector<int>& order() const { return order_; }
  int position(int x) const { return pos_[x]; }
  bool before(int x, int y) const { return pos_[x] < pos_[y]; }

  bool extends(const Poset& p) const {
    if (p.size() != size()) return false;
    for (auto [x, y] : p.strict_pairs())
      if (!before(x, y)) return false;
    return true;
  }

  friend bool operator==(const LinearExtension& a, const LinearExtension& b) { return a.order_ == b.order_; }

 private:
  std::vector<int> order_;
  std::vector<int> pos_;
};

using Realizer = std::vector<LinearExtension>;

inline bool is_realizer(const Poset& p, const Realizer& r) {
  if (r.empty()) return false;
  for (const auto& ext : r)
    if (!ext.extends(p)) return false;
  for (int x = 0; x < p.size(); ++x)
    for (int y = x + 1; y < p.size(); ++y) {
      if (!p.incomparable(x, y)) continue;
      bool xy = false, yx = false;
      for (const auto& ext : r) (ext.before(x, y) ? xy : yx) = true;
      if (!xy || !yx) return false;
    }
  return true;
}

/// Characteristic poset of a split graph: the distinct neighborhoods of the
/// independent vertices ordered by inclusion. Element i is the neighborhood
/// first seen at the i-th smallest independent vertex with a new one.
struct CharPosetResult {
  Poset poset;
  std::vector<VertexMask> neighborhoods;
  std::vector<std::vector<int>> representatives;
  // Set when the independent side is empty and the poset has no elements.
  bool empty_warning = false;
};

inline CharPosetResult characteristic_poset(const Graph& g, const SplitPartition& part) {
  require_partition(g, part);
  CharPosetResult res;
  for (int u : mask_to_list(part.independent)) {
    VertexMask nb = g.neighbors(u);
    auto it = std::find(res.neighborhoods.begin(), res.neighborhoods.end(), nb);
    if (it == res.neighborhoods.end()) {
      res.neighborhoods.push_back(nb);
      res.representatives.push_back({u});
    } else {
      res.representatives[it - res.neighborhoods.begin()].push_back(u);
    }
  }
  const int n = static_cast<int>(res.neighborhoods.size());
  std::vector<VertexMask> up(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if ((res.neighborhoods[x] & ~res.neighborhoods[y]) == 0) up[x] |= bit(y);
  res.poset = Poset(std::move(up));
  res.empty_warning = n == 0;
  return res;
}

struct PosetDimension {
  int k = 0;
  Realizer witness;
};

/// Ordered pairs (x, y) with x || y, down(x) - x ⊆ down(y) and up(y) - y ⊆ up(x).
/// A family of linear extensions is a realizer iff each such pair has y
/// below x in some member.
inline std::vector<std::pair<int, int>> critical_pairs(const Poset& p) {
  std::vector<std::pair<int, int>> out;
  std::vector<VertexMask> down(p.size());
  for (int x = 0; x < p.size(); ++x) down[x] = p.down(x);
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y) {
      if (x == y || !p.incomparable(x, y)) continue;
      if ((down[x] & ~bit(x) & ~down[y]) == 0 && (p.up(y) & ~bit(y) & ~p.up(x)) == 0)
        out.emplace_back(x, y);
    }
  return out;
}

namespace detail {

// Per-extension closure during the dimension search.
struct OrderState {
  std::vector<VertexMask> up;

  bool implies_below(int y, int x) const { return (up[y] >> x) & 1; }  // y <= x
  bool can_place_below(int y, int x) const { return !((up[x] >> y) & 1); }

  void place_below(int y, int x) {
    for (std::size_t a = 0; a < up.size(); ++a)
      if ((up[a] >> y) & 1) up[a] |= up[x];
  }

  LinearExtension lex_least_extension() const {
    const int n = static_cast<int>(up.size());
    std::vector<int> order;
    VertexMask placed = 0;
    while (static_cast<int>(order.size()) < n)
      for (int x = 0; x < n; ++x) {
        if (placed & bit(x)) continue;
        bool ready = true;
        for (int y = 0; y < n && ready; ++y)
          if (y != x && !(placed & bit(y)) && ((up[y] >> x) & 1)) ready = false;
        if (ready) {
          order.push_back(x);
          placed |= bit(x);
          break;
        }
      }
    return LinearExtension(std::move(order));
  }
};

class DimensionSearch {
 public:
  DimensionSearch(const Poset& p, std::vector<std::pair<int, int>> pairs, Deadline& deadline)
      : pairs_(std::move(pairs)), deadline_(deadline) {
    for (int x = 0; x < p.size(); ++x) base_.up.push_back(p.up(x));
  }

  // First-fit colouring in pair order; also the first leaf of the search at its size.
  std::vector<OrderState> first_fit() const {
    std::vector<OrderState> colours;
    for (auto [x, y] : pairs_) {
      bool placed = std::any_of(colours.begin(), colours.end(),
                                [&](const OrderState& c) { return c.implies_below(y, x); });
      for (auto& c : colours) {
        if (placed) break;
        if (c.can_place_below(y, x)) {
          c.place_below(y, x);
          placed = true;
        }
      }
      if (!placed) {
        colours.push_back(base_);
        colours.back().place_below(y, x);
      }
    }
    if (colours.empty()) colours.push_back(base_);
    return colours;
  }

  std::optional<std::vector<OrderState>> solve(int k, int upper_bound) {
    upper_ = upper_bound;
    std::vector<OrderState> colours;
    if (assign(0, k, colours)) return colours;
    return std::nullopt;
  }

 private:
  bool assign(std::size_t i, int k, std::vector<OrderState>& colours) {
    deadline_.check(upper_);
    if (i == pairs_.size()) {
      while (static_cast<int>(colours.size()) < k) colours.push_back(base_);
      return true;
    }
    auto [x, y] = pairs_[i];
    // Already reversed somewhere: nothing to branch on.
    for (const auto& c : colours)
      if (c.implies_below(y, x)) return assign(i + 1, k, colours);
    for (std::size_t c = 0; c < colours.size(); ++c) {
      if (!colours[c].can_place_below(y, x)) continue;
      OrderState saved = colours[c];
      colours[c].place_below(y, x);
      if (assign(i + 1, k, colours)) return true;
      colours[c] = std::move(saved);
    }
    if (static_cast<int>(colours.size()) < k) {
      colours.push_back(base_);
      colours.back().place_below(y, x);
      if (assign(i + 1, k, colours)) return true;
      colours.pop_back();
    }
    return false;
  }

  OrderState base_;
  std::vector<std::pair<int, int>> pairs_;
  Deadline& deadline_;
  int upper_ = 0;
};

inline Realizer to_realizer(const std::vector<OrderState>& colours) {
  Realizer r;
  for (const auto& c : colours) r.push_back(c.lex_least_extension());
  std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.order() < b.order(); });
  return r;
}

}  // namespace detail

/// Exact poset dimension by iterative deepening over assignments of critical
/// pairs to extensions. The empty poset reports 1 with one empty extension.
inline PosetDimension poset_dimension(const Poset& p, const SearchLimits& limits = poset_limits()) {
  detail::require_capacity(p.size(), limits, "poset_dimension");
  if (p.size() == 0) return {1, Realizer{LinearExtension{}}};
  detail::Deadline deadline(limits.timeout, "poset_dimension");
  detail::DimensionSearch search(p, critical_pairs(p), deadline);
  auto greedy = search.first_fit();
  const int upper = static_cast<int>(greedy.size());
  const int lower = p.is_chain() ? 1 : 2;
  for (int k = lower; k < upper; ++k)
    if (auto found = search.solve(k, upper)) return {k, detail::to_realizer(*found)};
  return {upper, detail::to_realizer(greedy)};
}

}  // namespace dimkit
