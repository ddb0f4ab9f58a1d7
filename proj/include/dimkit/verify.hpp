#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dimkit/graph.hpp"
#include "dimkit/io.hpp"
#include "dimkit/poset.hpp"
#include "dimkit/recognize.hpp"
#include "dimkit/reductions.hpp"
#include "dimkit/solvers.hpp"

namespace dimkit {

// --- witness checkers ------------------------------------------------------

inline bool has_kind(const Graph& g, FactorKind kind) {
  if (g.size() == 0) return true;
  switch (kind) {
    case FactorKind::Interval: return is_interval(g);
    case FactorKind::UnitInterval: return is_unit_interval(g);
    case FactorKind::Threshold: return is_threshold(g);
  }
  return false;
}

/// Every factor is a supergraph of g of the declared kind and together they
/// intersect to g.
inline bool check_intersection(const Graph& g, const IntersectionRep& rep) {
  if (rep.factors.empty()) return false;
  for (const Graph& f : rep.factors)
    if (f.size() != g.size() || !g.is_subgraph_of(f) || !has_kind(f, rep.kind)) return false;
  return intersect_graphs(rep.factors) == g;
}

/// Every member is a threshold spanning subgraph of g and the edges are covered.
inline bool check_cover(const Graph& g, const ThresholdCover& cover) {
  if (cover.members.empty()) return g.edge_count() == 0;
  for (const Graph& t : cover.members)
    if (t.size() != g.size() || !t.is_subgraph_of(g) || !has_kind(t, FactorKind::Threshold)) return false;
  return union_edges(cover.members) == g;
}

// True when no graph's edge set contains another's.
inline bool no_containment(const std::vector<Graph>& gs) {
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = 0; j < gs.size(); ++j)
      if (i != j && gs[i].is_subgraph_of(gs[j])) return false;
  return true;
}

// --- factor classifier -----------------------------------------------------

/// Position of the extreme independent intervals of an interval factor of G′.
/// kind 0: G′ is the complete split input and there is nothing to classify.
/// kind 1: leftmost in copy 1, rightmost in copy 2.   kind 2: the reverse.
/// kind 3: both in copy 1.                            kind 4: both in copy 2.
struct FactorCase {
  int kind = 0;
  int leftmost = -1;
  int rightmost = -1;
};

inline FactorCase classify_factor(const GPrime& gp, const IntervalRep& factor_rep) {
  if (gp.trivial_case) return {};
  const int n = static_cast<int>(gp.copy1.size());
  if (factor_rep.size() != 2 * n) throw InputError("classify_factor: representation size differs from G′");
  Graph factor = interval_graph(factor_rep);
  if (!gp.graph.is_subgraph_of(factor)) throw InputError("classify_factor: factor does not contain G′");
  if (!factor.is_independent(gp.partition.independent))
    throw InputError("classify_factor: independent side of G′ is not independent in the factor");

  FactorCase res;
  for (int v : mask_to_list(gp.partition.independent)) {
    if (res.leftmost < 0 || factor_rep.intervals[v].l < factor_rep.intervals[res.leftmost].l) res.leftmost = v;
    if (res.rightmost < 0 || factor_rep.intervals[v].r > factor_rep.intervals[res.rightmost].r) res.rightmost = v;
  }
  const bool left1 = res.leftmost < n, right1 = res.rightmost < n;
  res.kind = left1 ? (right1 ? 3 : 1) : (right1 ? 2 : 4);

  const Graph r1 = induced_subgraph(factor, gp.copy1);
  const Graph r2 = induced_subgraph(factor, gp.copy2);
  const SplitPartition& part = gp.base_partition;
  auto complete_split = [&](const Graph& r) {
    for (int u : mask_to_list(part.independent))
      if ((r.neighbors(u) & part.clique) != part.clique) return false;
    return true;
  };
  auto restricted_rep = [&](const std::vector<int>& copy) {
    IntervalRep rep;
    for (int v : copy) rep.intervals.push_back(factor_rep.intervals[v]);
    return rep;
  };
  auto fail = [&](const std::string& what) {
    throw ConsistencyError("classify_factor: case " + std::to_string(res.kind) + ": " + what);
  };
  switch (res.kind) {
    case 1:
    case 2:
      if (!is_threshold(r1) || !is_threshold(r2)) fail("a restriction is not threshold");
      break;
    case 3:
      if (!complete_split(r2)) fail("copy-2 restriction is not complete split");
      two_threshold_cover(r1, part, restricted_rep(gp.copy1));
      break;
    case 4:
      if (!complete_split(r1)) fail("copy-1 restriction is not complete split");
      two_threshold_cover(r2, part, restricted_rep(gp.copy2));
      break;
  }
  return res;
}

// --- generators ------------------------------------------------------------

namespace detail {

inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return bound ? rng() % bound : 0; }

inline bool coin(std::mt19937_64& rng, double p) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[draw(rng, i + 1)]);
  return perm;
}

inline std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index) {
  return seed * 0x9E3779B97F4A7C15ULL + index;
}

}  // namespace detail

struct RandomSplit {
  Graph graph;
  SplitPartition partition;
};

/// Random clique size and labels; each clique-independent pair is an edge
/// with probability `density`.
inline RandomSplit gen_random_split(int n, double density, std::uint64_t seed) {
  if (n < 1) throw InputError("gen_random_split: n must be positive");
  std::mt19937_64 rng(seed);
  const int k = static_cast<int>(detail::draw(rng, n + 1));
  auto perm = detail::random_permutation(n, rng);
  RandomSplit res{Graph(n), {}};
  for (int i = 0; i < n; ++i) (i < k ? res.partition.clique : res.partition.independent) |= bit(perm[i]);
  for (int u : mask_to_list(res.partition.clique)) {
    for (int v : mask_to_list(res.partition.clique))
      if (u < v) res.graph.add_edge(u, v);
    for (int v : mask_to_list(res.partition.independent))
      if (detail::coin(rng, density)) res.graph.add_edge(u, v);
  }
  return res;
}

/// Random order of the elements; each forward pair is a relation with
/// probability `density`; closed transitively.
inline Poset gen_random_poset(int n, double density, std::uint64_t seed) {
  if (n < 1) throw InputError("gen_random_poset: n must be positive");
  std::mt19937_64 rng(seed);
  auto perm = detail::random_permutation(n, rng);
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (detail::coin(rng, density)) rel.emplace_back(perm[i], perm[j]);
  return poset_from_relation(n, rel);
}

/// Random split interval graph: clique intervals all contain 0, independent
/// vertices are distinct nonzero points.
inline RandomSplit gen_random_split_interval(int n, std::uint64_t seed) {
  if (n < 1) throw InputError("gen_random_split_interval: n must be positive");
  std::mt19937_64 rng(seed);
  const int k = static_cast<int>(detail::draw(rng, n + 1));
  auto perm = detail::random_permutation(n, rng);
  std::vector<std::int64_t> points;
  for (int p = -n; p <= n; ++p)
    if (p != 0) points.push_back(p);
  for (std::size_t i = points.size() - 1; i > 0; --i) std::swap(points[i], points[detail::draw(rng, i + 1)]);
  IntervalRep rep;
  rep.intervals.resize(n);
  RandomSplit res;
  for (int i = 0; i < n; ++i) {
    int v = perm[i];
    if (i < k) {
      res.partition.clique |= bit(v);
      rep.intervals[v] = {-static_cast<std::int64_t>(detail::draw(rng, n + 1)),
                          static_cast<std::int64_t>(detail::draw(rng, n + 1))};
    } else {
      res.partition.independent |= bit(v);
      rep.intervals[v] = {points[i - k], points[i - k]};
    }
  }
  res.graph = interval_graph(rep);
  return res;
}

// --- exhaustive enumeration ------------------------------------------------

/// Calls f on every labeled graph on n vertices.
inline void for_each_graph(int n, const std::function<void(const Graph&)>& f) {
  Graph base(n);
  auto pairs = Graph::complete(n).edges();
  if (pairs.size() >= 63) throw CapacityError("for_each_graph: too many vertices");
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs.size()); ++m) {
    Graph g(n);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if ((m >> i) & 1) g.add_edge(pairs[i].first, pairs[i].second);
    f(g);
  }
}

inline void for_each_split_graph(int n, const std::function<void(const Graph&, const SplitPartition&)>& f) {
  for_each_graph(n, [&](const Graph& g) {
    if (g.size() == 0) return;
    if (auto s = recognize_split(g); s.is_split()) f(g, *s.partition);
  });
}

/// Calls f on every labeled poset on n elements.
inline void for_each_poset(int n, const std::function<void(const Poset&)>& f) {
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y) pairs.emplace_back(x, y);
  if (pairs.size() >= 63) throw CapacityError("for_each_poset: too many elements");
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs.size()); ++m) {
    std::vector<VertexMask> up(n);
    for (int x = 0; x < n; ++x) up[x] = bit(x);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if ((m >> i) & 1) up[pairs[i].first] |= bit(pairs[i].second);
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y : mask_to_list(up[x] & ~bit(x))) {
        if ((up[y] & up[x]) != up[y] || (up[y] >> x) & 1) {
          ok = false;
          break;
        }
      }
    if (ok) f(Poset(std::move(up)));
  }
}

// --- theorem suites --------------------------------------------------------

struct Failure {
  std::string instance;
  std::string reason;
};

struct TheoremReport {
  std::string theorem;
  int instances = 0;
  std::vector<Failure> failures;
  std::uint64_t seed = 0;
  std::int64_t elapsed_ms = 0;

  bool passed() const { return failures.empty(); }

  // With timing off, elapsed_ms is written as 0 so equal seeds give equal bytes.
  nlohmann::ordered_json to_json(bool timing = true) const {
    nlohmann::ordered_json j;
    j["theorem"] = theorem;
    j["instances"] = instances;
    j["failures"] = nlohmann::ordered_json::array();
    for (const auto& f : failures) j["failures"].push_back({{"instance", f.instance}, {"reason", f.reason}});
    j["seed"] = seed;
    j["elapsed_ms"] = timing ? elapsed_ms : 0;
    return j;
  }
};

inline const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids{"charThresh", "charBox", "threshLB", "cor_dim",
                                            "cor_box", "splitIntThresh", "gprime_eq", "cub_bounds"};
  return ids;
}

namespace detail {

enum class Domain { Poset, Split, SplitInterval, Graph };

struct SuiteSpec {
  Domain domain;
  int exhaustive;  // enumerate every instance up to this size
  int max_n;       // largest n_max accepted
};

inline SuiteSpec suite_spec(const std::string& id) {
  if (id == "threshLB" || id == "cor_dim") return {Domain::Poset, 4, 6};
  if (id == "cor_box") return {Domain::Poset, 4, 5};
  if (id == "charThresh" || id == "charBox") return {Domain::Split, 5, 10};
  if (id == "splitIntThresh") return {Domain::SplitInterval, 5, 10};
  if (id == "gprime_eq") return {Domain::Split, 4, 5};
  if (id == "cub_bounds") return {Domain::Graph, 6, 7};
  std::string known;
  for (const auto& k : theorem_ids()) known += (known.empty() ? "" : ", ") + k;
  throw InputError("unknown theorem '" + id + "'; valid ids: " + known);
}

struct Check {
  std::string& reason;
  bool operator()(bool ok, const std::string& what) const {
    if (!ok && reason.empty()) reason = what;
    return ok;
  }
};

inline std::string check_graph_claim(const std::string& id, const Graph& g, const SplitPartition* part,
                                     const SearchLimits& limits) {
  std::string reason;
  Check check{reason};
  if (id == "charThresh") {
    auto tint = threshold_intersection_number(g, limits);
    check(check_intersection(g, tint.witness), "threshold intersection witness invalid");
    check(no_containment(tint.witness.factors), "threshold witness has a containment pair");
    auto cp = characteristic_poset(g, *part);
    int dim = 1;
    if (!cp.empty_warning) {
      auto pd = poset_dimension(cp.poset, limits);
      check(is_realizer(cp.poset, pd.witness), "poset dimension witness invalid");
      dim = pd.k;
      auto r = realizer_from_threshold_cover(g, *part, tint.witness);
      check(static_cast<int>(r.size()) == tint.k && is_realizer(cp.poset, r), "constructed realizer invalid");
    }
    check(dim <= tint.k, "dim " + std::to_string(dim) + " > t " + std::to_string(tint.k));
  } else if (id == "charBox") {
    auto tint = threshold_intersection_number(g, limits);
    auto box = boxicity(g, limits);
    check(check_intersection(g, tint.witness), "threshold intersection witness invalid");
    check(no_containment(tint.witness.factors), "threshold witness has a containment pair");
    check(check_intersection(g, box.witness), "boxicity witness invalid");
    auto bt = box_to_threshold_cover(g, *part, box.witness);
    check(static_cast<int>(bt.factors.size()) == 2 * box.k && check_intersection(g, bt),
          "threshold factors from boxes invalid");
    check(tint.k <= 2 * box.k, "t " + std::to_string(tint.k) + " > 2 box " + std::to_string(box.k));
  } else if (id == "splitIntThresh") {
    auto tint = threshold_intersection_number(g, limits);
    check(check_intersection(g, tint.witness), "threshold intersection witness invalid");
    check(tint.k <= 2, "t " + std::to_string(tint.k) + " > 2");
    auto rep = recognize_interval(g);
    if (check(rep.has_value(), "instance is not interval")) {
      auto [g1, g2] = two_threshold_cover(g, *part, *rep);
      check(check_intersection(g, {FactorKind::Threshold, {g1, g2}}), "two threshold cover invalid");
    }
  } else if (id == "gprime_eq") {
    auto gp = split_to_gprime(g);
    auto t = threshold_dimension(g, limits);
    check(check_cover(g, t.witness), "threshold cover invalid");
    check(no_containment(t.witness.members), "threshold cover has a containment pair");
    auto box = boxicity(gp.graph, limits);
    check(check_intersection(gp.graph, box.witness), "boxicity witness of G′ invalid");
    const int expected = std::max(1, t.k);
    check(box.k == expected, "box(G′) " + std::to_string(box.k) + " != t(H) " + std::to_string(t.k));
    std::vector<Graph> factors;
    for (const Graph& m : t.witness.members) factors.push_back(complement(m));
    auto his = interval_reps_from_threshold_cover(g, factors);
    IntersectionRep rep{FactorKind::Interval, {}};
    for (const auto& f : his) rep.factors.push_back(f.graph);
    check(static_cast<int>(rep.factors.size()) == expected && check_intersection(gp.graph, rep),
          "interval factors of G′ invalid");
    for (const auto& f : his) {
      int kind = classify_factor(gp, f.rep).kind;
      check(gp.trivial_case ? kind == 0 : (kind == 1 || kind == 2), "built factor has case " + std::to_string(kind));
    }
    if (!gp.trivial_case)
      for (const Graph& f : box.witness.factors) {
        auto sand = split_interval_sandwich(gp.graph, gp.partition, *recognize_interval(f));
        classify_factor(gp, sand.rep);
      }
  } else if (id == "cub_bounds") {
    auto box = boxicity(g, limits);
    auto cub = cubicity(g, limits);
    check(check_intersection(g, box.witness), "boxicity witness invalid");
    check(check_intersection(g, cub.witness), "cubicity witness invalid");
    check(box.k <= cub.k, "cub " + std::to_string(cub.k) + " < box " + std::to_string(box.k));
    if (g.size() >= 2) {
      const int log = std::bit_width(static_cast<unsigned>(g.size() - 1));
      check(cub.k <= box.k * log, "cub " + std::to_string(cub.k) + " > box * ceil(log2 n)");
    }
  }
  return reason;
}

inline std::string check_poset_claim(const std::string& id, const Poset& p, const SearchLimits& limits) {
  std::string reason;
  Check check{reason};
  auto pd = poset_dimension(p, limits);
  check(is_realizer(p, pd.witness) && static_cast<int>(pd.witness.size()) == pd.k, "poset dimension witness invalid");
  auto gp = poset_to_split_graph(p);
  if (id == "threshLB") {
    auto rep = threshold_graphs_from_realizer(p, pd.witness);
    check(static_cast<int>(rep.factors.size()) == pd.k && check_intersection(gp.graph, rep),
          "threshold graphs from realizer invalid");
  } else if (id == "cor_dim") {
    auto tint = threshold_intersection_number(gp.graph, limits);
    check(check_intersection(gp.graph, tint.witness), "threshold intersection witness invalid");
    check(no_containment(tint.witness.factors), "threshold witness has a containment pair");
    auto r = realizer_from_threshold_cover(gp.graph, gp.partition, tint.witness);
    check(is_realizer(p, r), "realizer from threshold factors invalid");
    check(pd.k == tint.k, "dim " + std::to_string(pd.k) + " != t " + std::to_string(tint.k));
  } else if (id == "cor_box") {
    auto box = boxicity(gp.graph, limits);
    check(check_intersection(gp.graph, box.witness), "boxicity witness invalid");
    check(box.k <= pd.k, "box " + std::to_string(box.k) + " > dim " + std::to_string(pd.k));
  }
  return reason;
}

template <class F>
void run_instance(TheoremReport& report, const std::string& instance, F&& check) {
  ++report.instances;
  std::string reason;
  try {
    reason = check();
  } catch (const TimeoutError& e) {
    reason = std::string("timeout: ") + e.what();
  } catch (const std::exception& e) {
    reason = std::string("error: ") + e.what();
  }
  if (!reason.empty()) report.failures.push_back({instance, reason});
}

}  // namespace detail

/// Checks one claim on every instance up to the suite's exhaustive bound and
/// on `samples` random instances with sizes above it, up to n_max.
inline TheoremReport verify_theorem(const std::string& id, int n_max, int samples, std::uint64_t seed,
                                    std::chrono::milliseconds timeout = std::chrono::milliseconds{60000}) {
  const auto spec = detail::suite_spec(id);
  if (n_max < 1) throw InputError("n_max must be positive");
  if (samples < 0) throw InputError("samples must be non-negative");
  if (n_max > spec.max_n)
    throw CapacityError(id + ": n_max " + std::to_string(n_max) + " exceeds bound " + std::to_string(spec.max_n));
  const auto start = std::chrono::steady_clock::now();
  const SearchLimits limits{kMaxVertices, timeout};
  TheoremReport report;
  report.theorem = id;
  report.seed = seed;

  auto graph_instance = [&](const Graph& g, const SplitPartition* part) {
    detail::run_instance(report, io::write_graph(g), [&] { return detail::check_graph_claim(id, g, part, limits); });
  };
  auto poset_instance = [&](const Poset& p) {
    detail::run_instance(report, io::write_poset(p), [&] { return detail::check_poset_claim(id, p, limits); });
  };

  const int exhaustive = std::min(spec.exhaustive, n_max);
  for (int n = 1; n <= exhaustive; ++n) {
    switch (spec.domain) {
      case detail::Domain::Poset: for_each_poset(n, poset_instance); break;
      case detail::Domain::Split:
        for_each_split_graph(n, [&](const Graph& g, const SplitPartition& p) { graph_instance(g, &p); });
        break;
      case detail::Domain::SplitInterval:
        for_each_split_graph(n, [&](const Graph& g, const SplitPartition& p) {
          if (is_interval(g)) graph_instance(g, &p);
        });
        break;
      case detail::Domain::Graph: for_each_graph(n, [&](const Graph& g) { graph_instance(g, nullptr); }); break;
    }
  }

  const int lo = std::min(spec.exhaustive + 1, n_max);
  for (int i = 0; i < samples; ++i) {
    std::mt19937_64 rng(detail::instance_seed(seed, static_cast<std::uint64_t>(i)));
    const int n = lo + static_cast<int>(detail::draw(rng, static_cast<std::uint64_t>(n_max - lo + 1)));
    const double density = static_cast<double>(1 + detail::draw(rng, 9)) / 10.0;
    const std::uint64_t sub = rng();
    switch (spec.domain) {
      case detail::Domain::Poset: poset_instance(gen_random_poset(n, density, sub)); break;
      case detail::Domain::Split: {
        auto s = gen_random_split(n, density, sub);
        auto canon = *recognize_split(s.graph).partition;
        graph_instance(s.graph, &canon);
        break;
      }
      case detail::Domain::SplitInterval: {
        auto s = gen_random_split_interval(n, sub);
        auto canon = *recognize_split(s.graph).partition;
        graph_instance(s.graph, &canon);
        break;
      }
      case detail::Domain::Graph: {
        Graph g(n);
        for (auto [u, v] : Graph::complete(n).edges())
          if (detail::coin(rng, density)) g.add_edge(u, v);
        graph_instance(g, nullptr);
        break;
      }
    }
  }
  report.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace dimkit
