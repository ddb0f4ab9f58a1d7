// Acceptance run: one [PASS]/[FAIL] line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "dimkit/dimkit.hpp"
#include "oracles.hpp"

using namespace dimkit;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool ok;
  std::string detail;
};

bool any_failed = false;

void report(int id, const std::string& name, const Outcome& o, std::chrono::steady_clock::time_point start) {
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << id << " " << name << ": " << o.detail << " (" << ms << " ms)"
            << std::endl;
  any_failed |= !o.ok;
}

std::string first_failure(const TheoremReport& r) {
  if (r.failures.empty()) return "";
  return "; first failure: " + r.failures[0].reason;
}

Outcome suites(const std::vector<TheoremReport>& rs) {
  Outcome o{true, ""};
  for (const auto& r : rs) {
    o.ok &= r.passed();
    if (!o.detail.empty()) o.detail += ", ";
    o.detail += r.theorem + " " + std::to_string(r.instances) + " instances " + std::to_string(r.failures.size()) +
                " failures" + first_failure(r);
  }
  return o;
}

bool is_witness_failure(const std::string& reason) {
  return reason.find("invalid") != std::string::npos || reason.find("containment") != std::string::npos ||
         reason.find("error:") == 0;
}

// Every solver on every small graph and poset, witnesses checked directly.
Outcome witness_sweep() {
  int checked = 0, bad = 0;
  std::string first;
  auto expect = [&](bool ok, const std::string& what) {
    ++checked;
    if (!ok && bad++ == 0) first = what;
  };
  for (int n = 1; n <= 5; ++n)
    for_each_graph(n, [&](const Graph& g) {
      const std::string tag = " on " + io::write_graph(g);
      auto t = threshold_dimension(g);
      expect(check_cover(g, t.witness) && no_containment(t.witness.members) &&
                 static_cast<int>(t.witness.members.size()) == t.k,
             "tdim" + tag);
      auto ti = threshold_intersection_number(g);
      expect(check_intersection(g, ti.witness) && no_containment(ti.witness.factors), "tint" + tag);
      auto b = boxicity(g);
      expect(check_intersection(g, b.witness) && static_cast<int>(b.witness.factors.size()) == b.k, "boxicity" + tag);
      auto c = cubicity(g);
      expect(check_intersection(g, c.witness) && static_cast<int>(c.witness.factors.size()) == c.k, "cubicity" + tag);
    });
  for (int n = 1; n <= 4; ++n)
    for_each_poset(n, [&](const Poset& p) {
      auto d = poset_dimension(p);
      expect(is_realizer(p, d.witness) && static_cast<int>(d.witness.size()) == d.k, "posetdim on " + io::write_poset(p));
    });
  return {bad == 0, std::to_string(checked) + " direct witness checks, " + std::to_string(bad) + " invalid" +
                        (first.empty() ? "" : "; first: " + first)};
}

}  // namespace

int main() {
  std::vector<TheoremReport> all;
  auto start = std::chrono::steady_clock::now();

  auto c1 = verify_theorem("cor_dim", 6, 200, kSeed);
  all.push_back(c1);
  report(1, "poset dimension equals threshold intersection number of G_P", suites({c1}), start);

  start = std::chrono::steady_clock::now();
  auto c2a = verify_theorem("charThresh", 8, 300, kSeed);
  auto c2b = verify_theorem("charBox", 8, 300, kSeed);
  all.push_back(c2a);
  all.push_back(c2b);
  report(2, "dim(charposet) <= t(complement) <= 2 boxicity on split graphs", suites({c2a, c2b}), start);

  start = std::chrono::steady_clock::now();
  auto c3 = verify_theorem("splitIntThresh", 9, 500, kSeed);
  all.push_back(c3);
  report(3, "split interval graphs have t(complement) <= 2", suites({c3}), start);

  start = std::chrono::steady_clock::now();
  auto c4 = verify_theorem("gprime_eq", 5, 100, kSeed);
  all.push_back(c4);
  report(4, "boxicity(G') equals t(H)", suites({c4}), start);

  start = std::chrono::steady_clock::now();
  {
    int graphs = 0, disagree = 0;
    std::string first;
    for (int n = 1; n <= 6; ++n)
      for_each_graph(n, [&](const Graph& g) {
        ++graphs;
        auto fail = [&](const std::string& what) {
          if (disagree++ == 0) first = what + " on " + io::write_graph(g);
        };
        if (is_interval(g) != oracle::is_interval(g)) fail("interval");
        if (recognize_interval(g).has_value() != oracle::is_interval(g)) fail("interval representation");
        if (recognize_threshold(g).is_threshold != oracle::is_threshold(g)) fail("threshold");
        if (recognize_split(g).is_split() != oracle::is_split(g)) fail("split");
        if (recognize_unit_interval(g).has_value() != oracle::is_unit_interval(g)) fail("unit interval");
        if (auto rep = recognize_interval(g); rep && interval_graph(*rep) != g) fail("interval model");
        if (auto rep = recognize_unit_interval(g); rep && unit_interval_graph(*rep) != g) fail("unit interval model");
      });
    report(5, "recognizers agree with brute-force oracles on all graphs n <= 6",
           {disagree == 0, std::to_string(graphs) + " graphs, " + std::to_string(disagree) + " disagreements" +
                               (first.empty() ? "" : "; first: " + first)},
           start);
  }

  start = std::chrono::steady_clock::now();
  auto c6 = verify_theorem("cub_bounds", 6, 0, kSeed);
  all.push_back(c6);
  report(6, "boxicity <= cubicity <= boxicity * ceil(log2 n) on all graphs n <= 6", suites({c6}), start);

  start = std::chrono::steady_clock::now();
  {
    int witness_failures = 0;
    for (const auto& r : all)
      for (const auto& f : r.failures) witness_failures += is_witness_failure(f.reason);
    auto sweep = witness_sweep();
    report(7, "witness integrity",
           {witness_failures == 0 && sweep.ok,
            std::to_string(witness_failures) + " witness failures in suites 1-6; " + sweep.detail},
           start);
  }

  start = std::chrono::steady_clock::now();
  {
    auto again1 = verify_theorem("cor_dim", 6, 200, kSeed);
    auto again3 = verify_theorem("splitIntThresh", 9, 500, kSeed);
    auto again4 = verify_theorem("gprime_eq", 5, 100, kSeed);
    bool same = again1.to_json(false).dump() == c1.to_json(false).dump() &&
                again3.to_json(false).dump() == c3.to_json(false).dump() &&
                again4.to_json(false).dump() == c4.to_json(false).dump();
    report(8, "same seed gives byte-identical reports",
           {same, same ? "cor_dim, splitIntThresh and gprime_eq reruns identical" : "reports differ"}, start);
  }

  return any_failed ? 1 : 0;
}
