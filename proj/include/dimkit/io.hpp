#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dimkit/errors.hpp"
#include "dimkit/graph.hpp"
#include "dimkit/poset.hpp"

namespace dimkit {

/// Plain-text formats.
///
/// graph:     first line `n`, then `u v` per edge; `#` starts a comment.
/// poset:     same layout, `u v` meaning u < v; the closure is taken.
/// intervals: first line `n`, then `v l r` per vertex.
/// realizer:  first line `N`, then one extension per line.
/// Several objects in one file are separated by `---` lines.
namespace io {

namespace detail {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

inline std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line line{number, {}};
    for (std::string tok; ls >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] inline void fail(int line, const std::string& msg) {
  throw InputError("line " + std::to_string(line) + ": " + msg);
}

inline std::int64_t to_int(const Line& line, std::size_t i) {
  const std::string& s = line.tokens[i];
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    fail(line.number, "expected an integer, got '" + s + "'");
  }
  if (used != s.size()) fail(line.number, "expected an integer, got '" + s + "'");
  return v;
}

inline void expect_tokens(const Line& line, std::size_t count) {
  if (line.tokens.size() != count)
    fail(line.number, "expected " + std::to_string(count) + " fields, got " + std::to_string(line.tokens.size()));
}

inline int read_size(const std::vector<Line>& lines, int max) {
  if (lines.empty()) throw InputError("empty input: missing size line");
  expect_tokens(lines[0], 1);
  std::int64_t n = to_int(lines[0], 0);
  if (n < 0 || n > max) fail(lines[0].number, "size " + std::to_string(n) + " outside [0, " + std::to_string(max) + "]");
  return static_cast<int>(n);
}

inline std::vector<std::pair<int, int>> read_pairs(const std::vector<Line>& lines, int n) {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    expect_tokens(lines[i], 2);
    std::int64_t u = to_int(lines[i], 0), v = to_int(lines[i], 1);
    if (u < 0 || u >= n || v < 0 || v >= n) fail(lines[i].number, "vertex out of range for n=" + std::to_string(n));
    if (u == v) fail(lines[i].number, "self-loop at vertex " + std::to_string(u));
    out.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return out;
}

// Splits on `---` lines, keeping original line numbers in each chunk.
inline std::vector<std::vector<Line>> sections(const std::string& text) {
  std::vector<std::vector<Line>> out(1);
  for (auto& line : tokenize(text)) {
    if (line.tokens.size() == 1 && line.tokens[0] == "---")
      out.emplace_back();
    else
      out.back().push_back(std::move(line));
  }
  return out;
}

}  // namespace detail

inline Graph parse_graph_lines(const std::vector<detail::Line>& lines) {
  int n = detail::read_size(lines, kMaxVertices);
  return Graph(n, detail::read_pairs(lines, n));
}

inline Graph parse_graph(const std::string& text) { return parse_graph_lines(detail::tokenize(text)); }

inline std::string write_graph(const Graph& g) {
  std::ostringstream out;
  out << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

inline std::vector<Graph> parse_graphs(const std::string& text) {
  std::vector<Graph> out;
  for (const auto& sec : detail::sections(text)) out.push_back(parse_graph_lines(sec));
  return out;
}

inline std::string write_graphs(const std::vector<Graph>& gs) {
  std::string out;
  for (std::size_t i = 0; i < gs.size(); ++i) {
    if (i) out += "---\n";
    out += write_graph(gs[i]);
  }
  return out;
}

inline Poset parse_poset(const std::string& text) {
  auto lines = detail::tokenize(text);
  int n = detail::read_size(lines, kMaxVertices);
  return poset_from_relation(n, detail::read_pairs(lines, n));
}

// Writes every strict comparability, so parsing returns the same poset.
inline std::string write_poset(const Poset& p) {
  std::ostringstream out;
  out << p.size() << '\n';
  for (auto [x, y] : p.strict_pairs()) out << x << ' ' << y << '\n';
  return out.str();
}

inline IntervalRep parse_interval_rep_lines(const std::vector<detail::Line>& lines) {
  int n = detail::read_size(lines, kMaxVertices);
  IntervalRep rep;
  rep.intervals.resize(n);
  std::vector<char> seen(n, 0);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    detail::expect_tokens(lines[i], 3);
    std::int64_t v = detail::to_int(lines[i], 0);
    if (v < 0 || v >= n) detail::fail(lines[i].number, "vertex out of range for n=" + std::to_string(n));
    if (seen[v]) detail::fail(lines[i].number, "vertex " + std::to_string(v) + " given twice");
    seen[v] = 1;
    Interval iv{detail::to_int(lines[i], 1), detail::to_int(lines[i], 2)};
    if (iv.l > iv.r) detail::fail(lines[i].number, "interval has l > r");
    rep.intervals[v] = iv;
  }
  for (int v = 0; v < n; ++v)
    if (!seen[v]) throw InputError("interval of vertex " + std::to_string(v) + " missing");
  return rep;
}

inline IntervalRep parse_interval_rep(const std::string& text) {
  return parse_interval_rep_lines(detail::tokenize(text));
}

inline std::string write_interval_rep(const IntervalRep& rep) {
  std::ostringstream out;
  out << rep.size() << '\n';
  for (int v = 0; v < rep.size(); ++v) out << v << ' ' << rep.intervals[v].l << ' ' << rep.intervals[v].r << '\n';
  return out.str();
}

inline std::vector<IntervalRep> parse_interval_reps(const std::string& text) {
  std::vector<IntervalRep> out;
  for (const auto& sec : detail::sections(text)) out.push_back(parse_interval_rep_lines(sec));
  return out;
}

inline std::string write_interval_reps(const std::vector<IntervalRep>& reps) {
  std::string out;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (i) out += "---\n";
    out += write_interval_rep(reps[i]);
  }
  return out;
}

inline Realizer parse_realizer(const std::string& text) {
  auto lines = detail::tokenize(text);
  int n = detail::read_size(lines, kMaxVertices);
  Realizer r;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    detail::expect_tokens(lines[i], static_cast<std::size_t>(n));
    std::vector<int> order;
    for (std::size_t j = 0; j < lines[i].tokens.size(); ++j) {
      std::int64_t x = detail::to_int(lines[i], j);
      if (x < 0 || x >= n) detail::fail(lines[i].number, "element out of range for N=" + std::to_string(n));
      order.push_back(static_cast<int>(x));
    }
    try {
      r.emplace_back(std::move(order));
    } catch (const InputError& e) {
      detail::fail(lines[i].number, e.what());
    }
  }
  return r;
}

inline std::string write_realizer(int n, const Realizer& r) {
  std::ostringstream out;
  out << n << '\n';
  for (const auto& ext : r) {
    for (std::size_t i = 0; i < ext.order().size(); ++i) out << (i ? " " : "") << ext.order()[i];
    out << '\n';
  }
  return out.str();
}

/// `old new` lines.
inline std::string write_vertex_map(const std::vector<int>& new_of_old) {
  std::ostringstream out;
  for (std::size_t v = 0; v < new_of_old.size(); ++v) out << v << ' ' << new_of_old[v] << '\n';
  return out.str();
}

}  // namespace io
}  // namespace dimkit
