// dimkit: recognizers, dimension oracles, reductions and theorem suites.
//
// Exit codes: 0 success or membership, 1 negative answer or failed suite,
// 2 input error, 3 capacity or timeout.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dimkit/dimkit.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace dimkit;

namespace {

enum Exit { kOk = 0, kNegative = 1, kInput = 2, kCapacity = 3 };

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Prefixes parse errors with the file name.
template <class F>
auto parse_file(const std::string& path, F&& parse) {
  std::string text = read_file(path);
  try {
    return parse(text);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Graph load_graph(const std::string& path) { return parse_file(path, io::parse_graph); }
Poset load_poset(const std::string& path) { return parse_file(path, io::parse_poset); }

std::string join(const std::vector<int>& vs) {
  std::string out;
  for (int v : vs) out += (out.empty() ? "" : " ") + std::to_string(v);
  return out;
}

json graph_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.size()}, {"edges", edges}};
}

json rep_json(const IntervalRep& rep) {
  json out = json::array();
  for (const auto& iv : rep.intervals) out.push_back({iv.l, iv.r});
  return out;
}

json partition_json(const SplitPartition& p) {
  return {{"clique", mask_to_list(p.clique)}, {"independent", mask_to_list(p.independent)}};
}

std::string partition_text(const SplitPartition& p) {
  return "clique: " + join(mask_to_list(p.clique)) + "\nindependent: " + join(mask_to_list(p.independent)) + "\n";
}

std::string obstruction_text(const ForbiddenSubgraph& f) {
  return "induced " + kind_name(f.kind) + ": " + join(f.vertices);
}

SearchLimits limits_from(std::optional<long long> timeout_ms, std::optional<int> max_n, bool poset) {
  SearchLimits limits = poset ? poset_limits() : SearchLimits{};
  if (const char* env = std::getenv("DIMKIT_TIMEOUT_MS")) {
    try {
      limits.timeout = std::chrono::milliseconds{std::stoll(env)};
    } catch (const std::exception&) {
      throw InputError(std::string("DIMKIT_TIMEOUT_MS is not an integer: ") + env);
    }
  }
  if (timeout_ms) limits.timeout = std::chrono::milliseconds{*timeout_ms};
  if (max_n) limits.max_size = *max_n;
  return limits;
}

void write_output(const std::string& dir, const std::string& name, const std::string& content) {
  fs::create_directories(dir);
  std::ofstream out(fs::path(dir) / name);
  if (!out) throw InputError("cannot write " + (fs::path(dir) / name).string());
  out << content;
}

struct Output {
  bool as_json = false;
  std::string out_dir;
  json doc = json::object();
  std::string text;
  // Named artifacts: written to out_dir, or appended to stdout.
  std::vector<std::pair<std::string, std::string>> files;

  int emit(int code) const {
    if (as_json) {
      std::cout << doc.dump() << '\n';
    } else {
      std::cout << text;
      for (const auto& [name, content] : files)
        if (out_dir.empty()) std::cout << "# " << name << '\n' << content;
    }
    for (const auto& [name, content] : files)
      if (!out_dir.empty()) write_output(out_dir, name, content);
    return code;
  }
};

// --- recognize --------------------------------------------------------------

int cmd_recognize(const std::string& file, const std::string& cls, Output& out) {
  Graph g = load_graph(file);
  out.doc["class"] = cls;
  auto member = [&](bool yes) {
    out.doc["member"] = yes;
    out.text = std::string(yes ? "" : "not ") + cls + "\n" + out.text;
    return yes ? kOk : kNegative;
  };
  auto certificate = [&](const ForbiddenSubgraph& f) {
    out.doc["certificate"] = {{"kind", kind_name(f.kind)}, {"vertices", f.vertices}};
    out.text += "reason: " + obstruction_text(f) + "\n";
  };
  if (cls == "split") {
    auto r = recognize_split(g);
    if (r.is_split()) {
      out.doc["partition"] = partition_json(*r.partition);
      out.text = partition_text(*r.partition);
    } else {
      certificate(*r.obstruction);
    }
    return member(r.is_split());
  }
  if (cls == "threshold") {
    auto r = recognize_threshold(g);
    if (r.is_threshold) {
      out.doc["elimination_order"] = r.elimination_order;
      out.text = "elimination order: " + join(r.elimination_order) + "\n";
    } else {
      certificate(*r.obstruction);
    }
    return member(r.is_threshold);
  }
  if (cls == "interval") {
    auto r = recognize_interval(g);
    if (r) {
      out.doc["intervals"] = rep_json(*r);
      out.text = io::write_interval_rep(*r);
    } else if (auto cycle = detail::find_four(g, [](auto k) { return k == ForbiddenSubgraph::Kind::C4; })) {
      certificate(*cycle);
    }
    return member(r.has_value());
  }
  if (cls == "unit-interval") {
    auto r = recognize_unit_interval(g);
    if (r) {
      out.doc["scale"] = r->scale;
      out.doc["left"] = r->left;
      out.text = "scale: " + std::to_string(r->scale) + "\n";
      for (int v = 0; v < r->size(); ++v) out.text += std::to_string(v) + " " + std::to_string(r->left[v]) + "\n";
    } else if (auto claw = find_induced_claw(g)) {
      certificate(*claw);
    } else {
      out.text += "reason: not an interval graph\n";
      out.doc["reason"] = "not an interval graph";
    }
    return member(r.has_value());
  }
  throw InputError("unknown class '" + cls + "'; valid: split, threshold, interval, unit-interval");
}

// --- dim --------------------------------------------------------------------

int cmd_dim(const std::string& file, const std::string& param, std::optional<long long> timeout,
            std::optional<int> max_n, const std::string& witness_path, Output& out) {
  int k = 0;
  std::string witness;
  json wjson;
  if (param == "posetdim") {
    Poset p = load_poset(file);
    auto r = poset_dimension(p, limits_from(timeout, max_n, true));
    k = r.k;
    witness = io::write_realizer(p.size(), r.witness);
    wjson = json::array();
    for (const auto& ext : r.witness) wjson.push_back(ext.order());
  } else {
    Graph g = load_graph(file);
    auto limits = limits_from(timeout, max_n, false);
    std::vector<Graph> factors;
    if (param == "tdim") {
      auto r = threshold_dimension(g, limits);
      k = r.k;
      factors = r.witness.members;
    } else {
      IntersectionResult r;
      if (param == "tint")
        r = threshold_intersection_number(g, limits);
      else if (param == "boxicity")
        r = boxicity(g, limits);
      else if (param == "cubicity")
        r = cubicity(g, limits);
      else
        throw InputError("unknown parameter '" + param + "'; valid: boxicity, cubicity, tdim, tint, posetdim");
      k = r.k;
      factors = r.witness.factors;
    }
    witness = io::write_graphs(factors);
    wjson = json::array();
    for (const auto& f : factors) wjson.push_back(graph_json(f));
  }
  out.doc["param"] = param;
  out.doc["value"] = k;
  out.doc["witness"] = wjson;
  out.text = param + " = " + std::to_string(k) + "\n";
  if (!witness_path.empty()) {
    std::ofstream w(witness_path);
    if (!w) throw InputError("cannot write " + witness_path);
    w << witness;
  }
  return kOk;
}

// --- reduce -----------------------------------------------------------------

void add_graph(Output& out, const std::string& name, const Graph& g) {
  out.doc[name] = graph_json(g);
  out.files.emplace_back(name + ".graph", io::write_graph(g));
}

void add_factors(Output& out, const std::string& name, const std::vector<Graph>& gs) {
  json arr = json::array();
  for (const auto& g : gs) arr.push_back(graph_json(g));
  out.doc[name] = arr;
  out.files.emplace_back(name + ".graphs", io::write_graphs(gs));
}

void require_inputs(const std::vector<std::string>& inputs, std::size_t count, const std::string& kind) {
  if (inputs.size() != count)
    throw InputError(kind + " expects " + std::to_string(count) + " input file(s), got " + std::to_string(inputs.size()));
}

SplitPartition split_partition_of(const Graph& g) {
  detail::require_nonempty(g);
  auto s = recognize_split(g);
  if (!s.is_split()) throw InputError("graph is not split (" + obstruction_text(*s.obstruction) + ")");
  return *s.partition;
}

int cmd_reduce(const std::string& kind, const std::vector<std::string>& inputs, Output& out) {
  out.doc["kind"] = kind;
  std::string summary;
  if (kind == "poset-to-split") {
    require_inputs(inputs, 1, kind);
    auto r = poset_to_split_graph(load_poset(inputs[0]));
    add_graph(out, "graph", r.graph);
    out.doc["partition"] = partition_json(r.partition);
    out.doc["element_of"] = r.element_of;
    out.files.emplace_back("element.map", io::write_vertex_map(r.element_of));
    summary = "n=" + std::to_string(r.graph.size()) + "\n" + partition_text(r.partition);
  } else if (kind == "split-to-gprime") {
    require_inputs(inputs, 1, kind);
    auto r = split_to_gprime(load_graph(inputs[0]));
    add_graph(out, "gprime", r.graph);
    out.doc["partition"] = partition_json(r.partition);
    out.doc["trivial_case"] = r.trivial_case;
    out.doc["copy1"] = r.copy1;
    out.doc["copy2"] = r.copy2;
    out.files.emplace_back("copy1.map", io::write_vertex_map(r.copy1));
    if (!r.trivial_case) out.files.emplace_back("copy2.map", io::write_vertex_map(r.copy2));
    summary = "n=" + std::to_string(r.graph.size()) + " trivial_case=" + (r.trivial_case ? "true" : "false") + "\n" +
              partition_text(r.partition);
  } else if (kind == "two-threshold") {
    if (inputs.size() != 1) require_inputs(inputs, 2, kind);
    Graph g = load_graph(inputs[0]);
    auto part = split_partition_of(g);
    auto rep = inputs.size() == 2 ? std::optional(parse_file(inputs[1], io::parse_interval_rep)) : recognize_interval(g);
    if (!rep) throw InputError("graph is not interval");
    auto [g1, g2] = two_threshold_cover(g, part, *rep);
    add_factors(out, "threshold", {g1, g2});
    summary = "factors=2\n";
  } else if (kind == "realizer-from-cover") {
    require_inputs(inputs, 2, kind);
    Graph g = load_graph(inputs[0]);
    auto factors = parse_file(inputs[1], io::parse_graphs);
    auto part = split_partition_of(g);
    auto r = realizer_from_threshold_cover(g, part, {FactorKind::Threshold, factors});
    auto cp = characteristic_poset(g, part);
    out.doc["poset"] = io::write_poset(cp.poset);
    json rj = json::array();
    for (const auto& ext : r) rj.push_back(ext.order());
    out.doc["realizer"] = rj;
    out.files.emplace_back("poset.poset", io::write_poset(cp.poset));
    out.files.emplace_back("realizer.txt", io::write_realizer(cp.poset.size(), r));
    summary = "extensions=" + std::to_string(r.size()) + "\n";
  } else if (kind == "threshold-from-realizer") {
    require_inputs(inputs, 2, kind);
    Poset p = load_poset(inputs[0]);
    Realizer r = parse_file(inputs[1], io::parse_realizer);
    auto rep = threshold_graphs_from_realizer(p, r);
    add_factors(out, "threshold", rep.factors);
    summary = "factors=" + std::to_string(rep.factors.size()) + "\n";
  } else if (kind == "sandwich-threshold") {
    require_inputs(inputs, 2, kind);
    Graph g = load_graph(inputs[0]);
    Graph sup = load_graph(inputs[1]);
    auto h = threshold_sandwich(g, split_partition_of(g), sup);
    add_graph(out, "sandwich", h);
    summary = "edges=" + std::to_string(h.edge_count()) + "\n";
  } else if (kind == "sandwich-interval") {
    require_inputs(inputs, 2, kind);
    Graph g = load_graph(inputs[0]);
    IntervalRep sup = parse_file(inputs[1], io::parse_interval_rep);
    auto h = split_interval_sandwich(g, split_partition_of(g), sup);
    add_graph(out, "sandwich", h.graph);
    out.doc["intervals"] = rep_json(h.rep);
    out.files.emplace_back("sandwich.intervals", io::write_interval_rep(h.rep));
    summary = "edges=" + std::to_string(h.graph.edge_count()) + "\n";
  } else if (kind == "hi-intervals") {
    if (inputs.empty() || inputs.size() > 2) throw InputError(kind + " expects 1 or 2 input files");
    Graph h = load_graph(inputs[0]);
    std::vector<Graph> factors;
    if (inputs.size() == 2) {
      factors = parse_file(inputs[1], io::parse_graphs);
    } else {
      for (const Graph& m : threshold_dimension(h).witness.members) factors.push_back(complement(m));
    }
    auto his = interval_reps_from_threshold_cover(h, factors);
    std::vector<Graph> graphs;
    std::vector<IntervalRep> reps;
    for (const auto& f : his) {
      graphs.push_back(f.graph);
      reps.push_back(f.rep);
    }
    add_factors(out, "interval", graphs);
    json rj = json::array();
    for (const auto& r : reps) rj.push_back(rep_json(r));
    out.doc["intervals"] = rj;
    out.files.emplace_back("interval.intervals", io::write_interval_reps(reps));
    summary = "factors=" + std::to_string(his.size()) + "\n";
  } else {
    throw InputError("unknown reduction '" + kind +
                     "'; valid: poset-to-split, split-to-gprime, two-threshold, realizer-from-cover, "
                     "threshold-from-realizer, sandwich-threshold, sandwich-interval, hi-intervals");
  }
  out.text = kind + ": " + summary;
  return kOk;
}

// --- verify -----------------------------------------------------------------

int cmd_verify(const std::string& id, int n_max, int samples, std::uint64_t seed, bool timing, Output& out) {
  auto limits = limits_from(std::nullopt, std::nullopt, false);
  auto report = verify_theorem(id, n_max, samples, seed, limits.timeout);
  out.doc = report.to_json(timing);
  std::ostringstream text;
  text << id << ": " << (report.passed() ? "pass" : "FAIL") << ", " << report.instances << " instances, "
       << report.failures.size() << " failures, seed " << seed;
  if (timing) text << ", " << report.elapsed_ms << " ms";
  text << '\n';
  for (const auto& f : report.failures) text << "--- " << f.reason << '\n' << f.instance;
  out.text = text.str();
  return report.passed() ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boxicity, cubicity, threshold dimension and poset dimension toolkit"};
  app.require_subcommand(1);
  Output out;
  std::string format = "text";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  std::string file, cls, param, witness, kind, id;
  std::optional<long long> timeout;
  std::optional<int> max_n;
  std::vector<std::string> inputs;
  int n_max = 5, samples = 100;
  std::uint64_t seed = 1;
  bool no_timing = false;

  auto* rec = app.add_subcommand("recognize", "Test membership in a graph class");
  rec->add_option("--class", cls, "split | threshold | interval | unit-interval")->required();
  rec->add_option("file", file, "Graph file")->required();
  add_format(rec);

  auto* dim = app.add_subcommand("dim", "Compute a dimension parameter exactly");
  dim->add_option("--param", param, "boxicity | cubicity | tdim | tint | posetdim")->required();
  dim->add_option("file", file, "Graph or poset file")->required();
  dim->add_option("--timeout", timeout, "Timeout in milliseconds");
  dim->add_option("--max-n", max_n, "Largest accepted size");
  dim->add_option("--witness", witness, "Write the witness to this file");
  add_format(dim);

  auto* red = app.add_subcommand("reduce", "Run a reduction");
  red->add_option("kind", kind, "Reduction name")->required();
  red->add_option("inputs", inputs, "Input files")->required();
  red->add_option("--out", out.out_dir, "Write outputs into this directory");
  add_format(red);

  auto* ver = app.add_subcommand("verify", "Run a theorem suite");
  ver->add_option("theorem", id, "Theorem id")->required();
  ver->add_option("--n-max", n_max, "Largest instance size");
  ver->add_option("--samples", samples, "Random instances");
  ver->add_option("--seed", seed, "Random seed");
  ver->add_flag("--no-timing", no_timing, "Report elapsed_ms as 0");
  add_format(ver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  out.as_json = format == "json";
  try {
    if (rec->parsed()) return out.emit(cmd_recognize(file, cls, out));
    if (dim->parsed()) return out.emit(cmd_dim(file, param, timeout, max_n, witness, out));
    if (red->parsed()) return out.emit(cmd_reduce(kind, inputs, out));
    if (ver->parsed()) return out.emit(cmd_verify(id, n_max, samples, seed, !no_timing, out));
  } catch (const TimeoutError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCapacity;
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCapacity;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kNegative;
  }
  return kInput;
}
