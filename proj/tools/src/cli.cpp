#include "cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "stablegraph/canonical.hpp"
#include "stablegraph/cross_ratio.hpp"
#include "stablegraph/enumeration.hpp"
#include "stablegraph/error.hpp"
#include "stablegraph/graph.hpp"
#include "stablegraph/moves.hpp"
#include "stablegraph/one_stratum.hpp"
#include "stablegraph/symmetry.hpp"
#include "stablegraph/wsg.hpp"

namespace stablegraph::cli {
namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int genus_limit = 6;
  std::optional<int> genus;
  std::optional<int> edges;
  std::optional<int> components;
  std::optional<int> total_weight;
  std::optional<int> dimension;
  std::optional<int> edge;
  std::optional<int> vertex;
  std::string lambda;
  std::string group = "s3";
  std::string out_path;
  bool count_only = false;
  bool as_json = false;
  bool all = false;
  bool with_graphs = false;
  std::vector<std::string> inputs;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

WeightedGraph load(const std::string& path) { return parse_wsg(read_input(path)); }

WeightedGraph load_stable(const std::string& path) {
  auto g = load(path);
  const auto diag = is_stable(g);
  if (!diag.stable) {
    std::string why;
    for (const auto& f : diag.failures) why += (why.empty() ? "" : "; ") + f;
    throw InvalidGraphError("unstable graph: " + why);
  }
  return g;
}

const std::string& single_input(const Options& o) {
  if (o.inputs.size() != 1) throw UsageError("expected exactly one input file");
  return o.inputs.front();
}

int require_genus(const Options& o) {
  if (!o.genus) throw UsageError("--genus is required");
  if (*o.genus < 2) throw UsageError("--genus must be at least 2");
  if (*o.genus > o.genus_limit) {
    throw UsageError("--genus " + std::to_string(*o.genus) + " exceeds --genus-limit " +
                     std::to_string(o.genus_limit));
  }
  return *o.genus;
}

json keys_json(const std::vector<CanonicalKey>& keys) {
  json arr = json::array();
  for (const auto& k : keys) arr.push_back(k.str());
  return arr;
}

void print_classes(const std::vector<GraphClass>& classes, const Options& o, json meta,
                   std::ostream& out) {
  if (o.as_json) {
    meta["count"] = classes.size();
    if (!o.count_only) {
      json keys = json::array();
      for (const auto& c : classes) keys.push_back(c.key.str());
      meta["keys"] = keys;
    }
    out << meta.dump(2) << "\n";
    return;
  }
  if (o.count_only) {
    out << classes.size() << "\n";
    return;
  }
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (i > 0) out << "\n";
    out << serialize_wsg(classes[i].graph);
  }
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const int g = require_genus(o);
  EnumFilter f;
  f.edges = o.edges;
  f.components = o.components;
  f.total_weight = o.total_weight;
  json meta{{"genus", g}};
  if (f.edges) meta["edges"] = *f.edges;
  if (f.components) meta["components"] = *f.components;
  if (f.total_weight) meta["total_weight"] = *f.total_weight;
  print_classes(enumerate_classes(g, f), o, meta, out);
  return kOk;
}

int cmd_stratum(const Options& o, std::ostream& out) {
  const int g = require_genus(o);
  const int i = o.dimension.value_or(0);
  if (i < 0 || i > 3 * g - 3) throw UsageError("--dimension out of range");
  print_classes(enumerate_stratum_classes(g, i), o, json{{"genus", g}, {"dimension", i}}, out);
  return kOk;
}

int cmd_table(const Options& o, std::ostream& out) {
  const auto t = table(require_genus(o));
  if (!o.as_json) {
    out << format_table(t);
    return kOk;
  }
  json c = json::array();
  for (std::size_t i = 1; i <= t.counts.size(); ++i) c.push_back(i);
  json h = json::array();
  for (int i = t.genus; i >= 0; --i) h.push_back(i);
  out << json{{"genus", t.genus}, {"rows", "c"}, {"columns", "h"}, {"c", c}, {"h", h},
              {"counts", t.row_major()}, {"total", t.total()}}.dump(2)
      << "\n";
  return kOk;
}

int cmd_aut(const Options& o, std::ostream& out) {
  const auto g = load(single_input(o));
  const auto group = automorphism_group(g);
  std::vector<std::string> gens;
  for (const auto& p : group.generators()) gens.push_back(cycle_string(p));
  if (o.as_json) {
    out << json{{"order", group.order()}, {"generators", gens}}.dump(2) << "\n";
    return kOk;
  }
  out << "order: " << group.order() << "\n";
  out << "generators:\n";
  for (const auto& s : gens) out << "  " << s << "\n";
  return kOk;
}

int cmd_iso(const Options& o, std::ostream& out) {
  if (o.inputs.size() != 2) throw UsageError("iso expects two input files");
  const auto a = load(o.inputs[0]);
  const auto b = load(o.inputs[1]);
  const bool iso = are_isomorphic(a, b);
  if (o.as_json) {
    out << json{{"isomorphic", iso}, {"keys", {canonical_key(a).str(), canonical_key(b).str()}}}
               .dump(2)
        << "\n";
  } else {
    out << "isomorphic: " << (iso ? "true" : "false") << "\n";
  }
  return iso ? kOk : kNegative;
}

int cmd_canon(const Options& o, std::ostream& out) {
  const auto g = load(single_input(o));
  const auto key = canonical_key(g);
  if (o.as_json) {
    out << json{{"key", key.str()}, {"wsg", serialize_wsg(g)}}.dump(2) << "\n";
  } else {
    out << key.str() << "\n";
  }
  return kOk;
}

void print_graph(const WeightedGraph& g, const Options& o, std::ostream& out) {
  if (o.as_json) {
    out << json{{"key", canonical_key(g).str()}, {"wsg", write_wsg(g)}}.dump(2) << "\n";
  } else {
    out << write_wsg(g);
  }
}

int cmd_shrink(const Options& o, std::ostream& out) {
  const auto g = load_stable(single_input(o));
  if (!o.edge) throw UsageError("--edge is required");
  if (*o.edge < 1 || *o.edge > g.edge_count()) throw UsageError("--edge out of range");
  print_graph(shrink(g, *o.edge - 1), o, out);
  return kOk;
}

int cmd_pops(const Options& o, std::ostream& out) {
  const auto g = load_stable(single_input(o));
  VertexId v = -1;
  if (o.vertex) {
    if (*o.vertex < 1 || *o.vertex > g.vertex_count()) throw UsageError("--vertex out of range");
    v = *o.vertex - 1;
  } else if (auto v0 = degree_four_vertex(g)) {
    v = *v0;
  } else {
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
      if (g.weight(u) == 1 && g.degree(u) == 1) v = u;
    }
    if (v < 0) throw PreconditionError("no vertex to pop; pass --vertex");
  }
  std::vector<std::pair<std::string, WeightedGraph>> results;
  if (g.weight(v) == 0 && g.degree(v) == 4) {
    for (auto& [p, h] : pops_deg4(g, v)) {
      results.emplace_back("p" + std::to_string(static_cast<int>(p)), std::move(h));
    }
  } else {
    results.emplace_back("pop1", pop_weight1(g, v));
  }
  if (o.as_json) {
    json arr = json::array();
    for (const auto& [label, h] : results) {
      arr.push_back({{"move", label}, {"key", canonical_key(h).str()}, {"wsg", write_wsg(h)}});
    }
    out << arr.dump(2) << "\n";
    return kOk;
  }
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (i > 0) out << "\n";
    out << "# " << results[i].first << "\n" << write_wsg(results[i].second);
  }
  return kOk;
}

json report_json(const OneStratumReport& r) {
  json boundary = json::array();
  for (const auto& b : r.boundary) {
    boundary.push_back({{"key", b.key.str()}, {"ord", b.ord}, {"smooth", b.smooth}});
  }
  return {{"key", r.key.str()},
          {"kind", to_string(r.kind)},
          {"aut_order", r.aut_order},
          {"normalization_degree", r.normalization_degree},
          {"kernel_or_gerbe_order", r.kernel_or_gerbe_order},
          {"r_type", r.r_type ? json(to_string(*r.r_type)) : json(nullptr)},
          {"orbifold", {{"closure", r.orbifold.closure}, {"interior", r.orbifold.interior}}},
          {"boundary", boundary},
          {"coarse_space", r.coarse_space}};
}

void print_report(const OneStratumReport& r, std::ostream& out) {
  out << "key: " << r.key.str() << "\n";
  out << "kind: " << to_string(r.kind) << "\n";
  out << "aut_order: " << r.aut_order << "\n";
  out << "normalization_degree: " << r.normalization_degree << "\n";
  out << "kernel_or_gerbe_order: " << r.kernel_or_gerbe_order << "\n";
  out << "r_type: " << (r.r_type ? to_string(*r.r_type) : "-") << "\n";
  out << "orbifold: " << to_string(r.orbifold) << "\n";
  for (const auto& b : r.boundary) {
    out << "boundary: " << b.key.str() << " ord=" << b.ord << (b.smooth ? " smooth" : " singular")
        << "\n";
  }
  out << "coarse_space: " << r.coarse_space << "\n";
}

int cmd_classify1(const Options& o, std::ostream& out) {
  std::vector<OneStratumReport> reports;
  if (o.all) {
    if (!o.inputs.empty()) throw UsageError("--all takes --genus, not input files");
    reports = classify_all(require_genus(o));
  } else {
    reports.push_back(classify(load_stable(single_input(o))));
  }
  if (o.as_json) {
    if (o.all) {
      json arr = json::array();
      for (const auto& r : reports) arr.push_back(report_json(r));
      out << arr.dump(2) << "\n";
    } else {
      out << report_json(reports.front()).dump(2) << "\n";
    }
    return kOk;
  }
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (i > 0) out << "\n";
    print_report(reports[i], out);
  }
  return kOk;
}

int cmd_connected(const Options& o, std::ostream& out) {
  const auto adj = one_stratum_adjacency(require_genus(o));
  if (o.as_json) {
    out << json{{"genus", adj.genus},
                {"connected", adj.connected},
                {"nodes", keys_json(adj.nodes)},
                {"adjacencies", adj.edges}}
               .dump(2)
        << "\n";
  } else {
    out << "connected: " << (adj.connected ? "true" : "false") << "\n";
    out << "nodes: " << adj.nodes.size() << "\n";
    out << "adjacencies: " << adj.edges.size() << "\n";
  }
  return adj.connected ? kOk : kNegative;
}

int cmd_reduce(const Options& o, std::ostream& out) {
  const auto g = load_stable(single_input(o));
  if (dimension(g) != 0) throw PreconditionError("reduce expects a 0-stratum graph");
  const auto seq = normal_form_reduce(g);
  if (o.as_json) {
    json steps = json::array();
    for (std::size_t i = 0; i < seq.steps.size(); ++i) {
      json step{{"move", to_string(seq.steps[i])},
                {"source", seq.steps[i].source.str()},
                {"target", seq.steps[i].target.str()}};
      if (o.with_graphs) step["wsg"] = write_wsg(seq.graphs[i + 1]);
      steps.push_back(step);
    }
    out << json{{"start", canonical_key(seq.start()).str()},
                {"end", canonical_key(seq.end()).str()},
                {"length", seq.steps.size()},
                {"steps", steps}}
               .dump(2)
        << "\n";
  } else {
    out << format_sequence(seq, o.with_graphs);
  }
  return kOk;
}

const std::vector<std::pair<std::string, S3Type>>& group_names() {
  static const std::vector<std::pair<std::string, S3Type>> names{
      {"1", S3Type::Trivial}, {"c2", S3Type::C2}, {"c3", S3Type::C3}, {"s3", S3Type::Full}};
  return names;
}

int cmd_chart(const Options& o, std::ostream& out) {
  json arr = json::array();
  for (const auto& [name, type] : group_names()) {
    const auto sig = to_string(orbifold_signature(S3Subgroup::of_type(type)));
    if (o.as_json) {
      arr.push_back({{"group", name}, {"order", s3_order(type)}, {"signature", sig}});
    } else {
      out << name << " " << sig << "\n";
    }
  }
  if (o.as_json) out << arr.dump(2) << "\n";
  return kOk;
}

int cmd_orbit(const Options& o, std::ostream& out) {
  if (o.lambda.empty()) throw UsageError("--lambda is required");
  const auto lambda = parse_point(o.lambda);
  const auto type = s3_type_from_string(o.group);
  if (!type) throw UsageError("--group must be one of 1, c2, c3, s3");
  const auto group = S3Subgroup::of_type(*type);
  std::vector<std::string> points;
  for (const auto& p : orbit(group, lambda)) points.push_back(to_string(p));
  const int stab = stabilizer_order(group, lambda);
  if (o.as_json) {
    out << json{{"lambda", to_string(lambda)},
                {"group", o.group},
                {"orbit", points},
                {"stabilizer_order", stab}}
               .dump(2)
        << "\n";
    return kOk;
  }
  out << "orbit:";
  for (const auto& p : points) out << " " << p;
  out << "\nstabilizer_order: " << stab << "\n";
  return kOk;
}

int cmd_dot(const Options& o, std::ostream& out) {
  out << to_dot(load(single_input(o)));
  return kOk;
}

int dispatch(const std::string& name, const Options& o, std::ostream& out) {
  static const std::map<std::string, std::function<int(const Options&, std::ostream&)>> table{
      {"enumerate", cmd_enumerate}, {"table", cmd_table},     {"stratum", cmd_stratum},
      {"aut", cmd_aut},             {"iso", cmd_iso},         {"canon", cmd_canon},
      {"shrink", cmd_shrink},       {"pops", cmd_pops},       {"classify1", cmd_classify1},
      {"connected", cmd_connected}, {"reduce", cmd_reduce},   {"chart", cmd_chart},
      {"orbit", cmd_orbit},         {"dot", cmd_dot}};
  return table.at(name)(o, out);
}

struct CommandSpec {
  const char* name;
  const char* help;
  std::vector<std::string> flags;
};

const std::vector<CommandSpec>& command_specs() {
  static const std::vector<CommandSpec> specs{
      {"enumerate", "List stable graph classes of a genus",
       {"genus", "edges", "components", "total-weight", "count-only", "json"}},
      {"table", "Count classes per (components, total weight) cell", {"genus", "json"}},
      {"stratum", "List classes of a given stratum dimension",
       {"genus", "dimension", "count-only", "json"}},
      {"aut", "Automorphism group order and generators", {"inputs", "json"}},
      {"iso", "Test two graphs for isomorphism", {"inputs", "json"}},
      {"canon", "Print the canonical key", {"inputs", "json"}},
      {"shrink", "Contract an edge or delete a loop", {"inputs", "edge", "json"}},
      {"pops", "All pops at a vertex", {"inputs", "vertex", "json"}},
      {"classify1", "Classify a 1-stratum component", {"inputs", "genus", "all", "json"}},
      {"connected", "Check connectedness of the 1-stratum", {"genus", "json"}},
      {"reduce", "Shrink/pop path to the loop-chain normal form",
       {"inputs", "with-graphs", "json"}},
      {"chart", "Residual orbifold signatures of the S3 subgroup types", {"json"}},
      {"orbit", "Orbit and stabilizer of a point under an S3 subgroup",
       {"lambda", "group", "json"}},
      {"dot", "Render a graph in DOT", {"inputs"}},
  };
  return specs;
}

void add_flags(CLI::App& sub, const std::vector<std::string>& flags, Options& o) {
  for (const auto& f : flags) {
    if (f == "genus") sub.add_option("--genus", o.genus, "Weighted genus");
    if (f == "edges") sub.add_option("--edges", o.edges, "Number of edges");
    if (f == "components") sub.add_option("--components", o.components, "Number of vertices");
    if (f == "total-weight") sub.add_option("--total-weight", o.total_weight, "Sum of weights");
    if (f == "dimension") sub.add_option("--dimension", o.dimension, "Stratum dimension (default 0)");
    if (f == "count-only") sub.add_flag("--count-only", o.count_only, "Print counts only");
    if (f == "json") sub.add_flag("--json", o.as_json, "JSON output");
    if (f == "all") sub.add_flag("--all", o.all, "Every 1-stratum class of --genus");
    if (f == "edge") sub.add_option("--edge", o.edge, "Edge id (1-based)");
    if (f == "vertex") sub.add_option("--vertex", o.vertex, "Vertex id (1-based)");
    if (f == "lambda") sub.add_option("--lambda", o.lambda, "Point: p/q, a+b*x or inf");
    if (f == "group") {
      sub.add_option("--group", o.group, "Subgroup type")->check(CLI::IsMember({"1", "c2", "c3", "s3"}));
    }
    if (f == "with-graphs") sub.add_flag("--with-graphs", o.with_graphs, "Interleave WSG blocks");
    if (f == "inputs") sub.add_option("files", o.inputs, "WSG input files ('-' for stdin)");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Weighted stable graphs: enumeration, symmetry, strata", "stablegraph"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--genus-limit", o.genus_limit, "Largest genus accepted (default 6)");
  app.add_option("--out", o.out_path, "Write output to a file");
  for (const auto& spec : command_specs()) {
    add_flags(*app.add_subcommand(spec.name, spec.help), spec.flags, o);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  std::ostringstream buffer;
  int code = kOk;
  try {
    code = dispatch(name, o, buffer);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidGraphError& e) {
    err << "error: " << e.what() << "\n";
    return kBadGraph;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kBadGraph;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << "\n";
    return kBadGraph;
  }

  if (o.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write '" << o.out_path << "'\n";
      return kUsage;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace stablegraph::cli
