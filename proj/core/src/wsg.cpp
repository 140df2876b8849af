#include "stablegraph/wsg.hpp"

#include <charconv>
#include <sstream>

#include "stablegraph/canonical.hpp"
#include "stablegraph/error.hpp"

namespace stablegraph {
namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

int to_int(std::string_view s, int line_no) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": expected integer, got '" +
                     std::string(s) + "'");
  }
  return value;
}

struct Line {
  int number;
  std::vector<std::string_view> words;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    const auto line = text.substr(start, end - start);
    auto words = tokens(line);
    if (!words.empty() && words.front().front() != '#') out.push_back({number, std::move(words)});
    start = end + 1;
  }
  return out;
}

void expect_keyword(const Line& line, std::string_view keyword, std::size_t arity) {
  if (line.words.front() != keyword) {
    throw ParseError("line " + std::to_string(line.number) + ": expected '" +
                     std::string(keyword) + "'");
  }
  if (arity != static_cast<std::size_t>(-1) && line.words.size() != arity + 1) {
    throw ParseError("line " + std::to_string(line.number) + ": '" + std::string(keyword) +
                     "' expects " + std::to_string(arity) + " value(s)");
  }
}

WeightedGraph parse_lines(const std::vector<Line>& lines, std::size_t& pos) {
  auto next = [&](std::string_view what) -> const Line& {
    if (pos >= lines.size()) throw ParseError("unexpected end of input, expected " + std::string(what));
    return lines[pos++];
  };
  const Line& header = next("header");
  if (header.words.size() != 2 || header.words[0] != "wsg" || header.words[1] != "1") {
    throw ParseError("line " + std::to_string(header.number) + ": malformed header, expected 'wsg 1'");
  }
  const Line& vline = next("vertices");
  expect_keyword(vline, "vertices", 1);
  const int c = to_int(vline.words[1], vline.number);
  if (c < 1) throw ParseError("vertex count must be positive");

  const Line& wline = next("weights");
  expect_keyword(wline, "weights", static_cast<std::size_t>(-1));
  if (static_cast<int>(wline.words.size()) - 1 != c) {
    throw ParseError("line " + std::to_string(wline.number) + ": " +
                     std::to_string(wline.words.size() - 1) + " weights for " + std::to_string(c) +
                     " vertices");
  }
  std::vector<int> weights;
  for (std::size_t i = 1; i < wline.words.size(); ++i) {
    const int w = to_int(wline.words[i], wline.number);
    if (w < 0) throw ParseError("line " + std::to_string(wline.number) + ": negative weight");
    weights.push_back(w);
  }

  const Line& eline = next("edges");
  expect_keyword(eline, "edges", 1);
  const int n = to_int(eline.words[1], eline.number);
  if (n < 0) throw ParseError("edge count must be non-negative");

  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int k = 0; k < n; ++k) {
    if (pos >= lines.size() || lines[pos].words.front() == "wsg") {
      throw ParseError("declared " + std::to_string(n) + " edges, found " + std::to_string(k));
    }
    const Line& line = lines[pos++];
    if (line.words.size() != 2) {
      throw ParseError("line " + std::to_string(line.number) + ": edge line needs two vertices");
    }
    int u = to_int(line.words[0], line.number);
    int v = to_int(line.words[1], line.number);
    if (u < 1 || u > c || v < 1 || v > c) {
      throw ParseError("line " + std::to_string(line.number) + ": vertex index out of range 1.." +
                       std::to_string(c));
    }
    if (u > v) std::swap(u, v);
    edges.emplace_back(u - 1, v - 1);
  }
  return WeightedGraph::from_edges(std::move(weights), edges);
}

}  // namespace

WeightedGraph parse_wsg(std::string_view text) {
  const auto lines = content_lines(text);
  std::size_t pos = 0;
  auto g = parse_lines(lines, pos);
  if (pos != lines.size()) {
    throw ParseError("line " + std::to_string(lines[pos].number) + ": trailing content (edge count mismatch?)");
  }
  return g;
}

std::vector<WeightedGraph> parse_wsg_stream(std::string_view text) {
  const auto lines = content_lines(text);
  std::vector<WeightedGraph> out;
  std::size_t pos = 0;
  while (pos < lines.size()) {
    out.push_back(parse_lines(lines, pos));
    if (pos < lines.size() && lines[pos].words.front() != "wsg") {
      throw ParseError("line " + std::to_string(lines[pos].number) + ": trailing content (edge count mismatch?)");
    }
  }
  return out;
}

std::string write_wsg(const WeightedGraph& g) {
  std::ostringstream out;
  out << "wsg 1\n";
  out << "vertices " << g.vertex_count() << "\n";
  out << "weights";
  for (int w : g.weights()) out << ' ' << w;
  out << "\nedges " << g.edge_count() << "\n";
  for (auto [u, v] : g.edge_list()) {
    if (u > v) std::swap(u, v);
    out << u + 1 << ' ' << v + 1 << "\n";
  }
  return out.str();
}

std::string serialize_wsg(const WeightedGraph& g) { return write_wsg(canonical_form(g)); }

std::string to_dot(const WeightedGraph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "  v" << v + 1 << " [label=\"v" << v + 1 << " (w=" << g.weight(v) << ")\"];\n";
  }
  for (auto [u, v] : g.edge_list()) out << "  v" << u + 1 << " -- v" << v + 1 << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace stablegraph
