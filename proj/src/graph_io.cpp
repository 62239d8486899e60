#include "barbed/graph_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "barbed/errors.hpp"

namespace barbed {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
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

template <typename T>
bool parse_token(std::string_view tok, T& out) {
  const char* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, out);
  return ec == std::errc{} && ptr == end;
}

}  // namespace

WeightedGraph parse_graph(std::string_view text) {
  using Kind = ParseError::Kind;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_lines;
  std::set<VertexPair> seen;
  std::optional<std::size_t> declared;
  std::size_t max_id = 0;
  bool any_edge = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    ++line_no;

    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    if (tokens.front() == "n") {
      std::size_t count = 0;
      if (tokens.size() != 2 || !parse_token(tokens[1], count) || count == 0)
        throw ParseError(Kind::Malformed, line_no, "header must read 'n <positive vertex count>'");
      if (declared || any_edge) throw ParseError(Kind::Malformed, line_no, "header must precede all edges and appear once");
      declared = count;
      continue;
    }

    if (tokens.size() != 3) throw ParseError(Kind::Malformed, line_no, "expected '<u> <v> <weight>'");
    Vertex u = 0, v = 0;
    double w = 0.0;
    if (!parse_token(tokens[0], u) || !parse_token(tokens[1], v))
      throw ParseError(Kind::Malformed, line_no, "vertex ids must be nonnegative integers");
    if (!parse_token(tokens[2], w) || !std::isfinite(w))
      throw ParseError(Kind::Malformed, line_no, "weight is not a finite number");
    if (u == v) throw ParseError(Kind::SelfLoop, line_no, "self-loop at vertex " + std::to_string(u));
    if (!(w > 0.0)) throw ParseError(Kind::NonPositiveWeight, line_no, "weight must be strictly positive");
    if (declared && (u >= *declared || v >= *declared))
      throw ParseError(Kind::VertexOutOfRange, line_no, "vertex id exceeds declared count " + std::to_string(*declared));
    if (!seen.insert(make_pair_key(u, v)).second)
      throw ParseError(Kind::DuplicateEdge, line_no,
                       "duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    max_id = std::max<std::size_t>(max_id, std::max(u, v));
    any_edge = true;
    edges.push_back({u, v, w});
  }

  const std::size_t n = declared ? *declared : (any_edge ? max_id + 1 : 1);
  return WeightedGraph(n, std::move(edges));
}

WeightedGraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read graph file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string format_number(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

std::string serialize_graph(const WeightedGraph& g) {
  std::string out = "n " + std::to_string(g.vertex_count()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + " " + format_number(e.weight) + "\n";
  }
  return out;
}

}  // namespace barbed
