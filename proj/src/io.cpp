#include "cfc/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "cfc/errors.hpp"

namespace cfc::io {
namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string> tokens;
};

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw InputError("line " + std::to_string(line) + ": " + msg);
}

// Yields the non-blank, non-comment lines split on whitespace.
std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> out;
  std::string text;
  std::size_t number = 0;
  while (std::getline(in, text)) {
    ++number;
    std::istringstream ss(text);
    Line line{number, {}};
    std::string tok;
    while (ss >> tok) line.tokens.push_back(tok);
    if (line.tokens.empty() || line.tokens[0] == "c") continue;
    out.push_back(std::move(line));
  }
  return out;
}

std::uint64_t parse_u64(const Line& l, std::size_t i) {
  if (i >= l.tokens.size()) fail(l.number, "missing field");
  const auto& s = l.tokens[i];
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) fail(l.number, "expected a non-negative integer, got '" + s + "'");
  return v;
}

Vertex parse_vertex(const Line& l, std::size_t i, std::size_t n) {
  auto v = parse_u64(l, i);
  if (v < 1 || v > n) fail(l.number, "vertex " + l.tokens[i] + " out of range 1.." + std::to_string(n));
  return static_cast<Vertex>(v - 1);
}

// Parses "p <kind> n m" and returns (n, m).
std::pair<std::size_t, std::size_t> header(const std::vector<Line>& lines, const std::string& kind) {
  if (lines.empty()) throw InputError("line 1: missing 'p " + kind + "' header");
  const auto& h = lines.front();
  if (h.tokens.size() != 4 || h.tokens[0] != "p" || h.tokens[1] != kind) {
    fail(h.number, "expected 'p " + kind + " <n> <m>'");
  }
  return {parse_u64(h, 2), parse_u64(h, 3)};
}

void expect_tag(const Line& l, const std::string& tag) {
  if (l.tokens[0] != tag) fail(l.number, "expected '" + tag + "' line, got '" + l.tokens[0] + "'");
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return in;
}

}  // namespace

Graph read_graph(std::istream& in) {
  auto lines = tokenize(in);
  auto [n, m] = header(lines, "graph");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    expect_tag(l, "e");
    if (l.tokens.size() != 3) fail(l.number, "edge line needs two endpoints");
    Vertex u = parse_vertex(l, 1, n), v = parse_vertex(l, 2, n);
    if (u == v) fail(l.number, "self-loop at vertex " + std::to_string(u + 1));
    edges.push_back({u, v});
  }
  {
    std::vector<std::pair<std::pair<Vertex, Vertex>, std::size_t>> keyed;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto [u, v] = edges[i];
      keyed.push_back({{std::min(u, v), std::max(u, v)}, i});
    }
    std::sort(keyed.begin(), keyed.end());
    for (std::size_t i = 1; i < keyed.size(); ++i) {
      if (keyed[i].first == keyed[i - 1].first) {
        fail(lines[std::max(keyed[i].second, keyed[i - 1].second) + 1].number,
             "duplicate edge " + std::to_string(keyed[i].first.first + 1) + " " +
                 std::to_string(keyed[i].first.second + 1));
      }
    }
  }
  if (edges.size() != m) {
    fail(lines.front().number, "header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  return Graph(n, edges);
}

Hypergraph read_hypergraph(std::istream& in) {
  auto lines = tokenize(in);
  auto [n, m] = header(lines, "hgraph");
  std::vector<VertexSet> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    expect_tag(l, "h");
    if (l.tokens.size() < 2) fail(l.number, "empty hyperedge");
    VertexSet e;
    for (std::size_t t = 1; t < l.tokens.size(); ++t) e.push_back(parse_vertex(l, t, n));
    edges.push_back(std::move(e));
  }
  if (edges.size() != m) {
    fail(lines.front().number, "header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  return Hypergraph(n, std::move(edges));
}

PartialColoring read_coloring(std::istream& in, std::size_t n) {
  PartialColoring f(n);
  for (const auto& l : tokenize(in)) {
    expect_tag(l, "v");
    if (l.tokens.size() != 3) fail(l.number, "coloring line needs a vertex and a color");
    Vertex v = parse_vertex(l, 1, n);
    if (f.colored(v)) fail(l.number, "vertex " + l.tokens[1] + " colored twice");
    f.set(v, ColorId{parse_u64(l, 2)});
  }
  return f;
}

ListAssignment read_lists(std::istream& in, std::size_t n) {
  std::vector<std::optional<ColorList>> lists(n);
  for (const auto& l : tokenize(in)) {
    if (l.tokens[0] != "l" && l.tokens[0] != "L") fail(l.number, "expected 'l' or 'L' line");
    Vertex v = parse_vertex(l, 1, n);
    if (lists[v]) fail(l.number, "second list for vertex " + l.tokens[1]);
    if (l.tokens[0] == "L") {
      if (l.tokens.size() != 4) fail(l.number, "range line needs lo and hi");
      auto lo = parse_u64(l, 2), hi = parse_u64(l, 3);
      if (lo >= hi) fail(l.number, "empty range");
      lists[v] = ColorList::range(lo, hi);
    } else {
      if (l.tokens.size() < 3) fail(l.number, "empty list");
      std::vector<ColorId> cs;
      for (std::size_t t = 2; t < l.tokens.size(); ++t) cs.push_back(ColorId{parse_u64(l, t)});
      lists[v] = ColorList::of(std::move(cs));
    }
  }
  std::vector<ColorList> out;
  for (std::size_t v = 0; v < n; ++v) {
    if (!lists[v]) throw InputError("no list for vertex " + std::to_string(v + 1));
    out.push_back(std::move(*lists[v]));
  }
  return ListAssignment(std::move(out));
}

Formula read_formula(std::istream& in) {
  auto lines = tokenize(in);
  auto [n, m] = header(lines, "cnf");
  Formula phi;
  phi.num_vars = static_cast<std::uint32_t>(n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.tokens.size() != 4 || l.tokens[3] != "0") fail(l.number, "clause must be three positive literals followed by 0");
    std::array<std::uint32_t, 3> c{};
    for (std::size_t t = 0; t < 3; ++t) {
      if (!l.tokens[t].empty() && l.tokens[t][0] == '-') fail(l.number, "negative literal " + l.tokens[t]);
      c[t] = parse_vertex(l, t, n);
    }
    if (c[0] == c[1] || c[0] == c[2] || c[1] == c[2]) fail(l.number, "repeated variable in clause");
    phi.clauses.push_back(c);
  }
  if (phi.clauses.size() != m) {
    fail(lines.front().number, "header declares " + std::to_string(m) + " clauses, found " +
                                   std::to_string(phi.clauses.size()));
  }
  return phi;
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "p graph " << g.size() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
  out << "p hgraph " << h.size() << ' ' << h.edge_count() << '\n';
  for (const auto& e : h.edges()) {
    out << 'h';
    for (Vertex v : e) out << ' ' << v + 1;
    out << '\n';
  }
}

void write_coloring(std::ostream& out, const PartialColoring& f) {
  for (Vertex v = 0; v < f.size(); ++v) {
    if (f[v]) out << "v " << v + 1 << ' ' << f[v]->value << '\n';
  }
}

void write_lists(std::ostream& out, const ListAssignment& lists) {
  for (Vertex v = 0; v < lists.size(); ++v) {
    const auto& l = lists[v];
    if (l.is_range() && l.size() > 64 && l.size() == l.range_hi() - l.range_lo()) {
      out << "L " << v + 1 << ' ' << l.range_lo() << ' ' << l.range_hi() << '\n';
      continue;
    }
    out << "l " << v + 1;
    for (auto c : l.colors()) out << ' ' << c.value;
    out << '\n';
  }
}

void write_formula(std::ostream& out, const Formula& phi) {
  out << "p cnf " << phi.num_vars << ' ' << phi.clauses.size() << '\n';
  for (const auto& c : phi.clauses) out << c[0] + 1 << ' ' << c[1] + 1 << ' ' << c[2] + 1 << " 0\n";
}

void write_roles(std::ostream& out, const std::vector<Role>& roles) {
  for (Vertex v = 0; v < roles.size(); ++v) out << v + 1 << ' ' << role_to_string(roles[v]) << '\n';
}

Graph load_graph(const std::string& path) {
  auto in = open(path);
  return read_graph(in);
}

Hypergraph load_hypergraph(const std::string& path) {
  auto in = open(path);
  return read_hypergraph(in);
}

PartialColoring load_coloring(const std::string& path, std::size_t n) {
  auto in = open(path);
  return read_coloring(in, n);
}

ListAssignment load_lists(const std::string& path, std::size_t n) {
  auto in = open(path);
  return read_lists(in, n);
}

Formula load_formula(const std::string& path) {
  auto in = open(path);
  return read_formula(in);
}

ListAssignment load_lists_arg(std::string_view arg, std::size_t n) {
  constexpr std::string_view prefix = "RANGE:";
  if (arg.substr(0, prefix.size()) == prefix) {
    auto rest = arg.substr(prefix.size());
    std::uint64_t r = 0;
    auto [p, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), r);
    if (ec != std::errc() || p != rest.data() + rest.size() || r == 0) {
      throw InputError("bad list arg '" + std::string(arg) + "'");
    }
    return ListAssignment::uniform(n, ColorList::range(0, r));
  }
  return load_lists(std::string(arg), n);
}

}  // namespace cfc::io
