#include "cfc/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "cfc/errors.hpp"

namespace cfc {

VerificationReport verify_cf(const Hypergraph& h, const PartialColoring& f,
                             const ListAssignment* lists, bool require_total) {
  if (f.size() != h.size()) {
    throw InputError("coloring covers " + std::to_string(f.size()) + " vertices, hypergraph has " +
                     std::to_string(h.size()));
  }
  if (lists && lists->size() != h.size()) {
    throw InputError("list assignment size does not match the hypergraph");
  }
  VerificationReport rep;
  rep.edges.resize(h.edge_count());
  std::map<ColorId, std::pair<std::size_t, Vertex>> seen;  // color -> (count, a vertex)
  bool ok = true;
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    seen.clear();
    for (Vertex v : h.edge(i)) {
      if (!f[v]) continue;
      auto [it, fresh] = seen.try_emplace(*f[v], 0, v);
      ++it->second.first;
    }
    auto& check = rep.edges[i];
    if (seen.empty()) {
      check.status = EdgeStatus::NoColoredVertex;
      ok = false;
      continue;
    }
    auto unique = std::find_if(seen.begin(), seen.end(), [](const auto& kv) { return kv.second.first == 1; });
    if (unique == seen.end()) {
      check.status = EdgeStatus::NoUniqueColor;
      ok = false;
      continue;
    }
    check.status = EdgeStatus::Unique;
    check.color = unique->first;
    check.witness = unique->second.second;
  }
  for (Vertex v = 0; v < h.size(); ++v) {
    if (lists && f[v] && !(*lists)[v].contains(*f[v])) rep.list_violations.push_back(v);
    if (require_total && !f[v]) rep.uncolored.push_back(v);
  }
  rep.valid = ok && rep.list_violations.empty() && rep.uncolored.empty();
  return rep;
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  std::size_t bad = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    if (e.status == EdgeStatus::Unique) continue;
    ++bad;
    out << "edge " << i + 1 << ": "
        << (e.status == EdgeStatus::NoColoredVertex ? "no colored vertex" : "no color occurs exactly once")
        << '\n';
  }
  for (Vertex v : list_violations) out << "vertex " << v + 1 << ": color not in its list\n";
  for (Vertex v : uncolored) out << "vertex " << v + 1 << ": uncolored\n";
  out << (valid ? "VALID" : "INVALID") << ": " << edges.size() - bad << "/" << edges.size()
      << " edges conflict-free, " << list_violations.size() << " list violations, " << uncolored.size()
      << " uncolored\n";
  return out.str();
}

std::string VerificationReport::to_machine() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    out << "edge " << i + 1 << ' ';
    switch (e.status) {
      case EdgeStatus::Unique:
        out << "ok " << *e.witness + 1 << ' ' << e.color->value;
        break;
      case EdgeStatus::NoColoredVertex:
        out << "fail no-colored";
        break;
      case EdgeStatus::NoUniqueColor:
        out << "fail no-unique";
        break;
    }
    out << '\n';
  }
  for (Vertex v : list_violations) out << "list " << v + 1 << '\n';
  for (Vertex v : uncolored) out << "uncolored " << v + 1 << '\n';
  out << "valid " << (valid ? 1 : 0) << '\n';
  return out.str();
}

namespace {

std::vector<char> membership(std::size_t n, std::span<const Vertex> s) {
  std::vector<char> in(n, 0);
  for (Vertex v : s) {
    if (v >= n) throw InputError("vertex " + std::to_string(v + 1) + " out of range");
    in[v] = 1;
  }
  return in;
}

}  // namespace

bool is_pimds(const Graph& g, std::span<const Vertex> s) {
  auto in = membership(g.size(), s);
  for (Vertex v = 0; v < g.size(); ++v) {
    std::size_t hits = 0;
    for (Vertex u : g.neighbors(v)) hits += in[u];
    if (hits != 1) return false;
  }
  return true;
}

bool is_pids(const Graph& g, std::span<const Vertex> s) {
  auto in = membership(g.size(), s);
  for (Vertex v = 0; v < g.size(); ++v) {
    std::size_t hits = in[v];
    for (Vertex u : g.neighbors(v)) hits += in[u];
    if (hits != 1) return false;
  }
  return true;
}

}  // namespace cfc
