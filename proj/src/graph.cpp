#include "dsq/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <istream>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "dsq/error.hpp"
#include "dsq/rng.hpp"

namespace dsq {

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 1) throw ContractError("graph order must be at least 1");
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw ContractError("endpoint out of range");
    if (u == v) throw ContractError("self-loop");
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  adjacency_.resize(static_cast<std::size_t>(n));
  for (auto [u, v] : edges_) {
    adjacency_[static_cast<std::size_t>(u)].push_back(v);
    adjacency_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& list = neighbors(u);
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<int> Graph::degrees() const {
  std::vector<int> out(adjacency_.size());
  for (std::size_t v = 0; v < adjacency_.size(); ++v) out[v] = static_cast<int>(adjacency_[v].size());
  return out;
}

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Complete: return "complete";
    case FamilyKind::Cycle: return "cycle";
    case FamilyKind::Path: return "path";
    case FamilyKind::Star: return "star";
    case FamilyKind::CompleteBipartite: return "complete-bipartite";
  }
  return "?";
}

FamilyKind family_kind_from_string(const std::string& name) {
  for (auto kind : {FamilyKind::Complete, FamilyKind::Cycle, FamilyKind::Path, FamilyKind::Star,
                    FamilyKind::CompleteBipartite}) {
    if (to_string(kind) == name) return kind;
  }
  throw ContractError("unknown family kind '" + name + "'");
}

std::string family_label(const FamilySpec& spec) {
  const auto n = std::to_string(spec.n);
  switch (spec.kind) {
    case FamilyKind::Complete: return "K" + n;
    case FamilyKind::Cycle: return "C" + n;
    case FamilyKind::Path: return "P" + n;
    case FamilyKind::Star: return "S" + n;
    case FamilyKind::CompleteBipartite:
      return "K" + std::to_string(spec.a) + "," + std::to_string(spec.n - spec.a);
  }
  return "?";
}

namespace {

std::string_view strip_comment(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  return line;
}

std::vector<long long> parse_integers(std::string_view line, int line_no) {
  std::vector<long long> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    if (pos == line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
    long long value = 0;
    auto token = line.substr(pos, end - pos);
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw ParseError("malformed integer '" + std::string(token) + "'", line_no);
    }
    out.push_back(value);
    pos = end;
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::string raw;
  int line_no = 0;
  long long n = -1;
  std::vector<Edge> edges;
  while (std::getline(in, raw)) {
    ++line_no;
    auto values = parse_integers(strip_comment(raw), line_no);
    if (values.empty()) continue;
    if (n < 0) {
      if (values.size() != 1) throw ParseError("expected vertex count", line_no);
      n = values[0];
      if (n < 1) throw ParseError("vertex count must be at least 1", line_no);
      if (n > 1'000'000) throw ParseError("vertex count too large", line_no);
      continue;
    }
    if (values.size() != 2) throw ParseError("expected two endpoints", line_no);
    auto u = values[0];
    auto v = values[1];
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("endpoint out of range", line_no);
    if (u == v) throw ParseError("self-loop", line_no);
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (n < 0) throw ParseError("missing vertex count", line_no + 1);
  return Graph(static_cast<int>(n), edges);
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

std::string serialize_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Graph generate_family(const FamilySpec& spec) {
  const int n = spec.n;
  if (n < 1) throw ContractError("family order must be at least 1");
  std::vector<Edge> edges;
  switch (spec.kind) {
    case FamilyKind::Complete:
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      break;
    case FamilyKind::Cycle:
      if (n < 3) throw ContractError("cycle needs n >= 3");
      for (int u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
      break;
    case FamilyKind::Path:
      for (int u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
      break;
    case FamilyKind::Star:
      for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
      break;
    case FamilyKind::CompleteBipartite:
      if (spec.a < 1 || spec.a > n - 1) throw ContractError("complete-bipartite needs 1 <= a <= n-1");
      for (int u = 0; u < spec.a; ++u)
        for (int v = spec.a; v < n; ++v) edges.emplace_back(u, v);
      break;
  }
  return Graph(n, edges);
}

Graph random_connected(int n, double p, std::uint64_t seed) {
  if (n < 2) throw ContractError("random_connected needs n >= 2");
  if (!(p > 0.0 && p <= 1.0)) throw ContractError("edge probability must lie in (0, 1]");
  Xoshiro256 rng(seed);
  constexpr int kResampleCap = 10000;
  for (int attempt = 0; attempt < kResampleCap; ++attempt) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.next_double() < p) edges.emplace_back(u, v);
    Graph g(n, edges);
    if (is_connected(g)) return g;
  }
  throw std::runtime_error("connectivity resample cap");
}

bool is_connected(const Graph& g) {
  const int n = g.order();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::queue<Vertex> frontier;
  frontier.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!frontier.empty()) {
    auto u = frontier.front();
    frontier.pop();
    for (auto v : g.neighbors(u)) {
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        ++reached;
        frontier.push(v);
      }
    }
  }
  return reached == n;
}

std::vector<int> degree_sequence(const Graph& g) {
  auto degrees = g.degrees();
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  return degrees;
}

}  // namespace dsq
