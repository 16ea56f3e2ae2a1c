#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dsq {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1. Immutable once built; edges are
/// stored normalized (u < v) and sorted lexicographically.
class Graph {
 public:
  /// Throws ContractError on n < 1, self-loops or out-of-range endpoints.
  /// Duplicate edges (in either orientation) collapse to one.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges) : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool has_edge(Vertex u, Vertex v) const;

  /// Degrees indexed by vertex (unsorted).
  std::vector<int> degrees() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

enum class FamilyKind { Complete, Cycle, Path, Star, CompleteBipartite };

struct FamilySpec {
  FamilyKind kind;
  int n;
  int a = 0;  ///< first part size, complete-bipartite only
};

std::string to_string(FamilyKind kind);
FamilyKind family_kind_from_string(const std::string& name);
/// Short label such as "K5", "C7", "P3", "S4", "K3,3".
std::string family_label(const FamilySpec& spec);

/// Edge-list text: first non-comment line is n, then one "u v" per line; '#'
/// comments run to end of line. Throws ParseError naming the line.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
/// Inverse of parse_edge_list: "n\n" then "u v\n" per edge, u < v, lexicographic.
std::string serialize_edge_list(const Graph& g);

Graph generate_family(const FamilySpec& spec);

/// Erdős–Rényi G(n, p) drawn from Xoshiro256(seed), redrawn until connected.
/// Each pair (u, v), u < v, is visited in lexicographic order and kept when a
/// uniform draw is below p. Throws ContractError for n < 2 or p outside (0, 1],
/// std::runtime_error("connectivity resample cap") after 10000 draws.
Graph random_connected(int n, double p, std::uint64_t seed);

bool is_connected(const Graph& g);

/// Degrees sorted nonincreasing.
std::vector<int> degree_sequence(const Graph& g);

}  // namespace dsq
