#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hcordial {

using Vertex = std::uint32_t;

/// Undirected edge. Inside a Graph the endpoints are always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// One step of a walk: traverse `edge` (an index into Graph::edges()) from `from` to `to`.
struct Arc {
  Vertex from = 0;
  Vertex to = 0;
  std::size_t edge = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// The edge list is normalized: every edge has u < v and the list is strictly
/// increasing, so two graphs with the same edge set compare equal. Edge indices
/// (positions in edges()) are stable and are what labelings align with.
class Graph {
 public:
  Graph() = default;

  /// Normalizes and validates. Throws GraphError naming the offending pair on a
  /// self-loop, duplicate edge or out-of-range endpoint.
  Graph(std::size_t n, std::vector<Edge> edges);

  std::size_t order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(std::size_t index) const { return edges_.at(index); }

  std::size_t degree(Vertex v) const { return incident_.at(v).size(); }
  std::vector<std::size_t> degrees() const;

  /// Edge indices incident to v, ordered by the neighbor's id.
  std::span<const std::size_t> incident(Vertex v) const { return incident_.at(v); }
  Vertex other_end(std::size_t edge_index, Vertex v) const;

  std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;
  bool has_edge(Vertex a, Vertex b) const { return edge_index(a, b).has_value(); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> incident_;
};

Graph make_graph(std::size_t n, std::vector<Edge> edges);

// Families. Wheel and star take the rim size / leaf count; the hub is vertex 0.
Graph complete_graph(std::size_t n);
Graph wheel_graph(std::size_t rim);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph star_graph(std::size_t leaves);

/// Decodes a Prüfer sequence of length n-2 over 0..n-1 into a labeled tree on n vertices.
Graph tree_from_pruefer(std::size_t n, std::span<const Vertex> sequence);
/// Uniformly random labeled tree on n vertices.
Graph random_tree(std::size_t n, std::mt19937_64& rng);

std::vector<std::vector<Vertex>> components(const Graph& g);
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

/// Connected (isolated vertices included) and every degree even.
bool is_eulerian(const Graph& g);

/// Closed walk through every edge of g exactly once, starting at vertex 0 and
/// always taking the smallest-indexed unused neighbor. Throws GraphError naming
/// the failed condition when g is not Eulerian.
std::vector<Arc> eulerian_circuit(const Graph& g);

/// Same construction restricted to the component containing `start`. Every
/// vertex in that component must have even degree.
std::vector<Arc> closed_trail_from(const Graph& g, Vertex start);

/// True when `walk` uses every edge of g once, is connected step to step and closed.
bool is_eulerian_circuit(const Graph& g, std::span<const Arc> walk);

struct Path {
  std::vector<Vertex> vertices;

  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  friend bool operator==(const Path&, const Path&) = default;
};

/// Longest path in the forest spanned by `subset` (vertices < n).
///
/// Ties are broken by the lexicographically smallest vertex sequence, each path
/// read from its smaller endpoint. Throws GraphError when the subset is empty or
/// contains a cycle.
Path longest_path(std::size_t n, std::span<const Edge> subset);

/// Exhaustive backtracking search for a spanning cycle. Graphs with fewer than
/// three vertices are reported as non-Hamiltonian.
bool is_hamiltonian(const Graph& g);

struct TreeStats {
  std::size_t leaves = 0;
  std::size_t internal = 0;
  std::vector<std::size_t> degrees;
};

TreeStats tree_stats(const Graph& g);

/// Text format: first non-comment line "n m", then m lines "u v". Lines whose
/// first non-blank character is '#' and blank lines are ignored.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

}  // namespace hcordial
