#include "hcordial/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "text_lines.hpp"

namespace hcordial {

namespace {

std::string pair_text(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
  std::vector<std::size_t> parent;
};

}  // namespace

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), incident_(n) {
  for (auto& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw GraphError("edge " + pair_text(e) + " has an endpoint out of range for n=" +
                       std::to_string(n));
    }
    if (e.u == e.v) throw GraphError("edge " + pair_text(e) + " is a self-loop");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw GraphError("edge " + pair_text(*dup) + " is a duplicate");
  }
  edges_ = std::move(edges);

  for (std::size_t i = 0; i < edges_.size(); ++i) {
    incident_[edges_[i].u].push_back(i);
    incident_[edges_[i].v].push_back(i);
  }
  for (Vertex v = 0; v < n_; ++v) {
    auto& inc = incident_[v];
    std::sort(inc.begin(), inc.end(), [&](std::size_t a, std::size_t b) {
      return other_end(a, v) < other_end(b, v);
    });
  }
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> out(n_);
  for (Vertex v = 0; v < n_; ++v) out[v] = incident_[v].size();
  return out;
}

Vertex Graph::other_end(std::size_t edge_index, Vertex v) const {
  const Edge& e = edges_.at(edge_index);
  return e.u == v ? e.v : e.u;
}

std::optional<std::size_t> Graph::edge_index(Vertex a, Vertex b) const {
  if (a > b) std::swap(a, b);
  Edge key{a, b};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

Graph make_graph(std::size_t n, std::vector<Edge> edges) { return Graph(n, std::move(edges)); }

Graph complete_graph(std::size_t n) {
  if (n == 0) throw GraphError("complete graph needs at least one vertex");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

Graph wheel_graph(std::size_t rim) {
  if (rim < 3) throw GraphError("wheel needs a rim of at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= rim; ++i) {
    edges.push_back({0, i});
    edges.push_back({i, i == rim ? Vertex{1} : i + 1});
  }
  return Graph(rim + 1, std::move(edges));
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.push_back({i, static_cast<Vertex>((i + 1) % n)});
  return Graph(n, std::move(edges));
}

Graph path_graph(std::size_t n) {
  if (n == 0) throw GraphError("path needs at least one vertex");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph star_graph(std::size_t leaves) {
  if (leaves == 0) throw GraphError("star needs at least one leaf");
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return Graph(leaves + 1, std::move(edges));
}

Graph tree_from_pruefer(std::size_t n, std::span<const Vertex> sequence) {
  if (n == 0) throw GraphError("tree needs at least one vertex");
  if (n == 1) return Graph(1, {});
  if (sequence.size() != n - 2) {
    throw GraphError("Pruefer sequence for n=" + std::to_string(n) + " must have length " +
                     std::to_string(n - 2));
  }
  std::vector<std::size_t> degree(n, 1);
  for (Vertex x : sequence) {
    if (x >= n) throw GraphError("Pruefer entry " + std::to_string(x) + " out of range");
    ++degree[x];
  }
  std::vector<Edge> edges;
  // Linear-time decoding: `leaf` tracks the smallest current leaf.
  std::size_t ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  std::size_t leaf = ptr;
  for (Vertex x : sequence) {
    edges.push_back({static_cast<Vertex>(leaf), x});
    --degree[x];
    --degree[leaf];
    if (degree[x] == 1 && x < ptr) {
      leaf = x;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  Vertex last = static_cast<Vertex>(n - 1);
  edges.push_back({static_cast<Vertex>(leaf), last});
  return Graph(n, std::move(edges));
}

Graph random_tree(std::size_t n, std::mt19937_64& rng) {
  if (n <= 2) return n == 2 ? Graph(2, {{0, 1}}) : tree_from_pruefer(n, {});
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  std::vector<Vertex> seq(n - 2);
  for (auto& x : seq) x = pick(rng);
  return tree_from_pruefer(n, seq);
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> seen(g.order(), false);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = true;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      Vertex v = comp[head];
      for (std::size_t e : g.incident(v)) {
        Vertex w = g.other_end(e, v);
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() + 1 == g.order() && is_connected(g);
}

bool is_eulerian(const Graph& g) {
  if (!is_connected(g)) return false;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) % 2 != 0) return false;
  return true;
}

std::vector<Arc> closed_trail_from(const Graph& g, Vertex start) {
  std::vector<bool> used(g.size(), false);
  std::vector<std::size_t> cursor(g.order(), 0);
  struct Frame {
    Vertex at;
    std::optional<Arc> via;
  };
  std::vector<Frame> stack{{start, std::nullopt}};
  std::vector<Arc> reversed;

  while (!stack.empty()) {
    Vertex v = stack.back().at;
    auto inc = g.incident(v);
    auto& c = cursor[v];
    while (c < inc.size() && used[inc[c]]) ++c;
    if (c < inc.size()) {
      std::size_t e = inc[c];
      used[e] = true;
      Vertex w = g.other_end(e, v);
      stack.push_back({w, Arc{v, w, e}});
    } else {
      if (stack.back().via) reversed.push_back(*stack.back().via);
      stack.pop_back();
    }
  }
  std::reverse(reversed.begin(), reversed.end());
  for (std::size_t i = 0; i + 1 < reversed.size(); ++i) {
    if (reversed[i].to != reversed[i + 1].from) {
      throw GraphError("component of vertex " + std::to_string(start) +
                       " has a vertex of odd degree");
    }
  }
  return reversed;
}

std::vector<Arc> eulerian_circuit(const Graph& g) {
  auto comps = components(g);
  if (comps.size() > 1) {
    throw GraphError("not Eulerian: graph has " + std::to_string(comps.size()) + " components");
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) % 2 != 0) {
      throw GraphError("not Eulerian: vertex " + std::to_string(v) + " has odd degree " +
                       std::to_string(g.degree(v)));
    }
  }
  if (g.order() == 0) return {};
  return closed_trail_from(g, 0);
}

bool is_eulerian_circuit(const Graph& g, std::span<const Arc> walk) {
  if (walk.size() != g.size()) return false;
  std::vector<bool> used(g.size(), false);
  for (std::size_t i = 0; i < walk.size(); ++i) {
    const Arc& a = walk[i];
    if (a.edge >= g.size() || used[a.edge]) return false;
    const Edge& e = g.edge(a.edge);
    if (!((e.u == a.from && e.v == a.to) || (e.v == a.from && e.u == a.to))) return false;
    used[a.edge] = true;
    if (walk[(i + 1) % walk.size()].from != a.to) return false;
  }
  return true;
}

Path longest_path(std::size_t n, std::span<const Edge> subset) {
  if (subset.empty()) throw GraphError("longest path of an empty edge set");
  std::vector<std::vector<Vertex>> adj(n);
  DisjointSets sets(n);
  for (const Edge& e : subset) {
    if (e.u >= n || e.v >= n || e.u == e.v) {
      throw GraphError("edge " + pair_text(e) + " is not a valid edge on " + std::to_string(n) +
                       " vertices");
    }
    if (!sets.unite(e.u, e.v)) throw GraphError("edge " + pair_text(e) + " closes a cycle");
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }

  Path best;
  std::vector<Vertex> parent(n);
  std::vector<std::size_t> depth(n);
  std::vector<bool> seen(n);
  for (Vertex s = 0; s < n; ++s) {
    if (adj[s].empty()) continue;
    // A forest has one path from s to each reachable t; paths are read from
    // their smaller endpoint, so only t > s is considered.
    std::fill(seen.begin(), seen.end(), false);
    std::vector<Vertex> order{s};
    seen[s] = true;
    depth[s] = 0;
    for (std::size_t head = 0; head < order.size(); ++head) {
      Vertex v = order[head];
      for (Vertex w : adj[v]) {
        if (seen[w]) continue;
        seen[w] = true;
        parent[w] = v;
        depth[w] = depth[v] + 1;
        order.push_back(w);
      }
    }
    for (Vertex t : order) {
      if (t <= s || depth[t] < best.length()) continue;
      Path candidate;
      candidate.vertices.resize(depth[t] + 1);
      for (Vertex x = t, i = static_cast<Vertex>(depth[t]);; x = parent[x], --i) {
        candidate.vertices[i] = x;
        if (x == s) break;
      }
      if (candidate.length() > best.length() ||
          (candidate.length() == best.length() && candidate.vertices < best.vertices)) {
        best = std::move(candidate);
      }
    }
  }
  return best;
}

namespace {

bool extend_cycle(const Graph& g, std::vector<Vertex>& path, std::vector<bool>& on_path) {
  Vertex last = path.back();
  if (path.size() == g.order()) return g.has_edge(last, path.front());
  for (std::size_t e : g.incident(last)) {
    Vertex w = g.other_end(e, last);
    if (on_path[w]) continue;
    on_path[w] = true;
    path.push_back(w);
    if (extend_cycle(g, path, on_path)) return true;
    path.pop_back();
    on_path[w] = false;
  }
  return false;
}

}  // namespace

bool is_hamiltonian(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) < 2) return false;
  std::vector<Vertex> path{0};
  std::vector<bool> on_path(g.order(), false);
  on_path[0] = true;
  return extend_cycle(g, path, on_path);
}

TreeStats tree_stats(const Graph& g) {
  if (!is_tree(g)) throw GraphError("tree statistics requested for a graph that is not a tree");
  TreeStats stats;
  stats.degrees = g.degrees();
  stats.leaves = static_cast<std::size_t>(
      std::count(stats.degrees.begin(), stats.degrees.end(), std::size_t{1}));
  stats.internal = g.order() - stats.leaves;
  return stats;
}

Graph parse_graph(std::string_view text) {
  auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError("missing header line \"n m\"");
  const auto& header = lines.front();
  if (header.tokens.size() != 2) {
    throw ParseError("line " + std::to_string(header.number) + ": header must be \"n m\"");
  }
  auto n = detail::parse_int<std::size_t>(header.tokens[0], header.number);
  auto m = detail::parse_int<std::size_t>(header.tokens[1], header.number);
  if (lines.size() - 1 != m) {
    throw ParseError("header declares " + std::to_string(m) + " edges but " +
                     std::to_string(lines.size() - 1) + " edge lines follow");
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.tokens.size() != 2) {
      throw ParseError("line " + std::to_string(l.number) + ": edge line must be \"u v\"");
    }
    edges.push_back({detail::parse_int<Vertex>(l.tokens[0], l.number),
                     detail::parse_int<Vertex>(l.tokens[1], l.number)});
  }
  try {
    return Graph(n, std::move(edges));
  } catch (const GraphError& e) {
    throw ParseError(e.what());
  }
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace hcordial
