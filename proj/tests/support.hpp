#pragma once

// Reference implementations used only by tests. They share no code with the
// library beyond the Graph container and re-derive every definition from
// scratch, so they can act as independent oracles.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hcordial/graph.hpp"
#include "hcordial/labeling.hpp"

namespace testsupport {

using hcordial::Edge;
using hcordial::Graph;
using hcordial::Label;
using hcordial::LabelingKind;
using hcordial::Vertex;

inline std::vector<std::pair<Vertex, Vertex>> all_pairs(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  return pairs;
}

inline Graph graph_from_mask(std::size_t n, std::uint32_t mask) {
  const auto pairs = all_pairs(n);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (mask >> i & 1u) edges.push_back({pairs[i].first, pairs[i].second});
  return Graph(n, edges);
}

inline bool connected_mask(std::size_t n, std::uint32_t mask) {
  const auto pairs = all_pairs(n);
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  std::size_t parts = n;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (!(mask >> i & 1u)) continue;
    auto a = find(pairs[i].first), b = find(pairs[i].second);
    if (a != b) parent[a] = b, --parts;
  }
  return parts == 1;
}

// Smallest edge mask over all vertex relabelings.
inline std::uint32_t canonical_mask(std::size_t n, std::uint32_t mask) {
  const auto pairs = all_pairs(n);
  std::vector<std::vector<std::size_t>> index(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    index[pairs[i].first][pairs[i].second] = index[pairs[i].second][pairs[i].first] = i;
  }
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint32_t best = mask;
  do {
    std::uint32_t image = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1u) image |= 1u << index[perm[pairs[i].first]][perm[pairs[i].second]];
    best = std::min(best, image);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Connected graphs on 1..max_n vertices, one per isomorphism class.
inline std::vector<Graph> connected_graphs_up_to(std::size_t max_n) {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    const std::size_t pairs = n * (n - 1) / 2;
    std::set<std::uint32_t> seen;
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
      if (!connected_mask(n, mask)) continue;
      if (seen.insert(canonical_mask(n, mask)).second) out.push_back(graph_from_mask(n, mask));
    }
  }
  return out;
}

inline std::vector<std::int64_t> sums(const Graph& g, const std::vector<Label>& labels) {
  std::vector<std::int64_t> f(g.order(), 0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    f[g.edge(i).u] += labels[i];
    f[g.edge(i).v] += labels[i];
  }
  return f;
}

template <class Values>
std::int64_t count_of(const Values& values, std::int64_t c) {
  return std::count(values.begin(), values.end(), c);
}

/// Direct reading of the four definitions.
inline bool naive_valid(const Graph& g, const std::vector<Label>& labels, const LabelingKind& kind) {
  const auto f = sums(g, labels);
  const int k = kind.max_label();
  for (Label x : labels)
    if (x == 0 || std::abs(x) > k) return false;
  auto edge_balanced = [&](int i) { return std::abs(count_of(labels, i) - count_of(labels, -i)) <= 1; };
  auto vertex_balanced = [&](std::int64_t i) { return std::abs(count_of(f, i) - count_of(f, -i)) <= 1; };
  switch (kind.family) {
    case LabelingKind::Family::HCordial: {
      if (f.empty()) return false;
      const std::int64_t big_k = std::llabs(f[0]);
      if (big_k == 0) return false;
      for (auto x : f)
        if (std::llabs(x) != big_k) return false;
      return edge_balanced(1) && vertex_balanced(big_k);
    }
    case LabelingKind::Family::SemiHCordial:
      for (auto x : f)
        if (std::llabs(x) > 1) return false;
      return edge_balanced(1) && vertex_balanced(1);
    case LabelingKind::Family::ZeroMCordial:
      return std::all_of(f.begin(), f.end(), [](std::int64_t x) { return x == 0; });
    case LabelingKind::Family::HkCordial:
      for (auto x : f)
        if (x == 0 || std::llabs(x) > k) return false;
      for (int i = 1; i <= k; ++i)
        if (!edge_balanced(i) || !vertex_balanced(i)) return false;
      return true;
  }
  return false;
}

/// Every labeling over the kind's alphabet, in lexicographic order with values
/// ascending -k..-1, +1..+k. Calls visit(labels); stops when it returns false.
inline void for_each_assignment(std::size_t m, int k, const std::function<bool(const std::vector<Label>&)>& visit) {
  std::vector<Label> alphabet;
  for (int x = -k; x <= k; ++x)
    if (x != 0) alphabet.push_back(x);
  std::vector<std::size_t> digit(m, 0);
  std::vector<Label> labels(m, alphabet.front());
  while (true) {
    if (!visit(labels)) return;
    std::size_t i = m;
    while (i > 0) {
      --i;
      if (++digit[i] < alphabet.size()) {
        labels[i] = alphabet[digit[i]];
        break;
      }
      digit[i] = 0;
      labels[i] = alphabet.front();
      if (i == 0) return;
    }
    if (m == 0) return;
  }
}

inline std::vector<std::vector<Label>> naive_all(const Graph& g, const LabelingKind& kind) {
  std::vector<std::vector<Label>> out;
  for_each_assignment(g.size(), kind.max_label(), [&](const std::vector<Label>& labels) {
    if (naive_valid(g, labels, kind)) out.push_back(labels);
    return true;
  });
  return out;
}

inline bool naive_exists(const Graph& g, const LabelingKind& kind) {
  bool found = false;
  for_each_assignment(g.size(), kind.max_label(), [&](const std::vector<Label>& labels) {
    found = naive_valid(g, labels, kind);
    return !found;
  });
  return found;
}

inline std::vector<Label> random_labels(std::size_t m, int k, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> mag(1, k);
  std::bernoulli_distribution sign(0.5);
  std::vector<Label> labels(m);
  for (auto& x : labels) x = mag(rng) * (sign(rng) ? 1 : -1);
  return labels;
}

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution keep(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (keep(rng)) edges.push_back({u, v});
  return Graph(n, edges);
}

inline Graph random_connected_graph(std::size_t n, double p, std::mt19937_64& rng) {
  while (true) {
    Graph g = random_graph(n, p, rng);
    if (hcordial::is_connected(g)) return g;
  }
}

// AHU encoding of a free tree: minimum over its centers of the rooted encoding.
inline std::string tree_code(const Graph& t) {
  const std::size_t n = t.order();
  if (n == 1) return "()";
  std::vector<std::vector<Vertex>> adj(n);
  for (const Edge& e : t.edges()) adj[e.u].push_back(e.v), adj[e.v].push_back(e.u);
  std::vector<std::size_t> deg(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v)
    if ((deg[v] = adj[v].size()) <= 1) layer.push_back(v);
  std::size_t left = n;
  while (left > 2) {
    left -= layer.size();
    std::vector<Vertex> next;
    for (Vertex v : layer)
      for (Vertex w : adj[v])
        if (--deg[w] == 1) next.push_back(w);
    layer = next;
  }
  std::function<std::string(Vertex, Vertex)> encode = [&](Vertex v, Vertex parent) {
    std::vector<std::string> kids;
    for (Vertex w : adj[v])
      if (w != parent) kids.push_back(encode(w, v));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (auto& k : kids) s += k;
    return s + ")";
  };
  std::string best;
  for (Vertex c : layer) {
    std::string code = encode(c, c);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

/// One tree per isomorphism class on n vertices, from the full Pruefer space.
inline std::vector<Graph> all_trees(std::size_t n) {
  std::map<std::string, Graph> classes;
  if (n <= 2) {
    Graph t = hcordial::tree_from_pruefer(n, {});
    classes.emplace(tree_code(t), t);
  } else {
    std::vector<Vertex> seq(n - 2, 0);
    while (true) {
      Graph t = hcordial::tree_from_pruefer(n, seq);
      classes.emplace(tree_code(t), t);
      std::size_t i = 0;
      while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
      if (i == seq.size()) break;
    }
  }
  std::vector<Graph> out;
  for (auto& [code, t] : classes) out.push_back(t);
  return out;
}

inline bool brute_hamiltonian(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 3) return false;
  std::vector<Vertex> rest(n - 1);
  std::iota(rest.begin(), rest.end(), 1);
  do {
    if (!g.has_edge(0, rest.front()) || !g.has_edge(rest.back(), 0)) continue;
    bool ok = true;
    for (std::size_t i = 0; ok && i + 1 < rest.size(); ++i) ok = g.has_edge(rest[i], rest[i + 1]);
    if (ok) return true;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return false;
}

inline std::vector<std::size_t> bfs_distances(std::size_t n, const std::vector<Edge>& edges, Vertex s) {
  std::vector<std::vector<Vertex>> adj(n);
  for (const Edge& e : edges) adj[e.u].push_back(e.v), adj[e.v].push_back(e.u);
  std::vector<std::size_t> dist(n, SIZE_MAX);
  std::queue<Vertex> q;
  dist[s] = 0;
  q.push(s);
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    for (Vertex w : adj[v])
      if (dist[w] == SIZE_MAX) dist[w] = dist[v] + 1, q.push(w);
  }
  return dist;
}

/// Diameter of a tree by two breadth-first sweeps.
inline std::size_t tree_diameter(const Graph& t) {
  const std::vector<Edge> edges(t.edges().begin(), t.edges().end());
  auto d0 = bfs_distances(t.order(), edges, 0);
  Vertex far = static_cast<Vertex>(std::max_element(d0.begin(), d0.end()) - d0.begin());
  auto d1 = bfs_distances(t.order(), edges, far);
  return *std::max_element(d1.begin(), d1.end());
}

}  // namespace testsupport
