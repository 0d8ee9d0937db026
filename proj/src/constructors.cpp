#include "hcordial/constructors.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>

namespace hcordial {

namespace {

void self_check(const Labeling& l, LabelingKind kind, const std::string& who) {
  auto report = verify(l, kind);
  if (!report.valid) {
    const auto& v = report.violations.front();
    throw ConstructionBug(who + " produced an invalid " + kind.name() + " labeling: " +
                          v.condition + " fails (" + v.detail + ")");
  }
}

std::int64_t vertex_imbalance(const Labeling& l) {
  auto t = tally(l);
  return static_cast<std::int64_t>(t.vertex_count(1)) - static_cast<std::int64_t>(t.vertex_count(-1));
}

std::int64_t edge_imbalance(const Labeling& l) {
  auto t = tally(l);
  return static_cast<std::int64_t>(t.edge_count(1)) - static_cast<std::int64_t>(t.edge_count(-1));
}

// Labels of K_n, n = 0 (mod 4): the perfect matching (2i, 2i+1) alternates +1/-1
// by pair index, the rest is labeled alternately along an Euler circuit.
std::vector<Label> complete_zero_mod_four(const Graph& kn) {
  const std::size_t n = kn.order();
  std::vector<Label> labels(kn.size(), 0);
  std::vector<Edge> rest;
  for (const Edge& e : kn.edges()) {
    if (e.u % 2 == 0 && e.v == e.u + 1) {
      labels[*kn.edge_index(e.u, e.v)] = (e.u / 2) % 2 == 0 ? 1 : -1;
    } else {
      rest.push_back(e);
    }
  }
  Graph remainder(n, std::move(rest));
  Label next = 1;
  for (const Arc& arc : eulerian_circuit(remainder)) {
    labels[*kn.edge_index(arc.from, arc.to)] = next;
    next = -next;
  }
  return labels;
}

enum Role : std::uint8_t { U, V, W, A, B, C, D };

struct GadgetEdge {
  Role x;
  Role y;
  bool thick;
};

// Gadgets joining the special triple {u, v, w} to one quadruple {a, b, c, d}
// where f(a) = f(b) = +1 and f(c) = f(d) = -1 in the inner labeling. Thick
// strokes carry +1 and thin strokes -1. Each of a, b meets one thin and two
// thick edges; each of c, d two thin and one thick.
//
// First gadget, drawn positions (1mm units):
//   u (11.66,38.67)  v (27.00,30.67)  w (41.00,38.67)
//   a (4.33,3.67)    b (19.33,3.67)   c (34.33,3.67)   d (49.33,3.67)
// It also labels the triangle uvw, leaving u at +2 and v, w at -2.
constexpr std::array<GadgetEdge, 15> kFirstGadget{{
    {U, W, false}, {W, D, false}, {C, W, false}, {W, A, false},
    {U, V, false}, {V, B, false}, {C, V, false}, {V, D, false},
    {V, W, true},  {W, B, true},  {B, U, true},  {U, A, true},
    {A, V, true},  {U, C, true},  {D, U, true},
}};

// Gadget for every further quadruple, drawn positions:
//   u (11.33,38.67)  v (26.67,30.67)  w (40.67,38.67)
//   a (4.00,3.67)    b (19.00,3.67)   c (34.00,3.67)   d (49.00,3.67)
// Each of u, v, w meets two thick and two thin edges, so their values are unchanged.
constexpr std::array<GadgetEdge, 12> kNextGadget{{
    {U, C, false}, {U, D, false}, {V, B, false}, {V, D, false}, {W, C, false}, {W, A, false},
    {U, B, true},  {U, A, true},  {V, A, true},  {V, C, true},  {W, D, true},  {W, B, true},
}};

std::vector<Label> complete_three_mod_four(const Graph& kn) {
  const std::size_t n = kn.order();
  const Graph inner_graph = complete_graph(n - 3);
  const auto inner_labels = complete_zero_mod_four(inner_graph);
  const auto inner_values = induced_vertex_labels(Labeling(inner_graph, inner_labels));

  std::vector<Label> labels(kn.size(), 0);
  for (std::size_t i = 0; i < inner_graph.size(); ++i) {
    const Edge& e = inner_graph.edge(i);
    labels[*kn.edge_index(e.u, e.v)] = inner_labels[i];
  }

  std::vector<Vertex> plus, minus;
  for (Vertex x = 0; x < inner_values.size(); ++x) (inner_values[x] > 0 ? plus : minus).push_back(x);
  if (plus.size() != minus.size() || plus.size() % 2 != 0) {
    throw ConstructionBug("inner labeling of K_" + std::to_string(n - 3) +
                          " does not split into +1/-1 quadruples");
  }

  const auto triple = std::array<Vertex, 3>{static_cast<Vertex>(n - 3), static_cast<Vertex>(n - 2),
                                            static_cast<Vertex>(n - 1)};
  const std::size_t quadruples = plus.size() / 2;
  for (std::size_t q = 0; q < quadruples; ++q) {
    const std::array<Vertex, 7> at{triple[0],      triple[1],     triple[2],    plus[2 * q],
                                   plus[2 * q + 1], minus[2 * q], minus[2 * q + 1]};
    auto apply = [&](const auto& gadget) {
      for (const GadgetEdge& g : gadget) {
        auto idx = *kn.edge_index(at[g.x], at[g.y]);
        if (labels[idx] != 0) throw ConstructionBug("gadget relabels an edge");
        labels[idx] = g.thick ? 1 : -1;
      }
    };
    if (q == 0) {
      apply(kFirstGadget);
    } else {
      apply(kNextGadget);
    }
  }
  return labels;
}

}  // namespace

Labeling semi_h_tree(const Graph& tree, AlgorithmTrace* trace) {
  if (!is_tree(tree)) throw PreconditionError("semi-H-cordial construction needs a tree");
  if (tree.order() % 2 == 0) {
    throw PreconditionError("a tree is semi-H-cordial only with an odd number of vertices; this one has " +
                                std::to_string(tree.order()),
                            obstruction(tree, LabelingKind::semi_h_cordial()));
  }

  const std::size_t n = tree.order();
  std::vector<Label> labels(tree.size(), 0);
  std::vector<bool> remaining(tree.size(), true);
  std::vector<VertexValue> partial(n, 0);
  std::vector<std::size_t> unlabeled = tree.degrees();
  std::size_t left = tree.size();
  int a = 1;
  std::int64_t sum = 0;

  while (left > 0) {
    std::vector<Edge> subset;
    for (std::size_t i = 0; i < tree.size(); ++i)
      if (remaining[i]) subset.push_back(tree.edge(i));
    Path path = longest_path(n, subset);

    TreeStep step;
    step.a_before = a;
    for (std::size_t i = 1; i <= path.length(); ++i) {
      const Vertex x = path.vertices[i - 1];
      const Vertex y = path.vertices[i];
      const std::size_t e = *tree.edge_index(x, y);
      const Label value = i % 2 == 1 ? -a : a;
      labels[e] = value;
      remaining[e] = false;
      --left;
      sum += value;
      partial[x] += value;
      partial[y] += value;
      --unlabeled[x];
      --unlabeled[y];
    }
    a = sum != 0 ? static_cast<int>(sum) : 1;
    if (a != 1 && a != -1) {
      throw ConstructionBug("tree algorithm left a = " + std::to_string(sum) + " outside {-1, +1}");
    }
    if (trace) {
      step.path = std::move(path);
      step.a_after = a;
      step.running_sum = sum;
      step.partial_values = partial;
      step.unlabeled_degree = unlabeled;
      trace->steps.push_back(std::move(step));
    }
  }

  Labeling result(tree, std::move(labels));
  self_check(result, LabelingKind::semi_h_cordial(), "semi_h_tree");
  if (vertex_imbalance(result) != 0) {
    throw ConstructionBug("semi_h_tree left v(1) != v(-1)");
  }
  return result;
}

Labeling near_semi_h_tree(const Graph& tree) {
  if (!is_tree(tree)) throw PreconditionError("construction needs a tree");
  if (tree.order() % 2 == 1) {
    throw PreconditionError("tree has an odd number of vertices; use semi_h_tree instead");
  }
  const std::size_t n = tree.order();
  Vertex leaf = 0;
  while (tree.degree(leaf) != 1) ++leaf;

  std::vector<Edge> edges(tree.edges().begin(), tree.edges().end());
  edges.push_back({leaf, static_cast<Vertex>(n)});
  const Graph augmented(n + 1, std::move(edges));
  const Labeling full = semi_h_tree(augmented);

  std::vector<Label> labels(tree.size());
  for (std::size_t i = 0; i < tree.size(); ++i) {
    labels[i] = full.label(tree.edge(i).u, tree.edge(i).v);
  }
  Labeling result(tree, std::move(labels));

  for (VertexValue value : induced_vertex_labels(result)) {
    if (std::llabs(value) > 1) throw ConstructionBug("near_semi_h_tree left |f(v)| > 1");
  }
  if (std::llabs(edge_imbalance(result)) != 1) {
    throw ConstructionBug("near_semi_h_tree: |e(1)-e(-1)| != 1");
  }
  if (std::llabs(vertex_imbalance(result)) != 2) {
    throw ConstructionBug("near_semi_h_tree: |v(1)-v(-1)| != 2");
  }
  return result;
}

Labeling zero_m(const Graph& g) {
  if (auto o = obstruction(g, LabelingKind::zero_m_cordial())) {
    throw PreconditionError("no zero-M-cordial labeling: " + o->reason, o);
  }
  std::vector<Label> labels(g.size(), 0);
  for (const auto& comp : components(g)) {
    Label next = 1;
    for (const Arc& arc : closed_trail_from(g, comp.front())) {
      labels[arc.edge] = next;
      next = -next;
    }
  }
  Labeling result(g, std::move(labels));
  self_check(result, LabelingKind::zero_m_cordial(), "zero_m");
  return result;
}

Labeling h_cordial_complete(std::size_t n) {
  if (n == 0) throw PreconditionError("K_n needs n >= 1");
  const Graph kn = complete_graph(n);
  if (n % 4 == 1 || n % 4 == 2) {
    auto o = obstruction(kn, LabelingKind::h_cordial());
    throw PreconditionError("K_" + std::to_string(n) + " is not H-cordial: " + o->reason, o);
  }
  if (n == 3) {
    throw PreconditionError(
        "K_3 is not H-cordial: |f(v)| = K > 0 forces both edges at each vertex to agree, so all "
        "three edges share one sign and the edge counts differ by 3");
  }
  Labeling result(kn, n % 4 == 0 ? complete_zero_mod_four(kn) : complete_three_mod_four(kn));
  self_check(result, LabelingKind::h_cordial(), "h_cordial_complete");
  return result;
}

Labeling h_cordial_wheel(std::size_t rim) {
  if (rim < 3) throw PreconditionError("wheel needs a rim of at least 3 vertices");
  const Graph w = wheel_graph(rim);
  if (rim % 2 == 0) {
    auto o = obstruction(w, LabelingKind::h_cordial());
    throw PreconditionError("W_" + std::to_string(rim) + " is not H-cordial: " + o->reason, o);
  }
  std::vector<Label> labels(w.size(), 0);
  for (Vertex i = 1; i <= rim; ++i) {
    const Vertex next = i == rim ? 1 : i + 1;
    labels[*w.edge_index(0, i)] = (i % 2 == 0 || i == 1) ? 1 : -1;
    labels[*w.edge_index(i, next)] = i % 2 == 0 ? 1 : -1;
  }
  Labeling result(w, std::move(labels));
  self_check(result, LabelingKind::h_cordial(), "h_cordial_wheel");

  const auto values = induced_vertex_labels(result);
  for (Vertex i = 0; i <= rim; ++i) {
    const VertexValue expected = (i % 2 == 0) ? 1 : -1;
    if (values[i] != expected) {
      throw ConstructionBug("h_cordial_wheel: f(v_" + std::to_string(i) + ") = " +
                            std::to_string(values[i]));
    }
  }
  return result;
}

Labeling h2_cordial_wheel(std::size_t rim) {
  if (rim < 3) throw PreconditionError("wheel needs a rim of at least 3 vertices");
  if (rim % 2 == 1) return h_cordial_wheel(rim);

  const Graph w = wheel_graph(rim);
  std::vector<Label> labels(w.size(), 0);
  for (Vertex i = 1; i <= rim; ++i) {
    const Vertex next = i == rim ? 1 : i + 1;
    const Label alternating = i % 2 == 0 ? 1 : -1;
    labels[*w.edge_index(i, next)] = alternating;
    labels[*w.edge_index(0, i)] = alternating;
  }
  // With +2 here the hub would sum to 3.
  labels[*w.edge_index(0, 1)] = -2;

  Labeling result(w, std::move(labels));
  self_check(result, LabelingKind::hk_cordial(2), "h2_cordial_wheel");
  return result;
}

Labeling h2_cordial_complete(std::size_t n) {
  if (n == 0) throw PreconditionError("K_n needs n >= 1");
  if (n % 4 == 2) {
    const Graph kn = complete_graph(n);
    auto o = obstruction(kn, LabelingKind::hk_cordial(2));
    throw PreconditionError("K_" + std::to_string(n) + " is not H_2-cordial: " + o->reason, o);
  }
  if (n % 4 == 1 || n == 3) {
    throw PreconditionError("no H_2-cordial construction for K_" + std::to_string(n) +
                            "; only n = 0, 3 (mod 4) with n != 3 are covered");
  }
  Labeling result = h_cordial_complete(n);
  self_check(result, LabelingKind::hk_cordial(2), "h2_cordial_complete");
  return result;
}

}  // namespace hcordial
