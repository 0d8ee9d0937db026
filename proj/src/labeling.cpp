#include "hcordial/labeling.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <tuple>

#include "text_lines.hpp"

namespace hcordial {

namespace {

std::string edge_text(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

std::int64_t imbalance(std::size_t a, std::size_t b) {
  return std::llabs(static_cast<long long>(a) - static_cast<long long>(b));
}

void check_balance(std::vector<Violation>& out, const std::string& condition, std::size_t pos,
                   std::size_t neg, const std::string& what) {
  if (imbalance(pos, neg) > 1) {
    out.push_back({condition, what + " counts " + std::to_string(pos) + " vs " +
                                  std::to_string(neg) + " differ by more than 1"});
  }
}

}  // namespace

Labeling::Labeling(Graph graph, std::vector<Label> labels)
    : graph_(std::move(graph)), labels_(std::move(labels)) {
  if (labels_.size() != graph_.size()) {
    throw LabelingError("labeling has " + std::to_string(labels_.size()) + " labels for " +
                        std::to_string(graph_.size()) + " edges");
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == 0) throw LabelingError("edge " + edge_text(graph_.edge(i)) + " has label 0");
  }
}

Labeling Labeling::from_triples(std::size_t n,
                                std::span<const std::tuple<Vertex, Vertex, Label>> triples) {
  std::vector<Edge> edges;
  edges.reserve(triples.size());
  for (const auto& [u, v, l] : triples) edges.push_back({u, v});
  Graph g(n, std::move(edges));
  std::vector<Label> labels(g.size());
  for (const auto& [u, v, l] : triples) labels[*g.edge_index(u, v)] = l;
  return Labeling(std::move(g), std::move(labels));
}

Label Labeling::label(Vertex a, Vertex b) const {
  auto idx = graph_.edge_index(a, b);
  if (!idx) throw LabelingError("no edge " + edge_text({a, b}));
  return labels_[*idx];
}

LabelingKind LabelingKind::hk_cordial(int k) {
  if (k < 1) throw LabelingError("H_k-cordial needs k >= 1, got " + std::to_string(k));
  return {Family::HkCordial, k};
}

std::string LabelingKind::name() const {
  switch (family) {
    case Family::HCordial: return "h";
    case Family::SemiHCordial: return "semi-h";
    case Family::ZeroMCordial: return "zero-m";
    case Family::HkCordial: return "hk(" + std::to_string(k) + ")";
  }
  return "?";
}

LabelingKind parse_kind(std::string_view name, std::optional<int> k) {
  if (name == "h") return LabelingKind::h_cordial();
  if (name == "semi-h") return LabelingKind::semi_h_cordial();
  if (name == "zero-m") return LabelingKind::zero_m_cordial();
  if (name == "h2") return LabelingKind::hk_cordial(k.value_or(2));
  if (name == "hk") {
    if (!k) throw LabelingError("kind hk needs a value for k");
    return LabelingKind::hk_cordial(*k);
  }
  throw LabelingError("unknown labeling kind '" + std::string(name) + "'");
}

std::size_t Tally::edge_count(std::int64_t c) const {
  auto it = edges.find(c);
  return it == edges.end() ? 0 : it->second;
}

std::size_t Tally::vertex_count(std::int64_t c) const {
  auto it = vertices.find(c);
  return it == vertices.end() ? 0 : it->second;
}

std::vector<VertexValue> induced_vertex_labels(const Labeling& l) {
  const Graph& g = l.graph();
  std::vector<VertexValue> values(g.order(), 0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    values[g.edge(i).u] += l.label(i);
    values[g.edge(i).v] += l.label(i);
  }
  return values;
}

bool check_handshake(const Labeling& l) {
  auto values = induced_vertex_labels(l);
  auto vertex_sum = std::accumulate(values.begin(), values.end(), VertexValue{0});
  VertexValue edge_sum = 0;
  for (Label x : l.labels()) edge_sum += x;
  return vertex_sum == 2 * edge_sum;
}

Tally tally(const Labeling& l) {
  Tally t;
  for (Label x : l.labels()) ++t.edges[x];
  for (VertexValue v : induced_vertex_labels(l)) ++t.vertices[v];
  return t;
}

void check_alphabet(const Labeling& l, int max_label) {
  for (std::size_t i = 0; i < l.labels().size(); ++i) {
    Label x = l.label(i);
    if (x == 0 || std::abs(x) > max_label) {
      throw AlphabetError(i, l.graph().edge(i), x,
                          "edge " + edge_text(l.graph().edge(i)) + " has label " +
                              std::to_string(x) + ", outside +-1..+-" + std::to_string(max_label));
    }
  }
}

VerificationReport verify(const Labeling& l, LabelingKind kind) {
  using Family = LabelingKind::Family;
  check_alphabet(l, kind.max_label());

  VerificationReport report;
  report.kind = kind;
  report.tally = tally(l);
  const auto values = induced_vertex_labels(l);
  const Tally& t = report.tally;
  auto& out = report.violations;

  auto vertex_violation = [&](const std::string& condition, Vertex v) {
    out.push_back({condition, "vertex " + std::to_string(v) + " has f(v)=" +
                                  std::to_string(values[v])});
  };

  switch (kind.family) {
    case Family::HCordial: {
      if (values.empty()) break;
      const VertexValue k_value = std::llabs(values[0]);
      report.k_value = k_value;
      if (k_value == 0) {
        out.push_back({"positive K", "vertex 0 has f(v)=0, so K would be 0"});
      }
      for (Vertex v = 0; v < values.size(); ++v) {
        if (std::llabs(values[v]) != k_value || values[v] == 0) vertex_violation("|f(v)|=K", v);
      }
      check_balance(out, "|e(1)-e(-1)|<=1", t.edge_count(1), t.edge_count(-1), "edge label +1/-1");
      if (k_value > 0) {
        check_balance(out, "|v(K)-v(-K)|<=1", t.vertex_count(k_value), t.vertex_count(-k_value),
                      "vertex value +K/-K");
      }
      break;
    }
    case Family::SemiHCordial:
      for (Vertex v = 0; v < values.size(); ++v) {
        if (std::llabs(values[v]) > 1) vertex_violation("|f(v)|<=1", v);
      }
      check_balance(out, "|e(1)-e(-1)|<=1", t.edge_count(1), t.edge_count(-1), "edge label +1/-1");
      check_balance(out, "|v(1)-v(-1)|<=1", t.vertex_count(1), t.vertex_count(-1),
                    "vertex value +1/-1");
      break;
    case Family::ZeroMCordial:
      for (Vertex v = 0; v < values.size(); ++v) {
        if (values[v] != 0) vertex_violation("f(v)=0", v);
      }
      break;
    case Family::HkCordial:
      for (Vertex v = 0; v < values.size(); ++v) {
        auto mag = std::llabs(values[v]);
        if (mag < 1 || mag > kind.k) vertex_violation("1<=|f(v)|<=k", v);
      }
      for (int i = 1; i <= kind.k; ++i) {
        const std::string s = std::to_string(i);
        check_balance(out, "|e(" + s + ")-e(-" + s + ")|<=1", t.edge_count(i), t.edge_count(-i),
                      "edge label +" + s + "/-" + s);
        check_balance(out, "|v(" + s + ")-v(-" + s + ")|<=1", t.vertex_count(i),
                      t.vertex_count(-i), "vertex value +" + s + "/-" + s);
      }
      break;
  }
  report.valid = out.empty();
  return report;
}

std::string to_string(ObstructionCode code) {
  switch (code) {
    case ObstructionCode::Tree: return "tree";
    case ObstructionCode::EdgeVertexParity: return "edge-vertex-parity";
    case ObstructionCode::MixedDegreeParity: return "mixed-degree-parity";
    case ObstructionCode::IsolatedVertex: return "isolated-vertex";
    case ObstructionCode::EvenDegreeVertex: return "even-degree-vertex";
    case ObstructionCode::EvenOrderOddSize: return "even-order-odd-size";
    case ObstructionCode::OddEdgeCount: return "odd-edge-count";
    case ObstructionCode::NonEulerianComponent: return "non-eulerian-component";
    case ObstructionCode::OddComponentSize: return "odd-component-size";
  }
  return "?";
}

namespace {

std::optional<Obstruction> isolated_vertex(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) {
      return Obstruction{ObstructionCode::IsolatedVertex,
                         "vertex " + std::to_string(v) +
                             " is isolated, so its induced value is 0"};
    }
  }
  return std::nullopt;
}

std::optional<Obstruction> edge_vertex_parity(const Graph& g) {
  const auto n = static_cast<long long>(g.order());
  const auto m = static_cast<long long>(g.size());
  if ((m - n) % 2 != 0) {
    return Obstruction{ObstructionCode::EdgeVertexParity,
                       "m - n = " + std::to_string(m) + " - " + std::to_string(n) + " = " +
                           std::to_string(m - n) +
                           " is odd, but balanced +-1 vertex and edge counts force m - n even"};
  }
  return std::nullopt;
}

}  // namespace

std::optional<Obstruction> obstruction(const Graph& g, LabelingKind kind) {
  using Family = LabelingKind::Family;
  const std::size_t n = g.order();
  const std::size_t m = g.size();

  switch (kind.family) {
    case Family::HCordial: {
      if (is_tree(g)) {
        return Obstruction{ObstructionCode::Tree,
                           "the graph is a tree, so m - n = -1 is odd; no tree is H-cordial"};
      }
      if (auto o = edge_vertex_parity(g)) return o;
      for (Vertex v = 1; v < n; ++v) {
        if (g.degree(v) % 2 != g.degree(0) % 2) {
          return Obstruction{
              ObstructionCode::MixedDegreeParity,
              "vertices 0 and " + std::to_string(v) + " have degrees " +
                  std::to_string(g.degree(0)) + " and " + std::to_string(g.degree(v)) +
                  " of different parity, but f(v) = deg(v) (mod 2) and |f(v)| is uniform"};
        }
      }
      return isolated_vertex(g);
    }
    case Family::HkCordial: {
      if (auto o = isolated_vertex(g)) return o;
      if (kind.k == 1) {
        if (auto o = edge_vertex_parity(g)) return o;
        for (Vertex v = 0; v < n; ++v) {
          if (g.degree(v) % 2 == 0) {
            return Obstruction{ObstructionCode::EvenDegreeVertex,
                               "vertex " + std::to_string(v) + " has even degree " +
                                   std::to_string(g.degree(v)) + ", so |f(v)| = 1 is impossible"};
          }
        }
      }
      if (kind.k == 2 && n % 2 == 0 && m % 2 == 1) {
        return Obstruction{ObstructionCode::EvenOrderOddSize,
                           std::to_string(n) + " vertices is even and " + std::to_string(m) +
                               " edges is odd; an H_2-cordial graph of even order has even size"};
      }
      return std::nullopt;
    }
    case Family::SemiHCordial:
      if (m % 2 == 1) {
        std::string reason = std::to_string(m) + " edges is odd, but |f(v)| <= 1 with balanced "
                             "vertex counts forces the edge labels to sum to 0";
        if (is_tree(g)) {
          reason = "tree with an even number of vertices (" + std::to_string(n) +
                   "); semi-H-cordial trees have an odd number of vertices";
        }
        return Obstruction{ObstructionCode::OddEdgeCount, reason};
      }
      return std::nullopt;
    case Family::ZeroMCordial:
      for (const auto& comp : components(g)) {
        std::size_t edges = 0;
        for (Vertex v : comp) {
          if (g.degree(v) % 2 != 0) {
            return Obstruction{ObstructionCode::NonEulerianComponent,
                               "vertex " + std::to_string(v) + " has odd degree " +
                                   std::to_string(g.degree(v)) +
                                   ", so its component is not Eulerian"};
          }
          edges += g.degree(v);
        }
        edges /= 2;
        if (edges % 2 != 0) {
          return Obstruction{ObstructionCode::OddComponentSize,
                             "the component of vertex " + std::to_string(comp.front()) + " has " +
                                 std::to_string(edges) + " edges, an odd number"};
        }
      }
      return std::nullopt;
  }
  return std::nullopt;
}

Labeling star_transform(const Labeling& l, int k) {
  check_alphabet(l, k);
  std::vector<Label> out(l.labels().begin(), l.labels().end());
  for (Label& x : out) x = x > 0 ? k + 1 - x : -k - 1 - x;
  return Labeling(l.graph(), std::move(out));
}

Labeling negate(const Labeling& l) {
  std::vector<Label> out(l.labels().begin(), l.labels().end());
  for (Label& x : out) x = -x;
  return Labeling(l.graph(), std::move(out));
}

Labeling parse_labeling(std::string_view text) {
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
  std::vector<std::tuple<Vertex, Vertex, Label>> triples;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.tokens.size() != 3) {
      throw ParseError("line " + std::to_string(l.number) + ": edge line must be \"u v L\"");
    }
    auto label = detail::parse_int<Label>(l.tokens[2], l.number);
    if (label == 0) throw ParseError("line " + std::to_string(l.number) + ": label must be nonzero");
    triples.emplace_back(detail::parse_int<Vertex>(l.tokens[0], l.number),
                         detail::parse_int<Vertex>(l.tokens[1], l.number), label);
  }
  try {
    return Labeling::from_triples(n, triples);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string serialize_labeling(const Labeling& l) {
  std::ostringstream out;
  out << l.graph().order() << ' ' << l.graph().size() << '\n';
  for (std::size_t i = 0; i < l.graph().size(); ++i) {
    const Edge& e = l.graph().edge(i);
    out << e.u << ' ' << e.v << ' ' << l.label(i) << '\n';
  }
  return out.str();
}

}  // namespace hcordial
