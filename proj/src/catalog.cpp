#include "hcordial/catalog.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "hcordial/oracle.hpp"

namespace hcordial {

namespace {

using Triple = std::tuple<Vertex, Vertex, Label>;

ClaimResult result(bool pass, std::string detail) { return {pass, std::move(detail)}; }

std::string join_values(const std::vector<VertexValue>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(values[i]);
  }
  return out + ")";
}

Claim all_degrees_odd() {
  return {"all degrees odd", [](const CatalogEntry& e, const CatalogOptions&) {
            auto degrees = e.graph.degrees();
            bool ok = std::all_of(degrees.begin(), degrees.end(),
                                  [](std::size_t d) { return d % 2 == 1; });
            std::string detail = "degrees";
            for (auto d : degrees) detail += " " + std::to_string(d);
            return result(ok, detail);
          }};
}

Claim order_mod_four(std::size_t residue) {
  return {"n = " + std::to_string(residue) + " (mod 4)",
          [residue](const CatalogEntry& e, const CatalogOptions&) {
            return result(e.graph.order() % 4 == residue,
                          "n = " + std::to_string(e.graph.order()));
          }};
}

Claim internal_count(std::size_t expected, const std::string& refutes) {
  return {"n_I = " + std::to_string(expected),
          [expected, refutes](const CatalogEntry& e, const CatalogOptions&) {
            auto stats = tree_stats(e.graph);
            return result(stats.internal == expected,
                          "n_I = " + std::to_string(stats.internal) + " (" + refutes + ")");
          }};
}

Claim labeling_valid(const std::string& label) {
  return {"published labeling is " + label + "-valid",
          [](const CatalogEntry& e, const CatalogOptions&) {
            auto report = verify(*e.labeling, *e.labeling_kind);
            std::string detail = report.valid ? "valid" : report.violations.front().detail;
            if (report.k_value) detail += ", K = " + std::to_string(*report.k_value);
            return result(report.valid, detail);
          }};
}

// The drawn points are given as (x, y) picture coordinates next to each vertex id.

CatalogEntry lemma23_left() {
  CatalogEntry e;
  e.name = "lemma23-left";
  e.description =
      "Star K_{1,5}: six vertices, all of odd degree, one internal vertex. With n = 2 (mod 4) "
      "the claimed rule would force n_I even.";
  e.provenance = "left tree of the pair of odd-degree counterexample trees";
  // 0 (43.33,34.67) center   1 (43.33,78.67)   2 (83.33,49.67)
  // 3 (68.33,2.67)           4 (18.33,2.67)    5 (3.33,49.67)
  e.graph = make_graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
  e.claims = {
      {"is a tree", [](const CatalogEntry& c, const CatalogOptions&) {
         return result(is_tree(c.graph), "m = " + std::to_string(c.graph.size()));
       }},
      all_degrees_odd(),
      order_mod_four(2),
      internal_count(1, "odd, where the rule predicts even"),
  };
  return e;
}

CatalogEntry lemma23_right() {
  CatalogEntry e;
  e.name = "lemma23-right";
  e.description =
      "Eight-vertex tree: a degree-5 center, one of whose neighbors carries two further leaves. "
      "All degrees odd, n = 0 (mod 4), two internal vertices where the claimed rule wants an odd "
      "count.";
  e.provenance = "right tree of the pair of odd-degree counterexample trees";
  // 0 (156.66,34.67) center  1 (156.66,78.67)  2 (196.66,49.67)  3 (181.66,2.67)
  // 4 (131.66,2.67)          5 (116.66,49.67)  6 (224.66,22.00)  7 (233.33,45.34)
  e.graph = make_graph(8, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {2, 6}, {2, 7}});
  e.claims = {
      {"is a tree", [](const CatalogEntry& c, const CatalogOptions&) {
         return result(is_tree(c.graph), "m = " + std::to_string(c.graph.size()));
       }},
      all_degrees_odd(),
      order_mod_four(0),
      internal_count(2, "even, where the rule predicts odd"),
  };
  return e;
}

CatalogEntry thm31_refutation() {
  CatalogEntry e;
  e.name = "thm31-refutation";
  e.description =
      "Triangle with an apex vertex joined to an inner vertex, plus two pendants on the apex. "
      "Thin edges -1, thick edges +1. The labeling is H-cordial with an odd number (3) of "
      "vertices labeled -1.";
  e.provenance = "connected H-cordial graph with an odd count of -1 vertices";
  // 0 (28.33,43.33) apex      1 (3.33,3.33) base    2 (53.33,3.33) base
  // 3 (28.33,18.33) inner     4 (8.33,58.33)        5 (48.33,58.33)
  const std::vector<Triple> triples{
      {0, 1, -1}, {1, 2, -1}, {0, 2, -1}, {0, 3, -1},  // thin
      {1, 3, 1},  {2, 3, 1},  {0, 4, 1},  {0, 5, 1},   // thick
  };
  e.labeling = Labeling::from_triples(6, triples);
  e.graph = e.labeling->graph();
  e.labeling_kind = LabelingKind::h_cordial();
  e.claims = {
      {"is connected", [](const CatalogEntry& c, const CatalogOptions&) {
         return result(is_connected(c.graph), std::to_string(components(c.graph).size()) +
                                                  " component(s)");
       }},
      labeling_valid("H-cordial"),
      {"v(-1) is odd", [](const CatalogEntry& c, const CatalogOptions&) {
         auto t = tally(*c.labeling);
         return result(t.vertex_count(-1) % 2 == 1,
                       "v(-1) = " + std::to_string(t.vertex_count(-1)) +
                           ", v(1) = " + std::to_string(t.vertex_count(1)) + ", f = " +
                           join_values(induced_vertex_labels(*c.labeling)));
       }},
  };
  return e;
}

CatalogEntry cubic_non_hamiltonian() {
  CatalogEntry e;
  e.name = "cubic-non-hamiltonian";
  e.description =
      "20-vertex cubic graph with an H-cordial labeling (thin -1, thick +1) and no Hamiltonian "
      "cycle.";
  e.provenance = "cubic non-Hamiltonian H-cordial graph";
  //  0 (41.67,1.67)    1 (61.67,1.67)    2 (61.67,16.67)   3 (41.67,16.67)
  //  4 (41.67,21.67)   5 (41.67,36.67)   6 (41.67,41.67)   7 (41.67,56.67)
  //  8 (61.67,56.67)   9 (61.67,41.67)  10 (61.67,36.67)  11 (61.67,21.67)
  // 12 (21.67,9.17)   13 (81.67,9.17)   14 (81.67,29.17)  15 (81.67,49.17)
  // 16 (21.67,49.17)  17 (21.67,29.17)  18 (1.67,29.17)   19 (101.67,29.17)
  const std::vector<Triple> triples{
      // thin
      {18, 12, -1}, {2, 3, -1},   {3, 1, -1},  {1, 0, -1},   {13, 19, -1},
      {19, 15, -1}, {7, 8, -1},   {8, 6, -1},  {6, 9, -1},   {16, 18, -1},
      {4, 17, -1},  {17, 5, -1},  {5, 11, -1}, {11, 14, -1}, {14, 10, -1},
      // thick
      {6, 16, 1},   {16, 7, 1},   {7, 9, 1},   {9, 15, 1},   {15, 8, 1},
      {5, 10, 1},   {10, 4, 1},   {4, 11, 1},  {3, 12, 1},   {12, 0, 1},
      {0, 2, 1},    {2, 13, 1},   {13, 1, 1},  {14, 19, 1},  {18, 17, 1},
  };
  e.labeling = Labeling::from_triples(20, triples);
  e.graph = e.labeling->graph();
  e.labeling_kind = LabelingKind::h_cordial();
  e.claims = {
      {"3-regular", [](const CatalogEntry& c, const CatalogOptions&) {
         auto degrees = c.graph.degrees();
         bool ok = std::all_of(degrees.begin(), degrees.end(), [](std::size_t d) { return d == 3; });
         return result(ok, "n = " + std::to_string(c.graph.order()) +
                               ", m = " + std::to_string(c.graph.size()));
       }},
      {"is connected", [](const CatalogEntry& c, const CatalogOptions&) {
         return result(is_connected(c.graph), std::to_string(components(c.graph).size()) +
                                                  " component(s)");
       }},
      labeling_valid("H-cordial"),
      {"not Hamiltonian", [](const CatalogEntry& c, const CatalogOptions&) {
         bool ham = is_hamiltonian(c.graph);
         return result(!ham, ham ? "a Hamiltonian cycle exists"
                                 : "exhaustive backtracking found no spanning cycle");
       }},
  };
  return e;
}

CatalogEntry lemma3_converse() {
  CatalogEntry e;
  e.name = "lemma3-converse";
  e.description =
      "Seven vertices, fourteen edges: a bold quadrilateral and a bold triangle tied together "
      "through two hub vertices, with the printed edge values. The drawing stands for C_r and "
      "C_{r+1} with any r >= 3; only r = 3 is encoded. The substantive claim is the search "
      "oracle's H_2 decision.";
  e.provenance = "graph offered against the converse of the H_2 parity condition";
  // 0 (62.67,42.33)   1 (2.67,42.33)    2 (32.67,62.33)   3 (32.67,42.33) hub
  // 4 (32.67,12.33) hub   5 (62.67,2.33)    6 (2.67,2.33)
  // Bold quadrilateral 1-3-0-2, bold triangle 6-5-4.
  const std::vector<Triple> triples{
      {1, 6, 1},  {3, 6, -1}, {3, 4, 2},  {0, 4, -1}, {0, 5, 1}, {3, 5, -1}, {1, 4, -1},
      {1, 3, 1},  {0, 3, 1},  {0, 2, 1},  {1, 2, 1},  {5, 6, 1}, {4, 5, 1},  {4, 6, 1},
  };
  e.labeling = Labeling::from_triples(7, triples);
  e.graph = e.labeling->graph();
  e.labeling_kind = LabelingKind::hk_cordial(2);
  e.claims = {
      {"14 edges (even)", [](const CatalogEntry& c, const CatalogOptions&) {
         return result(c.graph.size() == 14 && c.graph.order() == 7,
                       "n = " + std::to_string(c.graph.order()) +
                           ", m = " + std::to_string(c.graph.size()));
       }},
      {"printed values within +-1..+-2", [](const CatalogEntry& c, const CatalogOptions&) {
         try {
           check_alphabet(*c.labeling, 2);
         } catch (const AlphabetError& err) {
           return result(false, err.what());
         }
         return result(true, "printed values induce f = " +
                                 join_values(induced_vertex_labels(*c.labeling)));
       }},
      {"H_2 decision by exhaustive search", [](const CatalogEntry& c, const CatalogOptions& o) {
         SearchConfig cfg;
         cfg.kind = LabelingKind::hk_cordial(2);
         cfg.canonical = true;
         cfg.workers = o.workers;
         cfg.time_limit = o.search_time_limit;
         auto outcome = decide_with_symmetry(c.graph, cfg);
         std::string detail = "decision: " + to_string(outcome.decision) + " (" +
                              to_string(outcome.stats.covered) + " of " +
                              to_string(outcome.stats.space) + " sign-reduced assignments, " +
                              std::to_string(outcome.stats.nodes) + " nodes)";
         if (outcome.witness) {
           detail += "; witness labels";
           for (Label x : outcome.witness->labels()) detail += " " + std::to_string(x);
         }
         if (!outcome.note.empty()) detail += "; " + outcome.note;
         return result(outcome.decision != Decision::Undecided, detail);
       }},
  };
  return e;
}

CatalogEntry fstar_counterexample() {
  CatalogEntry e;
  e.name = "fstar-counterexample";
  e.description =
      "Seven-vertex tree with an H_2-cordial labeling whose f* transform (x -> k+1-x for x > 0, "
      "x -> -k-1-x for x < 0, k = 2) drives the degree-4 vertex to -5.";
  e.provenance = "H_2-cordial tree labeling not preserved by the f* transform";
  // 0 (1.33,16.33)   1 (21.66,16.33) degree 4   2 (41.33,16.33)   3 (61.33,31.33)
  // 4 (61.33,1.33)   5 (21.33,1.33)             6 (21.33,31.33)
  const std::vector<Triple> triples{
      {0, 1, 2}, {1, 6, -1}, {1, 5, -1}, {1, 2, -1}, {2, 3, 1}, {2, 4, 1},
  };
  e.labeling = Labeling::from_triples(7, triples);
  e.graph = e.labeling->graph();
  e.labeling_kind = LabelingKind::hk_cordial(2);
  e.claims = {
      {"is a tree", [](const CatalogEntry& c, const CatalogOptions&) {
         return result(is_tree(c.graph), "m = " + std::to_string(c.graph.size()));
       }},
      labeling_valid("H_2-cordial"),
      {"f(v) = -1 at the degree-4 vertex", [](const CatalogEntry& c, const CatalogOptions&) {
         auto values = induced_vertex_labels(*c.labeling);
         return result(c.graph.degree(1) == 4 && values[1] == -1,
                       "f = " + join_values(values));
       }},
      {"f* is not H_2-cordial, f*(v) = -5", [](const CatalogEntry& c, const CatalogOptions&) {
         auto transformed = star_transform(*c.labeling, 2);
         auto values = induced_vertex_labels(transformed);
         auto report = verify(transformed, LabelingKind::hk_cordial(2));
         return result(!report.valid && values[1] == -5,
                       "f* = " + join_values(values) + ", " +
                           std::to_string(report.violations.size()) + " violation(s)");
       }},
  };
  return e;
}

}  // namespace

bool CheckBundle::all_pass() const {
  return std::all_of(claims.begin(), claims.end(), [](const ClaimOutcome& c) { return c.pass; });
}

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries{
      lemma23_left(),          lemma23_right(),   thm31_refutation(),
      cubic_non_hamiltonian(), lemma3_converse(), fstar_counterexample(),
  };
  return entries;
}

const CatalogEntry& catalog_entry(std::string_view name) {
  for (const auto& e : catalog_entries())
    if (e.name == name) return e;
  throw UnknownEntry("no catalog entry named '" + std::string(name) + "'");
}

CheckBundle check(std::string_view name, const CatalogOptions& options) {
  const CatalogEntry& e = catalog_entry(name);
  CheckBundle bundle;
  bundle.entry = e.name;
  if (e.labeling) bundle.report = verify(*e.labeling, *e.labeling_kind);
  for (const Claim& claim : e.claims) {
    auto r = claim.evaluate(e, options);
    bundle.claims.push_back({claim.name, r.pass, std::move(r.detail)});
  }
  return bundle;
}

std::vector<CheckBundle> check_all(const CatalogOptions& options) {
  std::vector<CheckBundle> out;
  for (const auto& e : catalog_entries()) out.push_back(check(e.name, options));
  return out;
}

std::string to_dot(const Labeling& l, std::string_view name) {
  const auto values = induced_vertex_labels(l);
  std::ostringstream out;
  out << "graph \"" << name << "\" {\n";
  for (Vertex v = 0; v < l.graph().order(); ++v) {
    out << "  " << v << " [label=\"" << v << "\\nf=" << values[v] << "\"];\n";
  }
  for (std::size_t i = 0; i < l.graph().size(); ++i) {
    const Edge& e = l.graph().edge(i);
    const Label x = l.label(i);
    out << "  " << e.u << " -- " << e.v << " [label=\"" << x << "\", "
        << (x > 0 ? "style=bold, penwidth=2.5" : "style=solid, penwidth=0.6") << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const Graph& g, std::string_view name) {
  std::ostringstream out;
  out << "graph \"" << name << "\" {\n";
  for (Vertex v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace hcordial
