#include <doctest.h>

#include "hcordial/catalog.hpp"

using namespace hcordial;

TEST_CASE("catalog contents") {
  const auto& entries = catalog_entries();
  REQUIRE(entries.size() == 6);
  std::vector<std::string> names;
  for (const auto& e : entries) names.push_back(e.name);
  CHECK(names == std::vector<std::string>{"lemma23-left", "lemma23-right", "thm31-refutation",
                                          "cubic-non-hamiltonian", "lemma3-converse", "fstar-counterexample"});
  for (const auto& e : entries) {
    CHECK_FALSE(e.description.empty());
    CHECK_FALSE(e.claims.empty());
    CHECK(e.labeling.has_value() == e.labeling_kind.has_value());
    if (e.labeling) {
      CHECK(e.labeling->graph() == e.graph);
      CHECK_NOTHROW(check_alphabet(*e.labeling, e.labeling_kind->max_label()));
    }
  }
}

TEST_CASE("transcribed structure") {
  const Graph& left = catalog_entry("lemma23-left").graph;
  CHECK(left == star_graph(5));
  const Graph& right = catalog_entry("lemma23-right").graph;
  CHECK(right.order() == 8);
  CHECK(right.degree(0) == 5);
  CHECK(right.degree(2) == 3);
  const Graph& cubic = catalog_entry("cubic-non-hamiltonian").graph;
  CHECK(cubic.order() == 20);
  CHECK(cubic.size() == 30);
  CHECK(is_connected(cubic));
  const Graph& converse = catalog_entry("lemma3-converse").graph;
  CHECK(converse.order() == 7);
  CHECK(converse.size() == 14);
  const Graph& fstar = catalog_entry("fstar-counterexample").graph;
  CHECK(is_tree(fstar));
  CHECK(fstar.degree(1) == 4);
}

TEST_CASE("thm31-refutation vertex tallies") {
  auto t = tally(*catalog_entry("thm31-refutation").labeling);
  CHECK(t.vertex_count(-1) == 3);
  CHECK(t.vertex_count(1) == 3);
  CHECK(t.edge_count(1) == 4);
  CHECK(t.edge_count(-1) == 4);
}

TEST_CASE("fstar-counterexample transformed hub value") {
  const auto& e = catalog_entry("fstar-counterexample");
  CHECK(induced_vertex_labels(star_transform(*e.labeling, 2))[1] == -5);
}

TEST_CASE("check") {
  auto left = check("lemma23-left");
  CHECK(left.entry == "lemma23-left");
  CHECK(left.claims.size() == 4);
  CHECK(left.all_pass());
  CHECK_FALSE(left.report);

  auto cubic = check("cubic-non-hamiltonian");
  CHECK(cubic.all_pass());
  REQUIRE(cubic.report);
  CHECK(cubic.report->valid);
  bool saw_hamiltonian_claim = false;
  for (const auto& c : cubic.claims) {
    if (c.claim == "not Hamiltonian") {
      saw_hamiltonian_claim = true;
      CHECK(c.pass);
    }
  }
  CHECK(saw_hamiltonian_claim);

  CHECK_THROWS_AS(check("nonexistent"), UnknownEntry);
  CHECK_THROWS_AS(catalog_entry("nonexistent"), UnknownEntry);
}

TEST_CASE("the search claim records its decision") {
  auto bundle = check("lemma3-converse");
  const auto& last = bundle.claims.back();
  CHECK(last.claim == "H_2 decision by exhaustive search");
  CHECK(last.pass);
  CHECK(last.detail.rfind("decision: ", 0) == 0);
  // Deterministic apart from timing, which the detail omits.
  CHECK(check("lemma3-converse").claims.back().detail == last.detail);
  CatalogOptions two;
  two.workers = 2;
  CHECK(check("lemma3-converse", two).claims.back().detail.substr(0, 16) == last.detail.substr(0, 16));
}

TEST_CASE("check_all passes") {
  auto bundles = check_all();
  CHECK(bundles.size() == 6);
  for (const auto& b : bundles) {
    for (const auto& c : b.claims) CHECK_MESSAGE(c.pass, b.entry, ": ", c.claim, ": ", c.detail);
  }
}

TEST_CASE("DOT export") {
  const auto& e = catalog_entry("thm31-refutation");
  std::string dot = to_dot(*e.labeling, e.name);
  CHECK(dot.rfind("graph \"thm31-refutation\" {", 0) == 0);
  CHECK(dot.find("0 -- 1 [label=\"-1\", style=solid") != std::string::npos);
  CHECK(dot.find("1 -- 3 [label=\"1\", style=bold") != std::string::npos);
  CHECK(dot.find("3 [label=\"3\\nf=1\"]") != std::string::npos);
  CHECK(dot.back() == '\n');
  std::string plain = to_dot(star_graph(2));
  CHECK(plain.find("0 -- 2;") != std::string::npos);
}
