#include <doctest.h>

#include <numeric>
#include <random>

#include <json.hpp>

#include "hcordial/catalog.hpp"
#include "hcordial/constructors.hpp"
#include "hcordial/labeling.hpp"
#include "hcordial/oracle.hpp"
#include "hcordial/report_json.hpp"
#include "support.hpp"

using namespace hcordial;

namespace {

using Values = std::vector<VertexValue>;

const std::vector<LabelingKind> kAllKinds{LabelingKind::h_cordial(), LabelingKind::semi_h_cordial(),
                                          LabelingKind::zero_m_cordial(), LabelingKind::hk_cordial(2)};

Labeling random_labeling(std::mt19937_64& rng, int k) {
  Graph g = testsupport::random_graph(2 + rng() % 8, 0.5, rng);
  return Labeling(g, testsupport::random_labels(g.size(), k, rng));
}

}  // namespace

TEST_CASE("Labeling invariants") {
  Graph k3 = complete_graph(3);
  CHECK_THROWS_AS(Labeling(k3, {1, 1}), LabelingError);
  CHECK_THROWS_AS(Labeling(k3, {1, 0, 1}), LabelingError);
  Labeling l(k3, {1, -1, 1});
  CHECK(l.label(0, 2) == -1);
  CHECK(l.label(2, 0) == -1);
  CHECK_THROWS_AS(l.label(0, 3), LabelingError);
}

TEST_CASE("induced vertex labels") {
  CHECK(induced_vertex_labels(Labeling(complete_graph(3), {1, 1, 1})) == Values{2, 2, 2});
  CHECK(induced_vertex_labels(Labeling(path_graph(2), {-1})) == Values{-1, -1});
  CHECK(induced_vertex_labels(Labeling(make_graph(3, {{0, 1}}), {1})) == Values{1, 1, 0});
  // apex, two base vertices, inner vertex, two pendants
  CHECK(induced_vertex_labels(*catalog_entry("thm31-refutation").labeling) == Values{-1, -1, -1, 1, 1, 1});
}

TEST_CASE("handshake identity") {
  Graph k4 = complete_graph(4);
  testsupport::for_each_assignment(6, 1, [&](const std::vector<Label>& labels) {
    CHECK(check_handshake(Labeling(k4, labels)));
    return true;
  });
  Labeling c4(cycle_graph(4), {1, -1, -1, 1});
  auto values = induced_vertex_labels(c4);
  CHECK(std::accumulate(values.begin(), values.end(), VertexValue{0}) == 0);
  CHECK(check_handshake(c4));

  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 1000; ++trial) {
    Labeling l = random_labeling(rng, 1 + trial % 4);
    auto f = induced_vertex_labels(l);
    VertexValue vertex_sum = std::accumulate(f.begin(), f.end(), VertexValue{0});
    VertexValue edge_sum = std::accumulate(l.labels().begin(), l.labels().end(), VertexValue{0});
    CHECK(vertex_sum == 2 * edge_sum);
    CHECK(check_handshake(l));
  }
}

TEST_CASE("with +-1 labels the induced value has the parity of the degree") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 500; ++trial) {
    Labeling l = random_labeling(rng, 1);
    auto f = induced_vertex_labels(l);
    for (Vertex v = 0; v < l.graph().order(); ++v) {
      CHECK((f[v] - static_cast<VertexValue>(l.graph().degree(v))) % 2 == 0);
    }
  }
}

TEST_CASE("tally counts") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    Labeling l = random_labeling(rng, 3);
    Tally t = tally(l);
    std::size_t edges = 0, vertices = 0;
    for (auto& [c, n] : t.edges) edges += n;
    for (auto& [c, n] : t.vertices) vertices += n;
    CHECK(edges == l.graph().size());
    CHECK(vertices == l.graph().order());
  }
}

TEST_CASE("verify H-cordial") {
  SUBCASE("W_3 formula labeling") {
    auto r = verify(h_cordial_wheel(3), LabelingKind::h_cordial());
    CHECK(r.valid);
    CHECK(r.violations.empty());
    REQUIRE(r.k_value);
    CHECK(*r.k_value == 1);
    CHECK(r.tally.edge_count(1) == 3);
    CHECK(r.tally.edge_count(-1) == 3);
    CHECK(r.tally.vertex_count(1) == 2);
    CHECK(r.tally.vertex_count(-1) == 2);
  }
  SUBCASE("K_3 with (+1,+1,-1) fails uniformity") {
    Labeling l(complete_graph(3), {1, 1, -1});
    CHECK(induced_vertex_labels(l) == Values{2, 0, 0});
    auto r = verify(l, LabelingKind::h_cordial());
    CHECK_FALSE(r.valid);
    CHECK_FALSE(r.violations.empty());
  }
  SUBCASE("zero at vertex 0 means no positive K") {
    Labeling l(cycle_graph(4), {1, -1, 1, -1});
    auto r = verify(l, LabelingKind::h_cordial());
    CHECK_FALSE(r.valid);
    CHECK(r.violations.front().condition == "positive K");
  }
  SUBCASE("K = 2 is accepted when uniform and balanced") {
    // K_3 has all degrees 2 so a valid labeling would need |f| = 2, i.e. all +1 or all -1.
    auto r = verify(Labeling(complete_graph(3), {1, 1, 1}), LabelingKind::h_cordial());
    CHECK_FALSE(r.valid);  // e(1) - e(-1) = 3 and v(2) - v(-2) = 3
    auto k7 = verify(h_cordial_complete(7), LabelingKind::h_cordial());
    CHECK(k7.valid);
    CHECK(k7.k_value == 2);
  }
  SUBCASE("alphabet violation is rejected before tallying") {
    Labeling l(complete_graph(3), {1, 2, -1});
    try {
      verify(l, LabelingKind::h_cordial());
      FAIL("expected AlphabetError");
    } catch (const AlphabetError& e) {
      CHECK(e.edge_index() == 1);
      CHECK(e.edge() == Edge{0, 2});
      CHECK(e.label() == 2);
    }
  }
}

TEST_CASE("verify H_2-cordial on the tree with labels 2,-1,-1,-1,1,1") {
  const auto& entry = catalog_entry("fstar-counterexample");
  auto r = verify(*entry.labeling, LabelingKind::hk_cordial(2));
  CHECK(r.valid);
  CHECK_FALSE(r.k_value);
  CHECK(induced_vertex_labels(*entry.labeling)[1] == -1);
  CHECK(entry.graph.degree(1) == 4);
  CHECK_THROWS_AS(verify(*entry.labeling, LabelingKind::hk_cordial(1)), AlphabetError);
}

TEST_CASE("verify semi-H and zero-M") {
  CHECK(verify(Labeling(path_graph(3), {-1, 1}), LabelingKind::semi_h_cordial()).valid);
  CHECK_FALSE(verify(Labeling(path_graph(3), {1, 1}), LabelingKind::semi_h_cordial()).valid);
  CHECK_FALSE(verify(Labeling(path_graph(2), {1}), LabelingKind::semi_h_cordial()).valid);
  CHECK(verify(Labeling(cycle_graph(4), {1, -1, -1, 1}), LabelingKind::zero_m_cordial()).valid);
  CHECK_FALSE(verify(Labeling(cycle_graph(4), {1, 1, -1, -1}), LabelingKind::zero_m_cordial()).valid);
}

TEST_CASE("verify agrees with the reference definitions") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 2000; ++trial) {
    const LabelingKind kind = kAllKinds[trial % 4];
    Labeling l = random_labeling(rng, kind.max_label());
    std::vector<Label> labels(l.labels().begin(), l.labels().end());
    auto r = verify(l, kind);
    CHECK(r.valid == testsupport::naive_valid(l.graph(), labels, kind));
    CHECK(r.valid == r.violations.empty());
    CHECK(verify(l, kind) == r);
  }
  // Exhaustively on small graphs, where valid labelings are common.
  for (const Graph& g : testsupport::connected_graphs_up_to(4)) {
    for (const auto& kind : kAllKinds) {
      testsupport::for_each_assignment(g.size(), kind.max_label(), [&](const std::vector<Label>& labels) {
        CHECK(verify(Labeling(g, labels), kind).valid == testsupport::naive_valid(g, labels, kind));
        return true;
      });
    }
  }
}

TEST_CASE("negation") {
  Labeling plus(cycle_graph(4), {1, 1, 1, 1});
  CHECK(negate(plus) == Labeling(cycle_graph(4), {-1, -1, -1, -1}));
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 500; ++trial) {
    const LabelingKind kind = kAllKinds[trial % 4];
    Labeling l = random_labeling(rng, kind.max_label());
    CHECK(negate(negate(l)) == l);
    CHECK(verify(negate(l), kind).valid == verify(l, kind).valid);
  }
  // Random labelings are rarely valid; check the symmetry on valid ones too.
  for (const Graph& g : testsupport::connected_graphs_up_to(4)) {
    for (const auto& kind : kAllKinds) {
      for (const auto& labels : testsupport::naive_all(g, kind)) {
        CHECK(verify(negate(Labeling(g, labels)), kind).valid);
      }
    }
  }
}

TEST_CASE("obstructions") {
  SUBCASE("K_5 H-cordial: m - n odd") {
    auto o = obstruction(complete_graph(5), LabelingKind::h_cordial());
    REQUIRE(o);
    CHECK(o->code == ObstructionCode::EdgeVertexParity);
    CHECK(o->reason.find("m - n = 10 - 5 = 5 is odd") != std::string::npos);
  }
  SUBCASE("K_6 H_2-cordial: n even, m odd") {
    auto o = obstruction(complete_graph(6), LabelingKind::hk_cordial(2));
    REQUIRE(o);
    CHECK(o->code == ObstructionCode::EvenOrderOddSize);
  }
  SUBCASE("P_5 semi-H: nothing fires") {
    CHECK_FALSE(obstruction(path_graph(5), LabelingKind::semi_h_cordial()));
    CHECK(obstruction(path_graph(4), LabelingKind::semi_h_cordial()));
  }
  SUBCASE("H-cordial trees, mixed parity and isolated vertices") {
    CHECK(obstruction(path_graph(5), LabelingKind::h_cordial())->code == ObstructionCode::Tree);
    // K_4 plus a pendant: m - n = 7 - 5 even, degrees 4,3,3,3,1 mixed.
    Graph mixed = make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}});
    CHECK(obstruction(mixed, LabelingKind::h_cordial())->code == ObstructionCode::MixedDegreeParity);
    // K_5 plus an isolated vertex: m - n = 4, all degrees even.
    Graph k5_graph = complete_graph(5);
    std::vector<Edge> k5(k5_graph.edges().begin(), k5_graph.edges().end());
    Graph isolated = make_graph(6, k5);
    CHECK(obstruction(isolated, LabelingKind::h_cordial())->code == ObstructionCode::IsolatedVertex);
  }
  SUBCASE("zero-M per component") {
    CHECK_FALSE(obstruction(cycle_graph(4), LabelingKind::zero_m_cordial()));
    CHECK(obstruction(cycle_graph(3), LabelingKind::zero_m_cordial())->code == ObstructionCode::OddComponentSize);
    CHECK(obstruction(complete_graph(4), LabelingKind::zero_m_cordial())->code ==
          ObstructionCode::NonEulerianComponent);
    Graph two_squares = make_graph(8, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {5, 6}, {6, 7}, {4, 7}});
    CHECK_FALSE(obstruction(two_squares, LabelingKind::zero_m_cordial()));
  }
  SUBCASE("codes print") {
    CHECK(to_string(ObstructionCode::EdgeVertexParity) == "edge-vertex-parity");
  }
}

TEST_CASE("obstruction soundness against the reference enumerator") {
  std::size_t fired = 0;
  for (const Graph& g : testsupport::connected_graphs_up_to(5)) {
    for (const auto& kind : kAllKinds) {
      if (!obstruction(g, kind)) continue;
      ++fired;
      CHECK_MESSAGE(!testsupport::naive_exists(g, kind), serialize_graph(g), kind.name());
    }
  }
  CHECK(fired > 50);
}

TEST_CASE("zero-M labelings have balanced edge counts") {
  for (const Graph& g : testsupport::connected_graphs_up_to(5)) {
    SearchConfig cfg;
    cfg.kind = LabelingKind::zero_m_cordial();
    cfg.limit = kUnlimited;
    for (const auto& w : enumerate(g, cfg).witnesses) {
      auto t = tally(w);
      CHECK(t.edge_count(1) == t.edge_count(-1));
    }
  }
}

TEST_CASE("star transform") {
  Labeling l(path_graph(5), {2, 1, -1, -2});
  CHECK(star_transform(l, 2).labels()[0] == 1);
  CHECK(star_transform(l, 2) == Labeling(path_graph(5), {1, 2, -2, -1}));
  Labeling unit(path_graph(3), {1, -1});
  CHECK(star_transform(unit, 1) == unit);
  CHECK_THROWS_AS(star_transform(l, 1), AlphabetError);
  const auto& entry = catalog_entry("fstar-counterexample");
  auto transformed = star_transform(*entry.labeling, 2);
  CHECK(induced_vertex_labels(transformed)[1] == -5);
  CHECK_FALSE(verify(transformed, LabelingKind::hk_cordial(2)).valid);
  CHECK(star_transform(transformed, 2) == *entry.labeling);
}

TEST_CASE("kinds") {
  CHECK(parse_kind("h") == LabelingKind::h_cordial());
  CHECK(parse_kind("semi-h") == LabelingKind::semi_h_cordial());
  CHECK(parse_kind("zero-m") == LabelingKind::zero_m_cordial());
  CHECK(parse_kind("h2") == LabelingKind::hk_cordial(2));
  CHECK(parse_kind("hk", 3) == LabelingKind::hk_cordial(3));
  CHECK_THROWS_AS(parse_kind("hk"), LabelingError);
  CHECK_THROWS_AS(parse_kind("q"), LabelingError);
  CHECK_THROWS_AS(LabelingKind::hk_cordial(0), LabelingError);
  CHECK(LabelingKind::hk_cordial(2).name() == "hk(2)");
  CHECK(LabelingKind::h_cordial().max_label() == 1);
}

TEST_CASE("labeled graph text format") {
  const std::string text = "# K_3\n3 3\n0 1 1\n1 2 -1\n0 2 2\n";
  Labeling l = parse_labeling(text);
  CHECK(l.graph() == complete_graph(3));
  CHECK(l.label(1, 2) == -1);
  CHECK(l.label(0, 2) == 2);
  CHECK(parse_labeling(serialize_labeling(l)) == l);
  CHECK_THROWS_AS(parse_labeling("2 1\n0 1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_labeling("2 1\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_labeling("2 1\n0 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_labeling("2 2\n0 1 1\n"), ParseError);
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 100; ++trial) {
    Labeling r = random_labeling(rng, 5);
    CHECK(parse_labeling(serialize_labeling(r)) == r);
  }
}

TEST_CASE("report JSON round trip") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const LabelingKind kind = kAllKinds[trial % 4];
    Labeling l = random_labeling(rng, kind.max_label());
    auto r = verify(l, kind);
    nlohmann::json j = r;
    auto back = nlohmann::json::parse(j.dump()).get<VerificationReport>();
    CHECK(back == r);
  }
  auto r = verify(h_cordial_complete(8), LabelingKind::h_cordial());
  nlohmann::json j = r;
  CHECK(j["valid"] == true);
  CHECK(j["K"] == 1);
  CHECK(j["kind"]["name"] == "h");
}
