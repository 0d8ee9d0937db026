#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "hcordial/graph.hpp"

namespace hcordial {

using Label = int;
using VertexValue = std::int64_t;

class LabelingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A label outside the alphabet of the requested kind. Carries the offending edge.
class AlphabetError : public LabelingError {
 public:
  AlphabetError(std::size_t edge_index, Edge edge, Label label, const std::string& what)
      : LabelingError(what), edge_index_(edge_index), edge_(edge), label_(label) {}

  std::size_t edge_index() const { return edge_index_; }
  Edge edge() const { return edge_; }
  Label label() const { return label_; }

 private:
  std::size_t edge_index_;
  Edge edge_;
  Label label_;
};

/// A graph together with one nonzero integer per edge, aligned with graph().edges().
class Labeling {
 public:
  Labeling(Graph graph, std::vector<Label> labels);

  /// Builds the graph from the (u, v) pairs and aligns each label with its edge.
  static Labeling from_triples(std::size_t n, std::span<const std::tuple<Vertex, Vertex, Label>> triples);

  const Graph& graph() const { return graph_; }
  std::span<const Label> labels() const { return labels_; }
  Label label(std::size_t edge_index) const { return labels_.at(edge_index); }
  Label label(Vertex a, Vertex b) const;

  friend bool operator==(const Labeling&, const Labeling&) = default;

 private:
  Graph graph_;
  std::vector<Label> labels_;
};

struct LabelingKind {
  enum class Family { HCordial, SemiHCordial, ZeroMCordial, HkCordial };

  Family family = Family::HCordial;
  int k = 1;

  static LabelingKind h_cordial() { return {Family::HCordial, 1}; }
  static LabelingKind semi_h_cordial() { return {Family::SemiHCordial, 1}; }
  static LabelingKind zero_m_cordial() { return {Family::ZeroMCordial, 1}; }
  static LabelingKind hk_cordial(int k);

  /// Largest admissible |label|.
  int max_label() const { return family == Family::HkCordial ? k : 1; }
  std::string name() const;

  friend bool operator==(const LabelingKind&, const LabelingKind&) = default;
};

/// Parses "h", "semi-h", "zero-m", "hk" (with k) or "h2".
LabelingKind parse_kind(std::string_view name, std::optional<int> k = std::nullopt);

struct Tally {
  std::map<std::int64_t, std::size_t> edges;     // label c -> e_f(c)
  std::map<std::int64_t, std::size_t> vertices;  // induced value c -> v_f(c)

  std::size_t edge_count(std::int64_t c) const;
  std::size_t vertex_count(std::int64_t c) const;

  friend bool operator==(const Tally&, const Tally&) = default;
};

struct Violation {
  std::string condition;
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerificationReport {
  LabelingKind kind;
  bool valid = false;
  Tally tally;
  std::optional<VertexValue> k_value;  // HCordial only
  std::vector<Violation> violations;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

std::vector<VertexValue> induced_vertex_labels(const Labeling& l);

/// sum of induced values == 2 * sum of edge labels.
bool check_handshake(const Labeling& l);

Tally tally(const Labeling& l);

/// Throws AlphabetError for the first label with |label| outside 1..max_label.
void check_alphabet(const Labeling& l, int max_label);

/// Rejects alphabet violations with AlphabetError, then evaluates every
/// condition of the kind's definition and itemizes the failures.
VerificationReport verify(const Labeling& l, LabelingKind kind);

enum class ObstructionCode {
  Tree,                   // trees never have m - n even
  EdgeVertexParity,       // m - n odd
  MixedDegreeParity,      // |f(v)| uniform but f(v) = deg(v) mod 2
  IsolatedVertex,         // induced value 0 at an isolated vertex
  EvenDegreeVertex,       // H_1: |f(v)| = 1 needs odd degree
  EvenOrderOddSize,       // H_2 with n even and m odd
  OddEdgeCount,           // semi-H: edge labels must sum to 0
  NonEulerianComponent,   // zero-M
  OddComponentSize,       // zero-M
};

struct Obstruction {
  ObstructionCode code;
  std::string reason;
};

std::string to_string(ObstructionCode code);

/// First necessary condition of `kind` that g fails, if any. No obstruction
/// does not imply that a labeling exists.
std::optional<Obstruction> obstruction(const Graph& g, LabelingKind kind);

/// x -> k+1-x for x > 0 and x -> -k-1-x for x < 0.
Labeling star_transform(const Labeling& l, int k);
Labeling negate(const Labeling& l);

/// Labeled-graph text format: "n m" then m lines "u v L".
Labeling parse_labeling(std::string_view text);
std::string serialize_labeling(const Labeling& l);

}  // namespace hcordial
