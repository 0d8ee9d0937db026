#pragma once

// Exhaustive search for valid labelings.
//
// The search walks edges in the graph's canonical order and tries label values
// in ascending order (-k..-1, +1..+k), so the first witness met is the
// lexicographically smallest one. Work is split by fixing the labels of a
// prefix of edges; each prefix is an independent task and results are merged in
// prefix order, which keeps decisions (and canonical witnesses) independent of
// the number of workers.

#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "hcordial/graph.hpp"
#include "hcordial/labeling.hpp"

namespace hcordial {

/// Exact count of complete assignments; the label space can exceed 2^64.
using AssignmentCount = unsigned __int128;
std::string to_string(AssignmentCount count);

/// Each rule can be switched off independently; decisions must not change.
struct PruneRules {
  /// Reject a partial assignment when some vertex can no longer reach an
  /// admissible induced value, or a completed vertex already violates it.
  bool vertex_bounds = true;
  /// Reject when the per-magnitude edge or completed-vertex imbalances cannot
  /// be brought back within 1 by the remaining edges or vertices.
  bool cardinality = true;
};

inline constexpr std::size_t kUnlimited = std::numeric_limits<std::size_t>::max();

struct SearchConfig {
  LabelingKind kind;
  /// Require the lexicographically smallest witness (otherwise any witness may
  /// be returned when several workers race).
  bool canonical = false;
  /// Maximum number of witnesses for enumerate().
  std::size_t limit = 1;
  /// Cap on search nodes visited. Checked every 256 nodes, so a search that
  /// finishes within that slack still reports its real answer.
  std::optional<std::uint64_t> budget;
  /// Wall-clock cap.
  std::optional<std::chrono::milliseconds> time_limit;
  unsigned workers = 1;
  PruneRules pruning;
};

enum class Decision { Found, Exhausted, Undecided };
std::string to_string(Decision d);

struct SearchStats {
  std::uint64_t nodes = 0;       // partial assignments visited
  std::uint64_t leaves = 0;      // complete assignments evaluated
  std::uint64_t prunes = 0;
  AssignmentCount covered = 0;   // complete assignments accounted for, pruned ones included
  AssignmentCount space = 0;     // size of the searched label space
  double wall_seconds = 0.0;
};

struct SearchOutcome {
  Decision decision = Decision::Undecided;
  std::optional<Labeling> witness;
  SearchStats stats;
  std::string note;  // reason when undecided
};

struct Enumeration {
  std::vector<Labeling> witnesses;
  /// Exhausted: the list is the complete set. Found: stopped at the limit.
  /// Undecided: a budget ran out first.
  Decision status = Decision::Undecided;
  SearchStats stats;
  std::string note;
};

SearchOutcome decide(const Graph& g, const SearchConfig& cfg);

/// As decide(), but the first edge only takes positive labels. Every definition
/// is invariant under global negation, so existence answers are unchanged and
/// the space is halved.
SearchOutcome decide_with_symmetry(const Graph& g, const SearchConfig& cfg);

/// Up to cfg.limit valid labelings in lexicographic order.
Enumeration enumerate(const Graph& g, const SearchConfig& cfg);

}  // namespace hcordial
