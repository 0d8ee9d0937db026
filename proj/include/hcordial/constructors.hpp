#pragma once

// Constructive labelers for the H-cordial family. Every constructor verifies
// its own output and throws ConstructionBug instead of returning an invalid
// labeling.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hcordial/graph.hpp"
#include "hcordial/labeling.hpp"

namespace hcordial {

/// Input rejected by a constructor's precondition. Carries the obstruction when
/// a necessary condition is what failed.
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what,
                             std::optional<Obstruction> obstruction = std::nullopt)
      : std::invalid_argument(what), obstruction_(std::move(obstruction)) {}

  const std::optional<Obstruction>& obstruction() const { return obstruction_; }

 private:
  std::optional<Obstruction> obstruction_;
};

/// A constructor produced a labeling that fails its own definition.
class ConstructionBug : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// One iteration of the tree labeling algorithm.
struct TreeStep {
  Path path;
  int a_before = 1;
  int a_after = 1;
  std::int64_t running_sum = 0;  // sum of all labels assigned so far
  std::vector<VertexValue> partial_values;
  std::vector<std::size_t> unlabeled_degree;  // incident edges still unlabeled
};

struct AlgorithmTrace {
  std::vector<TreeStep> steps;
};

/// Semi-H-cordial labeling of a tree with an odd number of vertices: repeatedly
/// label the longest remaining path alternately starting with -a, then reset a
/// to the running label sum (or 1 when that sum is 0).
Labeling semi_h_tree(const Graph& tree, AlgorithmTrace* trace = nullptr);

/// For a tree with an even number of vertices: |f(v)| <= 1 everywhere,
/// |e(1)-e(-1)| = 1 and |v(1)-v(-1)| = 2. Obtained by hanging a phantom leaf off
/// the smallest-indexed leaf, labeling the odd tree, and dropping the phantom.
Labeling near_semi_h_tree(const Graph& tree);

/// Alternating +1/-1 along an Euler circuit of every component.
Labeling zero_m(const Graph& g);

/// H-cordial labeling of K_n for n = 0, 3 (mod 4), n != 3.
Labeling h_cordial_complete(std::size_t n);

/// H-cordial labeling of the wheel with an odd rim size n >= 3.
Labeling h_cordial_wheel(std::size_t rim);

/// H_2-cordial labeling of any wheel W_n, n >= 3.
Labeling h2_cordial_wheel(std::size_t rim);

/// H_2-cordial labeling of K_n for n = 0, 3 (mod 4), n != 3.
Labeling h2_cordial_complete(std::size_t n);

}  // namespace hcordial
