#pragma once

// Hard-coded counterexample graphs with their published labelings and the
// claims each one is meant to establish.

#include <chrono>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hcordial/graph.hpp"
#include "hcordial/labeling.hpp"
#include "hcordial/oracle.hpp"

namespace hcordial {

struct ClaimResult {
  bool pass = false;
  std::string detail;
};

struct CatalogEntry;

/// Options for the one claim that runs the search oracle.
struct CatalogOptions {
  unsigned workers = 1;
  std::chrono::milliseconds search_time_limit{std::chrono::minutes(10)};
};

struct Claim {
  std::string name;
  std::function<ClaimResult(const CatalogEntry&, const CatalogOptions&)> evaluate;
};

struct CatalogEntry {
  std::string name;
  std::string description;
  std::string provenance;
  Graph graph;
  std::optional<Labeling> labeling;
  std::optional<LabelingKind> labeling_kind;
  std::vector<Claim> claims;
};

struct ClaimOutcome {
  std::string claim;
  bool pass = false;
  std::string detail;
};

struct CheckBundle {
  std::string entry;
  std::vector<ClaimOutcome> claims;
  std::optional<VerificationReport> report;  // published labeling against its kind

  bool all_pass() const;
};

class UnknownEntry : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry& catalog_entry(std::string_view name);

CheckBundle check(std::string_view name, const CatalogOptions& options = {});
std::vector<CheckBundle> check_all(const CatalogOptions& options = {});

/// Graphviz rendering: positive labels bold, negative thin, vertices annotated
/// with their induced values.
std::string to_dot(const Labeling& l, std::string_view name = "G");
std::string to_dot(const Graph& g, std::string_view name = "G");

}  // namespace hcordial
